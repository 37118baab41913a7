#pragma once

// Simple graphs on [m] viewed as families of 2-subsets: degree sums of
// squares, threshold recognition, optimal graphs and the bounds on Σ(G).

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "subclose/families.hpp"

namespace subclose {

using Rational = boost::rational<std::int64_t>;

class Graph {
 public:
  explicit Graph(int m);
  /// Requires edges.ell() == 2.
  explicit Graph(SubsetFamily edges);

  static Graph from_edges(int m, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int m);
  static Graph star(int m, int leaves);

  int vertex_count() const noexcept { return edges_.m(); }
  std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(edges_.size()); }
  const SubsetFamily& edges() const noexcept { return edges_; }
  std::vector<std::pair<int, int>> edge_list() const;  // 1-based, sorted

  std::vector<int> degrees() const;
  bool has_edge(int u, int v) const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  SubsetFamily edges_;
};

/// Sum of squared degrees.
std::int64_t sigma(const Graph& g);

/// 2 K_Λ + 2|Λ| for a family of 2-subsets.
std::int64_t sigma_from_k(const SubsetFamily& fam);

/// One vertex of degree r, r of degree 1, the rest isolated.
bool is_star(const Graph& g);

enum class BuildStep { Isolated, Universal };

struct ThresholdTrace {
  bool is_threshold = false;
  /// Construction order (first entry is the starting vertex); empty when
  /// the graph is not threshold.
  std::vector<std::pair<int, BuildStep>> sequence;
};

ThresholdTrace is_threshold(const Graph& g);

/// r (2r/(m-1) + m - 2), exact.
Rational de_caen_bound(int m, std::int64_t r);

/// r(r+1) when m >= 4 and r <= m-1.
std::optional<std::int64_t> trivial_bound(int m, std::int64_t r);

/// m(m-1)(m-2) + (k-r)(k-r-1) - 4(k-r)(m-2) + 2r when C(m-1,2) <= r <= C(m,2).
std::optional<std::int64_t> dual_bound(int m, std::int64_t r);

struct SigmaRecord {
  int m = 0;
  std::int64_t r = 0;
  std::int64_t sigma_max = 0;
  std::int64_t sigma_via_families = 0;  // 2 K_r(2,m) + 2r
  Graph maximizer{2};
  std::uint64_t maximizer_count = 0;
  Rational de_caen{0};
  std::optional<std::int64_t> trivial;
  std::optional<std::int64_t> dual;
};

/// Exhaustive maximum of Σ over all (m,r)-graphs, cross-checked against the
/// subclose oracle. The maximizer is the colex-least optimal edge set.
SigmaRecord optimal_graphs(int m, std::int64_t r, const OracleOptions& opts = {});

/// Visits every graph with exactly r edges on [m], edges as positions in
/// the colex list of 2-subsets. Stops early if fn returns false.
void for_each_graph(int m, std::int64_t r, std::uint64_t budget,
                    const std::function<bool(const Graph&)>& fn);

struct TrivialBoundReport {
  int m = 0;
  std::int64_t r = 0;
  std::int64_t bound = 0;
  std::int64_t sigma_max = 0;
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t equality_non_stars = 0;  // neither a star nor a triangle
  std::uint64_t equality_triangles = 0;  // K_3 also gives 12 = 3*4 at r = 3
  std::uint64_t stars = 0;
  Rational de_caen_gap{0};      // C(r,m) - r(r+1), evaluated directly
  Rational gap_closed_form{0};  // r(m-3)(m-1-r)/(m-1)
  bool ok() const noexcept;
};

/// Exhaustive check of Σ(G) <= r(r+1) with equality exactly at stars,
/// plus the triangle when r = 3.
/// Throws std::invalid_argument unless m >= 4 and r <= m-1.
TrivialBoundReport trivial_bound_check(int m, std::int64_t r, std::uint64_t budget = 100'000'000);

/// Σ of the complement, directly and via m(m-1)^2 - 4r(m-1) + Σ(G).
bool complement_sigma_check(const Graph& g);

struct DualBoundReport {
  int m = 0;
  std::int64_t r = 0;
  std::int64_t bound = 0;
  std::int64_t sigma_max = 0;
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  bool tight() const noexcept { return sigma_max == bound; }
  bool ok() const noexcept { return violations == 0; }
};

/// Exhaustive check of the dual bound. Throws std::invalid_argument outside
/// C(m-1,2) <= r <= C(m,2).
DualBoundReport dual_bound_check(int m, std::int64_t r, std::uint64_t budget = 100'000'000);

/// Per edge count r, statistics over every simple graph on [m].
struct GraphCensusRow {
  std::int64_t r = 0;
  std::uint64_t graphs = 0;
  std::int64_t sigma_max = 0;
  std::uint64_t optimal = 0;
  std::uint64_t optimal_non_threshold = 0;
  std::uint64_t de_caen_violations = 0;
  std::uint64_t de_caen_tight = 0;
  std::uint64_t trivial_violations = 0;      // only where the trivial bound applies
  std::uint64_t trivial_equality_non_star = 0;  // excludes the triangle at r = 3
  std::uint64_t dual_violations = 0;         // only where the dual bound applies
  std::uint64_t pairwise_incident_non_star_triangle = 0;
};

/// Exhaustive scan of all 2^C(m,2) graphs; m <= 7.
std::vector<GraphCensusRow> graph_census(int m);

/// Every pair of edges shares a vertex.
bool edges_pairwise_incident(const Graph& g);

/// Exactly three edges forming a triangle.
bool is_triangle(const Graph& g);

}  // namespace subclose
