#include "subclose/graphs.hpp"

#include <algorithm>
#include <bit>

namespace subclose {

namespace {

std::int64_t sum_of_squares(const std::vector<int>& degrees) {
  std::int64_t total = 0;
  for (int d : degrees) total += static_cast<std::int64_t>(d) * d;
  return total;
}

void require_budget(const BigInt& count, std::uint64_t budget, const std::string& what) {
  if (count > budget) throw BudgetExceeded(what, count, budget);
}

}  // namespace

Graph::Graph(int m) : edges_(m, 2) {}

Graph::Graph(SubsetFamily edges) : edges_(std::move(edges)) {
  if (edges_.ell() != 2) throw std::invalid_argument("graph edges must be 2-subsets");
}

Graph Graph::from_edges(int m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Mask> masks;
  masks.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    masks.push_back(make_subset({u, v}, m));
  }
  return Graph(SubsetFamily(m, 2, std::move(masks)));
}

Graph Graph::complete(int m) { return Graph(SubsetFamily::full(m, 2)); }

Graph Graph::star(int m, int leaves) {
  if (leaves < 0 || leaves + 1 > m) throw std::invalid_argument("star does not fit in [m]");
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
  return from_edges(m, edges);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (Mask e : edges_.members()) {
    const auto ends = subset_elements(e);
    out.emplace_back(ends[0], ends[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count(), 0);
  for (Mask e : edges_.members()) {
    while (e) {
      ++deg[std::countr_zero(e)];
      e &= e - 1;
    }
  }
  return deg;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return edges_.contains(make_subset({u, v}, vertex_count()));
}

Graph Graph::complement() const { return Graph(edges_.complement()); }

std::int64_t sigma(const Graph& g) { return sum_of_squares(g.degrees()); }

std::int64_t sigma_from_k(const SubsetFamily& fam) {
  if (fam.ell() != 2) throw std::invalid_argument("sigma_from_k needs a family of 2-subsets");
  return 2 * k_lambda(fam) + 2 * static_cast<std::int64_t>(fam.size());
}

bool is_star(const Graph& g) {
  const auto r = g.edge_count();
  const auto deg = g.degrees();
  if (r == 0) return true;
  if (r == 1) return true;
  int centers = 0;
  int leaves = 0;
  for (int d : deg) {
    if (d == r)
      ++centers;
    else if (d == 1)
      ++leaves;
    else if (d != 0)
      return false;
  }
  return centers == 1 && leaves == r;
}

ThresholdTrace is_threshold(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<Mask> adj(m, 0);
  for (Mask e : g.edges().members()) {
    const int u = std::countr_zero(e);
    const int v = 63 - std::countl_zero(e);
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }

  Mask alive = ground_set(m);
  std::vector<std::pair<int, BuildStep>> peeled;
  while (std::popcount(alive) > 1) {
    const int remaining = std::popcount(alive);
    bool found = false;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[v] & alive);
      if (d == 0 || d == remaining - 1) {
        peeled.emplace_back(v + 1, d == 0 ? BuildStep::Isolated : BuildStep::Universal);
        alive &= ~(Mask{1} << v);
        found = true;
        break;
      }
    }
    if (!found) return {};
  }
  peeled.emplace_back(std::countr_zero(alive) + 1, BuildStep::Isolated);
  std::reverse(peeled.begin(), peeled.end());
  return {true, std::move(peeled)};
}

Rational de_caen_bound(int m, std::int64_t r) {
  if (m < 2) throw std::invalid_argument("de Caen's bound needs m >= 2");
  return Rational(r) * (Rational(2 * r, m - 1) + Rational(m - 2));
}

std::optional<std::int64_t> trivial_bound(int m, std::int64_t r) {
  if (m < 4 || r < 0 || r > m - 1) return std::nullopt;
  return r * (r + 1);
}

std::optional<std::int64_t> dual_bound(int m, std::int64_t r) {
  if (m < 2) return std::nullopt;
  const std::int64_t k = binom(m, 2);
  if (r < binom(m - 1, 2) || r > k) return std::nullopt;
  const std::int64_t s = k - r;
  return static_cast<std::int64_t>(m) * (m - 1) * (m - 2) + s * (s - 1) - 4 * s * (m - 2) + 2 * r;
}

void for_each_graph(int m, std::int64_t r, std::uint64_t budget,
                    const std::function<bool(const Graph&)>& fn) {
  const auto edges = SubsetIndexer(m, 2).all();
  const auto k = static_cast<std::int64_t>(edges.size());
  if (r < 0 || r > k) throw std::out_of_range("edge count outside [0, C(m,2)]");
  require_budget(binom_ext(k, r), budget, "graph enumeration");
  std::vector<Mask> chosen(r);
  for_each_combination(static_cast<int>(k), static_cast<int>(r), [&](std::span<const int> pos) {
    for (std::size_t i = 0; i < pos.size(); ++i) chosen[i] = edges[pos[i]];
    return fn(Graph(SubsetFamily(m, 2, chosen)));
  });
}

SigmaRecord optimal_graphs(int m, std::int64_t r, const OracleOptions& opts) {
  const auto edges = SubsetIndexer(m, 2).all();
  const auto k = static_cast<std::int64_t>(edges.size());
  if (r < 0 || r > k) throw std::out_of_range("edge count outside [0, C(m,2)]");
  require_budget(binom_ext(k, r), opts.max_candidates, "optimal graph search");

  SigmaRecord rec;
  rec.m = m;
  rec.r = r;
  rec.sigma_max = -1;
  std::vector<int> deg(m);
  std::vector<int> best_pos;
  for_each_combination(static_cast<int>(k), static_cast<int>(r), [&](std::span<const int> pos) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int p : pos) {
      const Mask e = edges[p];
      ++deg[std::countr_zero(e)];
      ++deg[63 - std::countl_zero(e)];
    }
    const std::int64_t s = sum_of_squares(deg);
    if (s > rec.sigma_max) {
      rec.sigma_max = s;
      rec.maximizer_count = 1;
      best_pos.assign(pos.begin(), pos.end());
    } else if (s == rec.sigma_max) {
      ++rec.maximizer_count;
    }
    return true;
  });

  std::vector<Mask> best;
  for (int p : best_pos) best.push_back(edges[p]);
  rec.maximizer = Graph(SubsetFamily(m, 2, std::move(best)));
  rec.sigma_via_families = 2 * k_r_oracle(2, m, r, opts).value + 2 * r;
  if (rec.sigma_via_families != rec.sigma_max)
    throw std::logic_error("optimal graph search disagrees with 2 K_r(2,m) + 2r");
  rec.de_caen = de_caen_bound(m, r);
  rec.trivial = trivial_bound(m, r);
  rec.dual = dual_bound(m, r);
  return rec;
}

bool TrivialBoundReport::ok() const noexcept {
  // boost::rational's mixed comparisons recurse forever under C++20 operator rewriting
  const Rational zero(0);
  const bool gap_ok = de_caen_gap == gap_closed_form &&
                      (r > 0 && r < m - 1 ? de_caen_gap > zero : de_caen_gap == zero);
  return violations == 0 && equality_non_stars == 0 && sigma_max == bound &&
         equality_cases == stars + equality_triangles && (r == 3 || equality_triangles == 0) &&
         gap_ok;
}

TrivialBoundReport trivial_bound_check(int m, std::int64_t r, std::uint64_t budget) {
  const auto bound = trivial_bound(m, r);
  if (!bound) throw std::invalid_argument("trivial bound needs m >= 4 and 0 <= r <= m-1");
  TrivialBoundReport rep;
  rep.m = m;
  rep.r = r;
  rep.bound = *bound;
  for_each_graph(m, r, budget, [&](const Graph& g) {
    ++rep.graphs;
    const auto s = sigma(g);
    rep.sigma_max = std::max(rep.sigma_max, s);
    const bool star = is_star(g);
    if (star) ++rep.stars;
    if (s > rep.bound) ++rep.violations;
    if (s == rep.bound) {
      ++rep.equality_cases;
      if (is_triangle(g))
        ++rep.equality_triangles;
      else if (!star)
        ++rep.equality_non_stars;
    }
    return true;
  });
  rep.de_caen_gap = de_caen_bound(m, r) - Rational(*bound);
  rep.gap_closed_form = Rational(r * (m - 3) * (m - 1 - r), m - 1);
  return rep;
}

bool complement_sigma_check(const Graph& g) {
  const std::int64_t m = g.vertex_count();
  const std::int64_t direct = sigma(g.complement());
  const std::int64_t relation = m * (m - 1) * (m - 1) - 4 * g.edge_count() * (m - 1) + sigma(g);
  return direct == relation;
}

DualBoundReport dual_bound_check(int m, std::int64_t r, std::uint64_t budget) {
  const auto bound = dual_bound(m, r);
  if (!bound) throw std::invalid_argument("dual bound needs C(m-1,2) <= r <= C(m,2)");
  DualBoundReport rep;
  rep.m = m;
  rep.r = r;
  rep.bound = *bound;
  for_each_graph(m, r, budget, [&](const Graph& g) {
    ++rep.graphs;
    const auto s = sigma(g);
    rep.sigma_max = std::max(rep.sigma_max, s);
    if (s > rep.bound) ++rep.violations;
    return true;
  });
  return rep;
}

}  // namespace subclose

namespace subclose {

bool edges_pairwise_incident(const Graph& g) {
  const auto e = g.edges().members();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if ((e[i] & e[j]) == 0) return false;
  return true;
}

bool is_triangle(const Graph& g) {
  if (g.edge_count() != 3) return false;
  Mask touched = 0;
  for (Mask e : g.edges().members()) touched |= e;
  return std::popcount(touched) == 3;
}

std::vector<GraphCensusRow> graph_census(int m) {
  if (m < 2 || m > 7) throw std::invalid_argument("graph census supports 2 <= m <= 7");
  const auto edges = SubsetIndexer(m, 2).all();
  const int k = static_cast<int>(edges.size());
  const std::uint64_t total = std::uint64_t{1} << k;

  std::vector<GraphCensusRow> rows(k + 1);
  for (int r = 0; r <= k; ++r) rows[r].r = r;
  std::vector<std::int32_t> sig(total);
  std::vector<int> deg(m);

  auto graph_of = [&](std::uint64_t mask) {
    std::vector<Mask> chosen;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) chosen.push_back(edges[std::countr_zero(rest)]);
    return Graph(SubsetFamily(m, 2, std::move(chosen)));
  };

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const Mask e = edges[std::countr_zero(rest)];
      ++deg[std::countr_zero(e)];
      ++deg[63 - std::countl_zero(e)];
    }
    const auto s = sum_of_squares(deg);
    sig[mask] = static_cast<std::int32_t>(s);
    const int r = std::popcount(mask);
    auto& row = rows[r];
    ++row.graphs;
    row.sigma_max = std::max(row.sigma_max, s);

    // s <= r(2r/(m-1) + m-2)  <=>  s(m-1) <= r(2r + (m-1)(m-2))
    const std::int64_t lhs = s * (m - 1);
    const std::int64_t rhs = static_cast<std::int64_t>(r) * (2 * r + (m - 1) * (m - 2));
    if (lhs > rhs) ++row.de_caen_violations;
    if (lhs == rhs) ++row.de_caen_tight;

    if (const auto t = trivial_bound(m, r)) {
      if (s > *t) ++row.trivial_violations;
      if (s == *t) {
        const Graph g = graph_of(mask);
        if (!is_star(g) && !is_triangle(g)) ++row.trivial_equality_non_star;
      }
    }
    if (const auto d = dual_bound(m, r); d && s > *d) ++row.dual_violations;
  }

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto& row = rows[std::popcount(mask)];
    if (sig[mask] == row.sigma_max) {
      ++row.optimal;
      if (!is_threshold(graph_of(mask)).is_threshold) ++row.optimal_non_threshold;
    }
  }

  // Pairwise-incident edge sets: only stars and the triangle qualify.
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int r = std::popcount(mask);
    if (r < 2) continue;
    bool incident = true;
    for (std::uint64_t a = mask; a && incident; a &= a - 1)
      for (std::uint64_t b = a & (a - 1); b && incident; b &= b - 1)
        incident = (edges[std::countr_zero(a)] & edges[std::countr_zero(b)]) != 0;
    if (!incident) continue;
    const Graph g = graph_of(mask);
    if (!is_star(g) && !is_triangle(g)) ++rows[r].pairwise_incident_non_star_triangle;
  }
  return rows;
}

}  // namespace subclose
