#pragma once

// Instance checks of the subclose-section formula for higher weights of
// Grassmann and Schubert codes:
//
//   d_r = n - max{ |X ∩ Π_Λ| : Λ subclose, |Λ| = r }
//
// where X is the point set and Π_Λ the coordinate subspace on which every
// Plücker coordinate in Λ vanishes.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subclose/codes.hpp"
#include "subclose/families.hpp"
#include "subclose/grassmann.hpp"

namespace subclose {

enum class Verdict { Equal, LhsLess, LhsGreater };
std::string to_string(Verdict v);

struct ConjectureOptions {
  EnumerationOptions points;
  SubcodeOptions subcodes;
  std::uint64_t max_families = 100'000'000;
};

struct ConjectureReport {
  int ell = 0;
  int m = 0;
  int q = 0;
  std::optional<std::vector<int>> alpha;
  int r = 0;
  std::int64_t length = 0;
  std::int64_t dimension = 0;
  std::int64_t d_r = 0;
  std::int64_t rhs_subclose = 0;
  std::int64_t rhs_all_coordinate = 0;
  Verdict verdict = Verdict::Equal;
  SubsetFamily witness_lambda{1, 1};
  std::int64_t subclose_k = 0;             // max K over r-subsets of the row index set
  std::uint64_t subclose_families = 0;     // how many attain it
  std::optional<std::string> proven_regime;
};

/// Name of the known-result regime covering (ell, m, alpha, r), if any:
///   grassmann-low         Grassmann code, r <= max{ell, m-ell} + 1
///   grassmann-2m          C(2,m), r = max{2, m-2} + 2
///   schubert-min-distance Schubert code, r = 1
///   schubert-submaximal   codimension-one Schubert code, r <= max{ell, m-ell}
/// A maximal alpha is treated as the Grassmann case.
std::optional<std::string> proven_regime(int ell, int m, const std::optional<SchubertIndex>& alpha,
                                         int r);

/// Builds the point set and code once; run(r) evaluates both sides.
class ConjectureHarness {
 public:
  ConjectureHarness(int ell, int m, int q, std::optional<SchubertIndex> alpha,
                    ConjectureOptions opts = {});

  int ell() const noexcept { return ell_; }
  int m() const noexcept { return m_; }
  const FieldTable& field() const noexcept { return *field_; }
  const std::optional<SchubertIndex>& alpha() const noexcept { return alpha_; }
  const std::vector<PluckerPoint>& points() const noexcept { return points_; }
  const std::vector<Mask>& rows() const noexcept { return rows_; }
  const LinearCode& code() const noexcept { return *code_; }

  /// Subclose families are taken among the r-subsets of the row index set
  /// (I(ell,m) or I_alpha(ell,m)).
  ConjectureReport run(int r) const;

 private:
  int ell_;
  int m_;
  std::optional<SchubertIndex> alpha_;
  ConjectureOptions opts_;
  std::unique_ptr<FieldTable> field_;
  std::vector<PluckerPoint> points_;
  std::vector<Mask> rows_;
  std::vector<Mask> zero_masks_;  // per point: row positions where it vanishes
  std::unique_ptr<LinearCode> code_;
};

ConjectureReport verify_conjecture(int ell, int m, int q, const std::optional<SchubertIndex>& alpha,
                                   int r, const ConjectureOptions& opts = {});

}  // namespace subclose
