#pragma once

// Families of l-subsets of [m]: the pairwise-intersection total K, close
// family structure, subclose search, closed forms for K_r and the two
// duality identities.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subclose/combinat.hpp"

namespace subclose {

/// A set of distinct ell-subsets of [m], kept sorted in colex order.
class SubsetFamily {
 public:
  SubsetFamily(int m, int ell);
  SubsetFamily(int m, int ell, std::vector<Mask> members);

  static SubsetFamily from_lists(int m, int ell, const std::vector<std::vector<int>>& members);
  /// Every ell-subset of [m].
  static SubsetFamily full(int m, int ell);

  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Mask> members() const noexcept { return members_; }
  bool contains(Mask s) const;

  /// The family I_ell[m] minus this one.
  SubsetFamily complement() const;

  std::string to_string() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  int m_;
  int ell_;
  std::vector<Mask> members_;
};

/// max{ell, m-ell} + 1
int mu(int ell, int m);
/// C(m-1, ell-1)
std::int64_t nu(int ell, int m);

/// Sum over unordered pairs of |A_i ∩ A_j|.
std::int64_t k_lambda(const SubsetFamily& fam);
std::int64_t k_lambda(std::span<const Mask> members);

enum class CloseKind { TypeI, TypeII, Both, NotClose };
std::string to_string(CloseKind kind);

/// TypeI:  members are S ∪ {t}, |S| = ell-1, t ∈ T.
/// TypeII: members are (S ∪ T) \ {t}, |S| = ell-r+1, t ∈ T.
struct CloseFamilyWitness {
  CloseKind kind = CloseKind::NotClose;
  Mask core = 0;
  Mask tail = 0;
};

CloseFamilyWitness classify_close(const SubsetFamily& fam);

/// Rebuilds the family described by a TypeI/TypeII witness.
SubsetFamily realize_close(const CloseFamilyWitness& w, CloseKind as, int m, int ell);

/// {[m] \ A : A ∈ Λ}, a family of (m-ell)-subsets. Requires ell < m.
SubsetFamily dual_star(const SubsetFamily& fam);

/// Closed-form K_r(ell,m) where one is known: r <= mu, k-r <= mu, r = k.
/// Empty in the middle range mu < r < k-mu. Throws std::out_of_range if
/// r is outside [0, C(m,ell)].
std::optional<std::int64_t> k_r_closed(int ell, int m, std::int64_t r);

enum class KrMethod { ClosedFormLow, ClosedFormHigh, BruteForce };
std::string to_string(KrMethod method);

struct KrRecord {
  int ell = 0;
  int m = 0;
  std::int64_t r = 0;
  std::int64_t value = 0;
  KrMethod method = KrMethod::BruteForce;
  SubsetFamily maximizer{1, 1};
  std::optional<std::uint64_t> maximizer_count;
};

struct OracleOptions {
  std::uint64_t max_candidates = 100'000'000;
  bool prune = true;
  bool count_maximizers = false;
};

/// Exhaustive maximum of K over all r-subsets of I_ell[m]. The returned
/// maximizer is the colex-least one. Throws BudgetExceeded when C(k,r)
/// exceeds opts.max_candidates.
KrRecord k_r_oracle(int ell, int m, std::int64_t r, const OracleOptions& opts = {});

/// Every family of size r attaining K_r(ell,m), in colex order.
std::vector<SubsetFamily> all_subclose(int ell, int m, std::int64_t r,
                                       const OracleOptions& opts = {});

/// Closed form with a constructed maximizer when applicable, otherwise the
/// oracle.
KrRecord k_r(int ell, int m, std::int64_t r, const OracleOptions& opts = {});

struct DualityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool identity_holds = false;
  bool maximizers_map = false;
  std::uint64_t maximizers_checked = 0;
  bool holds() const noexcept { return identity_holds && maximizers_map; }
};

/// K_r(ell,m) = C(r,2)(2ell-m) + K_r(m-ell,m), and dual_star sends every
/// maximizer on the left to a maximizer on the right.
DualityCheck first_duality_check(int ell, int m, std::int64_t r, const OracleOptions& opts = {});

/// K_{k-r}(ell,m) = m C(nu,2) - r ell (nu-1) + K_r(ell,m), and the
/// complement of every maximizer of size r is a maximizer of size k-r.
DualityCheck second_duality_check(int ell, int m, std::int64_t r,
                                  const OracleOptions& opts = {});

/// Sum over B ≠ A in I_ell[m] of |A ∩ B|, by enumeration.
std::int64_t sum_intersections_fixed(int ell, int m, Mask a);

/// Sum over all ordered pairs (A,B) of I_ell[m] of |A ∩ B|, by enumeration.
std::int64_t total_intersection_sum(int ell, int m);

}  // namespace subclose
