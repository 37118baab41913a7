#pragma once

// Exact integer combinatorics: extended binomials, Gaussian binomials and the
// colexicographic indexing of l-subsets of [m].
//
// Subsets of [m] are machine words: element i (1-based) is bit i-1. Within a
// fixed cardinality, colex order coincides with numeric order of the masks.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subclose {

using BigInt = boost::multiprecision::cpp_int;
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 62;

/// Thrown when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BigInt candidates, BigInt budget);
  const BigInt& candidates() const noexcept { return candidates_; }
  const BigInt& budget() const noexcept { return budget_; }

 private:
  BigInt candidates_;
  BigInt budget_;
};

/// a(a-1)...(a-b+1)/b! for b >= 0 and 0 for b < 0; any integer a.
BigInt binom_ext(std::int64_t a, std::int64_t b);

/// Ordinary binomial for 0 <= b; 0 when b > a. Throws std::overflow_error
/// if the value does not fit in int64.
std::int64_t binom(std::int64_t a, std::int64_t b);

/// Number of ell-dimensional subspaces of GF(q)^m.
BigInt gaussian_binom(int m, int ell, std::int64_t q);

/// Narrowing from BigInt; throws std::overflow_error instead of wrapping.
std::int64_t to_int64(const BigInt& v);

// --- binomial identity audit ---------------------------------------------

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

struct IdentityViolation {
  int identity = 0;  // 1..4
  std::vector<std::int64_t> witness;
  std::string detail;
};

struct IdentityReport {
  std::array<std::uint64_t, 4> checked{};
  std::uint64_t violation_count = 0;
  std::vector<IdentityViolation> violations;  // first few only
  bool ok() const noexcept { return violation_count == 0; }
};

/// Evaluates the four elementary binomial identities pointwise:
///  (i)   C(a,b) = C(a,a-b)  iff  a >= 0 or a < b < 0
///  (ii)  C(a,b) = 0         iff  b < 0 or b > a >= 0
///  (iii) C(a,b)C(b,c) = C(a,c)C(a-c,b-c)
///  (iv)  C(a+b,c-e) = sum_{j=e..c} C(a+d,c-j) C(b-d,j-e)
/// (i),(ii) range over (a,b); (iii) over (a,b,c); (iv) over (a,b,c,d,e).
IdentityReport check_binomial_identities(IntRange a, IntRange b, IntRange c,
                                         IntRange d, IntRange e);

// --- subsets --------------------------------------------------------------

int popcount(Mask s) noexcept;

/// Mask from 1-based elements; throws on out-of-range or repeated elements.
Mask make_subset(std::span<const int> elements, int m);
Mask make_subset(std::initializer_list<int> elements, int m);
std::vector<int> subset_elements(Mask s);
std::string format_subset(Mask s);
Mask ground_set(int m);

/// Next mask with the same popcount (Gosper); 0 once the word overflows.
Mask next_same_popcount(Mask s) noexcept;

/// Bijection between [0, C(m,ell)) and ell-subsets of [m] in colex order.
class SubsetIndexer {
 public:
  SubsetIndexer(int m, int ell);

  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }
  std::uint64_t size() const noexcept { return size_; }

  Mask subset(std::uint64_t index) const;
  std::uint64_t index(Mask s) const;
  std::vector<Mask> all() const;

 private:
  int m_;
  int ell_;
  std::uint64_t size_;
};

/// Calls fn with each r-subset of {0..n-1} (ascending positions) in colex
/// order. Stops early if fn returns false.
void for_each_combination(int n, int r,
                          const std::function<bool(std::span<const int>)>& fn);

}  // namespace subclose
