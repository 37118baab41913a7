#include "subclose/combinat.hpp"

#include <bit>
#include <limits>
#include <sstream>

namespace subclose {

namespace {

std::string to_string(const BigInt& v) { return v.str(); }

// Pascal table for rank/unrank; C(62,31) fits comfortably in 64 bits.
struct PascalTable {
  std::array<std::array<std::uint64_t, kMaxGroundSet + 2>, kMaxGroundSet + 2> c{};
  PascalTable() {
    for (int n = 0; n <= kMaxGroundSet + 1; ++n) {
      c[n][0] = 1;
      for (int j = 1; j <= n; ++j) c[n][j] = c[n - 1][j - 1] + (j <= n - 1 ? c[n - 1][j] : 0);
    }
  }
  std::uint64_t operator()(int n, int j) const {
    if (j < 0 || n < 0 || j > n) return 0;
    return c[n][j];
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

constexpr std::size_t kMaxStoredViolations = 16;

void record(IdentityReport& report, int identity, std::vector<std::int64_t> witness,
            std::string detail) {
  ++report.violation_count;
  if (report.violations.size() < kMaxStoredViolations)
    report.violations.push_back({identity, std::move(witness), std::move(detail)});
}

}  // namespace

BudgetExceeded::BudgetExceeded(const std::string& what, BigInt candidates, BigInt budget)
    : std::runtime_error(what + ": " + to_string(candidates) + " candidates exceed budget " +
                         to_string(budget)),
      candidates_(std::move(candidates)),
      budget_(std::move(budget)) {}

BigInt binom_ext(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  BigInt result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    result *= BigInt(a) - i;
    result /= i + 1;  // exact: result is C(a, i+1) after this step
    if (result == 0) break;
  }
  return result;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer value " + v.str() + " does not fit in int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  return to_int64(binom_ext(a, std::min(b, a - b)));
}

BigInt gaussian_binom(int m, int ell, std::int64_t q) {
  if (q < 2) throw std::invalid_argument("gaussian_binom: q must be at least 2");
  if (m < 0 || ell < 0 || ell > m)
    throw std::invalid_argument("gaussian_binom: need 0 <= ell <= m");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qm = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
  const BigInt ql = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(ell));
  BigInt qi = 1;
  for (int i = 0; i < ell; ++i) {
    num *= qm - qi;
    den *= ql - qi;
    qi *= q;
  }
  return num / den;
}

IdentityReport check_binomial_identities(IntRange a, IntRange b, IntRange c, IntRange d,
                                         IntRange e) {
  IdentityReport report;
  for (auto x = a.lo; x <= a.hi; ++x) {
    for (auto y = b.lo; y <= b.hi; ++y) {
      const BigInt cxy = binom_ext(x, y);

      const bool sym = cxy == binom_ext(x, x - y);
      const bool sym_predicted = x >= 0 || (x < y && y < 0);
      ++report.checked[0];
      if (sym != sym_predicted)
        record(report, 1, {x, y}, "C(a,b)=C(a,a-b) is " + std::string(sym ? "true" : "false"));

      const bool zero = cxy == 0;
      const bool zero_predicted = y < 0 || (y > x && x >= 0);
      ++report.checked[1];
      if (zero != zero_predicted)
        record(report, 2, {x, y}, "C(a,b)=0 is " + std::string(zero ? "true" : "false"));

      for (auto z = c.lo; z <= c.hi; ++z) {
        const BigInt lhs = cxy * binom_ext(y, z);
        const BigInt rhs = binom_ext(x, z) * binom_ext(x - z, y - z);
        ++report.checked[2];
        if (lhs != rhs) record(report, 3, {x, y, z}, lhs.str() + " != " + rhs.str());
      }
    }
  }

  for (auto x = a.lo; x <= a.hi; ++x)
    for (auto y = b.lo; y <= b.hi; ++y)
      for (auto z = c.lo; z <= c.hi; ++z)
        for (auto w = d.lo; w <= d.hi; ++w)
          for (auto v = e.lo; v <= e.hi; ++v) {
            const BigInt lhs = binom_ext(x + y, z - v);
            BigInt rhs = 0;
            for (auto j = v; j <= z; ++j) rhs += binom_ext(x + w, z - j) * binom_ext(y - w, j - v);
            ++report.checked[3];
            if (lhs != rhs) record(report, 4, {x, y, z, w, v}, lhs.str() + " != " + rhs.str());
          }
  return report;
}

int popcount(Mask s) noexcept { return std::popcount(s); }

Mask ground_set(int m) {
  if (m < 0 || m > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
  return m == 0 ? Mask{0} : (~Mask{0} >> (64 - m));
}

Mask make_subset(std::span<const int> elements, int m) {
  Mask s = 0;
  for (int x : elements) {
    if (x < 1 || x > m)
      throw std::invalid_argument("element " + std::to_string(x) + " outside [1," +
                                  std::to_string(m) + "]");
    const Mask bit = Mask{1} << (x - 1);
    if (s & bit) throw std::invalid_argument("repeated element " + std::to_string(x));
    s |= bit;
  }
  return s;
}

Mask make_subset(std::initializer_list<int> elements, int m) {
  return make_subset(std::span<const int>(elements.begin(), elements.size()), m);
}

std::vector<int> subset_elements(Mask s) {
  std::vector<int> out;
  out.reserve(std::popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::string format_subset(Mask s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : subset_elements(s)) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

Mask next_same_popcount(Mask s) noexcept {
  if (s == 0) return 0;
  const Mask u = s & (~s + 1);
  const Mask v = s + u;
  if (v == 0) return 0;
  return v | (((v ^ s) / u) >> 2);
}

SubsetIndexer::SubsetIndexer(int m, int ell) : m_(m), ell_(ell) {
  if (m < 1 || m > kMaxGroundSet)
    throw std::invalid_argument("SubsetIndexer: m must lie in [1," +
                                std::to_string(kMaxGroundSet) + "]");
  if (ell < 1 || ell > m) throw std::invalid_argument("SubsetIndexer: need 1 <= ell <= m");
  size_ = pascal()(m, ell);
}

Mask SubsetIndexer::subset(std::uint64_t index) const {
  if (index >= size_)
    throw std::out_of_range("subset index " + std::to_string(index) + " out of range [0," +
                            std::to_string(size_) + ")");
  Mask s = 0;
  int c = m_ - 1;
  for (int i = ell_; i >= 1; --i) {
    while (pascal()(c, i) > index) --c;
    index -= pascal()(c, i);
    s |= Mask{1} << c;
    --c;
  }
  return s;
}

std::uint64_t SubsetIndexer::index(Mask s) const {
  if (std::popcount(s) != ell_)
    throw std::invalid_argument("subset " + format_subset(s) + " does not have cardinality " +
                                std::to_string(ell_));
  if (s & ~ground_set(m_))
    throw std::invalid_argument("subset " + format_subset(s) + " not contained in [" +
                                std::to_string(m_) + "]");
  std::uint64_t idx = 0;
  int i = 1;
  while (s) {
    idx += pascal()(std::countr_zero(s), i++);
    s &= s - 1;
  }
  return idx;
}

std::vector<Mask> SubsetIndexer::all() const {
  std::vector<Mask> out;
  out.reserve(size_);
  Mask s = ground_set(ell_);
  for (std::uint64_t i = 0; i < size_; ++i) {
    out.push_back(s);
    s = next_same_popcount(s);
  }
  return out;
}

void for_each_combination(int n, int r,
                          const std::function<bool(std::span<const int>)>& fn) {
  if (r < 0 || n < 0 || r > n) return;
  std::vector<int> pos(r);
  for (int i = 0; i < r; ++i) pos[i] = i;
  while (true) {
    if (!fn(pos)) return;
    // colex successor: bump the lowest position that can move, reset those below it
    int i = 0;
    while (i < r && pos[i] + 1 == (i + 1 < r ? pos[i + 1] : n)) ++i;
    if (i == r) return;
    ++pos[i];
    for (int j = 0; j < i; ++j) pos[j] = j;
  }
}

}  // namespace subclose
