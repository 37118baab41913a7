#include "subclose/families.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace subclose {

namespace {

constexpr std::uint64_t kMaxOracleUniverse = 1u << 16;

void validate_params(int ell, int m) {
  if (m < 1 || m > kMaxGroundSet)
    throw std::invalid_argument("m must lie in [1," + std::to_string(kMaxGroundSet) + "]");
  if (ell < 1 || ell > m) throw std::invalid_argument("need 1 <= ell <= m");
}

std::int64_t checked(const BigInt& v) { return to_int64(v); }

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

// Lowest n elements of [m] starting at 1-based position `from`.
Mask block(int from, int n) {
  if (n <= 0) return 0;
  return ((n >= 64) ? ~Mask{0} : ((Mask{1} << n) - 1)) << (from - 1);
}

// A close family of size r <= mu, TypeI when it fits, else TypeII.
SubsetFamily construct_close(int ell, int m, std::int64_t r) {
  if (r == 0) return SubsetFamily(m, ell);
  CloseFamilyWitness w;
  if (r <= m - ell + 1) {
    w.kind = CloseKind::TypeI;
    w.core = block(1, ell - 1);
    w.tail = block(ell, static_cast<int>(r));
  } else {
    w.kind = CloseKind::TypeII;
    w.core = block(1, ell - static_cast<int>(r) + 1);
    w.tail = block(ell - static_cast<int>(r) + 2, static_cast<int>(r));
  }
  return realize_close(w, w.kind, m, ell);
}

// Colex-ordered exhaustive search over r-subsets of `items`.
class FamilySearch {
 public:
  FamilySearch(std::span<const Mask> items, int r, int ell, bool prune, bool collect)
      : items_(items), r_(r), ell_(ell), prune_(prune), collect_(collect), chosen_(r) {}

  void run() {
    if (r_ == 0) {
      best_ = 0;
      count_ = 1;
      best_set_.clear();
      if (collect_) all_.emplace_back();
      return;
    }
    dfs(0, static_cast<int>(items_.size()), 0);
  }

  std::int64_t best() const { return best_; }
  std::uint64_t count() const { return count_; }
  const std::vector<int>& best_set() const { return best_set_; }
  const std::vector<std::vector<int>>& all() const { return all_; }

 private:
  // chosen_[0] > chosen_[1] > ...: picking the largest element first and
  // scanning each level upward visits families in colex order.
  void dfs(int depth, int upper, std::int64_t current) {
    const int todo = r_ - depth;
    for (int x = todo - 1; x < upper; ++x) {
      std::int64_t gain = 0;
      for (int i = 0; i < depth; ++i) gain += std::popcount(items_[x] & items_[chosen_[i]]);
      const std::int64_t value = current + gain;
      const std::int64_t rest = todo - 1;
      if (prune_ && best_ >= 0) {
        // each further pair meets in at most ell-1 elements
        const std::int64_t bound = value + (ell_ - 1) * (choose2(rest) + rest * (depth + 1));
        if (bound < best_) continue;
      }
      chosen_[depth] = x;
      if (rest == 0)
        leaf(value);
      else
        dfs(depth + 1, x, value);
    }
  }

  void leaf(std::int64_t value) {
    if (value > best_) {
      best_ = value;
      count_ = 1;
      best_set_.assign(chosen_.rbegin(), chosen_.rend());
      if (collect_) {
        all_.clear();
        all_.push_back(best_set_);
      }
    } else if (value == best_) {
      ++count_;
      if (collect_) all_.emplace_back(chosen_.rbegin(), chosen_.rend());
    }
  }

  std::span<const Mask> items_;
  int r_;
  int ell_;
  bool prune_;
  bool collect_;
  std::vector<int> chosen_;
  std::int64_t best_ = -1;
  std::uint64_t count_ = 0;
  std::vector<int> best_set_;
  std::vector<std::vector<int>> all_;
};

std::vector<Mask> pick(std::span<const Mask> items, const std::vector<int>& positions) {
  std::vector<Mask> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(items[p]);
  return out;
}

FamilySearch run_search(int ell, int m, std::int64_t r, const OracleOptions& opts, bool collect,
                        std::vector<Mask>& items) {
  validate_params(ell, m);
  const SubsetIndexer idx(m, ell);
  const auto k = static_cast<std::int64_t>(idx.size());
  if (r < 0 || r > k)
    throw std::out_of_range("r = " + std::to_string(r) + " outside [0," + std::to_string(k) + "]");
  const BigInt candidates = binom_ext(k, r);
  if (candidates > opts.max_candidates)
    throw BudgetExceeded("K_r oracle for (ell,m,r)=(" + std::to_string(ell) + "," +
                             std::to_string(m) + "," + std::to_string(r) + ")",
                         candidates, opts.max_candidates);
  if (idx.size() > kMaxOracleUniverse)
    throw BudgetExceeded("K_r oracle universe C(m,ell)", idx.size(), kMaxOracleUniverse);
  items = idx.all();
  FamilySearch search(items, static_cast<int>(r), ell, opts.prune, collect);
  search.run();
  return search;
}

}  // namespace

// --- SubsetFamily ------------------------------------------------------------

SubsetFamily::SubsetFamily(int m, int ell) : m_(m), ell_(ell) { validate_params(ell, m); }

SubsetFamily::SubsetFamily(int m, int ell, std::vector<Mask> members)
    : m_(m), ell_(ell), members_(std::move(members)) {
  validate_params(ell, m);
  const Mask ground = ground_set(m);
  for (Mask s : members_) {
    if (std::popcount(s) != ell || (s & ~ground))
      throw std::invalid_argument("family member " + format_subset(s) + " is not an " +
                                  std::to_string(ell) + "-subset of [" + std::to_string(m) + "]");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("family members must be distinct");
}

SubsetFamily SubsetFamily::from_lists(int m, int ell,
                                      const std::vector<std::vector<int>>& members) {
  std::vector<Mask> masks;
  masks.reserve(members.size());
  for (const auto& s : members) masks.push_back(make_subset(s, m));
  return SubsetFamily(m, ell, std::move(masks));
}

SubsetFamily SubsetFamily::full(int m, int ell) {
  return SubsetFamily(m, ell, SubsetIndexer(m, ell).all());
}

bool SubsetFamily::contains(Mask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

SubsetFamily SubsetFamily::complement() const {
  std::vector<Mask> out;
  const auto all = SubsetIndexer(m_, ell_).all();
  out.reserve(all.size() - members_.size());
  std::set_difference(all.begin(), all.end(), members_.begin(), members_.end(),
                      std::back_inserter(out));
  return SubsetFamily(m_, ell_, std::move(out));
}

std::string SubsetFamily::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << format_subset(members_[i]);
  }
  os << '}';
  return os.str();
}

// --- scalar helpers ----------------------------------------------------------

int mu(int ell, int m) { return std::max(ell, m - ell) + 1; }

std::int64_t nu(int ell, int m) { return binom(m - 1, ell - 1); }

std::int64_t k_lambda(std::span<const Mask> members) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      total += std::popcount(members[i] & members[j]);
  return total;
}

std::int64_t k_lambda(const SubsetFamily& fam) { return k_lambda(fam.members()); }

std::string to_string(CloseKind kind) {
  switch (kind) {
    case CloseKind::TypeI: return "TypeI";
    case CloseKind::TypeII: return "TypeII";
    case CloseKind::Both: return "Both";
    case CloseKind::NotClose: return "NotClose";
  }
  return "?";
}

std::string to_string(KrMethod method) {
  switch (method) {
    case KrMethod::ClosedFormLow: return "closed_form_low";
    case KrMethod::ClosedFormHigh: return "closed_form_high";
    case KrMethod::BruteForce: return "brute_force";
  }
  return "?";
}

// --- close families ----------------------------------------------------------

SubsetFamily realize_close(const CloseFamilyWitness& w, CloseKind as, int m, int ell) {
  std::vector<Mask> out;
  Mask t = w.tail;
  while (t) {
    const Mask bit = t & (~t + 1);
    if (as == CloseKind::TypeI)
      out.push_back(w.core | bit);
    else if (as == CloseKind::TypeII)
      out.push_back((w.core | w.tail) & ~bit);
    else
      throw std::invalid_argument("realize_close: kind must be TypeI or TypeII");
    t &= t - 1;
  }
  return SubsetFamily(m, ell, std::move(out));
}

CloseFamilyWitness classify_close(const SubsetFamily& fam) {
  const int m = fam.m();
  const int ell = fam.ell();
  const auto members = fam.members();
  const auto r = static_cast<int>(members.size());

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (std::popcount(members[i] & members[j]) != ell - 1) return {};

  // Degenerate sizes: pick explicit witnesses and decide whether TypeII fits.
  if (r == 0) {
    const CloseKind kind = ell + 1 <= m ? CloseKind::Both : CloseKind::TypeI;
    return {kind, block(1, ell - 1), 0};
  }
  if (r == 1) {
    const Mask a = members[0];
    const Mask top = Mask{1} << (63 - std::countl_zero(a));
    const CloseKind kind = ell < m ? CloseKind::Both : CloseKind::TypeI;
    return {kind, a & ~top, top};
  }

  Mask inter = ground_set(m);
  Mask uni = 0;
  for (Mask s : members) {
    inter &= s;
    uni |= s;
  }
  const Mask tail = uni & ~inter;
  const bool fits_tail = std::popcount(tail) == r;

  const bool type1 = fits_tail && std::popcount(inter) == ell - 1 &&
                     realize_close({CloseKind::TypeI, inter, tail}, CloseKind::TypeI, m, ell) == fam;
  const bool type2 = fits_tail && std::popcount(inter) == ell - r + 1 &&
                     realize_close({CloseKind::TypeII, inter, tail}, CloseKind::TypeII, m, ell) == fam;

  if (type1 && type2) return {CloseKind::Both, inter, tail};
  if (type1) return {CloseKind::TypeI, inter, tail};
  if (type2) return {CloseKind::TypeII, inter, tail};
  // Pairwise (ell-1)-intersecting families are always one of the two types;
  // reaching here means the structure theorem failed on this input.
  throw std::logic_error("close family " + fam.to_string() + " matches neither type");
}

SubsetFamily dual_star(const SubsetFamily& fam) {
  if (fam.ell() >= fam.m())
    throw std::invalid_argument("dual_star needs ell < m");
  const Mask ground = ground_set(fam.m());
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (Mask s : fam.members()) out.push_back(ground & ~s);
  return SubsetFamily(fam.m(), fam.m() - fam.ell(), std::move(out));
}

// --- K_r ---------------------------------------------------------------------

std::optional<std::int64_t> k_r_closed(int ell, int m, std::int64_t r) {
  validate_params(ell, m);
  const std::int64_t k = binom(m, ell);
  if (r < 0 || r > k)
    throw std::out_of_range("r = " + std::to_string(r) + " outside [0," + std::to_string(k) + "]");
  const int barrier = mu(ell, m);
  if (r <= barrier) return checked(BigInt(ell - 1) * binom_ext(r, 2));
  const std::int64_t s = k - r;
  if (s <= barrier) {
    const std::int64_t n = nu(ell, m);
    return checked(BigInt(m) * binom_ext(n, 2) - BigInt(ell) * (n - 1) * s +
                   BigInt(ell - 1) * binom_ext(s, 2));
  }
  return std::nullopt;
}

KrRecord k_r_oracle(int ell, int m, std::int64_t r, const OracleOptions& opts) {
  std::vector<Mask> items;
  auto search = run_search(ell, m, r, opts, false, items);
  KrRecord rec;
  rec.ell = ell;
  rec.m = m;
  rec.r = r;
  rec.value = search.best();
  rec.method = KrMethod::BruteForce;
  rec.maximizer = SubsetFamily(m, ell, pick(items, search.best_set()));
  if (opts.count_maximizers) rec.maximizer_count = search.count();
  return rec;
}

std::vector<SubsetFamily> all_subclose(int ell, int m, std::int64_t r, const OracleOptions& opts) {
  std::vector<Mask> items;
  auto search = run_search(ell, m, r, opts, true, items);
  std::vector<SubsetFamily> out;
  out.reserve(search.all().size());
  for (const auto& positions : search.all()) out.emplace_back(m, ell, pick(items, positions));
  return out;
}

KrRecord k_r(int ell, int m, std::int64_t r, const OracleOptions& opts) {
  const auto closed = k_r_closed(ell, m, r);
  if (!closed) return k_r_oracle(ell, m, r, opts);

  KrRecord rec;
  rec.ell = ell;
  rec.m = m;
  rec.r = r;
  rec.value = *closed;
  const std::int64_t k = binom(m, ell);
  if (r <= mu(ell, m)) {
    rec.method = KrMethod::ClosedFormLow;
    rec.maximizer = construct_close(ell, m, r);
  } else {
    rec.method = KrMethod::ClosedFormHigh;
    rec.maximizer = construct_close(ell, m, k - r).complement();
  }
  if (k_lambda(rec.maximizer) != rec.value)
    throw std::logic_error("constructed maximizer does not attain the closed-form K_r");
  return rec;
}

DualityCheck first_duality_check(int ell, int m, std::int64_t r, const OracleOptions& opts) {
  if (ell >= m) throw std::invalid_argument("first_duality_check needs ell < m");
  DualityCheck out;
  const std::int64_t here = k_r_oracle(ell, m, r, opts).value;
  const std::int64_t there = k_r_oracle(m - ell, m, r, opts).value;
  out.lhs = here;
  out.rhs = choose2(r) * (2 * ell - m) + there;
  out.identity_holds = out.lhs == out.rhs;

  out.maximizers_map = true;
  for (const auto& fam : all_subclose(ell, m, r, opts)) {
    ++out.maximizers_checked;
    if (k_lambda(dual_star(fam)) != there) out.maximizers_map = false;
  }
  return out;
}

DualityCheck second_duality_check(int ell, int m, std::int64_t r, const OracleOptions& opts) {
  const std::int64_t k = binom(m, ell);
  const std::int64_t n = nu(ell, m);
  DualityCheck out;
  const std::int64_t kr = k_r_oracle(ell, m, r, opts).value;
  const std::int64_t kc = k_r_oracle(ell, m, k - r, opts).value;
  out.lhs = kc;
  out.rhs = checked(BigInt(m) * binom_ext(n, 2) - BigInt(r) * ell * (n - 1) + kr);
  out.identity_holds = out.lhs == out.rhs;

  out.maximizers_map = true;
  for (const auto& fam : all_subclose(ell, m, r, opts)) {
    ++out.maximizers_checked;
    if (k_lambda(fam.complement()) != kc) out.maximizers_map = false;
  }
  return out;
}

std::int64_t sum_intersections_fixed(int ell, int m, Mask a) {
  const SubsetIndexer idx(m, ell);
  idx.index(a);  // validates a
  std::int64_t total = 0;
  for (Mask b : idx.all())
    if (b != a) total += std::popcount(a & b);
  return total;
}

std::int64_t total_intersection_sum(int ell, int m) {
  const auto all = SubsetIndexer(m, ell).all();
  std::int64_t total = 0;
  for (Mask a : all)
    for (Mask b : all) total += std::popcount(a & b);
  return total;
}

}  // namespace subclose
