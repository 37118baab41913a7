#include "subclose/codes.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace subclose {

LinearCode::LinearCode(const FieldTable& field, Matrix generator, std::vector<Mask> row_labels,
                       std::vector<PluckerPoint> column_labels)
    : field_(&field),
      generator_(std::move(generator)),
      rows_(std::move(row_labels)),
      columns_(std::move(column_labels)) {}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (static_cast<int>(message.size()) != dimension())
    throw std::invalid_argument("message length does not match code dimension");
  std::vector<Elem> word(length(), 0);
  for (int i = 0; i < dimension(); ++i) {
    const Elem c = message[i];
    if (c == 0) continue;
    for (int j = 0; j < length(); ++j)
      word[j] = field_->add(word[j], field_->mul(c, generator_.at(i, j)));
  }
  return word;
}

Support LinearCode::codeword_support(std::span<const Elem> message) const {
  const auto word = encode(message);
  Support s(word.size());
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j] != 0) s.set(j);
  return s;
}

bool LinearCode::is_nondegenerate() const {
  for (int j = 0; j < length(); ++j) {
    bool nonzero = false;
    for (int i = 0; i < dimension() && !nonzero; ++i) nonzero = generator_.at(i, j) != 0;
    if (!nonzero) return false;
  }
  return true;
}

LinearCode build_code(const FieldTable& field, int ell, int m,
                      std::span<const PluckerPoint> points, std::span<const Mask> rows) {
  if (points.empty()) throw std::invalid_argument("cannot build a code from an empty point set");
  if (rows.empty()) throw std::invalid_argument("row index set is empty");
  const SubsetIndexer idx(m, ell);
  std::vector<std::uint64_t> pos;
  pos.reserve(rows.size());
  for (Mask b : rows) pos.push_back(idx.index(b));

  const int k = static_cast<int>(rows.size());
  const int n = static_cast<int>(points.size());
  Matrix g{k, n, std::vector<Elem>(static_cast<std::size_t>(k) * n)};
  for (int j = 0; j < n; ++j) {
    if (points[j].coords.size() != idx.size())
      throw std::invalid_argument("point has the wrong number of coordinates");
    for (int i = 0; i < k; ++i) g.at(i, j) = points[j].coords[pos[i]];
  }

  LinearCode code(field, g, std::vector<Mask>(rows.begin(), rows.end()),
                  std::vector<PluckerPoint>(points.begin(), points.end()));
  const int rk = rank(g, field);
  if (rk != k)
    throw RankDeficient("generator matrix has rank " + std::to_string(rk) + ", expected " +
                        std::to_string(k));
  if (!code.is_nondegenerate())
    throw DegenerateSystem("projective system lies in a coordinate hyperplane");
  return code;
}

namespace {

// Support of every message vector, computed on first use when q^k is small.
class SupportCache {
 public:
  explicit SupportCache(const LinearCode& code) : code_(code) {
    const int q = code.q();
    std::uint64_t total = 1;
    for (int i = 0; i < code.dimension() && total <= kLimit; ++i) total *= q;
    if (total <= kLimit) cache_.resize(total);
  }

  const Support& get(std::span<const Elem> message) {
    if (cache_.empty()) {
      scratch_ = code_.codeword_support(message);
      return scratch_;
    }
    std::uint64_t key = 0;
    for (auto it = message.rbegin(); it != message.rend(); ++it) key = key * code_.q() + *it;
    auto& slot = cache_[key];
    if (!slot) slot = code_.codeword_support(message);
    return *slot;
  }

 private:
  static constexpr std::uint64_t kLimit = 1u << 20;
  const LinearCode& code_;
  std::vector<std::optional<Support>> cache_;
  Support scratch_;
};

}  // namespace

std::int64_t higher_weights_exhaustive(const LinearCode& code, int r, const SubcodeOptions& opts) {
  const int k = code.dimension();
  if (r < 1 || r > k)
    throw std::out_of_range("subcode dimension " + std::to_string(r) + " outside [1," +
                            std::to_string(k) + "]");
  const BigInt subspaces = gaussian_binom(k, r, code.q());
  if (subspaces > opts.max_subspaces)
    throw BudgetExceeded("subcodes of dimension " + std::to_string(r), subspaces,
                         opts.max_subspaces);

  const int q = code.q();
  SupportCache cache(code);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<Elem>> basis(r, std::vector<Elem>(k, 0));
  Support acc(code.length());

  for_each_combination(k, r, [&](std::span<const int> pivots) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < r; ++i) {
      std::fill(basis[i].begin(), basis[i].end(), 0);
      basis[i][pivots[i]] = 1;
      for (int j = pivots[i] + 1; j < k; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
    }
    std::vector<int> counter(free.size(), 0);
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f)
        basis[free[f].first][free[f].second] = static_cast<Elem>(counter[f]);
      // the support of a subspace is the union of the supports of a basis
      acc.reset();
      for (int i = 0; i < r; ++i) acc |= cache.get(basis[i]);
      best = std::min<std::int64_t>(best, static_cast<std::int64_t>(acc.count()));

      int f = static_cast<int>(free.size()) - 1;
      while (f >= 0 && counter[f] == q - 1) counter[f--] = 0;
      if (f < 0) break;
      ++counter[f];
    }
    return true;
  });
  return best;
}

bool WeightHierarchy::strictly_increasing() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) return false;
    if (i > 0 && values[i] <= values[i - 1]) return false;
  }
  return true;
}

WeightHierarchy weight_hierarchy(const LinearCode& code, const SubcodeOptions& opts) {
  WeightHierarchy h;
  for (int r = 1; r <= code.dimension(); ++r) {
    h.values.push_back(higher_weights_exhaustive(code, r, opts));
    h.methods.push_back(WeightMethod::Exhaustive);
  }
  return h;
}

}  // namespace subclose
