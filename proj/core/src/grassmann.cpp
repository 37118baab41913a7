#include "subclose/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace subclose {

PluckerPoint normalize(std::vector<Elem> v, const FieldTable& field) {
  const auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (lead == v.end()) throw std::invalid_argument("the zero vector is not a projective point");
  const Elem scale = field.inv(*lead);
  for (auto it = lead; it != v.end(); ++it) *it = field.mul(*it, scale);
  return PluckerPoint{std::move(v)};
}

int rank(Matrix a, const FieldTable& field) {
  int r = 0;
  for (int col = 0; col < a.cols && r < a.rows; ++col) {
    int pivot = r;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    const Elem s = field.inv(a.at(r, col));
    for (int j = 0; j < a.cols; ++j) a.at(r, j) = field.mul(a.at(r, j), s);
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Elem f = a.at(i, col);
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = field.sub(a.at(i, j), field.mul(f, a.at(r, j)));
    }
    ++r;
  }
  return r;
}

Elem determinant(Matrix a, const FieldTable& field) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows;
  Elem det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
      det = field.neg(det);
    }
    const Elem d = a.at(col, col);
    det = field.mul(det, d);
    const Elem dinv = field.inv(d);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      const Elem f = field.mul(a.at(i, col), dinv);
      for (int j = col; j < n; ++j) a.at(i, j) = field.sub(a.at(i, j), field.mul(f, a.at(col, j)));
    }
  }
  return det;
}

std::vector<Elem> plucker_minors(const Matrix& a, const FieldTable& field) {
  const SubsetIndexer idx(a.cols, a.rows);
  std::vector<Elem> out;
  out.reserve(idx.size());
  Matrix sub{a.rows, a.rows, std::vector<Elem>(static_cast<std::size_t>(a.rows) * a.rows)};
  for (Mask beta : idx.all()) {
    int c = 0;
    for (Mask s = beta; s; s &= s - 1, ++c) {
      const int col = std::countr_zero(s);
      for (int i = 0; i < a.rows; ++i) sub.at(i, c) = a.at(i, col);
    }
    out.push_back(determinant(sub, field));
  }
  return out;
}

// --- SchubertIndex -------------------------------------------------------------

SchubertIndex::SchubertIndex(std::vector<int> alpha, int m) : alpha_(std::move(alpha)), m_(m) {
  if (alpha_.empty()) throw std::invalid_argument("Schubert index must be nonempty");
  if (m < 1 || m > kMaxGroundSet) throw std::invalid_argument("Schubert index: m out of range");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] < 1 || alpha_[i] > m)
      throw std::invalid_argument("Schubert index entry outside [1,m]: " + to_string());
    if (i > 0 && alpha_[i] <= alpha_[i - 1])
      throw std::invalid_argument("Schubert index must be strictly increasing: " + to_string());
  }
}

bool SchubertIndex::admits(Mask beta) const {
  std::size_t i = 0;
  for (int b : subset_elements(beta)) {
    if (i >= alpha_.size() || b > alpha_[i]) return false;
    ++i;
  }
  return i == alpha_.size();
}

std::vector<Mask> SchubertIndex::index_set() const {
  std::vector<Mask> out;
  for (Mask beta : SubsetIndexer(m_, ell()).all())
    if (admits(beta)) out.push_back(beta);
  return out;
}

bool SchubertIndex::is_maximal() const {
  for (int i = 0; i < ell(); ++i)
    if (alpha_[i] != m_ - ell() + 1 + i) return false;
  return true;
}

bool SchubertIndex::precedes(const SchubertIndex& other) const {
  if (other.ell() != ell() || other.m() != m_) return false;
  for (int i = 0; i < ell(); ++i)
    if (alpha_[i] > other.alpha_[i]) return false;
  return true;
}

std::string SchubertIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i];
  os << ')';
  return os.str();
}

// --- enumeration -----------------------------------------------------------------

std::vector<PluckerPoint> enumerate_grassmannian(int ell, int m, const FieldTable& field,
                                                 const EnumerationOptions& opts) {
  const SubsetIndexer idx(m, ell);
  const BigInt expected = gaussian_binom(m, ell, field.q());
  if (expected > opts.max_points)
    throw BudgetExceeded("Grassmannian G(" + std::to_string(ell) + "," + std::to_string(m) +
                             ") over " + field.name(),
                         expected, opts.max_points);

  std::vector<PluckerPoint> points;
  points.reserve(static_cast<std::size_t>(expected));
  const int q = field.q();

  for (Mask pivots : idx.all()) {
    const auto piv = subset_elements(pivots);  // 1-based
    std::vector<std::pair<int, int>> free;      // (row, col), row-major order
    for (int i = 0; i < ell; ++i)
      for (int j = piv[i]; j < m; ++j)  // 0-based columns after the pivot
        if (!(pivots & (Mask{1} << j))) free.emplace_back(i, j);

    Matrix a{ell, m, std::vector<Elem>(static_cast<std::size_t>(ell) * m, 0)};
    for (int i = 0; i < ell; ++i) a.at(i, piv[i] - 1) = 1;

    std::vector<int> counter(free.size(), 0);
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f)
        a.at(free[f].first, free[f].second) = static_cast<Elem>(counter[f]);
      points.push_back(normalize(plucker_minors(a, field), field));

      // last free entry varies fastest
      int f = static_cast<int>(free.size()) - 1;
      while (f >= 0 && counter[f] == q - 1) counter[f--] = 0;
      if (f < 0) break;
      ++counter[f];
    }
  }
  return points;
}

std::vector<PluckerPoint> enumerate_schubert(const SchubertIndex& alpha, const FieldTable& field,
                                             const EnumerationOptions& opts) {
  const auto all = SubsetIndexer(alpha.m(), alpha.ell()).all();
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!alpha.admits(all[i])) outside.push_back(i);

  std::vector<PluckerPoint> out;
  for (auto& p : enumerate_grassmannian(alpha.ell(), alpha.m(), field, opts)) {
    const bool inside =
        std::all_of(outside.begin(), outside.end(), [&](std::size_t i) { return p.coords[i] == 0; });
    if (inside) out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t section_count(std::span<const PluckerPoint> points,
                            std::span<const std::uint64_t> lambda) {
  std::uint64_t count = 0;
  for (const auto& p : points) {
    const bool vanishes = std::all_of(lambda.begin(), lambda.end(),
                                      [&](std::uint64_t i) { return p.coords.at(i) == 0; });
    if (vanishes) ++count;
  }
  return count;
}

std::uint64_t section_count(std::span<const PluckerPoint> points, const SubsetFamily& lambda) {
  const SubsetIndexer idx(lambda.m(), lambda.ell());
  std::vector<std::uint64_t> positions;
  for (Mask s : lambda.members()) positions.push_back(idx.index(s));
  return section_count(points, positions);
}

}  // namespace subclose
