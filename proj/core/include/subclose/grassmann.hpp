#pragma once

// F_q-rational points of the Grassmannian G(ell,m) and its Schubert
// subvarieties, as normalized Plücker coordinate vectors.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subclose/combinat.hpp"
#include "subclose/families.hpp"
#include "subclose/field.hpp"

namespace subclose {

/// A projective point in P^{k-1}, coordinates indexed by I(ell,m) in colex
/// order and scaled so the first nonzero coordinate is 1.
struct PluckerPoint {
  std::vector<Elem> coords;

  friend bool operator==(const PluckerPoint&, const PluckerPoint&) = default;
  friend auto operator<=>(const PluckerPoint&, const PluckerPoint&) = default;
};

/// Scales v so its first nonzero entry is 1; throws on the zero vector.
PluckerPoint normalize(std::vector<Elem> v, const FieldTable& field);

/// Row-major ell x m matrix over the field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  Elem at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  Elem& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Rank by Gaussian elimination.
int rank(Matrix a, const FieldTable& field);

/// Determinant of a square matrix.
Elem determinant(Matrix a, const FieldTable& field);

/// Vector of ell x ell minors (colex column sets); not normalized.
std::vector<Elem> plucker_minors(const Matrix& a, const FieldTable& field);

/// A strictly increasing ell-tuple alpha in [m].
class SchubertIndex {
 public:
  SchubertIndex(std::vector<int> alpha, int m);

  const std::vector<int>& alpha() const noexcept { return alpha_; }
  int ell() const noexcept { return static_cast<int>(alpha_.size()); }
  int m() const noexcept { return m_; }

  /// beta_i <= alpha_i for every i.
  bool admits(Mask beta) const;
  /// I_alpha(ell,m) in colex order.
  std::vector<Mask> index_set() const;
  /// alpha = (m-ell+1, ..., m)
  bool is_maximal() const;
  /// Componentwise alpha <= other.
  bool precedes(const SchubertIndex& other) const;

  std::string to_string() const;

 private:
  std::vector<int> alpha_;
  int m_;
};

struct EnumerationOptions {
  std::uint64_t max_points = 1'000'000;
};

/// One normalized point per ell-dimensional subspace of GF(q)^m, taken as
/// the minor vector of its reduced row echelon form. Ordered by pivot set
/// in colex, then free entries lexicographically.
std::vector<PluckerPoint> enumerate_grassmannian(int ell, int m, const FieldTable& field,
                                                 const EnumerationOptions& opts = {});

/// Grassmannian points with p_beta = 0 for every beta outside I_alpha.
std::vector<PluckerPoint> enumerate_schubert(const SchubertIndex& alpha, const FieldTable& field,
                                             const EnumerationOptions& opts = {});

/// Points whose coordinates vanish on every member of `lambda`
/// (colex coordinate positions).
std::uint64_t section_count(std::span<const PluckerPoint> points,
                            std::span<const std::uint64_t> lambda);

/// Same, with Λ given as a family of ell-subsets of [m].
std::uint64_t section_count(std::span<const PluckerPoint> points, const SubsetFamily& lambda);

}  // namespace subclose
