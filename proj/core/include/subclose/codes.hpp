#pragma once

// Linear codes of projective systems and their generalized Hamming weights.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "subclose/combinat.hpp"
#include "subclose/field.hpp"
#include "subclose/grassmann.hpp"

namespace subclose {

class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Support = boost::dynamic_bitset<std::uint64_t>;

/// Generator matrix (dimension x length) of the code of a projective system:
/// column j is point j restricted to the row coordinates.
class LinearCode {
 public:
  LinearCode(const FieldTable& field, Matrix generator, std::vector<Mask> row_labels,
             std::vector<PluckerPoint> column_labels);

  const FieldTable& field() const noexcept { return *field_; }
  int q() const noexcept { return field_->q(); }
  int length() const noexcept { return generator_.cols; }
  int dimension() const noexcept { return generator_.rows; }
  const Matrix& generator() const noexcept { return generator_; }
  const std::vector<Mask>& row_labels() const noexcept { return rows_; }
  const std::vector<PluckerPoint>& column_labels() const noexcept { return columns_; }

  /// Support of message * G.
  Support codeword_support(std::span<const Elem> message) const;
  std::vector<Elem> encode(std::span<const Elem> message) const;

  bool is_nondegenerate() const;

 private:
  const FieldTable* field_;
  Matrix generator_;
  std::vector<Mask> rows_;
  std::vector<PluckerPoint> columns_;
};

/// Rows are the coordinates named by `rows` (ell-subsets of [m]); columns
/// are the points. Throws RankDeficient if rank < |rows| and
/// DegenerateSystem if some coordinate is zero on every codeword. The
/// field must outlive the code.
LinearCode build_code(const FieldTable& field, int ell, int m,
                      std::span<const PluckerPoint> points, std::span<const Mask> rows);

struct SubcodeOptions {
  std::uint64_t max_subspaces = 10'000'000;
};

/// d_r: minimum support of an r-dimensional subcode, by enumerating every
/// rank-r reduced row echelon matrix over the message space.
std::int64_t higher_weights_exhaustive(const LinearCode& code, int r,
                                       const SubcodeOptions& opts = {});

enum class WeightMethod { Exhaustive, SectionMax };

struct WeightHierarchy {
  std::vector<std::int64_t> values;  // d_1..d_k
  std::vector<WeightMethod> methods;

  bool strictly_increasing() const;
};

WeightHierarchy weight_hierarchy(const LinearCode& code, const SubcodeOptions& opts = {});

}  // namespace subclose
