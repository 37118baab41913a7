#pragma once

// Small finite fields GF(p^e), q <= 16, with full operation tables.
//
// Elements are integers 0..q-1: the base-p digits are the coefficients of
// the polynomial representative modulo the bundled irreducible modulus.

#include <cstdint>
#include <string>
#include <vector>

namespace subclose {

using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 16;

class FieldTable {
 public:
  /// Throws std::invalid_argument for non-prime p or p^e > 16.
  static FieldTable build(int p, int e);
  /// Throws std::invalid_argument unless q is a prime power <= 16.
  static FieldTable for_order(int q);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }
  /// Coefficients of the monic modulus, constant term first (length e+1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Discrete log base primitive(); a must be nonzero.
  int log(Elem a) const;
  Elem antilog(int i) const noexcept;

  std::string name() const;

  /// Exhaustive check of the field axioms over all element tuples.
  bool verify_axioms(std::string* failure = nullptr) const;

  /// Overwrites one product; for fault-injection tests only.
  void corrupt_product_for_testing(Elem a, Elem b, Elem value);

 private:
  FieldTable() = default;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<int> log_;
  std::vector<Elem> antilog_;
  Elem primitive_ = 1;
};

/// True if q is a prime power in the supported range.
bool is_supported_order(int q);

}  // namespace subclose
