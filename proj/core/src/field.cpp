#include "subclose/field.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace subclose {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Monic irreducible moduli, constant coefficient first.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{3, 2}, {1, 0, 1}},     // x^2 + 1
  };
  return table;
}

std::vector<int> digits(int x, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Remainder of a modulo monic b over GF(p); both constant-first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool irreducible(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      auto g = digits(c, p, d);
      g.push_back(1);
      const auto rem = poly_mod(f, g, p);
      bool zero = true;
      for (int x : rem) zero = zero && (x % p == 0);
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

bool is_supported_order(int q) {
  for (int p = 2; p <= kMaxFieldOrder; ++p) {
    if (!is_prime(p)) continue;
    for (int v = p; v <= kMaxFieldOrder; v *= p)
      if (v == q) return true;
  }
  return false;
}

FieldTable FieldTable::for_order(int q) {
  for (int p = 2; p <= kMaxFieldOrder; ++p) {
    if (!is_prime(p)) continue;
    int e = 1;
    for (int v = p; v <= kMaxFieldOrder; v *= p, ++e)
      if (v == q) return build(p, e);
  }
  throw std::invalid_argument("unsupported field order q = " + std::to_string(q) +
                              " (need a prime power <= 16)");
}

FieldTable FieldTable::build(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be positive");
  int q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                  " exceeds 16");
  }

  FieldTable f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = q;
  if (e == 1) {
    f.modulus_ = {0, 1};
  } else {
    const auto it = modulus_table().find({p, e});
    if (it == modulus_table().end()) throw std::invalid_argument("no bundled modulus for GF(" + std::to_string(q) + ")");
    f.modulus_ = it->second;
    if (!irreducible(f.modulus_, p)) throw std::logic_error("bundled modulus is reducible");
  }

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> sum(e);
      for (int i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = static_cast<Elem>(from_digits(sum, p));

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      auto red = e == 1 ? prod : poly_mod(prod, f.modulus_, p);
      red.resize(e, 0);
      f.mul_[a * q + b] = static_cast<Elem>(from_digits(red, p));
    }
  }

  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Elem>(b);
      if (a != 0 && f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Elem>(b);
    }

  f.log_.assign(q, -1);
  f.antilog_.assign(q - 1, 1);
  for (int g = 1; g < q; ++g) {
    std::vector<int> seen(q, -1);
    int x = 1;
    int order = 0;
    do {
      seen[x] = order++;
      x = f.mul_[x * q + g];
    } while (x != 1 && order < q);
    if (order == q - 1) {
      f.primitive_ = static_cast<Elem>(g);
      x = 1;
      for (int i = 0; i < q - 1; ++i) {
        f.antilog_[i] = static_cast<Elem>(x);
        f.log_[x] = i;
        x = f.mul_[x * q + g];
      }
      break;
    }
  }
  return f;
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int FieldTable::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

Elem FieldTable::antilog(int i) const noexcept {
  const int n = q_ - 1;
  return antilog_[((i % n) + n) % n];
}

std::string FieldTable::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool FieldTable::verify_axioms(std::string* failure) const {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = name() + ": " + msg;
    return false;
  };
  const int q = q_;
  for (int a = 0; a < q; ++a) {
    const auto x = static_cast<Elem>(a);
    if (add(x, 0) != x) return fail("0 is not an additive identity");
    if (mul(x, 1) != x) return fail("1 is not a multiplicative identity");
    if (mul(x, 0) != 0) return fail("a*0 != 0");
    if (add(x, neg(x)) != 0) return fail("missing additive inverse");
    if (a != 0 && mul(x, inv(x)) != 1) return fail("missing multiplicative inverse");
    for (int b = 0; b < q; ++b) {
      const auto y = static_cast<Elem>(b);
      if (add(x, y) != add(y, x)) return fail("addition not commutative");
      if (mul(x, y) != mul(y, x)) return fail("multiplication not commutative");
      if (a != 0 && b != 0 && mul(x, y) == 0) return fail("zero divisor");
      for (int c = 0; c < q; ++c) {
        const auto z = static_cast<Elem>(c);
        if (add(add(x, y), z) != add(x, add(y, z))) return fail("addition not associative");
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return fail("multiplication not associative");
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return fail("not distributive");
      }
    }
  }
  for (int i = 0; i < q - 1; ++i)
    if (log_[antilog_[i]] != i) return fail("log/antilog tables inconsistent");
  return true;
}

void FieldTable::corrupt_product_for_testing(Elem a, Elem b, Elem value) {
  mul_[a * q_ + b] = value;
}

}  // namespace subclose
