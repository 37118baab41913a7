#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "subclose/combinat.hpp"
#include "subclose/field.hpp"
#include "subclose/grassmann.hpp"

using namespace subclose;

TEST_SUITE("combinat") {

TEST_CASE("binom_ext basic values") {
  CHECK(binom_ext(5, 2) == 10);
  CHECK(binom_ext(7, -1) == 0);
  CHECK(binom_ext(-3, -2) == 0);
  CHECK(binom_ext(-2, 2) == 3);
  CHECK(binom_ext(-1, 5) == -1);
  CHECK(binom_ext(3, 5) == 0);
  CHECK(binom(60, 30) == 118264581564861424LL);
}

TEST_CASE("binom_ext matches Pascal triangle up to 30") {
  std::vector<std::vector<BigInt>> pascal(31);
  for (int a = 0; a <= 30; ++a) {
    pascal[a].assign(a + 1, 1);
    for (int b = 1; b < a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= a; ++b) REQUIRE(binom_ext(a, b) == pascal[a][b]);
}

TEST_CASE("Vandermonde convolution") {
  for (int a = 0; a <= 15; ++a)
    for (int b = 0; b <= 15; ++b)
      for (int c = 0; c <= 15; ++c) {
        BigInt lhs = 0;
        for (int j = 0; j <= c; ++j) lhs += binom_ext(a, c - j) * binom_ext(b, j);
        REQUIRE(lhs == binom_ext(a + b, c));
      }
}

TEST_CASE("binom overflow is reported") {
  CHECK_THROWS_AS(binom(200, 100), std::overflow_error);
  CHECK(binom_ext(200, 100) > BigInt(1) << 190);
}

TEST_CASE("identity audit over mixed-sign ranges") {
  const auto rep = check_binomial_identities({-6, 8}, {-6, 8}, {-6, 8}, {-3, 3}, {-3, 3});
  CHECK(rep.ok());
  for (auto n : rep.checked) CHECK(n > 0);
  // (iii) at (6,4,2)
  CHECK(binom_ext(6, 4) * binom_ext(4, 2) == 90);
  CHECK(binom_ext(6, 2) * binom_ext(4, 2) == 90);
}

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binom(2, 1, 2) == 3);
  CHECK(gaussian_binom(4, 2, 2) == 35);
  CHECK(gaussian_binom(5, 2, 2) == 155);
  CHECK(gaussian_binom(4, 2, 3) == 130);
  for (int m = 0; m <= 6; ++m) CHECK(gaussian_binom(m, 0, 3) == 1);
  CHECK_THROWS(gaussian_binom(4, 2, 1));
}

TEST_CASE("q-Pascal recurrence") {
  for (std::int64_t q : {2, 3, 4})
    for (int m = 1; m <= 8; ++m)
      for (int ell = 1; ell < m; ++ell) {
        BigInt ql = 1;
        for (int i = 0; i < ell; ++i) ql *= q;
        REQUIRE(gaussian_binom(m, ell, q) ==
                gaussian_binom(m - 1, ell - 1, q) + ql * gaussian_binom(m - 1, ell, q));
      }
}

// Subspaces counted as distinct span-closure sets of vectors in GF(q)^m.
static std::size_t brute_subspace_count(int ell, int m, const FieldTable& f) {
  const int q = f.q();
  int total = 1;
  for (int i = 0; i < m; ++i) total *= q;
  auto decode = [&](int code) {
    std::vector<Elem> v(m);
    for (int i = 0; i < m; ++i) {
      v[i] = static_cast<Elem>(code % q);
      code /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<Elem>& v) {
    int code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * q + v[i];
    return code;
  };
  std::set<std::vector<int>> spaces;
  std::vector<int> pick(ell, 0);
  // every ell-tuple of vectors; keep those whose span has q^ell elements
  std::function<void(int)> rec = [&](int depth) {
    if (depth == ell) {
      std::set<int> span{0};
      for (int i = 0; i < ell; ++i) {
        std::set<int> next = span;
        const auto gen = decode(pick[i]);
        for (int s : span)
          for (int c = 1; c < q; ++c) {
            auto v = decode(s);
            for (int t = 0; t < m; ++t) v[t] = f.add(v[t], f.mul(static_cast<Elem>(c), gen[t]));
            next.insert(encode(v));
          }
        span = std::move(next);
      }
      int size = 1;
      for (int i = 0; i < ell; ++i) size *= q;
      if (static_cast<int>(span.size()) == size) spaces.insert(std::vector<int>(span.begin(), span.end()));
      return;
    }
    for (int c = 1; c < total; ++c) {
      pick[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
  return spaces.size();
}

TEST_CASE("gaussian binomial against brute-force subspace count") {
  for (int q : {2, 3}) {
    const auto f = FieldTable::for_order(q);
    for (int m = 1; m <= 4; ++m)
      for (int ell = 1; ell <= m; ++ell) {
        if (q == 3 && m == 4 && ell > 2) continue;  // 80^3 tuples, covered by symmetry
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(ell);
        CHECK(BigInt(brute_subspace_count(ell, m, f)) == gaussian_binom(m, ell, q));
      }
  }
}

TEST_CASE("subset helpers") {
  const Mask s = make_subset({1, 3, 4}, 5);
  CHECK(popcount(s) == 3);
  CHECK(subset_elements(s) == std::vector<int>{1, 3, 4});
  CHECK(format_subset(s) == "{1,3,4}");
  CHECK(ground_set(4) == 0b1111);
  CHECK_THROWS(make_subset({0, 2}, 5));
  CHECK_THROWS(make_subset({6}, 5));
  CHECK_THROWS(make_subset({2, 2}, 5));
  CHECK(next_same_popcount(0b0011) == 0b0101);
}

TEST_CASE("colex indexing") {
  const SubsetIndexer idx(4, 2);
  CHECK(idx.size() == 6);
  CHECK(idx.subset(0) == make_subset({1, 2}, 4));
  CHECK(idx.index(make_subset({3, 4}, 4)) == 5);
  const auto all = idx.all();
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    CHECK(idx.index(all[i]) == i);
    if (i) CHECK(all[i - 1] < all[i]);
  }
  for (int m = 1; m <= 9; ++m)
    for (int ell = 1; ell <= m; ++ell) {
      const SubsetIndexer big(m, ell);
      CHECK(big.size() == static_cast<std::uint64_t>(binom(m, ell)));
      for (std::uint64_t i = 0; i < big.size(); ++i) REQUIRE(big.index(big.subset(i)) == i);
    }
  CHECK_THROWS(SubsetIndexer(3, 4));
  CHECK_THROWS(SubsetIndexer(63, 2));
}

TEST_CASE("for_each_combination visits every r-subset once in colex order") {
  std::vector<Mask> seen;
  for_each_combination(6, 3, [&](std::span<const int> c) {
    Mask s = 0;
    for (int x : c) s |= Mask{1} << x;
    seen.push_back(s);
    return true;
  });
  CHECK(seen.size() == 20);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  int calls = 0;
  for_each_combination(6, 3, [&](std::span<const int>) { return ++calls < 4; });
  CHECK(calls == 4);
}

}
