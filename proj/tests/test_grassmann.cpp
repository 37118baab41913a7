#include <algorithm>
#include <set>

#include "doctest.h"
#include "subclose/grassmann.hpp"

using namespace subclose;

namespace {

// Index of the Plücker coordinate p_{ij} (1-based i<j) among the C(m,2) colex positions.
std::size_t pos(int i, int j, int m) { return SubsetIndexer(m, 2).index(make_subset({i, j}, m)); }

// p_{ij}p_{kl} - p_{ik}p_{jl} + p_{il}p_{jk} for i<j<k<l
bool quadric_vanishes(const PluckerPoint& p, const FieldTable& f, int m, int i, int j, int k, int l) {
  auto c = [&](int a, int b) { return p.coords[pos(a, b, m)]; };
  const Elem t1 = f.mul(c(i, j), c(k, l));
  const Elem t2 = f.mul(c(i, k), c(j, l));
  const Elem t3 = f.mul(c(i, l), c(j, k));
  return f.add(f.sub(t1, t2), t3) == 0;
}

// Points of G(ell,m) from every full-rank ell x m matrix, deduplicated.
std::set<PluckerPoint> points_from_all_matrices(int ell, int m, const FieldTable& f) {
  std::set<PluckerPoint> out;
  const int cells = ell * m;
  std::vector<Elem> data(cells, 0);
  while (true) {
    Matrix a{ell, m, data};
    if (rank(a, f) == ell) out.insert(normalize(plucker_minors(a, f), f));
    int i = 0;
    while (i < cells && data[i] == f.q() - 1) data[i++] = 0;
    if (i == cells) break;
    ++data[i];
  }
  return out;
}

// Flag-condition oracle: dim(W ∩ <e_1..e_{alpha_i}>) >= i for all i,
// tested on a row-reduced basis by rank of the truncated columns.
bool in_schubert(const Matrix& w, const std::vector<int>& alpha, const FieldTable& f) {
  const int ell = w.rows;
  for (int i = 1; i <= ell; ++i) {
    const int a = alpha[i - 1];
    // dim(W ∩ E_a) = ell - rank of W restricted to columns a+1..m
    Matrix tail{ell, w.cols - a, {}};
    for (int r = 0; r < ell; ++r)
      for (int c = a; c < w.cols; ++c) tail.data.push_back(w.at(r, c));
    if (ell - (tail.cols ? rank(tail, f) : 0) < i) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("grassmann") {

TEST_CASE("normalize and minors") {
  const auto f = FieldTable::for_order(3);
  CHECK(normalize({0, 2, 1}, f).coords == std::vector<Elem>{0, 1, 2});
  CHECK_THROWS(normalize({0, 0, 0}, f));
  Matrix id{2, 4, {1, 0, 0, 0, 0, 1, 0, 0}};
  const auto p = plucker_minors(id, f);
  CHECK(p.size() == 6);
  CHECK(p[0] == 1);
  CHECK(std::count(p.begin(), p.end(), 0) == 5);
  Matrix sq{2, 2, {1, 2, 2, 1}};
  CHECK(determinant(sq, f) == f.sub(1, f.mul(2, 2)));
  CHECK(rank(Matrix{2, 3, {1, 1, 0, 2, 2, 0}}, f) == 1);
}

TEST_CASE("point counts equal Gaussian binomials") {
  struct Case {
    int ell, m, q;
  };
  std::vector<Case> cases{{2, 4, 2}, {2, 4, 3}, {2, 5, 2}, {1, 2, 2}, {3, 5, 2}, {2, 3, 4}};
  for (int m = 1; m <= 5; ++m)
    for (int q = 2; q <= 4; ++q) cases.push_back({1, m, q});
  for (auto c : cases) {
    CAPTURE(c.ell);
    CAPTURE(c.m);
    CAPTURE(c.q);
    const auto f = FieldTable::for_order(c.q);
    const auto pts = enumerate_grassmannian(c.ell, c.m, f);
    CHECK(BigInt(pts.size()) == gaussian_binom(c.m, c.ell, c.q));
    std::set<PluckerPoint> distinct(pts.begin(), pts.end());
    CHECK(distinct.size() == pts.size());
  }
}

TEST_CASE("enumeration agrees with all full-rank matrices") {
  for (auto [ell, m, q] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {1, 3, 3}, {2, 3, 3}}) {
    const auto f = FieldTable::for_order(q);
    const auto pts = enumerate_grassmannian(ell, m, f);
    CHECK(std::set<PluckerPoint>(pts.begin(), pts.end()) == points_from_all_matrices(ell, m, f));
  }
}

TEST_CASE("Plucker relations on G(2,4) and G(2,5)") {
  for (int q : {2, 3}) {
    const auto f = FieldTable::for_order(q);
    for (const auto& p : enumerate_grassmannian(2, 4, f)) REQUIRE(quadric_vanishes(p, f, 4, 1, 2, 3, 4));
    for (const auto& p : enumerate_grassmannian(2, 5, f))
      for_each_combination(5, 4, [&](std::span<const int> c) {
        REQUIRE(quadric_vanishes(p, f, 5, c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1));
        return true;
      });
  }
}

TEST_CASE("Schubert index") {
  const SchubertIndex a({3, 4}, 4);
  CHECK(a.index_set().size() == 6);
  CHECK(a.is_maximal());
  const SchubertIndex b({2, 4}, 4);
  CHECK(b.index_set().size() == 5);
  CHECK_FALSE(b.admits(make_subset({3, 4}, 4)));
  CHECK(b.precedes(a));
  CHECK_FALSE(a.precedes(b));
  CHECK(b.to_string() == "(2,4)");
  CHECK_THROWS(SchubertIndex({4, 3}, 4));
  CHECK_THROWS(SchubertIndex({1, 5}, 4));
}

TEST_CASE("Schubert varieties: extremes and flag-condition oracle") {
  const auto f = FieldTable::for_order(2);
  CHECK(enumerate_schubert(SchubertIndex({3, 4}, 4), f).size() == 35);
  CHECK(enumerate_schubert(SchubertIndex({1, 2}, 4), f).size() == 1);
  CHECK(enumerate_schubert(SchubertIndex({1, 2, 3}, 5), f).size() == 1);

  for (int q : {2, 3})
    for (const auto& alpha : std::vector<std::vector<int>>{{2, 4}, {1, 4}, {2, 3}, {1, 3}}) {
      const auto fq = FieldTable::for_order(q);
      const auto pts = enumerate_schubert(SchubertIndex(alpha, 4), fq);
      // oracle: filter all full-rank 2x4 matrices by the flag condition
      std::set<PluckerPoint> expect;
      std::vector<Elem> data(8, 0);
      while (true) {
        Matrix w{2, 4, data};
        if (rank(w, fq) == 2 && in_schubert(w, alpha, fq)) expect.insert(normalize(plucker_minors(w, fq), fq));
        int i = 0;
        while (i < 8 && data[i] == q - 1) data[i++] = 0;
        if (i == 8) break;
        ++data[i];
      }
      CAPTURE(q);
      CAPTURE(alpha[0]);
      CAPTURE(alpha[1]);
      CHECK(std::set<PluckerPoint>(pts.begin(), pts.end()) == expect);
    }
}

TEST_CASE("Schubert nesting") {
  const auto f = FieldTable::for_order(2);
  const std::vector<std::vector<int>> alphas{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  for (const auto& a : alphas)
    for (const auto& b : alphas) {
      const SchubertIndex sa(a, 5), sb(b, 5);
      if (!sa.precedes(sb)) continue;
      const auto pa = enumerate_schubert(sa, f);
      const auto pb = enumerate_schubert(sb, f);
      const std::set<PluckerPoint> big(pb.begin(), pb.end());
      for (const auto& p : pa) REQUIRE(big.count(p) == 1);
    }
}

TEST_CASE("section counts") {
  const auto f = FieldTable::for_order(2);
  const auto pts = enumerate_grassmannian(2, 4, f);
  CHECK(section_count(pts, SubsetFamily(4, 2)) == 35);
  CHECK(section_count(pts, SubsetFamily::full(4, 2)) == 0);
  CHECK(35 - section_count(pts, SubsetFamily::from_lists(4, 2, {{1, 2}})) == 16);
}

TEST_CASE("point budget") {
  EnumerationOptions tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(enumerate_grassmannian(2, 4, FieldTable::for_order(2), tiny), BudgetExceeded);
}

}
