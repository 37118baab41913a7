#include "doctest.h"
#include "subclose/codes.hpp"
#include "subclose/conjecture.hpp"

using namespace subclose;

namespace {

LinearCode grassmann_code(const FieldTable& f, int ell, int m) {
  const auto pts = enumerate_grassmannian(ell, m, f);
  const auto rows = SubsetIndexer(m, ell).all();
  return build_code(f, ell, m, pts, rows);
}

// d_1 as the minimum weight over all nonzero messages.
std::int64_t min_weight(const LinearCode& code) {
  const int q = code.q();
  const int k = code.dimension();
  std::vector<Elem> msg(k, 0);
  std::int64_t best = code.length();
  while (true) {
    int i = 0;
    while (i < k && msg[i] == q - 1) msg[i++] = 0;
    if (i == k) break;
    ++msg[i];
    best = std::min<std::int64_t>(best, code.codeword_support(msg).count());
  }
  return best;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("Grassmann code C(2,4) over GF(2)") {
  const auto f = FieldTable::for_order(2);
  const auto code = grassmann_code(f, 2, 4);
  CHECK(code.length() == 35);
  CHECK(code.dimension() == 6);
  CHECK(code.is_nondegenerate());
  CHECK(min_weight(code) == 16);
  CHECK(higher_weights_exhaustive(code, 1) == 16);
  const auto h = weight_hierarchy(code);
  CHECK(h.values == std::vector<std::int64_t>{16, 24, 28, 32, 34, 35});
  CHECK(h.strictly_increasing());
}

TEST_CASE("simplex codes C(1,m)") {
  for (int q : {2, 3, 4})
    for (int m = 2; m <= 4; ++m) {
      if (q == 4 && m == 4) continue;
      const auto f = FieldTable::for_order(q);
      const auto code = grassmann_code(f, 1, m);
      std::int64_t qm1 = 1;
      for (int i = 0; i < m - 1; ++i) qm1 *= q;
      CHECK(code.length() == (qm1 * q - 1) / (q - 1));
      CHECK(code.dimension() == m);
      CHECK(min_weight(code) == qm1);
    }
  const auto f2 = FieldTable::for_order(2);
  CHECK(weight_hierarchy(grassmann_code(f2, 1, 3)).values == std::vector<std::int64_t>{4, 6, 7});
}

TEST_CASE("encode and support agree") {
  const auto f = FieldTable::for_order(3);
  const auto code = grassmann_code(f, 2, 4);
  const std::vector<Elem> msg{1, 0, 2, 0, 1, 1};
  const auto word = code.encode(msg);
  const auto supp = code.codeword_support(msg);
  REQUIRE(static_cast<int>(word.size()) == code.length());
  for (int j = 0; j < code.length(); ++j) CHECK(supp.test(j) == (word[j] != 0));
}

TEST_CASE("duality C(ell,m) vs C(m-ell,m)") {
  for (int q : {2, 3}) {
    const auto f = FieldTable::for_order(q);
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {1, 4}}) {
      const auto a = grassmann_code(f, ell, m);
      const auto b = grassmann_code(f, m - ell, m);
      CHECK(a.length() == b.length());
      CHECK(a.dimension() == b.dimension());
    }
  }
}

TEST_CASE("hierarchies of constructed codes end at n") {
  struct Case {
    int ell, m, q;
    std::optional<std::vector<int>> alpha;
  };
  const std::vector<Case> cases{{2, 4, 2, {}},       {1, 3, 2, {}},       {1, 4, 3, {}}, {2, 4, 2, {{2, 4}}},
                                {2, 4, 2, {{3, 4}}}, {2, 4, 3, {{2, 4}}}, {2, 5, 2, {{2, 5}}}};
  for (const auto& c : cases) {
    std::optional<SchubertIndex> alpha;
    if (c.alpha) alpha = SchubertIndex(*c.alpha, c.m);
    ConjectureHarness h(c.ell, c.m, c.q, alpha);
    const auto hier = weight_hierarchy(h.code());
    CAPTURE(c.ell);
    CAPTURE(c.m);
    CAPTURE(c.q);
    CHECK(h.code().is_nondegenerate());
    CHECK(hier.strictly_increasing());
    CHECK(hier.values.size() == static_cast<std::size_t>(h.code().dimension()));
    CHECK(hier.values.back() == h.code().length());
  }
}

TEST_CASE("rank-deficient generator is rejected") {
  const auto f = FieldTable::for_order(2);
  const auto pts = enumerate_grassmannian(2, 4, f);
  const std::vector<PluckerPoint> one{pts.front(), pts.front()};
  const std::vector<Mask> rows{make_subset({1, 2}, 4), make_subset({1, 3}, 4)};
  CHECK_THROWS_AS(build_code(f, 2, 4, one, rows), RankDeficient);
}

TEST_CASE("subspace budget") {
  const auto f = FieldTable::for_order(2);
  const auto code = grassmann_code(f, 2, 4);
  SubcodeOptions tiny;
  tiny.max_subspaces = 5;
  CHECK_THROWS_AS(higher_weights_exhaustive(code, 3, tiny), BudgetExceeded);
}

}
