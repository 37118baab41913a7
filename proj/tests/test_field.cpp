#include <stdexcept>

#include "doctest.h"
#include "subclose/field.hpp"

using namespace subclose;

TEST_SUITE("field") {

TEST_CASE("supported orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) CHECK(is_supported_order(q));
  for (int q : {0, 1, 6, 10, 12, 15, 17, 32}) CHECK_FALSE(is_supported_order(q));
  CHECK_THROWS(FieldTable::for_order(6));
}

TEST_CASE("build examples") {
  const auto f2 = FieldTable::build(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.name() == "GF(2)");
  const auto f4 = FieldTable::build(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  const auto f3 = FieldTable::build(3, 1);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.neg(1) == 2);
  CHECK(f3.inv(2) == 2);
}

TEST_CASE("axioms hold for every supported order") {
  for (int q = 2; q <= kMaxFieldOrder; ++q) {
    if (!is_supported_order(q)) continue;
    CAPTURE(q);
    const auto f = FieldTable::for_order(q);
    std::string why;
    CHECK(f.verify_axioms(&why));
    CHECK(why.empty());
  }
}

TEST_CASE("log and antilog are inverse on nonzero elements") {
  for (int q : {4, 8, 9, 16}) {
    const auto f = FieldTable::for_order(q);
    for (int a = 1; a < q; ++a) CHECK(f.antilog(f.log(static_cast<Elem>(a))) == a);
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        CHECK(f.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
              f.antilog((f.log(static_cast<Elem>(a)) + f.log(static_cast<Elem>(b))) % (q - 1)));
    // the primitive element generates the multiplicative group
    Elem x = 1;
    int order = 0;
    do {
      x = f.mul(x, f.primitive());
      ++order;
    } while (x != 1);
    CHECK(order == q - 1);
  }
}

TEST_CASE("inverse of zero is an error") {
  const auto f = FieldTable::for_order(5);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS(f.log(0));
}

TEST_CASE("corrupted table fails verification") {
  auto f = FieldTable::for_order(4);
  f.corrupt_product_for_testing(2, 3, 2);
  std::string why;
  CHECK_FALSE(f.verify_axioms(&why));
  CHECK_FALSE(why.empty());
}

}
