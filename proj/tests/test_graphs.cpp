#include <numeric>
#include <random>

#include "doctest.h"
#include "subclose/graphs.hpp"

using namespace subclose;

TEST_SUITE("graphs") {

TEST_CASE("sigma examples") {
  CHECK(sigma(Graph(5)) == 0);
  CHECK(sigma(Graph::star(5, 4)) == 20);
  CHECK(sigma(Graph::complete(3)) == 12);
  CHECK(sigma_from_k(SubsetFamily::full(5, 2)) == 80);
  CHECK(sigma_from_k(SubsetFamily(5, 2)) == 0);
  CHECK(sigma_from_k(Graph::star(5, 4).edges()) == 20);
}

TEST_CASE("graph basics") {
  const auto g = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(1, 4));
  CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(g.complement().edge_count() == 3);
  CHECK(g.complement().complement() == g);
  CHECK_THROWS(Graph::from_edges(4, {{1, 1}}));
}

TEST_CASE("sigma identity and complement relation on exhaustive and random graphs") {
  for (int m = 2; m <= 5; ++m)
    for (std::int64_t r = 0; r <= binom(m, 2); ++r)
      for_each_graph(m, r, 1'000'000, [&](const Graph& g) {
        REQUIRE(sigma(g) == sigma_from_k(g.edges()));
        REQUIRE(sigma(g) == 2 * k_lambda(g.edges()) + 2 * r);
        REQUIRE(complement_sigma_check(g));
        const auto d = g.degrees();
        REQUIRE(std::accumulate(d.begin(), d.end(), 0) == 2 * r);
        return true;
      });
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const int m = 2 + static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= m; ++u)
      for (int v = u + 1; v <= m; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const auto g = Graph::from_edges(m, edges);
    REQUIRE(sigma(g) == sigma_from_k(g.edges()));
    REQUIRE(complement_sigma_check(g));
    REQUIRE(g.complement().complement() == g);
  }
}

TEST_CASE("threshold recognition") {
  CHECK(is_threshold(Graph::star(6, 5)).is_threshold);
  CHECK(is_threshold(Graph::complete(5)).is_threshold);
  CHECK(is_threshold(Graph(4)).is_threshold);
  CHECK_FALSE(is_threshold(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}})).is_threshold);
  CHECK_FALSE(is_threshold(Graph::from_edges(4, {{1, 2}, {3, 4}})).is_threshold);
  CHECK_FALSE(is_threshold(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})).is_threshold);
  const auto trace = is_threshold(Graph::star(4, 3));
  REQUIRE(trace.sequence.size() == 4);
  CHECK(trace.sequence.back().second == BuildStep::Universal);
}

TEST_CASE("threshold trace rebuilds the graph") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const int m = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= m; ++u)
      for (int v = u + 1; v <= m; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const auto g = Graph::from_edges(m, edges);
    const auto t = is_threshold(g);
    if (!t.is_threshold) continue;
    std::vector<int> added;
    std::vector<std::pair<int, int>> rebuilt;
    for (auto [v, step] : t.sequence) {
      if (step == BuildStep::Universal)
        for (int u : added) rebuilt.emplace_back(std::min(u, v), std::max(u, v));
      added.push_back(v);
    }
    REQUIRE(Graph::from_edges(m, rebuilt) == g);
  }
}

TEST_CASE("bounds evaluation") {
  CHECK(de_caen_bound(5, 4) == Rational(20));
  CHECK(de_caen_bound(4, 2) == Rational(20, 3));
  CHECK(de_caen_bound(2, 1) == Rational(2));
  CHECK(trivial_bound(5, 4) == 20);
  CHECK_FALSE(trivial_bound(5, 5).has_value());
  CHECK(trivial_bound(4, 3) == 12);
  CHECK(*dual_bound(4, 6) == 36);
}

TEST_CASE("optimal graphs") {
  const auto a = optimal_graphs(5, 4);
  CHECK(a.sigma_max == 20);
  CHECK(is_star(a.maximizer));
  CHECK(is_threshold(a.maximizer).is_threshold);
  CHECK(a.de_caen == Rational(20));
  CHECK(optimal_graphs(6, 5).sigma_max == 30);
  CHECK(optimal_graphs(4, 0).sigma_max == 0);
  for (int m = 2; m <= 6; ++m) CHECK(optimal_graphs(m, 1).sigma_max == 2);
}

TEST_CASE("trivial bound check") {
  for (int m = 4; m <= 6; ++m)
    for (std::int64_t r = 0; r <= m - 1; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      const auto rep = trivial_bound_check(m, r);
      CHECK(rep.ok());
      CHECK(rep.equality_non_stars == 0);
      if (r != 3) CHECK(rep.equality_triangles == 0);
    }
  const auto r3 = trivial_bound_check(4, 3);
  CHECK(r3.equality_triangles == 4);
  CHECK(r3.de_caen_gap == Rational(0));
  CHECK_THROWS_AS(trivial_bound_check(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(trivial_bound_check(5, 5), std::invalid_argument);
}

TEST_CASE("dual bound check, tight at r = k") {
  for (int m = 2; m <= 6; ++m) {
    const auto k = binom(m, 2);
    for (std::int64_t r = 0; r <= k; ++r) {
      if (!dual_bound(m, r)) continue;
      CAPTURE(m);
      CAPTURE(r);
      CHECK(dual_bound_check(m, r).ok());
    }
    if (dual_bound(m, k)) CHECK(dual_bound_check(m, k).tight());
  }
}

TEST_CASE("pairwise incident edges form a star or a triangle") {
  for (int m = 2; m <= 6; ++m)
    for (std::int64_t r = 1; r <= binom(m, 2); ++r)
      for_each_graph(m, r, 100'000'000, [&](const Graph& g) {
        if (edges_pairwise_incident(g)) REQUIRE((is_star(g) || is_triangle(g)));
        return true;
      });
}

TEST_CASE("census m <= 7") {
  for (int m = 2; m <= 7; ++m) {
    for (const auto& row : graph_census(m)) {
      CAPTURE(m);
      CAPTURE(row.r);
      CHECK(row.de_caen_violations == 0);
      CHECK(row.optimal_non_threshold == 0);
      CHECK(row.dual_violations == 0);
      CHECK(row.trivial_violations == 0);
      CHECK(row.trivial_equality_non_star == 0);
      CHECK(row.pairwise_incident_non_star_triangle == 0);
      CHECK(row.optimal > 0);
      CHECK(row.graphs == static_cast<std::uint64_t>(binom(binom(m, 2), row.r)));
    }
  }
  CHECK_THROWS(graph_census(8));
}

}
