#include <numeric>
#include <random>

#include "doctest.h"
#include "loopideal/errors.hpp"
#include "loopideal/graphs.hpp"
#include "loopideal/suite.hpp"
#include "testutil.hpp"

using namespace loopideal;

TEST_SUITE("graphs") {

TEST_CASE("builders and validation") {
  LoopGraph h0 = fixtures::h_2_11().graph();
  CHECK(h0.n == 4);
  CHECK(h0.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}});
  CHECK(h0.loops.empty());

  LoopGraph k0 = with_loops(h0, {1});
  CHECK(k0.loops == std::vector<int>{1});
  CHECK(with_loops(k0, {1}).loops == std::vector<int>{1});  // loop sets are sets

  CHECK(build_complete(3).edges.size() == 3);
  CHECK(build_star(2, {6, 7, 8}).n == 8);
  CHECK(build_cycle(4).edges.size() == 4);
  CHECK(build_path(4).edges.size() == 3);

  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyH::make(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyH::make(2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyKPrime::core_loops_only(FamilyH::make(2, {1, 1}), {3}),
                  std::invalid_argument);
}

TEST_CASE("family leaf labeling") {
  FamilyH ex = fixtures::h_4_1312();
  CHECK(ex.vertex_count() == 11);
  CHECK(ex.star_leaves(1) == std::vector<int>{5});
  CHECK(ex.star_leaves(2) == std::vector<int>{6, 7, 8});
  CHECK(ex.star_leaves(3) == std::vector<int>{9});
  CHECK(ex.star_leaves(4) == std::vector<int>{10, 11});
  // leaf blocks partition m+1..n
  std::vector<int> all;
  for (int j = 1; j <= 4; ++j)
    for (int v : ex.star_leaves(j)) all.push_back(v);
  std::vector<int> expect(7);
  std::iota(expect.begin(), expect.end(), 5);
  CHECK(all == expect);
}

TEST_CASE("edge ideal generator order") {
  auto [i0, g0] = edge_ideal(fixtures::h_2_11());
  REQUIRE(g0.size() == 3);
  CHECK(g0[0].str() == "X1*X3");
  CHECK(g0[1].str() == "X1*X2");
  CHECK(g0[2].str() == "X2*X4");

  auto [i2, g2] = edge_ideal(FamilyH::make(2, {2, 1}));
  REQUIRE(g2.size() == 4);
  CHECK(g2[0].str() == "X1*X3");
  CHECK(g2[1].str() == "X1*X4");
  CHECK(g2[2].str() == "X1*X2");
  CHECK(g2[3].str() == "X2*X5");

  auto [ik, gk] = edge_ideal(fixtures::k_2_11_loop1());
  CHECK(gk.back().str() == "X1^2");
  CHECK(ik == parse_ideal(4, "(X1*X3, X1*X2, X2*X4, X1^2)"));

  // a plain graph lists the canonical sort
  auto [ig, gg] = edge_ideal(fixtures::h_2_11().graph());
  CHECK(ig.gens() == gg);
}

TEST_CASE("edge ideal of an empty graph is zero") {
  CHECK(edge_ideal(make_graph(3, {})).ideal.is_zero());
}

TEST_CASE("generator counts across the family grid") {
  for (int m = 2; m <= 5; ++m) {
    std::vector<int> sizes(m, 1);
    while (true) {
      FamilyH h = FamilyH::make(m, sizes);
      auto [ideal, ordered] = edge_ideal(h);
      int sum = std::accumulate(sizes.begin(), sizes.end(), 0);
      CHECK(static_cast<int>(ordered.size()) == sum + m * (m - 1) / 2);
      CHECK(ideal.gens().size() == ordered.size());

      // bump the odometer over {1..4}^m, sampled coarsely for m >= 4
      int step = m >= 4 ? 3 : 1;
      int pos = 0;
      while (pos < m) {
        sizes[pos] += step;
        if (sizes[pos] <= 4) break;
        sizes[pos] = 1;
        ++pos;
      }
      if (pos == m) break;
    }
  }
  // looped count: |G| = n - (m - l) + m(m-1)/2
  FamilyKPrime k = FamilyKPrime::core_loops_only(FamilyH::make(3, {2, 1, 2}), {1, 3});
  int n = k.base.vertex_count();
  CHECK(static_cast<int>(edge_ideal(k).ordered_gens.size()) ==
        n - (3 - 2) + 3 * (3 - 1) / 2);
}

TEST_CASE("edge ideal is label-equivariant") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    LoopGraph g = testutil::random_simple_graph(rng, 6, 0.4);
    std::vector<int> loops;
    for (int v = 1; v <= 6; ++v)
      if (rng() % 4 == 0) loops.push_back(v);
    g = with_loops(g, loops);

    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);

    std::vector<std::pair<int, int>> pe;
    for (auto [a, b] : g.edges) pe.emplace_back(perm[a], perm[b]);
    std::vector<int> pl;
    for (int v : g.loops) pl.push_back(perm[v]);
    LoopGraph pg = make_graph(6, pe, pl);

    MonomialIdeal I = edge_ideal(g).ideal;
    std::vector<Monomial> mapped;
    for (const Monomial& u : I.gens()) {
      std::vector<u32> e(6, 0);
      for (int v = 1; v <= 6; ++v) e[perm[v] - 1] = u.exponents()[v - 1];
      mapped.push_back(Monomial::of(e));
    }
    CHECK(minimalize(6, mapped) == edge_ideal(pg).ideal);
  }
}

TEST_CASE("complement and chordality basics") {
  CHECK(is_chordal(complement(build_complete(4))));  // edgeless
  CHECK(is_chordal(build_complete(5)));
  CHECK_FALSE(is_chordal(build_cycle(4)));
  CHECK_FALSE(is_chordal(build_cycle(5)));
  CHECK(is_chordal(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));  // chorded C4
  CHECK(is_chordal(build_path(6)));
  CHECK_THROWS_AS(is_chordal(make_graph(2, {}, {1})), std::invalid_argument);
  CHECK_THROWS_AS(complement(make_graph(2, {}, {1})), std::invalid_argument);
}

TEST_CASE("chordality agrees with simplicial elimination") {
  // exhaustive over all graphs on five vertices
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j, ++bit)
        if (mask & (1u << bit)) edges.emplace_back(i, j);
    LoopGraph g = make_graph(5, edges);
    CHECK(is_chordal(g) == testutil::chordal_by_elimination(g));
  }
  std::mt19937 rng(99);
  for (int rep = 0; rep < 400; ++rep) {
    LoopGraph g = testutil::random_simple_graph(rng, 7, 0.2 + 0.1 * (rep % 7));
    CHECK(is_chordal(g) == testutil::chordal_by_elimination(g));
  }
}

TEST_CASE("linear-resolution criterion") {
  CHECK(froberg_linear_resolution(build_cycle(4)));
  CHECK_FALSE(froberg_linear_resolution(build_cycle(5)));
  CHECK(froberg_linear_resolution(fixtures::h_2_11().graph()));
}

TEST_CASE("graph json round-trip") {
  std::string text = R"({ "n": 4, "edges": [[1,3],[1,2],[2,4]], "loops": [1] })";
  LoopGraph g = parse_graph_json(text);
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.loops == std::vector<int>{1});
  std::string canon = graph_to_json(g);
  LoopGraph g2 = parse_graph_json(canon);
  CHECK(g2.n == g.n);
  CHECK(g2.edges == g.edges);
  CHECK(g2.loops == g.loops);
  CHECK(graph_to_json(g2) == canon);
  CHECK_THROWS_AS(parse_graph_json("{"), parse_error);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[1,5]]})"), parse_error);
}

TEST_CASE("family expression parsing") {
  FamilyInput a = parse_family("H(m=4; stars=1,3,1,2) + loops(3,5,7,9)");
  REQUIRE(a.as_k.has_value());
  CHECK(a.as_k->base.core == 4);
  CHECK(a.as_k->loops == std::vector<int>{3, 5, 7, 9});
  CHECK(a.normalized == "H(m=4; stars=1,3,1,2) + loops(3,5,7,9)");

  FamilyInput b = parse_family("K5");
  CHECK(b.graph.n == 5);
  CHECK(b.graph.edges.size() == 10);

  FamilyInput c = parse_family("star(c=2; leaves=6,7,8)");
  CHECK(c.graph.n == 8);
  CHECK(c.graph.edges.size() == 3);

  FamilyInput d = parse_family("cycle(5) + loops(2)");
  CHECK(d.graph.loops == std::vector<int>{2});

  FamilyInput e = parse_family("H(m=2; stars=1,1)");
  REQUIRE(e.as_h.has_value());
  CHECK(e.normalized == "H(m=2; stars=1,1)");

  CHECK_THROWS_AS(parse_family("H(m=2)"), parse_error);
  CHECK_THROWS_AS(parse_family("pentagon(5)"), parse_error);
  CHECK_THROWS_AS(parse_family("K5 + cycle(3)"), parse_error);
}

}  // TEST_SUITE
