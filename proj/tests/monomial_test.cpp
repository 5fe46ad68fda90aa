#include <algorithm>
#include <random>

#include "doctest.h"
#include "loopideal/covers.hpp"
#include "loopideal/errors.hpp"
#include "loopideal/graphs.hpp"
#include "loopideal/monomial.hpp"
#include "testutil.hpp"

using namespace loopideal;

namespace {

Monomial m(std::size_t n, const char* text) { return parse_monomial(n, text); }

}  // namespace

TEST_SUITE("monomials") {

TEST_CASE("divisibility") {
  CHECK(m(3, "X1").divides(m(3, "X1*X3")));
  CHECK_FALSE(m(1, "X1^2").divides(m(1, "X1")));
  CHECK(m(4, "X2*X4").divides(m(4, "X1*X2*X3*X4")));
  CHECK_THROWS_AS(m(2, "X1").divides(m(3, "X1")), dimension_error);
}

TEST_CASE("gcd, lcm, quotient") {
  CHECK(gcd(m(3, "X1*X2"), m(3, "X2*X3")) == m(3, "X2"));
  CHECK(lcm(m(2, "X1^2"), m(2, "X1*X2")) == m(2, "X1^2*X2"));
  CHECK(m(3, "X1*X2*X3").exact_quotient(m(3, "X2")) == m(3, "X1*X3"));
  CHECK_THROWS_AS(m(2, "X1").exact_quotient(m(2, "X2")), std::invalid_argument);
  CHECK(m(3, "X1*X2").colon(m(3, "X2*X3")) == m(3, "X1"));
}

TEST_CASE("minimalize") {
  CHECK(minimalize(3, {m(3, "X1*X3"), m(3, "X1")}) == parse_ideal(3, "(X1)"));
  CHECK(minimalize(3, {m(3, "X1*X2"), m(3, "X2*X3"), m(3, "X1*X2*X3")}) ==
        parse_ideal(3, "(X1*X2, X2*X3)"));
  CHECK(minimalize(3, {}) == MonomialIdeal::zero(3));
  CHECK(minimalize(2, {m(2, "1"), m(2, "X1")}).is_unit());
}

TEST_CASE("minimalize is idempotent and order-insensitive") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Monomial> gens;
    for (int i = 0; i < 8; ++i) gens.push_back(testutil::random_monomial(rng, 4, 3, false));
    MonomialIdeal a = minimalize(4, gens);
    CHECK(minimalize(4, a.gens()) == a);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(4, gens) == a);
  }
}

TEST_CASE("colon by a monomial") {
  // the first quotients of the star-block chain at m=2
  CHECK(colon_by_monomial(parse_ideal(4, "(X1*X3)"), m(4, "X1*X4")) ==
        parse_ideal(4, "(X3)"));
  CHECK(colon_by_monomial(parse_ideal(4, "(X1*X3, X1*X4)"), m(4, "X1*X2")) ==
        parse_ideal(4, "(X3, X4)"));
  MonomialIdeal I = parse_ideal(3, "(X1*X2, X2*X3)");
  CHECK(colon_by_monomial(I, m(3, "1")) == I);
  // colon can hit the unit ideal on non-minimal ambient input
  CHECK(colon_by_monomial(parse_ideal(2, "(X1)"), m(2, "X1*X2")).is_unit());
}

TEST_CASE("colon membership contract") {
  std::mt19937 rng(23);
  std::vector<Monomial> probes = testutil::monomials_up_to(4, 4);
  for (int rep = 0; rep < 20; ++rep) {
    MonomialIdeal I = testutil::random_ideal(rng, 4, 5, 3);
    Monomial u = testutil::random_monomial(rng, 4, 2);
    MonomialIdeal Q = colon_by_monomial(I, u);
    for (const Monomial& v : probes) {
      CHECK(Q.contains(v) == I.contains(v.times(u)));
    }
  }
}

TEST_CASE("intersection") {
  CHECK(intersect(parse_ideal(3, "(X1, X2)"), parse_ideal(3, "(X3)")) ==
        parse_ideal(3, "(X1*X3, X2*X3)"));
  MonomialIdeal I = parse_ideal(2, "(X1*X2)");
  CHECK(intersect(I, I) == I);
  CHECK(intersect(parse_ideal(1, "(X1)"), parse_ideal(1, "(X1^2)")) ==
        parse_ideal(1, "(X1^2)"));
  CHECK(intersect(MonomialIdeal::zero(2), parse_ideal(2, "(X1)")).is_zero());
  CHECK_THROWS_AS(intersect(MonomialIdeal::zero(2), MonomialIdeal::zero(3)),
                  dimension_error);
}

TEST_CASE("intersection membership contract") {
  std::mt19937 rng(37);
  std::vector<Monomial> probes = testutil::monomials_up_to(4, 4);
  for (int rep = 0; rep < 20; ++rep) {
    MonomialIdeal I = testutil::random_ideal(rng, 4, 4, 2);
    MonomialIdeal J = testutil::random_ideal(rng, 4, 4, 2);
    MonomialIdeal M = intersect(I, J);
    for (const Monomial& v : probes)
      CHECK(M.contains(v) == (I.contains(v) && J.contains(v)));
  }
}

TEST_CASE("variable generation and radical") {
  auto vars = generated_by_variables(parse_ideal(4, "(X3, X4)"));
  REQUIRE(vars.has_value());
  CHECK(*vars == std::vector<int>{3, 4});
  // stored form is minimal, so (X1*X3, X1) collapses to (X1)
  MonomialIdeal I = minimalize(3, {m(3, "X1*X3"), m(3, "X1")});
  auto v2 = generated_by_variables(I);
  REQUIRE(v2.has_value());
  CHECK(*v2 == std::vector<int>{1});
  CHECK_FALSE(generated_by_variables(parse_ideal(3, "(X1*X3)")).has_value());
  CHECK_FALSE(generated_by_variables(MonomialIdeal::unit(2)).has_value());
  CHECK(radical(parse_ideal(3, "(X1^2, X2*X3)")) == parse_ideal(3, "(X1, X2*X3)"));
}

TEST_CASE("radical equals the intersection of minimal primes on loop graphs") {
  std::mt19937 rng(51);
  for (int rep = 0; rep < 15; ++rep) {
    LoopGraph g = testutil::random_simple_graph(rng, 5, 0.5);
    std::vector<int> loops;
    for (int v = 1; v <= 5; ++v)
      if (rng() % 3 == 0) loops.push_back(v);
    g = with_loops(g, loops);
    if (g.edges.empty() && g.loops.empty()) continue;
    MonomialIdeal I = edge_ideal(g).ideal;
    MonomialIdeal primes_meet = MonomialIdeal::unit(5);
    for (const auto& c : minimal_vertex_covers(g)) {
      if (c.empty()) { primes_meet = MonomialIdeal::zero(5); break; }
      primes_meet = intersect(primes_meet, ideal_of_variables(5, c));
    }
    CHECK(primes_meet == radical(I));
  }
}

TEST_CASE("canonical order") {
  CHECK(canonical_less(m(3, "X1"), m(3, "X1*X2")));       // degree first
  CHECK(canonical_less(m(3, "X1*X2"), m(3, "X1*X3")));    // more of the earlier variable first
  CHECK(canonical_less(m(3, "X1*X3"), m(3, "X2*X3")));
  CHECK(canonical_compare(m(3, "X2"), m(3, "X2")) == 0);
}

TEST_CASE("parse and print round-trip") {
  CHECK(m(4, "x2*X4") == m(4, "X2*X4"));
  CHECK(m(3, "X1^3*X1") == m(3, "X1^4"));
  CHECK(m(3, "1").is_one());
  CHECK(m(3, "X1*X3^2").str() == "X1*X3^2");
  CHECK(parse_ideal(3, "(0)").is_zero());
  CHECK(parse_ideal(3, "( X1*X2 , X2*X3 )").str() == "(X1*X2, X2*X3)");
  CHECK_THROWS_AS(parse_monomial(2, "X5"), parse_error);
  CHECK_THROWS_AS(parse_monomial(2, "Y1"), parse_error);
  CHECK_THROWS_AS(parse_ideal(2, "X1*X2"), parse_error);

  std::mt19937 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    Monomial u = testutil::random_monomial(rng, 5, 4);
    CHECK(parse_monomial(5, u.str()) == u);
  }
}

TEST_CASE("unit and zero ideals") {
  CHECK(MonomialIdeal::unit(3).str() == "(1)");
  CHECK(MonomialIdeal::zero(3).str() == "(0)");
  CHECK(MonomialIdeal::unit(3).contains(m(3, "1")));
  CHECK(MonomialIdeal::zero(3).contains(m(3, "X1")) == false);
}

}  // TEST_SUITE
