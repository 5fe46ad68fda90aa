#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "loopideal/errors.hpp"
#include "loopideal/invariants.hpp"
#include "loopideal/linquot.hpp"
#include "loopideal/suite.hpp"
#include "testutil.hpp"

using namespace loopideal;

namespace {

// Every degree-respecting permutation checked directly; the reference for the
// search engine.
std::vector<QuotientCertificate> all_valid_orders(const MonomialIdeal& I) {
  std::vector<int> idx(I.gens().size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return I.gens()[a].degree() < I.gens()[b].degree();
  });
  std::vector<QuotientCertificate> found;
  do {
    bool degree_ok = true;
    for (std::size_t k = 1; k < idx.size(); ++k)
      degree_ok = degree_ok &&
                  I.gens()[idx[k - 1]].degree() <= I.gens()[idx[k]].degree();
    if (!degree_ok) continue;
    std::vector<Monomial> seq;
    for (int i : idx) seq.push_back(I.gens()[i]);
    VerifyResult v = verify_order(seq);
    if (v.cert) found.push_back(*v.cert);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return found;
}

}  // namespace

TEST_SUITE("linquot") {

TEST_CASE("verify the star-block chain") {
  auto [ideal, ordered] = edge_ideal(fixtures::h_2_21());
  VerifyResult v = verify_order(ordered);
  REQUIRE(v.cert.has_value());
  CHECK(v.cert->step_vars == std::vector<std::vector<int>>{{3}, {3, 4}, {1}});
  CHECK(v.cert->q == 2);
  CHECK(validate_certificate(ordered, *v.cert));

  QuotientCertificate corrupted = *v.cert;
  corrupted.step_vars[0] = {2};
  CHECK_FALSE(validate_certificate(ordered, corrupted));
}

TEST_CASE("verify the loop step") {
  auto [ideal, ordered] = edge_ideal(fixtures::k_2_11_loop1());
  VerifyResult v = verify_order(ordered);
  REQUIRE(v.cert.has_value());
  CHECK(v.cert->step_vars.back() == std::vector<int>{2, 3});
}

TEST_CASE("verify reports the first failing position") {
  std::size_t n = 4;
  std::vector<Monomial> bad = {parse_monomial(n, "X2*X4"), parse_monomial(n, "X1*X3"),
                               parse_monomial(n, "X1*X2")};
  VerifyResult v = verify_order(bad);
  CHECK_FALSE(v.cert.has_value());
  CHECK(v.failed_position == 2);

  // decreasing degrees fail where the drop happens
  std::vector<Monomial> unsorted = {parse_monomial(2, "X1*X2"), parse_monomial(2, "X1")};
  // not minimal, so it is rejected outright
  CHECK_THROWS_AS(verify_order(unsorted), std::invalid_argument);
  std::vector<Monomial> dropping = {parse_monomial(3, "X1*X2"), parse_monomial(3, "X3")};
  VerifyResult vd = verify_order(dropping);
  CHECK_FALSE(vd.cert.has_value());
  CHECK(vd.failed_position == 2);
}

TEST_CASE("search finds orders and proves absence") {
  CHECK(find_order(edge_ideal(fixtures::h_2_11()).ideal).status == SearchStatus::kFound);

  MonomialIdeal kbad = edge_ideal(fixtures::h_2_11_loop3()).ideal;
  SearchResult r = find_order(kbad, SearchStrategy::kExhaustive);
  CHECK(r.status == SearchStatus::kNone);
  CHECK(find_order(kbad, SearchStrategy::kBacktracking).status == SearchStatus::kNone);
  CHECK(find_order(kbad, SearchStrategy::kBacktracking, 2).status ==
        SearchStatus::kExhausted);

  SearchResult single = find_order(parse_ideal(2, "(X1*X2)"));
  REQUIRE(single.status == SearchStatus::kFound);
  CHECK(single.cert->q == 0);
  CHECK(single.cert->order == std::vector<int>{1});

  CHECK_THROWS_AS(
      find_order(edge_ideal(FamilyH::make(4, {2, 2, 2, 2})).ideal,
                 SearchStrategy::kExhaustive),
      std::invalid_argument);
}

TEST_CASE("q values") {
  CHECK(q_of(edge_ideal(fixtures::h_2_21()).ideal) == 2);
  CHECK(q_of(edge_ideal(fixtures::k_2_11_loop1()).ideal) == 2);
  CHECK(q_of(edge_ideal(fixtures::h_2_11()).ideal) == 1);
  CHECK_THROWS_AS(q_of(edge_ideal(fixtures::h_2_11_loop3()).ideal), no_linear_quotients);
}

TEST_CASE("q is independent of the order") {
  std::vector<MonomialIdeal> samples = {
      edge_ideal(fixtures::h_2_11()).ideal,
      edge_ideal(build_complete(3)).ideal,
      edge_ideal(build_path(4)).ideal,
      edge_ideal(fixtures::k_2_11_loop1()).ideal,
      parse_ideal(3, "(X1*X2, X1*X3)"),
  };
  bool saw_multiple = false;
  for (const MonomialIdeal& I : samples) {
    std::vector<QuotientCertificate> orders = all_valid_orders(I);
    REQUIRE(!orders.empty());
    saw_multiple = saw_multiple || orders.size() > 1;
    for (const auto& cert : orders) CHECK(cert.q == orders.front().q);
    CHECK(find_order(I).cert->q == orders.front().q);
  }
  CHECK(saw_multiple);
}

TEST_CASE("family chains verify across a grid") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<int> sizes(m, 0);
    while (true) {
      FamilyH h = FamilyH::make(m, sizes);
      auto [ideal, ordered] = edge_ideal(h);
      VerifyResult v = verify_order(ordered);
      REQUIRE_MESSAGE(v.cert.has_value(), h.dsl());
      if (h.max_star() > 0) CHECK(v.cert->q == m + h.max_star() - 2);

      int pos = 0;
      while (pos < m) {
        if (++sizes[pos] <= 2) break;
        sizes[pos] = 0;
        ++pos;
      }
      if (pos == m) break;
    }
  }
}

TEST_CASE("looped family chains verify when loops stay in the core") {
  for (int m = 2; m <= 3; ++m) {
    std::vector<int> sizes(m, 1);
    sizes[0] = 2;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> loops;
      for (int v = 1; v <= m; ++v)
        if (mask & (1u << (v - 1))) loops.push_back(v);
      FamilyKPrime k = FamilyKPrime::core_loops_only(FamilyH::make(m, sizes), loops);
      auto [ideal, ordered] = edge_ideal(k);
      VerifyResult v = verify_order(ordered);
      REQUIRE_MESSAGE(v.cert.has_value(), k.dsl());
      int max_all = k.base.max_star();
      int max_looped = k.max_looped_star();
      CHECK(v.cert->q == std::max(m + max_all - 2, m + max_looped - 1));
    }
  }
}

TEST_CASE("one empty star lets an outer loop keep linear quotients") {
  // With stars (1,0) and the loop on the single leaf the obstruction
  // disappears: no generator avoids both the star center and the leaf.
  FamilyKPrime boundary = FamilyKPrime::make(FamilyH::make(2, {1, 0}), {3});
  SearchResult r = find_order(edge_ideal(boundary).ideal, SearchStrategy::kExhaustive);
  CHECK(r.status == SearchStatus::kFound);
}

TEST_CASE("linear resolution decisions") {
  LinearResolutionReport ex9 = has_linear_resolution(edge_ideal(fixtures::h_4_1312()).ideal);
  CHECK(ex9.linear);
  CHECK(ex9.method == ResolutionMethod::kLinearQuotients);

  LinearResolutionReport c5 = has_linear_resolution(edge_ideal(build_cycle(5)).ideal);
  CHECK_FALSE(c5.linear);

  // two disjoint edges: the complement contains an induced four-cycle
  LinearResolutionReport disjoint =
      has_linear_resolution(parse_ideal(4, "(X1*X2, X3*X4)"));
  CHECK_FALSE(disjoint.linear);

  LinearResolutionReport mixed = has_linear_resolution(parse_ideal(2, "(X1, X2^2)"));
  CHECK(mixed.not_equigenerated);

  // non-squarefree without linear quotients: decided homologically
  LinearResolutionReport kbad =
      has_linear_resolution(edge_ideal(fixtures::h_2_11_loop3()).ideal);
  CHECK(kbad.method == ResolutionMethod::kBettiOracle);
  BettiTable t = betti_oracle(edge_ideal(fixtures::h_2_11_loop3()).ideal, 2);
  bool linear_by_table = true;
  for (const auto& [ij, v] : t.entries)
    if (ij.first >= 1 && v != 0 && ij.second != ij.first + 1) linear_by_table = false;
  CHECK(kbad.linear == linear_by_table);
}

TEST_CASE("search equivalence with the chordality criterion") {
  std::mt19937 rng(123);
  int disagreements = 0, checked = 0;
  for (int rep = 0; rep < 120; ++rep) {
    int n = 5 + rep % 4;  // samples up to eight vertices
    LoopGraph g = testutil::random_simple_graph(rng, n, n <= 6 ? 0.35 : 0.2);
    if (g.edges.empty()) continue;
    MonomialIdeal I = edge_ideal(g).ideal;
    if (I.gens().size() > 12) continue;  // keep the complete search cheap
    SearchResult r = find_order(I, SearchStrategy::kBacktracking, 50'000'000);
    REQUIRE(r.status != SearchStatus::kExhausted);
    ++checked;
    if ((r.status == SearchStatus::kFound) != froberg_linear_resolution(g))
      ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(checked > 60);
}

}  // TEST_SUITE
