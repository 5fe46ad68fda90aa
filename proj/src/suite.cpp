#include "loopideal/suite.hpp"

#include <functional>
#include <sstream>

#include "loopideal/covers.hpp"
#include "loopideal/errors.hpp"
#include "loopideal/invariants.hpp"
#include "loopideal/linquot.hpp"
#include "loopideal/reestype.hpp"

namespace loopideal {

namespace fixtures {

FamilyH h_2_11() { return FamilyH::make(2, {1, 1}); }
FamilyH h_2_21() { return FamilyH::make(2, {2, 1}); }
FamilyH h_4_1312() { return FamilyH::make(4, {1, 3, 1, 2}); }
FamilyKPrime k_2_11_loop1() { return FamilyKPrime::core_loops_only(h_2_11(), {1}); }
FamilyKPrime h_2_11_loop3() { return FamilyKPrime::make(h_2_11(), {3}); }
FamilyKPrime k_3_332_loops() {
  return FamilyKPrime::make(FamilyH::make(3, {3, 3, 2}), {3, 5, 7, 9});
}

}  // namespace fixtures

namespace {

std::string ordered_str(const std::vector<Monomial>& gens) {
  std::ostringstream out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << gens[i].str();
  }
  return out.str();
}

// Parses the expected ideal, multiplying the first generator by X1 when the
// anchor is mutated so the comparison must fail.
MonomialIdeal pinned_ideal(std::size_t n, std::string text, bool mutate) {
  MonomialIdeal expected = parse_ideal(n, text);
  if (!mutate || expected.gens().empty()) return expected;
  std::vector<Monomial> gens = expected.gens();
  gens[0] = gens[0].times(Monomial::variable(n, static_cast<int>(n)));
  return minimalize(n, gens);
}

std::string check_ideal(const MonomialIdeal& actual, const std::string& expected_text,
                        bool mutate) {
  MonomialIdeal expected = pinned_ideal(actual.vars(), expected_text, mutate);
  if (actual == expected) return "";
  return "expected " + expected.str() + ", got " + actual.str();
}

std::string check_int(long actual, long expected, bool mutate, const char* what) {
  if (mutate) ++expected;
  if (actual == expected) return "";
  return std::string(what) + ": expected " + std::to_string(expected) + ", got " +
         std::to_string(actual);
}

std::string check_invariants(const InvariantReport& r, int dim, int pd, int depth, int reg,
                             bool mutate) {
  if (mutate) ++dim;
  if (r.dim == dim && r.pd == pd && r.depth == depth && r.reg == reg) return "";
  std::ostringstream out;
  out << "expected dim=" << dim << " pd=" << pd << " depth=" << depth << " reg=" << reg
      << ", got dim=" << r.dim << " pd=" << r.pd << " depth=" << r.depth
      << " reg=" << r.reg;
  return out.str();
}

struct Anchor {
  std::string name;
  std::function<std::string(bool)> run;  // empty result = pass
};

std::vector<Anchor> anchors() {
  std::vector<Anchor> list;

  list.push_back({"edge-ideal-order H(2;1,1)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::h_2_11());
    std::string expected = "X1*X3, X1*X2, X2*X4";
    if (mutate) expected += ", X1";
    std::string got = ordered_str(ordered);
    return got == expected ? "" : "expected [" + expected + "], got [" + got + "]";
  }});

  list.push_back({"edge-ideal-order H(2;2,1)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::h_2_21());
    std::string expected = "X1*X3, X1*X4, X1*X2, X2*X5";
    if (mutate) expected += ", X1";
    std::string got = ordered_str(ordered);
    return got == expected ? "" : "expected [" + expected + "], got [" + got + "]";
  }});

  list.push_back({"edge-ideal-order K(2;1,1)+loop(1)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::k_2_11_loop1());
    std::string expected = "X1*X3, X1*X2, X2*X4, X1^2";
    if (mutate) expected += ", X1";
    std::string got = ordered_str(ordered);
    return got == expected ? "" : "expected [" + expected + "], got [" + got + "]";
  }});

  list.push_back({"quotient-chain H(2;2,1)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::h_2_21());
    VerifyResult v = verify_order(ordered);
    if (!v.cert) return std::string("canonical order failed at position ") +
                         std::to_string(v.failed_position);
    std::vector<std::vector<int>> expected = {{3}, {3, 4}, {1}};
    if (mutate) expected[0] = {2};
    if (v.cert->step_vars != expected) {
      return std::string("colon steps differ from the pinned chain: got ") +
             v.cert->str();
    }
    return std::string();
  }});

  list.push_back({"quotient-final-step K(2;1,1)+loop(1)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::k_2_11_loop1());
    VerifyResult v = verify_order(ordered);
    if (!v.cert) return std::string("canonical order failed at position ") +
                         std::to_string(v.failed_position);
    std::vector<int> expected = {2, 3};
    if (mutate) expected = {1, 2};
    if (v.cert->step_vars.back() != expected)
      return "final colon step is not the pinned variable set: got " + v.cert->str();
    return std::string();
  }});

  list.push_back({"no-linear-quotients H(2;1,1)+loop(3)", [](bool mutate) {
    auto [ideal, ordered] = edge_ideal(fixtures::h_2_11_loop3());
    SearchResult r = find_order(ideal, SearchStrategy::kExhaustive);
    SearchStatus expected = mutate ? SearchStatus::kFound : SearchStatus::kNone;
    if (r.status != expected) return std::string("exhaustive search did not return none");
    return std::string();
  }});

  list.push_back({"q-values H and K fixtures", [](bool mutate) {
    std::string err = check_int(q_of(edge_ideal(fixtures::h_2_21()).ideal), 2, mutate,
                                "q of H(2;2,1)");
    if (!err.empty()) return err;
    err = check_int(q_of(edge_ideal(fixtures::k_2_11_loop1()).ideal), 2, false,
                    "q of K(2;1,1)+loop(1)");
    if (!err.empty()) return err;
    return check_int(q_of(edge_ideal(fixtures::h_2_11()).ideal), 1, false,
                     "q of H(2;1,1)");
  }});

  list.push_back({"invariants H(2;2,1)", [](bool mutate) {
    InvariantReport by_formula = invariants_by_formula(fixtures::h_2_21());
    InvariantReport by_cert = invariants_by_certificate(edge_ideal(fixtures::h_2_21()).ideal);
    std::string err = check_invariants(by_formula, 3, 3, 2, 1, mutate);
    if (!err.empty()) return err;
    return by_formula == by_cert ? std::string()
                                 : std::string("formula and certificate routes disagree");
  }});

  list.push_back({"invariants K(2;1,1)+loop(1)", [](bool mutate) {
    InvariantReport by_formula = invariants_by_formula(fixtures::k_2_11_loop1());
    InvariantReport by_cert =
        invariants_by_certificate(edge_ideal(fixtures::k_2_11_loop1()).ideal);
    std::string err = check_invariants(by_formula, 2, 3, 1, 1, mutate);
    if (!err.empty()) return err;
    return by_formula == by_cert ? std::string()
                                 : std::string("formula and certificate routes disagree");
  }});

  list.push_back({"invariants H(4;1,3,1,2)", [](bool mutate) {
    InvariantReport by_formula = invariants_by_formula(fixtures::h_4_1312());
    InvariantReport by_cert =
        invariants_by_certificate(edge_ideal(fixtures::h_4_1312()).ideal);
    std::string err = check_invariants(by_formula, 7, 6, 5, 1, mutate);
    if (!err.empty()) return err;
    return by_formula == by_cert ? std::string()
                                 : std::string("formula and certificate routes disagree");
  }});

  list.push_back({"h-values of fixture edge ideals", [](bool mutate) {
    std::string err =
        check_int(h_of(edge_ideal(fixtures::h_2_21()).ideal), 2, mutate, "h of H(2;2,1)");
    if (!err.empty()) return err;
    err = check_int(h_of(edge_ideal(fixtures::k_2_11_loop1()).ideal), 2, false,
                    "h of K(2;1,1)+loop(1)");
    if (!err.empty()) return err;
    return check_int(h_of(edge_ideal(fixtures::h_4_1312()).ideal), 4, false,
                     "h of H(4;1,3,1,2)");
  }});

  list.push_back({"cover-ideal H(4;1,3,1,2)", [](bool mutate) {
    CoverIdealReport r = cover_ideal(fixtures::h_4_1312().graph());
    return check_ideal(r.ideal,
                       "(X1*X2*X3*X4, X2*X3*X4*X5, X1*X3*X4*X6*X7*X8, X1*X2*X4*X9, "
                       "X1*X2*X3*X10*X11)",
                       mutate);
  }});

  list.push_back({"cover-ideal K'(3;3,3,2)+loops(3,5,7,9)", [](bool mutate) {
    CoverIdealReport r = cover_ideal(fixtures::k_3_332_loops().graph());
    return check_ideal(
        r.ideal, "(X1*X2*X3*X5*X7*X9, X2*X3*X4*X5*X6*X7*X9, X1*X3*X5*X7*X8*X9)", mutate);
  }});

  list.push_back({"cover-ideal small fixtures", [](bool mutate) {
    std::string err = check_ideal(cover_ideal(fixtures::h_2_11().graph()).ideal,
                                  "(X1*X2, X2*X3, X1*X4)", mutate);
    if (!err.empty()) return err;
    return check_ideal(cover_ideal(fixtures::k_2_11_loop1().graph()).ideal,
                       "(X1*X2, X1*X4)", false);
  }});

  list.push_back({"closed-form complete graphs", [](bool mutate) {
    std::string err =
        check_ideal(closed_form_cover_ideal(CompleteCase{3}), "(X2*X3, X1*X3, X1*X2)", mutate);
    if (!err.empty()) return err;
    return check_ideal(
        closed_form_cover_ideal(CompleteWithLoopsCase{4, {1, 2, 3, 4}}),
        "(X1*X2*X3*X4)", false);
  }});

  list.push_back({"closed-form matches enumeration on fixtures", [](bool mutate) {
    FamilyH h = fixtures::h_4_1312();
    MonomialIdeal closed = closed_form_cover_ideal(HAllStarsCase{h});
    MonomialIdeal brute = cover_ideal(h.graph()).ideal;
    if (mutate) brute = intersect(brute, ideal_of_variables(brute.vars(), {1}));
    if (!(closed == brute))
      return "closed form " + closed.str() + " differs from enumeration " + brute.str();
    FamilyKPrime k = fixtures::k_3_332_loops();
    MonomialIdeal closed_k = closed_form_cover_ideal(KPrimeCase{k});
    MonomialIdeal brute_k = cover_ideal(k.graph()).ideal;
    if (!(closed_k == brute_k))
      return "closed form " + closed_k.str() + " differs from enumeration " +
             brute_k.str();
    return std::string();
  }});

  list.push_back({"linear-type cover ideal of H(2;1,1)", [](bool mutate) {
    LinearTypeVerdict v = is_linear_type_upto(cover_ideal(fixtures::h_2_11().graph()).ideal, 3);
    LinearTypeStatus expected =
        mutate ? LinearTypeStatus::kCounterexample : LinearTypeStatus::kVerified;
    if (v.status != expected) return "verdict: " + v.str();
    if (!v.leading_terms_expected)
      return std::string("a basis lead escapes the relation lead ideal");
    return std::string();
  }});

  list.push_back({"linear-type negative control (X^2, X*Y, Y^2)", [](bool mutate) {
    MonomialIdeal I = parse_ideal(2, "(X1^2, X1*X2, X2^2)");
    LinearTypeVerdict v = is_linear_type_upto(I, 2);
    if (mutate) {
      return v.status == LinearTypeStatus::kVerified ? std::string()
                                                     : "verdict: " + v.str();
    }
    if (v.status != LinearTypeStatus::kCounterexample) return "verdict: " + v.str();
    if (v.counterexample->str() != "T1*T3 - T2^2")
      return "unexpected witness " + v.counterexample->str();
    return std::string();
  }});

  list.push_back({"complement-chordality checks", [](bool mutate) {
    bool h0 = froberg_linear_resolution(fixtures::h_2_11().graph());
    bool c4 = froberg_linear_resolution(build_cycle(4));
    bool c5 = froberg_linear_resolution(build_cycle(5));
    bool expected_c5 = mutate;
    if (h0 && c4 && c5 == expected_c5) return std::string();
    std::ostringstream out;
    out << "H(2;1,1)=" << h0 << " C4=" << c4 << " C5=" << c5;
    return out.str();
  }});

  list.push_back({"betti-oracle Koszul pair", [](bool mutate) {
    BettiTable t = betti_oracle(parse_ideal(2, "(X1, X2)"), 2);
    long expected11 = mutate ? 3 : 2;
    if (t.at(1, 1) != expected11 || t.at(2, 2) != 1 || t.pd() != 2 || t.reg() != 0)
      return "table:\n" + t.str();
    return std::string();
  }});

  return list;
}

}  // namespace

std::vector<AnchorResult> run_reference_suite(const std::string& mutate_anchor) {
  std::vector<AnchorResult> results;
  bool matched = mutate_anchor.empty();
  for (const Anchor& a : anchors()) {
    bool mutate = a.name == mutate_anchor;
    matched = matched || mutate;
    AnchorResult r;
    r.name = a.name;
    try {
      r.detail = a.run(mutate);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  if (!matched)
    throw std::invalid_argument("unknown anchor '" + mutate_anchor + "'");
  return results;
}

}  // namespace loopideal
