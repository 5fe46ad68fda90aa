#include "loopideal/reestype.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "loopideal/errors.hpp"

namespace loopideal {

namespace {

std::string t_part_str(const Monomial& t) {
  std::ostringstream out;
  bool first = true;
  const auto& e = t.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << '*';
    out << 'T' << (i + 1);
    if (e[i] > 1) out << '^' << e[i];
    first = false;
  }
  return first ? "" : out.str();
}

}  // namespace

std::string BiTerm::str() const {
  std::string xs = x.is_one() ? "" : x.str();
  std::string ts = t_part_str(t);
  if (xs.empty() && ts.empty()) return "1";
  if (xs.empty()) return ts;
  if (ts.empty()) return xs;
  return xs + "*" + ts;
}

bool same_monomial(const BiTerm& a, const BiTerm& b) { return a.x == b.x && a.t == b.t; }

std::string Binomial::str() const {
  if (!tail) return lead.str();
  return lead.str() + " - " + tail->str();
}

bool operator==(const Binomial& a, const Binomial& b) {
  if (!same_monomial(a.lead, b.lead)) return false;
  if (a.tail.has_value() != b.tail.has_value()) return false;
  return !a.tail || same_monomial(*a.tail, *b.tail);
}

int TermOrder::compare(const BiTerm& a, const BiTerm& b) const {
  const auto& ta = a.t.exponents();
  const auto& tb = b.t.exponents();
  for (int k = s - 1; k >= 0; --k)
    if (ta[k] != tb[k]) return ta[k] > tb[k] ? 1 : -1;
  u64 da = a.x.degree(), db = b.x.degree();
  if (da != db) return da > db ? 1 : -1;
  const auto& xa = a.x.exponents();
  const auto& xb = b.x.exponents();
  for (int k = n - 1; k >= 0; --k)
    if (xa[k] != xb[k]) return xa[k] > xb[k] ? 1 : -1;
  return 0;
}

TermOrder make_order(int s, int n) { return TermOrder{s, n}; }

namespace {

BiTerm times(const BiTerm& a, const BiTerm& b, int sign) {
  return BiTerm{a.x.times(b.x), a.t.times(b.t), sign};
}

BiTerm term_lcm(const BiTerm& a, const BiTerm& b) {
  return BiTerm{lcm(a.x, b.x), lcm(a.t, b.t), 1};
}

bool term_divides(const BiTerm& a, const BiTerm& b) {
  return a.x.divides(b.x) && a.t.divides(b.t);
}

BiTerm term_quotient(const BiTerm& a, const BiTerm& b) {
  return BiTerm{a.x.exact_quotient(b.x), a.t.exact_quotient(b.t), 1};
}

// Builds a lead-positive binomial from one positive and one negative term;
// nullopt when they cancel. Equal monomials with equal signs would mean a
// coefficient of 2, which the pure-difference engine can never produce.
std::optional<Binomial> combine(BiTerm a, BiTerm b, const TermOrder& order) {
  if (same_monomial(a, b)) {
    if (a.sign == b.sign)
      throw check_failed("binomial engine produced a coefficient outside {+1,-1}");
    return std::nullopt;
  }
  if (order.compare(a, b) < 0) std::swap(a, b);
  // an overall sign flip does not change the generated ideal
  a.sign = 1;
  b.sign = -1;
  return Binomial{a, b};
}

std::optional<Binomial> s_pair(const Binomial& g, const Binomial& h, const TermOrder& order) {
  BiTerm L = term_lcm(g.lead, h.lead);
  // (L/lead g) g - (L/lead h) h = (L/lead h) tail_h - (L/lead g) tail_g
  if (!g.tail || !h.tail) throw check_failed("S-pair of a monomial element");
  BiTerm from_h = times(term_quotient(L, h.lead), *h.tail, 1);
  BiTerm from_g = times(term_quotient(L, g.lead), *g.tail, -1);
  return combine(from_h, from_g, order);
}

// One rewriting step if some basis lead divides the given term.
bool reduce_term(BiTerm& term, const std::vector<Binomial>& basis, const TermOrder&) {
  for (const Binomial& g : basis) {
    if (!term_divides(g.lead, term)) continue;
    BiTerm q = term_quotient(term, g.lead);
    if (!g.tail) throw check_failed("reduction by a monomial element");
    BiTerm next = times(q, *g.tail, term.sign);
    term = next;
    return true;
  }
  return false;
}

}  // namespace

std::optional<Binomial> normal_form(Binomial b, const std::vector<Binomial>& basis,
                                    const TermOrder& order) {
  while (true) {
    if (reduce_term(b.lead, basis, order)) {
      if (!b.tail) {
        // the rewritten term may now be smaller than nothing to compare with
        b.lead.sign = 1;
        continue;
      }
      auto merged = combine(b.lead, *b.tail, order);
      if (!merged) return std::nullopt;
      b = *merged;
      continue;
    }
    if (b.tail && reduce_term(*b.tail, basis, order)) {
      auto merged = combine(b.lead, *b.tail, order);
      if (!merged) return std::nullopt;
      b = *merged;
      continue;
    }
    return b;
  }
}

std::vector<Binomial> sym_relations(const std::vector<Monomial>& f) {
  if (f.empty()) throw std::invalid_argument("need at least one generator");
  std::size_t s = f.size();
  std::size_t n = f.front().vars();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && f[i].divides(f[j]))
        throw std::invalid_argument("generators are not minimal: " + f[i].str() +
                                    " divides " + f[j].str());
  TermOrder order = make_order(static_cast<int>(s), static_cast<int>(n));
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      Monomial g = gcd(f[i], f[j]);
      BiTerm lead{f[i].exact_quotient(g), Monomial::variable(s, static_cast<int>(j) + 1), 1};
      BiTerm tail{f[j].exact_quotient(g), Monomial::variable(s, static_cast<int>(i) + 1), -1};
      if (!order.greater(lead, tail))
        throw check_failed("block order does not put the relation lead on T_j");
      out.push_back(Binomial{lead, tail});
    }
  }
  return out;
}

std::vector<Binomial> buchberger(std::vector<Binomial> basis, const TermOrder& order) {
  auto term_less = [&order](const BiTerm& a, const BiTerm& b) {
    return order.compare(a, b) < 0;
  };

  // pending S-pairs keyed by lead-lcm, processed smallest first
  using PairKey = std::pair<std::size_t, std::size_t>;
  std::multimap<BiTerm, PairKey, decltype(term_less)> pending(term_less);
  auto queue_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.emplace(term_lcm(basis[i].lead, basis[j].lead), PairKey{i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_for(j);

  while (!pending.empty()) {
    auto it = pending.begin();
    auto [i, j] = it->second;
    pending.erase(it);
    auto s = s_pair(basis[i], basis[j], order);
    if (!s) continue;
    auto nf = normal_form(*s, basis, order);
    if (!nf) continue;
    basis.push_back(*nf);
    queue_pairs_for(basis.size() - 1);
  }

  // reduced basis: drop elements whose lead another lead divides, then reduce
  // tails against the survivors
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!term_divides(basis[j].lead, basis[i].lead)) continue;
      if (same_monomial(basis[j].lead, basis[i].lead) && j > i) continue;  // keep first
      redundant = true;
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (!reduced[i].tail) continue;
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    auto nf = normal_form(reduced[i], others, order);
    if (!nf) throw check_failed("basis element reduced to zero after interreduction");
    reduced[i] = *nf;
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Binomial& a, const Binomial& b) {
    int c = order.compare(a.lead, b.lead);
    if (c != 0) return c < 0;
    if (a.tail && b.tail) return order.compare(*a.tail, *b.tail) < 0;
    return b.tail.has_value();
  });
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

namespace {

u64 binomial_coefficient(u64 a, u64 b) {
  if (b > a) return 0;
  u64 r = 1;
  for (u64 k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

void enumerate_exponents(int s, int degree, std::vector<u32>& cur, int from,
                         std::vector<std::vector<u32>>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  if (from >= s) return;
  for (int take = degree; take >= 0; --take) {
    cur[from] = static_cast<u32>(take);
    enumerate_exponents(s, degree - take, cur, from + 1, out);
  }
  cur[from] = 0;
}

}  // namespace

std::vector<Binomial> toric_kernel_upto(const std::vector<Monomial>& f, int dmax,
                                        u64 budget) {
  if (dmax < 2) throw std::invalid_argument("kernel enumeration needs dmax >= 2");
  if (f.empty()) throw std::invalid_argument("need at least one generator");
  std::size_t s = f.size();
  std::size_t n = f.front().vars();
  u64 per_side = binomial_coefficient(s + static_cast<u64>(dmax), dmax);
  if (per_side * per_side > budget)
    throw budget_exhausted("kernel enumeration of " + std::to_string(per_side) +
                           "^2 exponent pairs exceeds the budget");

  TermOrder order = make_order(static_cast<int>(s), static_cast<int>(n));
  std::vector<Binomial> out;
  for (int d = 1; d <= dmax; ++d) {
    std::vector<std::vector<u32>> sides;
    std::vector<u32> cur(s, 0);
    enumerate_exponents(static_cast<int>(s), d, cur, 0, sides);
    for (const auto& alpha : sides) {
      for (const auto& beta : sides) {
        bool disjoint = true;
        for (std::size_t k = 0; k < s && disjoint; ++k)
          disjoint = alpha[k] == 0 || beta[k] == 0;
        if (!disjoint) continue;
        Monomial ta = Monomial::of(alpha);
        Monomial tb = Monomial::of(beta);
        // keep one representative per sign
        BiTerm side_a{Monomial::one(n), ta, 1};
        BiTerm side_b{Monomial::one(n), tb, 1};
        if (order.compare(side_a, side_b) <= 0) continue;

        // balance the X parts of f^alpha / f^beta
        std::vector<long> w(n, 0);
        for (std::size_t k = 0; k < s; ++k) {
          if (alpha[k])
            for (std::size_t v = 0; v < n; ++v)
              w[v] += static_cast<long>(alpha[k]) * f[k].exponents()[v];
          if (beta[k])
            for (std::size_t v = 0; v < n; ++v)
              w[v] -= static_cast<long>(beta[k]) * f[k].exponents()[v];
        }
        std::vector<u32> xa(n, 0), xb(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
          if (w[v] > 0)
            xb[v] = static_cast<u32>(w[v]);
          else
            xa[v] = static_cast<u32>(-w[v]);
        }
        BiTerm lead{Monomial::of(xa), ta, 1};
        BiTerm tail{Monomial::of(xb), tb, -1};
        auto b = combine(lead, tail, order);
        if (b) out.push_back(*b);
      }
    }
  }
  return out;
}

std::string LinearTypeVerdict::str() const {
  std::ostringstream out;
  if (status == LinearTypeStatus::kVerified)
    out << "verified-to-" << dmax;
  else
    out << "counterexample " << counterexample->str();
  return out.str();
}

LinearTypeVerdict is_linear_type_upto(const MonomialIdeal& I, int dmax, u64 budget) {
  const auto& f = I.gens();
  if (f.size() > 8)
    throw std::invalid_argument("linear-type check is limited to 8 generators");
  if (dmax > 4) throw std::invalid_argument("linear-type check is limited to dmax <= 4");
  if (dmax < 2) throw std::invalid_argument("linear-type check needs dmax >= 2");
  if (f.size() < 2) {
    // a principal ideal has no relations to test
    return LinearTypeVerdict{LinearTypeStatus::kVerified, dmax, 0, true, std::nullopt};
  }

  TermOrder order = make_order(static_cast<int>(f.size()), static_cast<int>(I.vars()));
  std::vector<Binomial> relations = sym_relations(f);
  std::vector<Binomial> basis = buchberger(relations, order);

  bool leads_expected = true;
  for (const Binomial& b : basis) {
    bool divided = false;
    for (const Binomial& r : relations)
      if (term_divides(r.lead, b.lead)) {
        divided = true;
        break;
      }
    leads_expected = leads_expected && divided;
  }

  LinearTypeVerdict verdict{LinearTypeStatus::kVerified, dmax, basis.size(),
                            leads_expected, std::nullopt};
  for (const Binomial& k : toric_kernel_upto(f, dmax, budget)) {
    auto nf = normal_form(k, basis, order);
    if (nf) {
      verdict.status = LinearTypeStatus::kCounterexample;
      verdict.counterexample = k;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace loopideal
