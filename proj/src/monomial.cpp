#include "loopideal/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "loopideal/errors.hpp"

namespace loopideal {

namespace {

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars())
    throw dimension_error("monomials live in rings with " + std::to_string(u.vars()) +
                          " and " + std::to_string(v.vars()) + " variables");
}

}  // namespace

Monomial Monomial::variable(std::size_t n, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > n)
    throw dimension_error("variable index " + std::to_string(index) +
                          " outside 1.." + std::to_string(n));
  std::vector<u32> e(n, 0);
  e[index - 1] = 1;
  return Monomial(std::move(e));
}

u32 Monomial::exponent(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > e_.size())
    throw dimension_error("variable index " + std::to_string(index) +
                          " outside 1.." + std::to_string(e_.size()));
  return e_[index - 1];
}

u64 Monomial::degree() const { return kern::active().vsum(e_.data(), e_.size()); }

bool Monomial::is_squarefree() const {
  for (u32 e : e_)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

bool Monomial::divides(const Monomial& v) const {
  require_same_ring(*this, v);
  return kern::active().leq(e_.data(), v.e_.data(), e_.size());
}

Monomial Monomial::times(const Monomial& v) const {
  require_same_ring(*this, v);
  std::vector<u32> e(e_.size());
  kern::active().vadd(e.data(), e_.data(), v.e_.data(), e_.size());
  return Monomial(std::move(e));
}

Monomial Monomial::exact_quotient(const Monomial& v) const {
  require_same_ring(*this, v);
  if (!v.divides(*this))
    throw std::invalid_argument("quotient " + str() + " / " + v.str() +
                                ": divisor does not divide");
  std::vector<u32> e(e_.size());
  kern::active().vsub(e.data(), e_.data(), v.e_.data(), e_.size());
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& v) const { return exact_quotient(gcd(*this, v)); }

Monomial Monomial::radical() const {
  std::vector<u32> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<u32> e(u.e_.size());
  kern::active().vmin(e.data(), u.e_.data(), v.e_.data(), e.size());
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<u32> e(u.e_.size());
  kern::active().vmax(e.data(), u.e_.data(), v.e_.data(), e.size());
  return Monomial(std::move(e));
}

bool operator==(const Monomial& u, const Monomial& v) {
  return u.e_.size() == v.e_.size() &&
         kern::active().eq(u.e_.data(), v.e_.data(), u.e_.size());
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) out << '*';
    out << 'X' << (i + 1);
    if (e_[i] > 1) out << '^' << e_[i];
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

int canonical_compare(const Monomial& a, const Monomial& b) {
  u64 da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
  }
  return 0;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  return canonical_compare(a, b) < 0;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  for (const Monomial& g : gens_)
    if (g.divides(u)) return true;
  return false;
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str();
  }
  out << ')';
  return out.str();
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.vars() != n)
      throw dimension_error("generator " + g.str() + " not in a ring with " +
                            std::to_string(n) + " variables");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    // kept is degree-sorted, so any divisor of g already sits in it
    for (const Monomial& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
  if (u.vars() != I.vars()) throw dimension_error("colon: mismatched rings");
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) out.push_back(g.colon(u));
  return minimalize(I.vars(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw dimension_error("intersect: mismatched rings");
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::vector<Monomial> out;
  out.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& g : I.gens())
    for (const Monomial& h : J.gens()) out.push_back(lcm(g, h));
  return minimalize(I.vars(), std::move(out));
}

std::optional<std::vector<int>> generated_by_variables(const MonomialIdeal& I) {
  std::vector<int> vars;
  for (const Monomial& g : I.gens()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.support().front());
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) out.push_back(g.radical());
  return minimalize(I.vars(), std::move(out));
}

MonomialIdeal ideal_of_variables(std::size_t n, const std::vector<int>& indices) {
  std::vector<Monomial> gens;
  gens.reserve(indices.size());
  for (int i : indices) gens.push_back(Monomial::variable(n, i));
  return minimalize(n, std::move(gens));
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Monomial parse_monomial(std::size_t n, const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw parse_error("empty monomial");
  std::vector<u32> e(n, 0);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t star = t.find('*', pos);
    std::string tok = strip(t.substr(pos, star == std::string::npos ? star : star - pos));
    pos = star == std::string::npos ? t.size() : star + 1;
    if (tok == "1") continue;
    if (tok.empty() || (tok[0] != 'x' && tok[0] != 'X'))
      throw parse_error("bad monomial factor '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string idx_s = tok.substr(1, caret == std::string::npos ? caret : caret - 1);
    std::string exp_s = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    try {
      int idx = std::stoi(strip(idx_s));
      long exp = std::stol(strip(exp_s));
      if (idx < 1 || static_cast<std::size_t>(idx) > n)
        throw parse_error("variable X" + std::to_string(idx) + " outside ring with " +
                          std::to_string(n) + " variables");
      if (exp < 0) throw parse_error("negative exponent in '" + tok + "'");
      e[idx - 1] += static_cast<u32>(exp);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad monomial factor '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw parse_error("bad monomial factor '" + tok + "'");
    }
  }
  return Monomial::of(std::move(e));
}

MonomialIdeal parse_ideal(std::size_t n, const std::string& text) {
  std::string t = strip(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw parse_error("ideal must be parenthesized: '" + text + "'");
  t = strip(t.substr(1, t.size() - 2));
  if (t == "0") return MonomialIdeal::zero(n);
  if (t.empty()) throw parse_error("empty ideal body; use (0) for the zero ideal");
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string part = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
    gens.push_back(parse_monomial(n, part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return minimalize(n, std::move(gens));
}

}  // namespace loopideal
