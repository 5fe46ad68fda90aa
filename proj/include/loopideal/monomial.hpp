#ifndef LOOPIDEAL_MONOMIAL_HPP
#define LOOPIDEAL_MONOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "loopideal/kernels.hpp"

namespace loopideal {

using kern::u32;
using kern::u64;

/// Monomial in K[X_1..X_n], stored as its exponent vector. Immutable after
/// construction; every operation returns a fresh value.
class Monomial {
 public:
  Monomial() = default;  // the empty-ring unit; containers only

  static Monomial one(std::size_t n) { return Monomial(std::vector<u32>(n, 0)); }
  static Monomial variable(std::size_t n, int index);  // index is 1-based
  static Monomial of(std::vector<u32> exponents) { return Monomial(std::move(exponents)); }

  std::size_t vars() const { return e_.size(); }
  u32 exponent(int index) const;  // 1-based
  const std::vector<u32>& exponents() const { return e_; }
  u64 degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  std::vector<int> support() const;  // ascending 1-based variable indices

  bool divides(const Monomial& v) const;
  Monomial times(const Monomial& v) const;
  Monomial exact_quotient(const Monomial& v) const;  // requires v | *this
  Monomial colon(const Monomial& v) const;           // *this / gcd(*this, v)
  Monomial radical() const;

  friend Monomial gcd(const Monomial& u, const Monomial& v);
  friend Monomial lcm(const Monomial& u, const Monomial& v);
  friend bool operator==(const Monomial& u, const Monomial& v);
  friend bool operator!=(const Monomial& u, const Monomial& v) { return !(u == v); }

  /// Textual form, e.g. "X1*X3^2"; the unit is "1".
  std::string str() const;

 private:
  explicit Monomial(std::vector<u32> e) : e_(std::move(e)) {}
  std::vector<u32> e_;
};

/// Canonical total order used for all stored generator lists: lower total
/// degree first; within a degree, whichever monomial has the larger exponent
/// at the first differing variable comes first. Returns <0, 0, >0.
int canonical_compare(const Monomial& a, const Monomial& b);
bool canonical_less(const Monomial& a, const Monomial& b);

/// Finitely generated monomial ideal, stored by its unique minimal generating
/// set in canonical order. The zero ideal has no generators; the unit ideal is
/// generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal of the empty ring; containers only

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::one(n)}); }

  std::size_t vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Membership: u lies in the ideal iff some generator divides it.
  bool contains(const Monomial& u) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

  std::string str() const;  // "(X1*X2, X2*X3)", "(0)", "(1)"

 private:
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens)
      : n_(n), gens_(std::move(gens)) {}
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops every monomial that is a proper multiple of another, deduplicates and
/// sorts canonically. The generated ideal is unchanged. Empty input gives the
/// zero ideal.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

/// (I : u) via the generator-wise identity g -> g / gcd(g, u).
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);

/// Intersection by pairwise lcms of generators.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// The variable indices when every generator has degree one, otherwise absent.
std::optional<std::vector<int>> generated_by_variables(const MonomialIdeal& I);

MonomialIdeal radical(const MonomialIdeal& I);

/// The ideal generated by the given variables (1-based indices).
MonomialIdeal ideal_of_variables(std::size_t n, const std::vector<int>& indices);

Monomial parse_monomial(std::size_t n, const std::string& text);
MonomialIdeal parse_ideal(std::size_t n, const std::string& text);

}  // namespace loopideal

#endif
