#ifndef LOOPIDEAL_INVARIANTS_HPP
#define LOOPIDEAL_INVARIANTS_HPP

#include <map>
#include <string>
#include <utility>

#include "loopideal/graphs.hpp"
#include "loopideal/monomial.hpp"

namespace loopideal {

enum class InvariantSource { kFormula, kCertificate, kBettiOracle };

/// dim, pd, depth and reg of R/I. depth + pd = n always holds.
struct InvariantReport {
  int n = 0;
  int dim = 0;
  int pd = 0;
  int depth = 0;
  int reg = 0;
  InvariantSource source = InvariantSource::kFormula;

  friend bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.n == b.n && a.dim == b.dim && a.pd == b.pd && a.depth == b.depth &&
           a.reg == b.reg;
  }
};

/// Closed forms for the complete-plus-stars families: dim = n - m,
/// pd = m + max_j i_j - 1, depth by the Auslander-Buchsbaum formula, reg = 1.
InvariantReport invariants_by_formula(const FamilyH& h);

/// Looped variant; loops must sit on the complete core. pd takes the star
/// maximum over looped vertices only, which can undershoot the computed value
/// when an unlooped star dominates by two or more (see invariants tests).
InvariantReport invariants_by_formula(const FamilyKPrime& k);

/// dim = n - h(I), pd = q(I) + 1, depth = n - pd, reg = degree - 1. Requires
/// an equigenerated ideal with linear quotients.
InvariantReport invariants_by_certificate(const MonomialIdeal& I);

/// Graded Betti numbers of R/I over a prime field, aggregated by total degree.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (homological i, total degree j) -> rank
  int characteristic = 2;

  int pd() const;
  int reg() const;
  long at(int i, int j) const;
  std::string str() const;  // fixed text layout with pd/reg summary lines
};

/// Betti numbers from the Taylor complex on G(I): faces are generator subsets
/// graded by their lcm, the differential survives reduction exactly where
/// dropping a generator keeps the lcm, and ranks are computed per multidegree
/// strand over GF(characteristic). Limited to 16 generators.
BettiTable betti_oracle(const MonomialIdeal& I, int characteristic = 2);

/// Reads pd and reg off the table; depth via Auslander-Buchsbaum; dim from the
/// cover number of the ideal.
InvariantReport invariants_from_betti(const BettiTable& table, const MonomialIdeal& I);

}  // namespace loopideal

#endif
