#ifndef LOOPIDEAL_REESTYPE_HPP
#define LOOPIDEAL_REESTYPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopideal/monomial.hpp"

namespace loopideal {

/// Signed term X^a T^b of the bigraded ring R[T_1..T_s].
struct BiTerm {
  Monomial x;  // over X_1..X_n
  Monomial t;  // over T_1..T_s
  int sign = 1;

  u64 xdeg() const { return x.degree(); }
  u64 tdeg() const { return t.degree(); }
  std::string str() const;  // monomial part only, e.g. "X2*X3*T3"
};

bool same_monomial(const BiTerm& a, const BiTerm& b);

/// Pure difference lead - tail with lead strictly larger under the ambient
/// order; a missing tail denotes a single monomial element. All engine inputs
/// and outputs keep coefficients in {+1, -1}.
struct Binomial {
  BiTerm lead;                 // sign +1
  std::optional<BiTerm> tail;  // sign -1 when present

  std::string str() const;  // "X1*T2 - X3*T1"
  friend bool operator==(const Binomial& a, const Binomial& b);
};

/// Block order: T exponents compared from T_s down to T_1 (larger wins), ties
/// broken on the X block by total degree and then from X_n down to X_1. This
/// puts the lead of every symmetric-algebra relation on its higher T variable.
struct TermOrder {
  int s = 0;
  int n = 0;

  int compare(const BiTerm& a, const BiTerm& b) const;  // ignores signs
  bool greater(const BiTerm& a, const BiTerm& b) const { return compare(a, b) > 0; }
};

TermOrder make_order(int s, int n);

/// Relations g_ij = (f_i/gcd) T_j - (f_j/gcd) T_i for i < j, each with lead
/// (f_i/gcd) T_j under make_order. Requires a minimal generating sequence.
std::vector<Binomial> sym_relations(const std::vector<Monomial>& f);

/// Buchberger fixed point specialized to pure-difference binomials: S-pairs
/// and reductions stay binomials, so only signs are tracked. Pairs run in
/// ascending lead-lcm order; reducers match lowest index first. Returns the
/// reduced basis in canonical order.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, const TermOrder& order);

/// Normal form against a basis (nullopt when it reduces to zero).
std::optional<Binomial> normal_form(Binomial b, const std::vector<Binomial>& basis,
                                    const TermOrder& order);

inline constexpr u64 kDefaultEnumerationBudget = 4'000'000;

/// All T-homogeneous kernel relations of T_i -> f_i t with coprime T-supports
/// up to the given T-degree: for each exponent pair (alpha, beta) of equal
/// degree, the X parts balance the monomial identity f^alpha / f^beta.
std::vector<Binomial> toric_kernel_upto(const std::vector<Monomial>& f, int dmax,
                                        u64 budget = kDefaultEnumerationBudget);

enum class LinearTypeStatus { kVerified, kCounterexample };

struct LinearTypeVerdict {
  LinearTypeStatus status = LinearTypeStatus::kVerified;
  int dmax = 0;
  std::size_t basis_size = 0;
  bool leading_terms_expected = false;  // every basis lead divisible by some (f_i/gcd) T_j
  std::optional<Binomial> counterexample;

  std::string str() const;
};

/// Degree-bounded linear-type check: the symmetric-algebra relations generate
/// the toric kernel up to T-degree dmax exactly when every enumerated kernel
/// element reduces to zero against their Groebner basis. Limited to 8
/// generators and dmax <= 4.
LinearTypeVerdict is_linear_type_upto(const MonomialIdeal& I, int dmax,
                                      u64 budget = kDefaultEnumerationBudget);

}  // namespace loopideal

#endif
