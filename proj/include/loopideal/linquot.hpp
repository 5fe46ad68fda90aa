#ifndef LOOPIDEAL_LINQUOT_HPP
#define LOOPIDEAL_LINQUOT_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopideal/monomial.hpp"

namespace loopideal {

/// Witness that an ordering has linear quotients: at every position j >= 2 the
/// colon of the preceding generators is generated by the recorded variables.
struct QuotientCertificate {
  std::vector<int> order;                    // 1-based indices into the input list
  std::vector<std::vector<int>> step_vars;   // entry k: variables at position k+2
  std::vector<int> q_values;                 // sizes of step_vars
  int q = 0;                                 // max of q_values, 0 for <= 1 generator

  std::string str() const;
};

/// Recomputes every colon step of a claimed certificate from scratch; true
/// when order and step_vars are exactly reproduced.
bool validate_certificate(const std::vector<Monomial>& gens, const QuotientCertificate& cert);

struct VerifyResult {
  std::optional<QuotientCertificate> cert;
  int failed_position = 0;  // 1-based position of the first failing step when cert is absent
};

/// Checks the given sequence as a linear-quotient order. The sequence must be
/// a minimal generating set; degrees must be non-decreasing (a violation
/// counts as a failure at that position).
VerifyResult verify_order(const std::vector<Monomial>& gens);

enum class SearchStrategy { kAuto, kExhaustive, kBacktracking };
enum class SearchStatus { kFound, kNone, kExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<QuotientCertificate> cert;
  u64 nodes = 0;
};

inline constexpr u64 kDefaultNodeBudget = 5'000'000;

/// Searches degree-respecting orders depth-first, memoizing prefix sets that
/// cannot be completed (the colon at a step depends only on the set of
/// earlier generators). Exhaustive strategy requires <= 9 generators and is
/// complete; backtracking is complete whenever it finishes within the node
/// budget and reports kExhausted otherwise, never kNone.
SearchResult find_order(const MonomialIdeal& I,
                        SearchStrategy strategy = SearchStrategy::kAuto,
                        u64 node_budget = kDefaultNodeBudget);

/// Maximum number of variables over all quotient steps; independent of the
/// chosen order. Throws no_linear_quotients when no order exists.
int q_of(const MonomialIdeal& I, u64 node_budget = kDefaultNodeBudget);

enum class ResolutionMethod { kLinearQuotients, kBettiOracle };

struct LinearResolutionReport {
  bool not_equigenerated = false;
  bool linear = false;
  ResolutionMethod method = ResolutionMethod::kLinearQuotients;
  std::optional<QuotientCertificate> cert;
};

/// Decides linear resolution. A found order decides positively; for
/// squarefree degree-2 ideals a definite "none" decides negatively (and the
/// graph-complement criterion is asserted to agree); otherwise the Betti
/// oracle decides. Ideals generated in mixed degrees are reported as
/// not-equigenerated.
LinearResolutionReport has_linear_resolution(const MonomialIdeal& I,
                                             u64 node_budget = kDefaultNodeBudget);

}  // namespace loopideal

#endif
