#include "loopideal/linquot.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "loopideal/errors.hpp"
#include "loopideal/graphs.hpp"
#include "loopideal/invariants.hpp"

namespace loopideal {

namespace {

void require_minimal(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && gens[i].divides(gens[j]))
        throw std::invalid_argument("generators are not a minimal generating set: " +
                                    gens[i].str() + " divides " + gens[j].str());
}

// Variables generating the colon of {gens[i] : i in prefix} by u, or absent.
std::optional<std::vector<int>> colon_variables(const std::vector<Monomial>& gens,
                                                const std::vector<int>& prefix,
                                                const Monomial& u) {
  std::vector<Monomial> cols;
  cols.reserve(prefix.size());
  for (int i : prefix) cols.push_back(gens[i].colon(u));
  return generated_by_variables(minimalize(u.vars(), std::move(cols)));
}

struct SearchContext {
  const std::vector<Monomial>* gens;
  std::vector<int> by_degree;  // candidate indices, degree then canonical order
  std::unordered_set<u64> dead;
  u64 nodes = 0;
  u64 budget = 0;
  bool budget_hit = false;

  std::vector<int> order_idx;
  std::vector<std::vector<int>> step_vars;
};

bool dfs(SearchContext& ctx, u64 used_mask) {
  const auto& gens = *ctx.gens;
  std::size_t depth = ctx.order_idx.size();
  if (depth == gens.size()) return true;
  if (ctx.dead.count(used_mask)) return false;

  // Degree-respecting orders only: candidates are the unused generators of the
  // minimal remaining degree.
  u64 min_deg = 0;
  bool have = false;
  for (int i : ctx.by_degree) {
    if (used_mask & (u64{1} << i)) continue;
    min_deg = gens[i].degree();
    have = true;
    break;
  }
  (void)have;

  for (int i : ctx.by_degree) {
    if (used_mask & (u64{1} << i)) continue;
    if (gens[i].degree() != min_deg) break;
    if (++ctx.nodes > ctx.budget) {
      ctx.budget_hit = true;
      return false;
    }
    std::optional<std::vector<int>> vars;
    if (depth == 0) {
      vars = std::vector<int>{};
    } else {
      vars = colon_variables(gens, ctx.order_idx, gens[i]);
    }
    if (!vars) continue;
    ctx.order_idx.push_back(i);
    if (depth > 0) ctx.step_vars.push_back(std::move(*vars));
    if (dfs(ctx, used_mask | (u64{1} << i))) return true;
    ctx.order_idx.pop_back();
    if (depth > 0) ctx.step_vars.pop_back();
    if (ctx.budget_hit) return false;
  }
  ctx.dead.insert(used_mask);
  return false;
}

QuotientCertificate make_certificate(std::vector<int> order_idx,
                                     std::vector<std::vector<int>> step_vars) {
  QuotientCertificate cert;
  cert.order.reserve(order_idx.size());
  for (int i : order_idx) cert.order.push_back(i + 1);
  cert.step_vars = std::move(step_vars);
  for (const auto& s : cert.step_vars) cert.q_values.push_back(static_cast<int>(s.size()));
  cert.q = 0;
  for (int q : cert.q_values) cert.q = std::max(cert.q, q);
  return cert;
}

}  // namespace

std::string QuotientCertificate::str() const {
  std::ostringstream out;
  out << "order:";
  for (int i : order) out << ' ' << i;
  out << '\n';
  for (std::size_t k = 0; k < step_vars.size(); ++k) {
    out << "step " << (k + 2) << ": (";
    for (std::size_t v = 0; v < step_vars[k].size(); ++v) {
      if (v) out << ", ";
      out << 'X' << step_vars[k][v];
    }
    out << ")  q_" << (k + 2) << " = " << q_values[k] << '\n';
  }
  out << "q = " << q << '\n';
  return out.str();
}

bool validate_certificate(const std::vector<Monomial>& gens,
                          const QuotientCertificate& cert) {
  if (cert.order.size() != gens.size()) return false;
  std::vector<int> prefix;
  for (std::size_t pos = 0; pos < cert.order.size(); ++pos) {
    int idx = cert.order[pos] - 1;
    if (idx < 0 || idx >= static_cast<int>(gens.size())) return false;
    if (pos > 0) {
      auto vars = colon_variables(gens, prefix, gens[idx]);
      if (!vars || *vars != cert.step_vars[pos - 1]) return false;
      if (cert.q_values[pos - 1] != static_cast<int>(vars->size())) return false;
    }
    prefix.push_back(idx);
  }
  int q = 0;
  for (int v : cert.q_values) q = std::max(q, v);
  return q == cert.q;
}

VerifyResult verify_order(const std::vector<Monomial>& gens) {
  require_minimal(gens);
  std::vector<int> prefix;
  std::vector<std::vector<int>> steps;
  for (std::size_t pos = 0; pos < gens.size(); ++pos) {
    if (pos > 0) {
      if (gens[pos].degree() < gens[pos - 1].degree())
        return VerifyResult{std::nullopt, static_cast<int>(pos) + 1};
      auto vars = colon_variables(gens, prefix, gens[pos]);
      if (!vars) return VerifyResult{std::nullopt, static_cast<int>(pos) + 1};
      steps.push_back(std::move(*vars));
    }
    prefix.push_back(static_cast<int>(pos));
  }
  std::vector<int> order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) order[i] = static_cast<int>(i);
  return VerifyResult{make_certificate(order, std::move(steps)), 0};
}

SearchResult find_order(const MonomialIdeal& I, SearchStrategy strategy, u64 node_budget) {
  const auto& gens = I.gens();
  std::size_t t = gens.size();
  if (t > 63) throw std::invalid_argument("too many generators for order search");

  if (strategy == SearchStrategy::kAuto)
    strategy = t <= 9 ? SearchStrategy::kExhaustive : SearchStrategy::kBacktracking;
  if (strategy == SearchStrategy::kExhaustive && t > 9)
    throw std::invalid_argument("exhaustive strategy is limited to 9 generators");

  if (t <= 1) {
    std::vector<int> order;
    if (t == 1) order.push_back(0);
    return SearchResult{SearchStatus::kFound, make_certificate(order, {}), 0};
  }

  SearchContext ctx;
  ctx.gens = &gens;
  ctx.by_degree.resize(t);
  for (std::size_t i = 0; i < t; ++i) ctx.by_degree[i] = static_cast<int>(i);
  std::stable_sort(ctx.by_degree.begin(), ctx.by_degree.end(), [&](int a, int b) {
    return canonical_compare(gens[a], gens[b]) < 0;
  });
  ctx.budget = strategy == SearchStrategy::kExhaustive ? ~u64{0} : node_budget;

  if (dfs(ctx, 0))
    return SearchResult{SearchStatus::kFound,
                        make_certificate(ctx.order_idx, ctx.step_vars), ctx.nodes};
  if (ctx.budget_hit) return SearchResult{SearchStatus::kExhausted, std::nullopt, ctx.nodes};
  return SearchResult{SearchStatus::kNone, std::nullopt, ctx.nodes};
}

int q_of(const MonomialIdeal& I, u64 node_budget) {
  SearchResult r = find_order(I, SearchStrategy::kAuto, node_budget);
  if (r.status == SearchStatus::kExhausted)
    throw budget_exhausted("order search budget exhausted");
  if (r.status == SearchStatus::kNone)
    throw no_linear_quotients("ideal has no linear quotients");
  return r.cert->q;
}

LinearResolutionReport has_linear_resolution(const MonomialIdeal& I, u64 node_budget) {
  LinearResolutionReport report;
  const auto& gens = I.gens();
  if (I.is_zero() || I.is_unit()) {
    report.linear = false;
    return report;
  }
  u64 d = gens.front().degree();
  for (const Monomial& g : gens)
    if (g.degree() != d) {
      report.not_equigenerated = true;
      return report;
    }

  bool squarefree_deg2 = d == 2;
  for (const Monomial& g : gens) squarefree_deg2 = squarefree_deg2 && g.is_squarefree();

  SearchResult r = find_order(I, SearchStrategy::kAuto, node_budget);
  if (r.status == SearchStatus::kFound || (r.status == SearchStatus::kNone && squarefree_deg2)) {
    report.linear = r.status == SearchStatus::kFound;
    report.method = ResolutionMethod::kLinearQuotients;
    report.cert = r.cert;
    if (squarefree_deg2) {
      // Cross-oracle: a squarefree degree-2 ideal is an edge ideal, and its
      // linear resolution is equivalent to chordality of the complement.
      std::size_t n = I.vars();
      std::vector<std::pair<int, int>> edges;
      for (const Monomial& g : gens) {
        auto s = g.support();
        edges.emplace_back(s[0], s[1]);
      }
      bool froberg = froberg_linear_resolution(make_graph(static_cast<int>(n), edges));
      if (froberg != report.linear)
        throw check_failed("order search and complement-chordality oracle disagree on " +
                           I.str());
    }
    return report;
  }

  // Exhausted search, or a definite "none" on a non-squarefree ideal (where the
  // absence of linear quotients does not decide the resolution): ask the
  // homological oracle.
  BettiTable table = betti_oracle(I, 2);
  report.method = ResolutionMethod::kBettiOracle;
  report.linear = true;
  for (const auto& [ij, value] : table.entries) {
    auto [i, j] = ij;
    if (i >= 1 && value != 0 && j != i + static_cast<int>(d) - 1) report.linear = false;
  }
  return report;
}

}  // namespace loopideal
