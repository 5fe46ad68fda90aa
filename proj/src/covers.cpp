#include "loopideal/covers.hpp"

#include <algorithm>
#include <set>

#include "loopideal/errors.hpp"

namespace loopideal {

namespace {

bool covers_all(const LoopGraph& g, const std::vector<bool>& in) {
  for (auto [i, j] : g.edges)
    if (!in[i] && !in[j]) return false;
  for (int v : g.loops)
    if (!in[v]) return false;
  return true;
}

void enumerate_covers(const LoopGraph& g, std::vector<bool>& in,
                      std::size_t edge_idx, std::set<VertexCover>& out) {
  while (edge_idx < g.edges.size()) {
    auto [i, j] = g.edges[edge_idx];
    if (in[i] || in[j]) {
      ++edge_idx;
      continue;
    }
    for (int v : {i, j}) {
      in[v] = true;
      enumerate_covers(g, in, edge_idx + 1, out);
      in[v] = false;
    }
    return;
  }
  VertexCover c;
  for (int v = 1; v <= g.n; ++v)
    if (in[v]) c.push_back(v);
  out.insert(std::move(c));
}

Monomial cover_product(std::size_t n, const VertexCover& c) {
  std::vector<u32> e(n, 0);
  for (int v : c) e[v - 1] = 1;
  return Monomial::of(std::move(e));
}

}  // namespace

std::vector<VertexCover> minimal_vertex_covers(const LoopGraph& g) {
  if (g.n > 20)
    throw std::invalid_argument("cover enumeration is capped at 20 vertices, got " +
                                std::to_string(g.n));
  std::vector<bool> in(g.n + 1, false);
  for (int v : g.loops) in[v] = true;  // a loop is covered only by its vertex
  std::set<VertexCover> raw;
  enumerate_covers(g, in, 0, raw);

  std::vector<VertexCover> minimal;
  for (const VertexCover& c : raw) {
    std::vector<bool> mark(g.n + 1, false);
    for (int v : c) mark[v] = true;
    bool is_minimal = true;
    for (int v : c) {
      if (g.has_loop(v)) continue;
      mark[v] = false;
      if (covers_all(g, mark)) is_minimal = false;
      mark[v] = true;
      if (!is_minimal) break;
    }
    if (is_minimal) minimal.push_back(c);
  }
  return minimal;
}

int h_of(const MonomialIdeal& I) {
  if (I.is_unit())
    throw std::invalid_argument("the unit ideal has no vertex cover");
  if (I.is_zero()) return 0;

  const auto& gens = I.gens();
  std::vector<std::vector<int>> supports;
  supports.reserve(gens.size());
  for (const Monomial& g : gens) supports.push_back(g.support());

  int best = static_cast<int>(I.vars());
  std::vector<bool> chosen(I.vars() + 1, false);
  // branch on the variables of the first generator not yet hit
  auto dfs = [&](auto&& self, int size) -> void {
    if (size >= best) return;
    const std::vector<int>* unhit = nullptr;
    for (const auto& s : supports) {
      bool hit = false;
      for (int v : s)
        if (chosen[v]) {
          hit = true;
          break;
        }
      if (!hit) {
        unhit = &s;
        break;
      }
    }
    if (!unhit) {
      best = size;
      return;
    }
    for (int v : *unhit) {
      chosen[v] = true;
      self(self, size + 1);
      chosen[v] = false;
    }
  };
  dfs(dfs, 0);
  return best;
}

CoverIdealReport cover_ideal(const LoopGraph& g) {
  std::size_t n = g.n;
  CoverIdealReport report;
  report.covers = minimal_vertex_covers(g);

  std::vector<Monomial> products;
  products.reserve(report.covers.size());
  for (const VertexCover& c : report.covers) products.push_back(cover_product(n, c));
  report.ideal = minimalize(n, std::move(products));

  // independent route: intersect the edge primes and the loop principals
  MonomialIdeal by_intersection = MonomialIdeal::unit(n);
  for (auto [i, j] : g.edges)
    by_intersection = intersect(by_intersection, ideal_of_variables(n, {i, j}));
  for (int v : g.loops) {
    MonomialIdeal principal = minimalize(n, {Monomial::variable(n, v)});
    by_intersection = intersect(by_intersection, principal);
  }
  if (!(by_intersection == report.ideal))
    throw check_failed("cover-ideal routes disagree: products give " + report.ideal.str() +
                       ", intersection gives " + by_intersection.str());

  report.alpha0 = 0;
  if (!report.covers.empty()) {
    std::size_t smallest = report.covers.front().size();
    for (const VertexCover& c : report.covers) smallest = std::min(smallest, c.size());
    report.alpha0 = static_cast<int>(smallest);
  }
  report.h = g.edges.empty() && g.loops.empty() ? 0 : h_of(edge_ideal(g).ideal);
  if (report.alpha0 != report.h)
    throw check_failed("covering number and cover number of the edge ideal differ");
  return report;
}

bool decomposition_check(const LoopGraph& g) {
  std::size_t n = g.n;
  MonomialIdeal primes_meet = MonomialIdeal::unit(n);
  for (const VertexCover& c : minimal_vertex_covers(g)) {
    if (c.empty()) {
      primes_meet = MonomialIdeal::zero(n);  // edgeless graph: the zero prime
      break;
    }
    primes_meet = intersect(primes_meet, ideal_of_variables(n, c));
  }
  MonomialIdeal I = edge_ideal(g).ideal;
  // with loops the intersection of primes can only see the radical
  return primes_meet == (g.loops.empty() ? I : radical(I));
}

std::vector<VertexCover> family_min_covers(const FamilyH& h) {
  std::vector<VertexCover> covers;
  bool all_stars = true;
  for (int s : h.star_sizes) all_stars = all_stars && s > 0;
  if (all_stars) covers.push_back(h.core_vertices());
  for (int j = 1; j <= h.core; ++j) {
    VertexCover c;
    for (int v = 1; v <= h.core; ++v)
      if (v != j) c.push_back(v);
    for (int leaf : h.star_leaves(j)) c.push_back(leaf);
    covers.push_back(std::move(c));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

namespace {

Monomial product_of(std::size_t n, const std::vector<int>& vertices) {
  std::vector<u32> e(n, 0);
  for (int v : vertices) e[v - 1] = 1;
  return Monomial::of(std::move(e));
}

MonomialIdeal complete_closed_form(int m) {
  if (m < 2) throw unsupported_case("complete case needs m >= 2");
  std::size_t n = m;
  std::vector<Monomial> gens;
  for (int skip = 1; skip <= m; ++skip) {
    std::vector<int> c;
    for (int v = 1; v <= m; ++v)
      if (v != skip) c.push_back(v);
    gens.push_back(product_of(n, c));
  }
  return minimalize(n, std::move(gens));
}

MonomialIdeal star_closed_form(const StarCase& c) {
  if (c.leaves.empty()) throw unsupported_case("star case needs leaves");
  if (c.center < 1 || c.center > c.n) throw unsupported_case("star center outside 1..n");
  for (int l : c.leaves)
    if (l < 1 || l > c.n || l == c.center) throw unsupported_case("bad star leaf label");
  std::size_t n = c.n;
  std::vector<int> looped_leaves;
  bool center_loop = false;
  for (int v : c.loops) {
    if (v == c.center)
      center_loop = true;
    else if (std::find(c.leaves.begin(), c.leaves.end(), v) != c.leaves.end())
      looped_leaves.push_back(v);
    else
      throw unsupported_case("loop off the star");
  }
  if (center_loop) {
    // the center covers every edge, so the forced vertices are the only cover
    std::vector<int> forced = looped_leaves;
    forced.push_back(c.center);
    return minimalize(n, {product_of(n, forced)});
  }
  std::vector<int> with_center = looped_leaves;
  with_center.push_back(c.center);
  return minimalize(n, {product_of(n, c.leaves), product_of(n, with_center)});
}

MonomialIdeal h_one_star_closed_form(const FamilyH& h) {
  int star_at = 0;
  for (int j = 1; j <= h.core; ++j) {
    if (h.star_sizes[j - 1] > 0) {
      if (star_at != 0) throw unsupported_case("one-star case has several stars");
      star_at = j;
    }
  }
  if (star_at == 0 || h.core < 2) throw unsupported_case("one-star case needs m >= 2 and a star");
  std::size_t n = h.vertex_count();
  std::vector<Monomial> gens;
  for (int skip = 1; skip <= h.core; ++skip) {
    std::vector<int> c;
    for (int v = 1; v <= h.core; ++v)
      if (v != skip) c.push_back(v);
    if (skip == star_at)
      for (int leaf : h.star_leaves(star_at)) c.push_back(leaf);
    gens.push_back(product_of(n, c));
  }
  return minimalize(n, std::move(gens));
}

MonomialIdeal h_all_stars_closed_form(const FamilyH& h) {
  for (int s : h.star_sizes)
    if (s == 0) throw unsupported_case("all-stars case needs every star nonempty");
  if (h.core < 2) throw unsupported_case("all-stars case needs m >= 2");
  std::size_t n = h.vertex_count();
  std::vector<Monomial> gens;
  gens.push_back(product_of(n, h.core_vertices()));
  for (int j = 1; j <= h.core; ++j) {
    std::vector<int> c;
    for (int v = 1; v <= h.core; ++v)
      if (v != j) c.push_back(v);
    for (int leaf : h.star_leaves(j)) c.push_back(leaf);
    gens.push_back(product_of(n, c));
  }
  return minimalize(n, std::move(gens));
}

MonomialIdeal complete_with_loops_closed_form(const CompleteWithLoopsCase& c) {
  if (c.m < 2) throw unsupported_case("looped complete case needs m >= 2");
  std::size_t n = c.m;
  std::vector<bool> looped(c.m + 1, false);
  for (int v : c.loops) {
    if (v < 1 || v > c.m) throw unsupported_case("loop outside the complete graph");
    looped[v] = true;
  }
  bool all = true;
  for (int v = 1; v <= c.m; ++v) all = all && looped[v];
  if (all) {
    std::vector<int> everything;
    for (int v = 1; v <= c.m; ++v) everything.push_back(v);
    return minimalize(n, {product_of(n, everything)});
  }
  std::vector<Monomial> gens;
  for (int skip = 1; skip <= c.m; ++skip) {
    if (looped[skip]) continue;  // dropping a looped vertex never yields a cover
    std::vector<int> cov;
    for (int v = 1; v <= c.m; ++v)
      if (v != skip) cov.push_back(v);
    gens.push_back(product_of(n, cov));
  }
  return minimalize(n, std::move(gens));
}

MonomialIdeal kprime_closed_form(const FamilyKPrime& k) {
  // The minimal primes are those of the loopless family; each generator picks
  // up the loop variables missing from its cover.
  std::size_t n = k.base.vertex_count();
  if (static_cast<int>(k.loops.size()) == k.base.vertex_count()) {
    std::vector<int> everything;
    for (int v = 1; v <= k.base.vertex_count(); ++v) everything.push_back(v);
    return minimalize(n, {product_of(n, everything)});
  }
  std::vector<Monomial> gens;
  for (const VertexCover& c : family_min_covers(k.base)) {
    std::vector<int> with_missing_loops = c;
    for (int v : k.loops)
      if (!std::binary_search(c.begin(), c.end(), v)) with_missing_loops.push_back(v);
    gens.push_back(product_of(n, with_missing_loops));
  }
  return minimalize(n, std::move(gens));
}

MonomialIdeal h_outer_loops_closed_form(const FamilyH& h) {
  if (h.core < 2) throw unsupported_case("outer-loops case needs m >= 2");
  if (h.vertex_count() == h.core) throw unsupported_case("outer-loops case needs leaves");
  std::size_t n = h.vertex_count();
  std::vector<Monomial> gens;
  for (int skip = 1; skip <= h.core; ++skip) {
    std::vector<int> c;
    for (int v = 1; v <= h.core; ++v)
      if (v != skip) c.push_back(v);
    for (int v = h.core + 1; v <= h.vertex_count(); ++v) c.push_back(v);
    gens.push_back(product_of(n, c));
  }
  return minimalize(n, std::move(gens));
}

}  // namespace

MonomialIdeal closed_form_cover_ideal(const ClosedFormDescriptor& descriptor) {
  return std::visit(
      [](const auto& c) -> MonomialIdeal {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CompleteCase>) {
          return complete_closed_form(c.m);
        } else if constexpr (std::is_same_v<T, StarCase>) {
          return star_closed_form(c);
        } else if constexpr (std::is_same_v<T, HOneStarCase>) {
          return h_one_star_closed_form(c.family);
        } else if constexpr (std::is_same_v<T, HAllStarsCase>) {
          return h_all_stars_closed_form(c.family);
        } else if constexpr (std::is_same_v<T, CompleteWithLoopsCase>) {
          return complete_with_loops_closed_form(c);
        } else if constexpr (std::is_same_v<T, KPrimeCase>) {
          return kprime_closed_form(c.family);
        } else {
          return h_outer_loops_closed_form(c.family);
        }
      },
      descriptor);
}

}  // namespace loopideal
