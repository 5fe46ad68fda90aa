#include "loopideal/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "loopideal/errors.hpp"

namespace loopideal {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 1 || v > n)
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " outside 1.." + std::to_string(n));
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool LoopGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool LoopGraph::has_loop(int v) const {
  return std::binary_search(loops.begin(), loops.end(), v);
}

LoopGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                     std::vector<int> loops) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [i, j] : edges) {
    check_vertex(i, n, "edge endpoint");
    check_vertex(j, n, "edge endpoint");
    if (i == j)
      throw std::invalid_argument("self-pair {" + std::to_string(i) +
                                  "," + std::to_string(i) + "} in edge list; use loops");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  for (int v : loops) check_vertex(v, n, "loop vertex");
  return LoopGraph{n, std::move(edges), sorted_unique(std::move(loops))};
}

LoopGraph build_complete(int m) {
  if (m < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.emplace_back(i, j);
  return make_graph(m, std::move(edges));
}

LoopGraph build_star(int center, const std::vector<int>& leaves) {
  if (leaves.empty()) throw std::invalid_argument("star needs at least one leaf");
  int n = center;
  for (int l : leaves) n = std::max(n, l);
  std::vector<std::pair<int, int>> edges;
  for (int l : leaves) {
    if (l == center) throw std::invalid_argument("star leaf equals center");
    edges.emplace_back(std::min(center, l), std::max(center, l));
  }
  return make_graph(n, std::move(edges));
}

LoopGraph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return make_graph(n, std::move(edges));
}

LoopGraph build_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

LoopGraph with_loops(const LoopGraph& g, const std::vector<int>& vertices) {
  std::vector<int> loops = g.loops;
  loops.insert(loops.end(), vertices.begin(), vertices.end());
  return make_graph(g.n, g.edges, std::move(loops));
}

FamilyH FamilyH::make(int m, std::vector<int> star_sizes) {
  if (m < 1) throw std::invalid_argument("core size must be positive");
  if (static_cast<int>(star_sizes.size()) != m)
    throw std::invalid_argument("expected " + std::to_string(m) + " star sizes, got " +
                                std::to_string(star_sizes.size()));
  for (int s : star_sizes)
    if (s < 0) throw std::invalid_argument("negative star size");
  if (m == 1 && star_sizes[0] == 0)
    throw std::invalid_argument("a one-vertex core needs a nonempty star");
  return FamilyH{m, std::move(star_sizes)};
}

int FamilyH::vertex_count() const {
  return core + std::accumulate(star_sizes.begin(), star_sizes.end(), 0);
}

int FamilyH::star_leaf_first(int j) const {
  int offset = core;
  for (int k = 0; k < j - 1; ++k) offset += star_sizes[k];
  return offset + 1;
}

int FamilyH::star_leaf_last(int j) const {
  return star_leaf_first(j) + star_sizes[j - 1] - 1;
}

std::vector<int> FamilyH::star_leaves(int j) const {
  std::vector<int> out;
  for (int v = star_leaf_first(j); v <= star_leaf_last(j); ++v) out.push_back(v);
  return out;
}

std::vector<int> FamilyH::core_vertices() const {
  std::vector<int> out(core);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

int FamilyH::max_star() const {
  return *std::max_element(star_sizes.begin(), star_sizes.end());
}

LoopGraph FamilyH::graph() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= core; ++i)
    for (int j = i + 1; j <= core; ++j) edges.emplace_back(i, j);
  for (int j = 1; j <= core; ++j)
    for (int leaf : star_leaves(j)) edges.emplace_back(j, leaf);
  return make_graph(vertex_count(), std::move(edges));
}

std::string FamilyH::dsl() const {
  std::ostringstream out;
  out << "H(m=" << core << "; stars=";
  for (int j = 0; j < core; ++j) {
    if (j) out << ',';
    out << star_sizes[j];
  }
  out << ')';
  return out.str();
}

FamilyKPrime FamilyKPrime::make(FamilyH base, std::vector<int> loops) {
  int n = base.vertex_count();
  loops = sorted_unique(std::move(loops));
  if (loops.empty()) throw std::invalid_argument("loop family needs at least one loop");
  for (int v : loops) check_vertex(v, n, "loop vertex");
  return FamilyKPrime{std::move(base), std::move(loops)};
}

FamilyKPrime FamilyKPrime::core_loops_only(FamilyH base, std::vector<int> loops) {
  for (int v : loops)
    if (v > base.core)
      throw std::invalid_argument("loop at vertex " + std::to_string(v) +
                                  " lies outside the complete core");
  return make(std::move(base), std::move(loops));
}

bool FamilyKPrime::loops_within_core() const {
  return loops.empty() || loops.back() <= base.core;
}

int FamilyKPrime::max_looped_star() const {
  if (!loops_within_core())
    throw std::invalid_argument("looped-star maximum needs loops within the core");
  int best = 0;
  for (int v : loops) best = std::max(best, base.star_sizes[v - 1]);
  return best;
}

LoopGraph FamilyKPrime::graph() const { return with_loops(base.graph(), loops); }

std::string FamilyKPrime::dsl() const {
  std::ostringstream out;
  out << base.dsl() << " + loops(";
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (i) out << ',';
    out << loops[i];
  }
  out << ')';
  return out.str();
}

namespace {

Monomial edge_gen(std::size_t n, int i, int j) {
  return Monomial::variable(n, i).times(Monomial::variable(n, j));
}

Monomial loop_gen(std::size_t n, int v) {
  Monomial x = Monomial::variable(n, v);
  return x.times(x);
}

EdgeIdealResult family_edge_ideal(const FamilyH& h, const std::vector<int>& loops) {
  std::size_t n = h.vertex_count();
  std::vector<Monomial> ordered;
  for (int leaf : h.star_leaves(1)) ordered.push_back(edge_gen(n, 1, leaf));
  for (int j = 2; j <= h.core; ++j) {
    for (int i = j - 1; i >= 1; --i) ordered.push_back(edge_gen(n, i, j));
    for (int leaf : h.star_leaves(j)) ordered.push_back(edge_gen(n, j, leaf));
  }
  for (int v : loops) ordered.push_back(loop_gen(n, v));
  return EdgeIdealResult{minimalize(n, ordered), ordered};
}

}  // namespace

EdgeIdealResult edge_ideal(const LoopGraph& g) {
  std::size_t n = g.n;
  std::vector<Monomial> gens;
  for (auto [i, j] : g.edges) gens.push_back(edge_gen(n, i, j));
  for (int v : g.loops) gens.push_back(loop_gen(n, v));
  MonomialIdeal ideal = minimalize(n, gens);
  return EdgeIdealResult{ideal, ideal.gens()};
}

EdgeIdealResult edge_ideal(const FamilyH& h) { return family_edge_ideal(h, {}); }

EdgeIdealResult edge_ideal(const FamilyKPrime& k) {
  return family_edge_ideal(k.base, k.loops);
}

LoopGraph complement(const LoopGraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("complement is defined for simple graphs");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return make_graph(g.n, std::move(edges));
}

bool is_chordal(const LoopGraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("chordality is defined for simple graphs");
  int n = g.n;
  if (n == 0) return true;

  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  // Lexicographic BFS: repeatedly visit the unvisited vertex with the
  // lexicographically largest label, appending the visit stamp to the labels
  // of its unvisited neighbours.
  std::vector<std::vector<int>> label(n + 1);
  std::vector<bool> visited(n + 1, false);
  std::vector<int> visit_order;  // vertices in visit sequence
  std::vector<int> position(n + 1, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (visited[v]) continue;
      if (best == -1 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    position[best] = step;
    visit_order.push_back(best);
    for (int w : adj[best])
      if (!visited[w]) label[w].push_back(n - step);
  }

  // The reverse of the visit order is a perfect elimination ordering exactly
  // when g is chordal: each vertex's earlier-visited neighbourhood must be a
  // clique.
  for (int v = 1; v <= n; ++v) {
    std::vector<int> earlier;
    for (int w : adj[v])
      if (position[w] < position[v]) earlier.push_back(w);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!g.has_edge(earlier[a], earlier[b])) return false;
  }
  return true;
}

bool froberg_linear_resolution(const LoopGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("the linear-resolution criterion needs a simple graph");
  return is_chordal(complement(g));
}

LoopGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad graph file: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    std::vector<int> loops;
    if (j.contains("loops"))
      for (const auto& l : j.at("loops")) loops.push_back(l.get<int>());
    return make_graph(n, std::move(edges), std::move(loops));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad graph file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("bad graph file: ") + e.what());
  }
}

std::string graph_to_json(const LoopGraph& g) {
  std::ostringstream out;
  out << "{ \"n\": " << g.n << ", \"edges\": [";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out << ", ";
    out << '[' << g.edges[i].first << ", " << g.edges[i].second << ']';
  }
  out << "], \"loops\": [";
  for (std::size_t i = 0; i < g.loops.size(); ++i) {
    if (i) out << ", ";
    out << g.loops[i];
  }
  out << "] }";
  return out.str();
}

namespace {

std::string strip_ws(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(strip_ws(s), &used);
    if (used != strip_ws(s).size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected integer for " + std::string(what) + ", got '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    out.push_back(parse_int(s.substr(pos, comma == std::string::npos ? comma : comma - pos), what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// "name(body)" -> body; checks the trailing parenthesis
std::string call_body(const std::string& term, std::size_t open) {
  if (term.back() != ')') throw parse_error("missing ')' in '" + term + "'");
  return term.substr(open + 1, term.size() - open - 2);
}

}  // namespace

FamilyInput parse_family(const std::string& dsl) {
  // split on top-level '+': first term is the graph, the rest must be loops(...)
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char c : dsl) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(strip_ws(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(strip_ws(cur));
  if (terms.front().empty()) throw parse_error("empty family expression");

  std::vector<int> loops;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (t.rfind("loops(", 0) != 0)
      throw parse_error("expected loops(...) after '+', got '" + t + "'");
    for (int v : parse_int_list(call_body(t, 5), "loop vertex")) loops.push_back(v);
  }

  const std::string& head = terms.front();
  FamilyInput out;

  if (head.rfind("H(", 0) == 0 || head.rfind("h(", 0) == 0) {
    std::string body = call_body(head, 1);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw parse_error("H form needs 'm=...; stars=...'");
    std::string m_part = strip_ws(body.substr(0, semi));
    std::string s_part = strip_ws(body.substr(semi + 1));
    if (m_part.rfind("m=", 0) != 0 || s_part.rfind("stars=", 0) != 0)
      throw parse_error("H form needs 'm=...; stars=...'");
    int m = parse_int(m_part.substr(2), "m");
    std::vector<int> sizes = parse_int_list(s_part.substr(6), "star size");
    FamilyH h = FamilyH::make(m, std::move(sizes));
    if (loops.empty()) {
      out.graph = h.graph();
      out.as_h = h;
      out.normalized = h.dsl();
    } else {
      FamilyKPrime k = FamilyKPrime::make(h, loops);
      out.graph = k.graph();
      out.as_k = k;
      out.normalized = k.dsl();
    }
    return out;
  }

  LoopGraph g;
  std::string normalized_head;
  if ((head[0] == 'K' || head[0] == 'k') && head.find('(') == std::string::npos) {
    int m = parse_int(head.substr(1), "complete-graph size");
    g = build_complete(m);
    normalized_head = "K" + std::to_string(m);
  } else if (head.rfind("star(", 0) == 0) {
    std::string body = call_body(head, 4);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw parse_error("star form needs 'c=...; leaves=...'");
    std::string c_part = strip_ws(body.substr(0, semi));
    std::string l_part = strip_ws(body.substr(semi + 1));
    if (c_part.rfind("c=", 0) != 0 || l_part.rfind("leaves=", 0) != 0)
      throw parse_error("star form needs 'c=...; leaves=...'");
    int c = parse_int(c_part.substr(2), "center");
    std::vector<int> leaves = parse_int_list(l_part.substr(7), "leaf");
    g = build_star(c, leaves);
    std::ostringstream norm;
    norm << "star(c=" << c << "; leaves=";
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (i) norm << ',';
      norm << leaves[i];
    }
    norm << ')';
    normalized_head = norm.str();
  } else if (head.rfind("cycle(", 0) == 0) {
    int n = parse_int(call_body(head, 5), "cycle length");
    g = build_cycle(n);
    normalized_head = "cycle(" + std::to_string(n) + ")";
  } else if (head.rfind("path(", 0) == 0) {
    int n = parse_int(call_body(head, 4), "path length");
    g = build_path(n);
    normalized_head = "path(" + std::to_string(n) + ")";
  } else {
    throw parse_error("unrecognized family expression '" + head + "'");
  }

  if (!loops.empty()) {
    g = with_loops(g, loops);
    std::ostringstream norm;
    norm << normalized_head << " + loops(";
    std::vector<int> sl = g.loops;
    for (std::size_t i = 0; i < sl.size(); ++i) {
      if (i) norm << ',';
      norm << sl[i];
    }
    norm << ')';
    normalized_head = norm.str();
  }
  out.graph = g;
  out.normalized = normalized_head;
  return out;
}

}  // namespace loopideal
