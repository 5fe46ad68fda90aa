#ifndef LOOPIDEAL_GRAPHS_HPP
#define LOOPIDEAL_GRAPHS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopideal/monomial.hpp"

namespace loopideal {

/// Finite graph on vertices 1..n with optional loops. Edges are stored with
/// i < j, sorted; loops as a sorted vertex list.
struct LoopGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;

  bool has_edge(int i, int j) const;
  bool has_loop(int v) const;
  bool is_simple() const { return loops.empty(); }
};

/// Validates labels, normalizes edge orientation and ordering, rejects
/// duplicate edges and self-pairs in the edge list.
LoopGraph make_graph(int n, std::vector<std::pair<int, int>> edges,
                     std::vector<int> loops = {});

LoopGraph build_complete(int m);
/// Star with the given center and leaf labels; ambient n is the largest label.
LoopGraph build_star(int center, const std::vector<int>& leaves);
LoopGraph build_cycle(int n);
LoopGraph build_path(int n);
LoopGraph with_loops(const LoopGraph& g, const std::vector<int>& vertices);

/// Complete graph on vertices 1..m with a star hung on each core vertex.
/// Star j owns the leaf block m + i_1 + ... + i_{j-1} + 1 .. m + i_1 + ... + i_j.
struct FamilyH {
  int core = 0;                 // m
  std::vector<int> star_sizes;  // leaf counts i_1..i_m, each >= 0

  static FamilyH make(int m, std::vector<int> star_sizes);

  int vertex_count() const;
  int star_leaf_first(int j) const;  // 1-based star index; first > last when empty
  int star_leaf_last(int j) const;
  std::vector<int> star_leaves(int j) const;
  std::vector<int> core_vertices() const;
  int max_star() const;
  LoopGraph graph() const;
  std::string dsl() const;
};

/// FamilyH plus loops on an arbitrary vertex subset. The core-restricted
/// factory covers the subclass whose loops all sit on the complete part.
struct FamilyKPrime {
  FamilyH base;
  std::vector<int> loops;  // sorted, within 1..n

  static FamilyKPrime make(FamilyH base, std::vector<int> loops);
  static FamilyKPrime core_loops_only(FamilyH base, std::vector<int> loops);

  bool loops_within_core() const;
  int max_looped_star() const;  // max i_j over looped core vertices; loops must be in core
  LoopGraph graph() const;
  std::string dsl() const;
};

struct EdgeIdealResult {
  MonomialIdeal ideal;
  std::vector<Monomial> ordered_gens;
};

/// Edge ideal (X_i X_j per edge, X_i^2 per loop). For a plain graph the
/// ordered sequence is the canonical sort; the family overloads list star-1
/// edges, then for j = 2..m the core edges X_{j-1}X_j .. X_1X_j followed by
/// star-j edges, with loop generators appended last in ascending vertex.
EdgeIdealResult edge_ideal(const LoopGraph& g);
EdgeIdealResult edge_ideal(const FamilyH& h);
EdgeIdealResult edge_ideal(const FamilyKPrime& k);

/// Simple-graph complement over the same vertex set. Loops are rejected.
LoopGraph complement(const LoopGraph& g);

/// Lexicographic BFS followed by the reverse-order simpliciality check.
/// Loops are rejected.
bool is_chordal(const LoopGraph& g);

/// The edge ideal of a simple graph has a linear resolution exactly when the
/// complement is chordal; this evaluates that criterion.
bool froberg_linear_resolution(const LoopGraph& g);

LoopGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const LoopGraph& g);

/// Parsed CLI input: the graph plus family structure when the expression was
/// an H/K form ("H(m=2; stars=1,1) + loops(3)", "K5",
/// "star(c=2; leaves=6,7,8)", "cycle(5)").
struct FamilyInput {
  LoopGraph graph;
  std::optional<FamilyH> as_h;       // loopless H expression
  std::optional<FamilyKPrime> as_k;  // H expression with loops
  std::string normalized;
};

FamilyInput parse_family(const std::string& dsl);

}  // namespace loopideal

#endif
