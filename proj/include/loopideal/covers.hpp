#ifndef LOOPIDEAL_COVERS_HPP
#define LOOPIDEAL_COVERS_HPP

#include <variant>
#include <vector>

#include "loopideal/graphs.hpp"
#include "loopideal/monomial.hpp"

namespace loopideal {

using VertexCover = std::vector<int>;  // sorted vertex indices

/// All minimal vertex covers: every edge is incident to the cover, every loop
/// vertex belongs to it, and no proper subset still covers. Complete
/// enumeration by branching on uncovered edges; capped at 20 vertices.
std::vector<VertexCover> minimal_vertex_covers(const LoopGraph& g);

/// Minimal size of a variable set meeting every generator (exact search).
/// Zero ideal gives 0; the unit ideal is rejected.
int h_of(const MonomialIdeal& I);

struct CoverIdealReport {
  MonomialIdeal ideal;               // generated by the cover products
  std::vector<VertexCover> covers;   // minimal covers, sorted
  int alpha0 = 0;                    // vertex covering number
  int h = 0;                         // cover number of the edge ideal
};

/// Ideal of vertex covers, computed two ways and cross-checked: products over
/// the minimal covers, and the intersection of (X_i, X_j) per edge with (X_k)
/// per loop. Any disagreement throws check_failed.
CoverIdealReport cover_ideal(const LoopGraph& g);

/// True when the intersection of the minimal primes equals the edge ideal
/// (loopless) resp. its radical (with loops).
bool decomposition_check(const LoopGraph& g);

// Closed-form cover-ideal cases, parameterized by vertex sets.
struct CompleteCase { int m = 0; };
struct StarCase {               // star with given labels, optional loops
  int n = 0;
  int center = 0;
  std::vector<int> leaves;
  std::vector<int> loops;
};
struct HOneStarCase { FamilyH family; };    // exactly one nonempty star
struct HAllStarsCase { FamilyH family; };   // every star nonempty
struct CompleteWithLoopsCase { int m = 0; std::vector<int> loops; };
struct KPrimeCase { FamilyKPrime family; }; // loops anywhere on the family
struct HOuterLoopsCase { FamilyH family; }; // loops on every non-core vertex

using ClosedFormDescriptor =
    std::variant<CompleteCase, StarCase, HOneStarCase, HAllStarsCase,
                 CompleteWithLoopsCase, KPrimeCase, HOuterLoopsCase>;

/// Emits the closed-form generator set for the case; unsupported parameter
/// combinations throw unsupported_case and callers fall back to cover_ideal.
MonomialIdeal closed_form_cover_ideal(const ClosedFormDescriptor& descriptor);

/// Minimal covers of a family graph without enumerating: the core minus each
/// vertex joined with that vertex's leaves, plus the full core when every
/// star is nonempty.
std::vector<VertexCover> family_min_covers(const FamilyH& h);

}  // namespace loopideal

#endif
