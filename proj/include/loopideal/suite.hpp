#ifndef LOOPIDEAL_SUITE_HPP
#define LOOPIDEAL_SUITE_HPP

#include <string>
#include <vector>

#include "loopideal/graphs.hpp"

namespace loopideal {

/// Canonical fixture families used across the reference suite and the tests.
namespace fixtures {

FamilyH h_2_11();            // K2, one leaf per core vertex
FamilyH h_2_21();            // K2, leaf blocks of sizes 2 and 1
FamilyH h_4_1312();          // K4 with stars of sizes 1,3,1,2 (11 vertices)
FamilyKPrime k_2_11_loop1(); // h_2_11 with a loop on core vertex 1
FamilyKPrime h_2_11_loop3(); // h_2_11 with a loop on leaf 3 (outside the core)
FamilyKPrime k_3_332_loops();// K3 with stars 3,3,2 and loops at 3,5,7,9

}  // namespace fixtures

struct AnchorResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

/// Recomputes every pinned reference value (generator orders, quotient chains,
/// cover ideals, invariants, linear-type verdicts) and reports one result per
/// anchor. Naming an anchor in mutate_anchor corrupts its expected value, for
/// exercising the failure path.
std::vector<AnchorResult> run_reference_suite(const std::string& mutate_anchor = "");

}  // namespace loopideal

#endif
