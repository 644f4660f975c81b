#pragma once

#include <string>

#include "triodyn/pattern.hpp"

namespace fixtures {

inline triodyn::Pattern primitive3() { return triodyn::construct_primitive3(); }
inline triodyn::Pattern lambda29() { return triodyn::construct_unimodal_slow(2, 9, 0); }
inline triodyn::Pattern psi25() { return triodyn::construct_unimodal_fast(2, 5, 0); }

// Rank-1 and rank-2 point on every branch, all arrows black, blocks of two.
inline triodyn::Pattern all_black6() {
  return triodyn::parse(
      "period: 6\n"
      "branch0: p1 p2\n"
      "branch1: q1 q2\n"
      "branch2: r1 r2\n"
      "map: p1->q2 p2->q1\n"
      "map: q1->r2 q2->r1\n"
      "map: r1->p2 r2->p1\n");
}

// One point on each of b_0 and b_1, swapped.
inline triodyn::Pattern primitive2() {
  return triodyn::parse("period: 2\nbranch0: p1\nbranch1: q1\nbranch2:\nmap: p1->q1 q1->p1\n");
}

}  // namespace fixtures
