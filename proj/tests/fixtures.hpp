#pragma once

// Pinned rotation-system fixtures shared by the test suite.  Rotations are
// counterclockwise, outer faces clockwise, as everywhere in the library.

#include "atcert/plane_graph.hpp"

namespace fixtures {

// Single triangle.
inline atcert::PlaneGraph k3() {
  return {3, {{1, 2}, {2, 0}, {0, 1}}, {0, 2, 1}};
}

// Outer triangle 0,1,2 plus center 3.
inline atcert::PlaneGraph k4() {
  return {4, {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {1, 0, 2}}, {0, 1, 2}};
}

// Outer triangle 0,1,2, inner triangle 3,4,5 (0-3/0-4, 1-4/1-5, 2-5/2-3).
inline atcert::PlaneGraph octahedron() {
  return {6,
          {{2, 3, 4, 1},
           {0, 4, 5, 2},
           {1, 5, 3, 0},
           {5, 4, 0, 2},
           {5, 1, 0, 3},
           {1, 4, 3, 2}},
          {0, 1, 2}};
}

// Outer square 0..3, inner square 4..7, spokes i -- i+4.
inline atcert::PlaneGraph cube() {
  return {8,
          {{3, 4, 1},
           {2, 0, 5},
           {1, 6, 3},
           {2, 7, 0},
           {7, 5, 0},
           {6, 1, 4},
           {2, 5, 7},
           {6, 4, 3}},
          {0, 1, 2, 3}};
}

// Plain 4-cycle, no chords.
inline atcert::PlaneGraph square() {
  return {4, {{3, 1}, {0, 2}, {1, 3}, {2, 0}}, {0, 1, 2, 3}};
}

// 4-cycle with the diagonal 0-2: a near-triangulation, outer cycle 0,1,2,3.
inline atcert::PlaneGraph square_fan() {
  return {4, {{3, 2, 1}, {0, 2}, {1, 0, 3}, {2, 0}}, {0, 1, 2, 3}};
}

}  // namespace fixtures
