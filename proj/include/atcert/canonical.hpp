#pragma once

// Canonical counterclockwise orientation of a triangulation and the
// geometric clockwise/counterclockwise predicate.  The straight-line
// drawing used for the predicate is the Schnyder drawing of the canonical
// orientation; all planar drawings respecting the embedding agree on cycle
// orientation, so this one fixed choice serves everything.

#include "atcert/thomassen.hpp"

namespace atcert {

inline InternalOrientation canonical_orientation(const PlaneTriangulation& t) {
  return interior_orientation(t, thomassen_procedure(t));
}

inline Drawing canonical_drawing(const PlaneTriangulation& t) {
  return schnyder_drawing(realizer_from_orientation(canonical_orientation(t)));
}

// Twice the signed area of the polygon traced by `cycle` in the drawing.
inline long long doubled_cycle_area(const Drawing& d, const std::vector<int>& cycle) {
  long long sum = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const auto& p = d.pos[cycle[i]];
    const auto& q = d.pos[cycle[(i + 1) % cycle.size()]];
    sum += p[0] * q[1] - q[0] * p[1];
  }
  return sum;
}

inline bool is_counterclockwise(const Drawing& d, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw Error("is_counterclockwise: cycle too short");
  long long area = doubled_cycle_area(d, cycle);
  if (area == 0) throw Error("is_counterclockwise: degenerate cycle");
  return area > 0;
}

inline bool is_counterclockwise(const PlaneTriangulation& t, const std::vector<int>& cycle) {
  return is_counterclockwise(canonical_drawing(t), cycle);
}

}  // namespace atcert
