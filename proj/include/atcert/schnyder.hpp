#pragma once

// Schnyder realizers and internal 3-orientations.
//
// Orientations follow the reversed convention: every interior vertex has
// in-degree one in each tree, so realizer orientations are exactly the
// internal 3-orientations.  The local rule, counterclockwise around an
// interior vertex: incoming red, outgoing blue block, incoming green,
// outgoing red block, incoming blue, outgoing green block.  Roots sit
// counterclockwise around the outer triangle as red, green, blue, i.e.
// v_r = outer_face[0], v_b = outer_face[1], v_g = outer_face[2].

#include <optional>
#include <queue>

#include "atcert/plane_graph.hpp"

namespace atcert {

enum class Color : int { red = 0, green = 1, blue = 2 };

inline Color next_color(Color c) { return Color((int(c) + 1) % 3); }
inline Color prev_color(Color c) { return Color((int(c) + 2) % 3); }
inline const char* color_name(Color c) {
  switch (c) {
    case Color::red: return "red";
    case Color::green: return "green";
    default: return "blue";
  }
}

// Orientation of the interior edges; head[eid] = -1 on outer-triangle edges.
struct InternalOrientation {
  PlaneTriangulation base;
  std::vector<int> head;
  bool operator==(const InternalOrientation& o) const {
    return base == o.base && head == o.head;
  }
};

// In-degree of v counting interior edges only.
inline int interior_in_degree(const InternalOrientation& o, int v) {
  int d = 0;
  for (int e = 0; e < o.base.edge_total(); ++e)
    if (o.base.interior_edge(e) && o.head[e] == v) ++d;
  return d;
}

inline ValidationReport validate_orientation(const InternalOrientation& o) {
  ValidationReport r;
  const auto& t = o.base;
  if (static_cast<int>(o.head.size()) != t.edge_total()) {
    r.fail("head table size mismatch");
    return r;
  }
  for (int e = 0; e < t.edge_total(); ++e) {
    const Edge& ed = t.edges()[e];
    if (!t.interior_edge(e)) {
      if (o.head[e] != -1)
        r.fail("outer edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
               "} carries a direction");
    } else if (o.head[e] != ed.u && o.head[e] != ed.v) {
      r.fail("edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
             "} has head outside the edge");
    } else if (!t.interior_vertex(o.head[e])) {
      r.fail("interior edge directed toward exterior vertex " +
             std::to_string(o.head[e]));
    }
  }
  if (!r.ok()) return r;
  for (int v = 0; v < t.n(); ++v)
    if (t.interior_vertex(v) && interior_in_degree(o, v) != 3)
      r.fail("interior vertex " + std::to_string(v) + " has in-degree " +
             std::to_string(interior_in_degree(o, v)));
  return r;
}

inline InternalOrientation orientation_checked(PlaneTriangulation t, std::vector<int> head) {
  InternalOrientation o{std::move(t), std::move(head)};
  ValidationReport r = validate_orientation(o);
  if (!r.ok()) throw Error("invalid internal 3-orientation: " + r.summary());
  return o;
}

// Three-colored internal 3-orientation.  color[eid] = -1 on outer edges;
// roots[int(c)] is the exterior root of the tree of color c.
struct Realizer {
  PlaneTriangulation base;
  std::vector<int> head;
  std::vector<int> color;
  std::array<int, 3> roots;
  bool operator==(const Realizer& o) const {
    return base == o.base && head == o.head && color == o.color && roots == o.roots;
  }
};

inline std::array<int, 3> realizer_roots(const PlaneTriangulation& t) {
  return {t.outer_vertex(0), t.outer_vertex(2), t.outer_vertex(1)};
}

inline InternalOrientation orientation_of(const Realizer& r) {
  return {r.base, r.head};
}

inline ValidationReport check_realizer(const Realizer& rz) {
  ValidationReport r = validate_orientation({rz.base, rz.head});
  if (!r.ok()) return r;
  const auto& t = rz.base;
  if (rz.roots != realizer_roots(t)) r.fail("unexpected root assignment");
  for (int e = 0; e < t.edge_total(); ++e) {
    int c = rz.color[e];
    if (t.interior_edge(e) ? (c < 0 || c > 2) : (c != -1))
      r.fail("bad color on edge " + std::to_string(e));
  }
  if (!r.ok()) return r;

  // per-color in-degree one at interior vertices
  for (int v = 0; v < t.n(); ++v) {
    if (!t.interior_vertex(v)) continue;
    int deg[3] = {0, 0, 0};
    for (int e = 0; e < t.edge_total(); ++e)
      if (rz.head[e] == v) ++deg[rz.color[e]];
    for (int c = 0; c < 3; ++c)
      if (deg[c] != 1)
        r.fail("vertex " + std::to_string(v) + " has " + std::to_string(deg[c]) +
               " incoming " + color_name(Color(c)) + " edges");
  }

  // edges at a root all leave it carrying its color
  for (int c = 0; c < 3; ++c) {
    int root = rz.roots[c];
    for (int e = 0; e < t.edge_total(); ++e) {
      if (!t.interior_edge(e)) continue;
      const Edge& ed = t.edges()[e];
      if (ed.u != root && ed.v != root) continue;
      if (rz.color[e] != c)
        r.fail("edge at root " + std::to_string(root) + " is " +
               color_name(Color(rz.color[e])));
      if (rz.head[e] == root) r.fail("edge directed into root " + std::to_string(root));
    }
  }

  // local counterclockwise rule: in-red, out-blue*, in-green, out-red*,
  // in-blue, out-green*
  for (int v = 0; v < t.n(); ++v) {
    if (!t.interior_vertex(v)) continue;
    const auto& rot = t.graph().rotations[v];
    int start = -1;  // position of the incoming red edge
    for (size_t i = 0; i < rot.size(); ++i) {
      int e = t.emb().edge_id(v, rot[i]);
      if (rz.head[e] == v && rz.color[e] == int(Color::red)) start = static_cast<int>(i);
    }
    if (start < 0) continue;  // reported above
    // expected cyclic sequence, encoded as (incoming?, color)
    int phase = 0;  // 0: after in-red, 1: after in-green, 2: after in-blue
    const Color in_of[3] = {Color::red, Color::green, Color::blue};
    bool ok = true;
    for (size_t k = 1; k < rot.size() && ok; ++k) {
      int e = t.emb().edge_id(v, rot[(start + k) % rot.size()]);
      bool in = rz.head[e] == v;
      Color c = Color(rz.color[e]);
      if (in) {
        Color expect = next_color(in_of[phase]);
        if (c != expect) ok = false;
        phase = (phase + 1) % 3;
      } else if (c != prev_color(in_of[phase])) {
        ok = false;  // outgoing block after in-X carries the third color
      }
    }
    if (!ok || phase != 2)
      r.fail("local rule violated at vertex " + std::to_string(v));
  }
  if (!r.ok()) return r;

  // each color class is a tree on the interior vertices plus its root:
  // follow parents; every walk must reach the root without revisiting
  for (int c = 0; c < 3; ++c) {
    for (int v0 = 0; v0 < t.n(); ++v0) {
      if (!t.interior_vertex(v0)) continue;
      int v = v0;
      int steps = 0;
      while (t.interior_vertex(v)) {
        if (++steps > t.n()) {
          r.fail(std::string(color_name(Color(c))) + " parents cycle at vertex " +
                 std::to_string(v0));
          break;
        }
        int parent = -1;
        for (int e = 0; e < t.edge_total(); ++e)
          if (rz.head[e] == v && rz.color[e] == c) parent = t.edges()[e].other(v);
        if (parent < 0) break;
        v = parent;
      }
      if (t.interior_vertex(v)) break;
      if (v != rz.roots[c])
        r.fail(std::string(color_name(Color(c))) + " path from " +
               std::to_string(v0) + " ends at " + std::to_string(v));
    }
  }
  return r;
}

// De Fraysseix--de Mendez: an internal 3-orientation determines the
// coloring.  Seed the edges at the three roots, then propagate: one colored
// incoming edge at an interior vertex fixes its whole incident coloring.
inline Realizer realizer_from_orientation(const InternalOrientation& o) {
  ValidationReport vr = validate_orientation(o);
  if (!vr.ok()) throw Error("invalid orientation: " + vr.summary());
  const auto& t = o.base;
  Realizer rz{t, o.head, std::vector<int>(t.edge_total(), -1), realizer_roots(t)};

  auto assign = [&](int e, Color c) {
    if (rz.color[e] == int(c)) return false;
    if (rz.color[e] != -1)
      throw Error("orientation admits no consistent coloring (edge " +
                  std::to_string(e) + ")");
    rz.color[e] = int(c);
    return true;
  };

  std::vector<char> processed(t.n(), 0);
  std::queue<int> ready;
  auto wake = [&](int v) {
    if (t.interior_vertex(v) && !processed[v]) {
      processed[v] = 1;
      ready.push(v);
    }
  };

  for (int c = 0; c < 3; ++c)
    for (int e = 0; e < t.edge_total(); ++e) {
      if (!t.interior_edge(e)) continue;
      const Edge& ed = t.edges()[e];
      if (ed.u != rz.roots[c] && ed.v != rz.roots[c]) continue;
      assign(e, Color(c));
      wake(o.head[e]);
    }

  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    const auto& rot = t.graph().rotations[v];
    const int deg = static_cast<int>(rot.size());
    std::vector<int> eid(deg);
    std::vector<char> in(deg);
    int anchor = -1;
    for (int i = 0; i < deg; ++i) {
      eid[i] = t.emb().edge_id(v, rot[i]);
      in[i] = o.head[eid[i]] == v;
      if (in[i] && rz.color[eid[i]] != -1) anchor = i;
    }
    if (anchor < 0) throw Error("wake without colored incoming edge");
    // incoming colors advance r -> g -> b counterclockwise
    Color c = Color(rz.color[eid[anchor]]);
    for (int k = 0, i = anchor; k < deg; ++k, i = (i + 1) % deg) {
      if (in[i]) {
        if (k > 0) c = next_color(c);
        assign(eid[i], c);
      } else if (assign(eid[i], prev_color(c))) {
        wake(o.head[eid[i]]);
      }
    }
  }

  ValidationReport check = check_realizer(rz);
  if (!check.ok())
    throw Error("derived coloring fails realizer checks: " + check.summary());
  return rz;
}

inline Realizer realizer_checked(Realizer rz) {
  ValidationReport r = check_realizer(rz);
  if (!r.ok()) throw Error("invalid realizer: " + r.summary());
  return rz;
}

// Path of the given color from the root down to interior vertex v,
// returned root-first (it is a directed path under the orientation).
inline std::vector<int> colored_path(const Realizer& rz, int v, Color c) {
  const auto& t = rz.base;
  if (!t.interior_vertex(v)) throw Error("colored_path: exterior vertex");
  std::vector<int> rev{v};
  int cur = v;
  while (t.interior_vertex(cur)) {
    int parent = -1;
    for (int e = 0; e < t.edge_total(); ++e)
      if (rz.head[e] == cur && rz.color[e] == int(c)) parent = t.edges()[e].other(cur);
    if (parent < 0) throw Error("colored_path: missing parent");
    rev.push_back(parent);
    cur = parent;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

struct Region {
  std::vector<int> vertices;
  std::vector<int> edge_ids;
  std::vector<int> face_ids;  // inner faces enclosed
  std::vector<int> boundary;  // the bounding cycle
};

// Region of v opposite color c: bounded by the colored paths of the other
// two colors and the outer edge joining their roots.  E.g. the green region
// is bounded by P_r(v), edge v_r v_b, and P_b(v).
inline Region region(const Realizer& rz, int v, Color c) {
  const auto& t = rz.base;
  if (!t.interior_vertex(v)) throw Error("region: exterior vertex");
  Color c1 = next_color(c), c2 = prev_color(c);
  // boundary: root(c1) -> ... -> v -> ... -> root(c2) -> root(c1)
  std::vector<int> path1 = colored_path(rz, v, c1);
  std::vector<int> path2 = colored_path(rz, v, c2);
  std::vector<int> cycle = path1;
  for (size_t i = path2.size() - 1; i-- > 0;) cycle.push_back(path2[i]);
  {
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("region boundary is not a simple cycle");
  }
  auto sub = enclosed_subgraph(t.emb(), cycle);
  return Region{std::move(sub.vertices), std::move(sub.edge_ids),
                std::move(sub.face_ids), std::move(cycle)};
}

struct Drawing {
  std::vector<std::array<long long, 2>> pos;
};

// Face-count embedding: interior v sits at (inner faces in its red region,
// inner faces in its green region); corners at (2n-5, 0), (0, 2n-5), (0, 0)
// for v_r, v_g, v_b.  All inner faces come out counterclockwise and the
// outer face clockwise, matching the combinatorial convention.
inline Drawing schnyder_drawing(const Realizer& rz) {
  const auto& t = rz.base;
  const long long side = 2LL * t.n() - 5;
  Drawing d;
  d.pos.assign(t.n(), {0, 0});
  d.pos[rz.roots[int(Color::red)]] = {side, 0};
  d.pos[rz.roots[int(Color::green)]] = {0, side};
  d.pos[rz.roots[int(Color::blue)]] = {0, 0};
  for (int v = 0; v < t.n(); ++v) {
    if (!t.interior_vertex(v)) continue;
    long long fr = static_cast<long long>(region(rz, v, Color::red).face_ids.size());
    long long fg = static_cast<long long>(region(rz, v, Color::green).face_ids.size());
    d.pos[v] = {fr, fg};
  }
  return d;
}

// Twice the signed area of triangle pqr; positive means counterclockwise.
inline long long doubled_signed_area(const std::array<long long, 2>& p,
                                     const std::array<long long, 2>& q,
                                     const std::array<long long, 2>& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

// Directed triangle a -> b -> c -> a.
struct DirectedTriangle {
  std::array<int, 3> v;
};

namespace detail {

inline bool directed_interior_edge(const InternalOrientation& o, int from, int to) {
  int e = o.base.emb().find_edge(from, to);
  return e >= 0 && o.base.interior_edge(e) && o.head[e] == to;
}

}  // namespace detail

inline InternalOrientation flip(const InternalOrientation& o, const DirectedTriangle& tri) {
  for (int i = 0; i < 3; ++i)
    if (!detail::directed_interior_edge(o, tri.v[i], tri.v[(i + 1) % 3]))
      throw Error("flip: triangle is not directed in the orientation");
  InternalOrientation out = o;
  for (int i = 0; i < 3; ++i) {
    int a = tri.v[i], b = tri.v[(i + 1) % 3];
    out.head[o.base.emb().edge_id(a, b)] = a;  // reverse a -> b
  }
  return out;
}

// Clockwise directed triangle on interior edges, if any: facial triangles
// by scanning inner face walks (clockwise iff the reversed walk is
// directed), then separating triangles, judged by signed area in the given
// straight-line drawing.
inline std::optional<DirectedTriangle> find_clockwise_triangle(
    const InternalOrientation& o, const Drawing& dw) {
  const auto& t = o.base;
  const auto& emb = t.emb();
  for (size_t fi = 0; fi < emb.faces().size(); ++fi) {
    const Face& f = emb.faces()[fi];
    if (f.is_outer) continue;
    int a = f.boundary[0], b = f.boundary[1], c = f.boundary[2];
    if (detail::directed_interior_edge(o, b, a) &&
        detail::directed_interior_edge(o, c, b) &&
        detail::directed_interior_edge(o, a, c))
      return DirectedTriangle{{a, c, b}};
  }
  for (int e = 0; e < emb.edge_total(); ++e) {
    const Edge& ed = emb.edges()[e];
    for (int w : t.graph().rotations[ed.u]) {
      if (w <= ed.v || emb.find_edge(ed.v, w) < 0) continue;  // dedupe: w > v > u
      // orient the candidate {u, v, w} as a directed cycle, if it is one
      int a = ed.u, b = ed.v, c = w;
      DirectedTriangle tri{{a, b, c}};
      if (!detail::directed_interior_edge(o, a, b)) tri = {{a, c, b}};
      bool directed = true;
      for (int i = 0; i < 3 && directed; ++i)
        directed = detail::directed_interior_edge(o, tri.v[i], tri.v[(i + 1) % 3]);
      if (!directed) continue;
      long long area = doubled_signed_area(dw.pos[tri.v[0]], dw.pos[tri.v[1]],
                                           dw.pos[tri.v[2]]);
      if (area < 0) return tri;
    }
  }
  return std::nullopt;
}

inline std::optional<DirectedTriangle> find_clockwise_triangle(const InternalOrientation& o) {
  return find_clockwise_triangle(o, schnyder_drawing(realizer_from_orientation(o)));
}

// Flip clockwise triangles until none remain; lands on the unique
// counterclockwise orientation.  The geometry of the base graph does not
// depend on the orientation, so one drawing serves the whole descent.
inline InternalOrientation canonicalize_ccw(const InternalOrientation& o) {
  Drawing dw = schnyder_drawing(realizer_from_orientation(o));
  InternalOrientation cur = o;
  const int n = o.base.n();
  unsigned long long cap =
      n >= 32 ? ~0ULL : (1ULL << (2 * n));  // 4^n, never approached
  for (unsigned long long step = 0;; ++step) {
    if (step > cap) throw Error("canonicalize_ccw: flip cap exceeded");
    auto tri = find_clockwise_triangle(cur, dw);
    if (!tri) return cur;
    cur = flip(cur, *tri);
  }
}

}  // namespace atcert
