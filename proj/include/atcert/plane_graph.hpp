#pragma once

// Plane graphs given as rotation systems.
//
// A PlaneGraph lists, for every vertex, its neighbours in counterclockwise
// geometric order, plus the boundary of the unbounded face in clockwise
// order.  Edges are implicit.  Face walks follow one fixed convention:
// the successor of the directed edge (u -> v) is (v -> w), where w is the
// neighbour immediately after u in *clockwise* order at v (the cyclic
// predecessor in the stored counterclockwise list).  Under this rule every
// inner face is traced counterclockwise and the outer face clockwise, and
// every directed edge occurs in exactly one face walk.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive operation would exceed its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Undirected edge, endpoints normalized so that u < v.
struct Edge {
  int u = -1;
  int v = -1;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  int other(int w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct PlaneGraph {
  int n = 0;
  std::vector<std::vector<int>> rotations;  // counterclockwise neighbour order
  std::vector<int> outer_face;              // clockwise boundary walk
  bool operator==(const PlaneGraph&) const = default;
};

struct Face {
  std::vector<int> boundary;  // closed walk; inner faces ccw, outer cw
  bool is_outer = false;
  size_t size() const { return boundary.size(); }
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  void fail(std::string msg) { problems.push_back(std::move(msg)); }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& p : problems) {
      if (!s.empty()) s += "; ";
      s += p;
    }
    return s;
  }
};

namespace detail {

// Cyclic equality of vertex walks (same direction, any starting point).
inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  const size_t k = a.size();
  for (size_t s = 0; s < k; ++s) {
    bool match = true;
    for (size_t i = 0; i < k; ++i) {
      if (a[(s + i) % k] != b[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

inline int index_of(const std::vector<int>& rot, int x) {
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == x) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Structural sanity only: ids in range, simple, symmetric.  These must hold
// before any face walk is attempted.
inline ValidationReport validate_structure(const PlaneGraph& g) {
  ValidationReport r;
  if (g.n < 0) r.fail("negative vertex count");
  if (static_cast<int>(g.rotations.size()) != g.n)
    r.fail("rotations size " + std::to_string(g.rotations.size()) +
           " != n = " + std::to_string(g.n));
  if (!r.ok()) return r;
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> seen;
    for (int w : g.rotations[v]) {
      if (w < 0 || w >= g.n) {
        r.fail("vertex " + std::to_string(v) + " lists unknown neighbour " +
               std::to_string(w));
        continue;
      }
      if (w == v) r.fail("self-loop at vertex " + std::to_string(v));
      if (std::find(seen.begin(), seen.end(), w) != seen.end())
        r.fail("repeated neighbour " + std::to_string(w) + " at vertex " +
               std::to_string(v));
      seen.push_back(w);
    }
  }
  if (!r.ok()) return r;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.rotations[v])
      if (detail::index_of(g.rotations[w], v) < 0)
        r.fail("asymmetric adjacency: " + std::to_string(v) + " lists " +
               std::to_string(w) + " but not vice versa");
  for (int x : g.outer_face)
    if (x < 0 || x >= g.n) r.fail("outer face lists unknown vertex " + std::to_string(x));
  return r;
}

// All face walks of a structurally sane graph, in deterministic discovery
// order (darts scanned by tail vertex, then rotation position).  The outer
// face is the walk matching outer_face cyclically; it is flagged, not moved.
inline std::vector<Face> face_walks(const PlaneGraph& g) {
  std::vector<std::vector<char>> used(g.n);
  for (int v = 0; v < g.n; ++v) used[v].assign(g.rotations[v].size(), 0);
  std::vector<Face> out;
  for (int u = 0; u < g.n; ++u) {
    for (size_t i = 0; i < g.rotations[u].size(); ++i) {
      if (used[u][i]) continue;
      Face f;
      int cu = u;
      int ci = static_cast<int>(i);
      // walk until we come back to the starting dart
      while (!used[cu][ci]) {
        used[cu][ci] = 1;
        f.boundary.push_back(cu);
        int cv = g.rotations[cu][ci];
        int j = detail::index_of(g.rotations[cv], cu);
        int deg = static_cast<int>(g.rotations[cv].size());
        cu = cv;
        ci = (j - 1 + deg) % deg;  // clockwise-next neighbour after cu at cv
      }
      f.is_outer = detail::cyclic_equal(f.boundary, g.outer_face);
      out.push_back(std::move(f));
    }
  }
  return out;
}

inline bool is_connected(const PlaneGraph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.rotations[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

// Articulation-point test via lowpoints.
inline bool is_two_connected(const PlaneGraph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  std::vector<int> num(g.n, -1), low(g.n, 0);
  int timer = 0;
  bool has_cut = false;
  // iterative dfs from 0
  struct Frame {
    int v, parent;
    size_t idx;
    int children;
  };
  std::vector<Frame> st;
  st.push_back({0, -1, 0, 0});
  num[0] = low[0] = timer++;
  while (!st.empty()) {
    Frame& f = st.back();
    if (f.idx < g.rotations[f.v].size()) {
      int w = g.rotations[f.v][f.idx++];
      if (w == f.parent) continue;
      if (num[w] == -1) {
        num[w] = low[w] = timer++;
        ++f.children;
        st.push_back({w, f.v, 0, 0});
      } else {
        low[f.v] = std::min(low[f.v], num[w]);
      }
    } else {
      int v = f.v, parent = f.parent, children = f.children;
      st.pop_back();
      if (parent >= 0) {
        low[parent] = std::min(low[parent], low[v]);
        if (parent != 0 && low[v] >= num[parent]) has_cut = true;
      } else if (children > 1) {
        has_cut = true;  // dfs root with several children
      }
    }
  }
  return !has_cut;
}

inline int edge_count(const PlaneGraph& g) {
  size_t darts = 0;
  for (const auto& rot : g.rotations) darts += rot.size();
  return static_cast<int>(darts / 2);
}

// Full PlaneGraph validation: structure, connectivity, Euler formula,
// and agreement of outer_face with one of the face walks.
inline ValidationReport validate(const PlaneGraph& g) {
  ValidationReport r = validate_structure(g);
  if (!r.ok()) return r;
  if (!is_connected(g)) {
    r.fail("graph is not connected");
    return r;
  }
  const auto fs = face_walks(g);
  const int V = g.n, E = edge_count(g), F = static_cast<int>(fs.size());
  if (V - E + F != 2)
    r.fail("Euler formula violated: V=" + std::to_string(V) + " E=" +
           std::to_string(E) + " F=" + std::to_string(F));
  int outer_hits = 0;
  for (const auto& f : fs) outer_hits += f.is_outer ? 1 : 0;
  if (outer_hits != 1)
    r.fail("outer_face does not match exactly one face walk (matches " +
           std::to_string(outer_hits) + ")");
  return r;
}

inline ValidationReport validate_triangulation(const PlaneGraph& g) {
  ValidationReport r = validate(g);
  if (!r.ok()) return r;
  if (g.n < 3) r.fail("triangulation needs at least 3 vertices");
  for (const auto& f : face_walks(g))
    if (f.size() != 3)
      r.fail((f.is_outer ? std::string("outer") : std::string("inner")) +
             " face of length " + std::to_string(f.size()));
  if (edge_count(g) != 3 * g.n - 6)
    r.fail("edge count " + std::to_string(edge_count(g)) + " != 3n-6");
  if (!is_two_connected(g)) r.fail("not 2-connected");
  return r;
}

inline ValidationReport validate_near_triangulation(const PlaneGraph& g, int v1, int v2) {
  ValidationReport r = validate(g);
  if (!r.ok()) return r;
  if (!is_two_connected(g)) r.fail("not 2-connected");
  const auto fs = face_walks(g);
  const Face* outer = nullptr;
  for (const auto& f : fs) {
    if (f.is_outer)
      outer = &f;
    else if (f.size() != 3)
      r.fail("inner face of length " + std::to_string(f.size()));
  }
  if (outer) {
    std::vector<int> sorted = outer->boundary;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      r.fail("outer face walk is not a simple cycle");
    int i1 = detail::index_of(outer->boundary, v1);
    if (i1 < 0 || detail::index_of(outer->boundary, v2) < 0) {
      r.fail("distinguished vertices not on the outer cycle");
    } else if (outer->boundary[(i1 + 1) % outer->size()] != v2) {
      // outer walk is clockwise, so v2 must directly follow v1 in it
      r.fail("v2 does not follow v1 clockwise on the outer cycle");
    }
  }
  return r;
}

// Validated embedding with derived lookup tables.  Immutable; copies are
// cheap at the sizes this library targets.
class Embedding {
 public:
  static Embedding build(PlaneGraph g) {
    ValidationReport r = validate(g);
    if (!r.ok()) throw Error("invalid plane graph: " + r.summary());
    return Embedding(std::move(g));
  }

  const PlaneGraph& graph() const { return g_; }
  int n() const { return g_.n; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_total() const { return static_cast<int>(edges_.size()); }

  int find_edge(int u, int v) const {
    auto it = edge_id_.find(Edge(u, v));
    return it == edge_id_.end() ? -1 : it->second;
  }
  int edge_id(int u, int v) const {
    int id = find_edge(u, v);
    if (id < 0)
      throw Error("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return id;
  }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& outer() const { return faces_[outer_idx_]; }
  int outer_index() const { return outer_idx_; }

  bool is_outer_vertex(int v) const { return outer_vertex_[v]; }
  bool is_outer_edge(int eid) const { return outer_edge_[eid]; }
  int degree(int v) const { return static_cast<int>(g_.rotations[v].size()); }

  // Face ids (indices into faces()) on each side of every edge.
  const std::array<int, 2>& edge_faces(int eid) const { return edge_face_[eid]; }

 private:
  explicit Embedding(PlaneGraph g) : g_(std::move(g)) {
    for (int v = 0; v < g_.n; ++v)
      for (int w : g_.rotations[v])
        if (v < w) edges_.push_back(Edge(v, w));
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i)
      edge_id_[edges_[i]] = static_cast<int>(i);

    faces_ = face_walks(g_);
    outer_idx_ = -1;
    for (size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].is_outer) outer_idx_ = static_cast<int>(i);

    outer_vertex_.assign(g_.n, 0);
    for (int v : faces_[outer_idx_].boundary) outer_vertex_[v] = 1;
    edge_face_.assign(edges_.size(), {-1, -1});
    for (size_t fi = 0; fi < faces_.size(); ++fi) {
      const auto& b = faces_[fi].boundary;
      for (size_t i = 0; i < b.size(); ++i) {
        int eid = edge_id_[Edge(b[i], b[(i + 1) % b.size()])];
        if (edge_face_[eid][0] < 0)
          edge_face_[eid][0] = static_cast<int>(fi);
        else
          edge_face_[eid][1] = static_cast<int>(fi);
      }
    }
    outer_edge_.assign(edges_.size(), 0);
    const auto& ob = faces_[outer_idx_].boundary;
    for (size_t i = 0; i < ob.size(); ++i)
      outer_edge_[edge_id_[Edge(ob[i], ob[(i + 1) % ob.size()])]] = 1;
  }

  PlaneGraph g_;
  std::vector<Edge> edges_;
  std::map<Edge, int> edge_id_;
  std::vector<Face> faces_;
  int outer_idx_ = -1;
  std::vector<char> outer_vertex_;
  std::vector<char> outer_edge_;
  std::vector<std::array<int, 2>> edge_face_;
};

// Subgraph enclosed by a simple cycle, boundary included.
struct EnclosedSubgraph {
  std::vector<int> vertices;  // sorted
  std::vector<int> edge_ids;  // sorted
  std::vector<int> face_ids;  // strictly inside, sorted
};

// Faces strictly inside `cycle` are those unreachable from the outer face in
// the dual once edges of the cycle are uncrossable.
inline EnclosedSubgraph enclosed_subgraph(const Embedding& emb, const std::vector<int>& cycle) {
  std::vector<char> on_cycle_edge(emb.edge_total(), 0);
  const size_t k = cycle.size();
  if (k < 3) throw Error("enclosed_subgraph: cycle too short");
  for (size_t i = 0; i < k; ++i)
    on_cycle_edge[emb.edge_id(cycle[i], cycle[(i + 1) % k])] = 1;

  const auto& fs = emb.faces();
  std::vector<char> outside(fs.size(), 0);
  std::vector<int> stack{emb.outer_index()};
  outside[emb.outer_index()] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    const auto& b = fs[f].boundary;
    for (size_t i = 0; i < b.size(); ++i) {
      int eid = emb.edge_id(b[i], b[(i + 1) % b.size()]);
      if (on_cycle_edge[eid]) continue;
      for (int g : emb.edge_faces(eid))
        if (g >= 0 && !outside[g]) {
          outside[g] = 1;
          stack.push_back(g);
        }
    }
  }

  EnclosedSubgraph out;
  std::vector<char> vin(emb.n(), 0), ein(emb.edge_total(), 0);
  for (int v : cycle) vin[v] = 1;
  for (size_t i = 0; i < k; ++i)
    ein[emb.edge_id(cycle[i], cycle[(i + 1) % k])] = 1;
  for (size_t f = 0; f < fs.size(); ++f) {
    if (outside[f]) continue;
    out.face_ids.push_back(static_cast<int>(f));
    const auto& b = fs[f].boundary;
    for (size_t i = 0; i < b.size(); ++i) {
      vin[b[i]] = 1;
      ein[emb.edge_id(b[i], b[(i + 1) % b.size()])] = 1;
    }
  }
  for (int v = 0; v < emb.n(); ++v)
    if (vin[v]) out.vertices.push_back(v);
  for (int e = 0; e < emb.edge_total(); ++e)
    if (ein[e]) out.edge_ids.push_back(e);
  return out;
}

// Plane triangulation: all faces (outer included) are triangles.
class PlaneTriangulation {
 public:
  static PlaneTriangulation checked(PlaneGraph g) {
    ValidationReport r = validate_triangulation(g);
    if (!r.ok()) throw Error("invalid triangulation: " + r.summary());
    return PlaneTriangulation(Embedding::build(std::move(g)));
  }

  const Embedding& emb() const { return emb_; }
  const PlaneGraph& graph() const { return emb_.graph(); }
  int n() const { return emb_.n(); }
  const std::vector<Edge>& edges() const { return emb_.edges(); }
  int edge_total() const { return emb_.edge_total(); }
  bool interior_edge(int eid) const { return !emb_.is_outer_edge(eid); }
  bool interior_vertex(int v) const { return !emb_.is_outer_vertex(v); }
  // outer triangle in the input's clockwise order
  int outer_vertex(int i) const { return graph().outer_face[i]; }

  bool operator==(const PlaneTriangulation& o) const { return graph() == o.graph(); }

 private:
  explicit PlaneTriangulation(Embedding e) : emb_(std::move(e)) {}
  Embedding emb_;
};

// 2-connected, inner faces triangles, outer face a simple cycle carrying the
// clockwise-consecutive distinguished pair (v1, v2).
class NearTriangulation {
 public:
  static NearTriangulation checked(PlaneGraph g, int v1, int v2) {
    ValidationReport r = validate_near_triangulation(g, v1, v2);
    if (!r.ok()) throw Error("invalid near triangulation: " + r.summary());
    return NearTriangulation(Embedding::build(std::move(g)), v1, v2);
  }
  static NearTriangulation of(const PlaneTriangulation& t) {
    return checked(t.graph(), t.outer_vertex(0), t.outer_vertex(1));
  }

  const Embedding& emb() const { return emb_; }
  const PlaneGraph& graph() const { return emb_.graph(); }
  int v1() const { return v1_; }
  int v2() const { return v2_; }

 private:
  NearTriangulation(Embedding e, int v1, int v2) : emb_(std::move(e)), v1_(v1), v2_(v2) {}
  Embedding emb_;
  int v1_, v2_;
};

namespace detail {

// Insert a chord between occurrences i and j of the face walk `w`; updates
// rotations and, when the face is the outer one, outer_face.  Inside the
// face, the corner at w[i] spans counterclockwise from w[i+1] to w[i-1], so
// the chord goes immediately after w[i+1] in the rotation there.
inline void insert_chord(PlaneGraph& g, const Face& f, size_t i, size_t j) {
  const auto& w = f.boundary;
  const size_t L = w.size();
  int a = w[i], b = w[j];
  int na = w[(i + 1) % L];
  int nb = w[(j + 1) % L];
  auto insert_after = [](std::vector<int>& rot, int after, int x) {
    int k = index_of(rot, after);
    rot.insert(rot.begin() + k + 1, x);
  };
  insert_after(g.rotations[a], na, b);
  insert_after(g.rotations[b], nb, a);
  if (f.is_outer) {
    // keep the part of the walk through positions [j..i] as the outer face
    std::vector<int> nw;
    for (size_t p = j;; p = (p + 1) % L) {
      nw.push_back(w[p]);
      if (p == i) break;
    }
    g.outer_face = std::move(nw);
  }
}

}  // namespace detail

struct TriangulateResult {
  PlaneTriangulation triangulation;
  std::vector<Edge> added;  // in insertion order
};

// Add chords until every face is a triangle.  Candidate chords are scanned
// at walk distance 2 first, then at any distance, skipping pairs that are
// equal or already adjacent.  Deterministic given the input.
inline TriangulateResult triangulate(const PlaneGraph& input) {
  ValidationReport r = validate(input);
  if (!r.ok()) throw Error("triangulate: invalid input: " + r.summary());
  if (input.n < 3) throw Error("triangulate: need at least 3 vertices");

  PlaneGraph g = input;
  std::vector<Edge> added;
  for (;;) {
    auto fs = face_walks(g);
    bool outer_seen = false;
    for (auto& f : fs) outer_seen |= f.is_outer;
    if (!outer_seen) throw Error("triangulate: lost outer face");  // cannot happen

    const Face* target = nullptr;
    for (const auto& f : fs)
      if (f.size() > 3) {
        target = &f;
        break;
      }
    if (!target) break;

    auto adjacent = [&](int x, int y) {
      return detail::index_of(g.rotations[x], y) >= 0;
    };
    const auto& w = target->boundary;
    const size_t L = w.size();
    bool inserted = false;
    for (size_t dist = 2; dist <= L - 2 && !inserted; ++dist) {
      for (size_t i = 0; i < L && !inserted; ++i) {
        size_t j = (i + dist) % L;
        if (w[i] == w[j] || adjacent(w[i], w[j])) continue;
        detail::insert_chord(g, *target, i, j);
        added.push_back(Edge(w[i], w[j]));
        inserted = true;
      }
    }
    if (!inserted)
      throw Error("triangulate: no admissible chord in a face of length " +
                  std::to_string(L));
  }
  return TriangulateResult{PlaneTriangulation::checked(std::move(g)), std::move(added)};
}

}  // namespace atcert
