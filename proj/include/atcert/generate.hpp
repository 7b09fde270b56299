#pragma once

// Test-support generators and exhaustive oracles.

#include <random>

#include "atcert/schnyder.hpp"

namespace atcert {

enum class GenMethod { stacked };

struct GeneratorConfig {
  int target_n = 3;
  std::uint64_t seed = 0;
  GenMethod method = GenMethod::stacked;
};

// Stacked (Apollonian-style) triangulation: start from K3, repeatedly
// insert a vertex into a pseudo-randomly chosen inner face and join it to
// the three corners.  Deterministic for fixed (target_n, seed) on every
// platform: mt19937_64 output reduced by modulus.
inline PlaneTriangulation stacked_triangulation(const GeneratorConfig& cfg) {
  if (cfg.target_n < 3) throw Error("stacked_triangulation: need target_n >= 3");
  PlaneGraph g{3, {{1, 2}, {2, 0}, {0, 1}}, {0, 2, 1}};
  std::mt19937_64 rng(cfg.seed);
  while (g.n < cfg.target_n) {
    std::vector<Face> inner;
    for (auto& f : face_walks(g))
      if (!f.is_outer) inner.push_back(std::move(f));
    const Face& f = inner[rng() % inner.size()];
    int a = f.boundary[0], b = f.boundary[1], c = f.boundary[2];
    int v = g.n++;
    g.rotations.push_back({a, b, c});
    // the face corner at a spans counterclockwise from b to c
    auto insert_after = [&](int at, int after) {
      auto& rot = g.rotations[at];
      rot.insert(rot.begin() + detail::index_of(rot, after) + 1, v);
    };
    insert_after(a, b);
    insert_after(b, c);
    insert_after(c, a);
  }
  return PlaneTriangulation::checked(std::move(g));
}

// All internal 3-orientations, by exhaustive search: edges at an exterior
// vertex are forced inward, the interior-interior edges branch, in-degree
// bounds prune.  Order of results is deterministic (edge-id order, tail
// branch first).
inline std::vector<InternalOrientation> enumerate_internal_3_orientations(
    const PlaneTriangulation& t, int cap = 22) {
  int interior_edges = 0;
  for (int e = 0; e < t.edge_total(); ++e)
    if (t.interior_edge(e)) ++interior_edges;
  if (interior_edges > cap)
    throw CapExceeded("enumerate_internal_3_orientations: " +
                      std::to_string(interior_edges) + " interior edges exceed cap " +
                      std::to_string(cap));

  std::vector<int> free_edges;  // both endpoints interior
  std::vector<int> head(t.edge_total(), -1);
  std::vector<int> indeg(t.n(), 0);
  std::vector<int> slack(t.n(), 0);  // undecided incident edges
  for (int e = 0; e < t.edge_total(); ++e) {
    if (!t.interior_edge(e)) continue;
    const Edge& ed = t.edges()[e];
    bool ui = t.interior_vertex(ed.u), vi = t.interior_vertex(ed.v);
    if (ui && vi) {
      free_edges.push_back(e);
      ++slack[ed.u];
      ++slack[ed.v];
    } else {
      head[e] = ui ? ed.u : ed.v;  // forced away from the exterior vertex
      ++indeg[head[e]];
    }
  }
  for (int v = 0; v < t.n(); ++v)
    if (t.interior_vertex(v) && (indeg[v] > 3 || indeg[v] + slack[v] < 3))
      return {};  // cannot reach in-degree 3

  std::vector<InternalOrientation> out;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == free_edges.size()) {
      out.push_back(orientation_checked(t, head));
      return;
    }
    int e = free_edges[k];
    const Edge& ed = t.edges()[e];
    for (int h : {ed.u, ed.v}) {
      int tail = ed.other(h);
      --slack[ed.u];
      --slack[ed.v];
      ++indeg[h];
      bool feasible = indeg[h] <= 3 && indeg[h] + slack[h] >= 3 &&
                      indeg[tail] + slack[tail] >= 3;
      if (feasible) {
        head[e] = h;
        self(self, k + 1);
        head[e] = -1;
      }
      --indeg[h];
      ++slack[ed.u];
      ++slack[ed.v];
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace atcert
