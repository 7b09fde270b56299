#pragma once

// Augmented orientations with strengths, brute-force Eulerian-structure
// counting, the max-in-degree-4 certificate built from the recursive
// procedure, and the forest decomposition witnessing col(G - F) <= 3.

#include <cstdlib>
#include <set>

#include "atcert/canonical.hpp"

namespace atcert {

// Bare edge list; the shape the brute-force oracles need.  Vertex ids are
// 0..n-1 and edges are normalized u < v.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;
};

inline SimpleGraph simple_graph_of(const PlaneTriangulation& t) {
  return {t.n(), t.edges()};
}

inline ValidationReport validate_simple_graph(const SimpleGraph& g) {
  ValidationReport r;
  if (g.n < 0) r.fail("negative vertex count");
  std::set<Edge> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v >= g.n) r.fail("edge endpoint out of range");
    if (e.u == e.v) r.fail("self-loop");
    if (!seen.insert(e).second) r.fail("duplicate edge");
  }
  return r;
}

// Every edge directed and weighted: head[k] is an endpoint of g.edges[k],
// strength[k] >= 1 (here always 1 or 2).
struct AugmentedOrientation {
  SimpleGraph g;
  std::vector<int> head;
  std::vector<int> strength;
};

inline ValidationReport validate_augmented(const AugmentedOrientation& a) {
  ValidationReport r = validate_simple_graph(a.g);
  if (!r.ok()) return r;
  const size_t m = a.g.edges.size();
  if (a.head.size() != m || a.strength.size() != m) {
    r.fail("head/strength table size mismatch");
    return r;
  }
  for (size_t k = 0; k < m; ++k) {
    if (a.head[k] != a.g.edges[k].u && a.head[k] != a.g.edges[k].v)
      r.fail("head of edge " + std::to_string(k) + " is not an endpoint");
    if (a.strength[k] < 1) r.fail("non-positive strength on edge " + std::to_string(k));
  }
  return r;
}

// Strength-weighted in-degree of v.
inline int augmented_in_degree(const AugmentedOrientation& a, int v) {
  int d = 0;
  for (size_t k = 0; k < a.g.edges.size(); ++k)
    if (a.head[k] == v) d += a.strength[k];
  return d;
}

inline int max_augmented_indegree(const AugmentedOrientation& a) {
  int best = 0;
  for (int v = 0; v < a.g.n; ++v) best = std::max(best, augmented_in_degree(a, v));
  return best;
}

struct EulerianCount {
  long long even = 0;
  long long odd = 0;
  bool includes_empty = true;
};

namespace detail {

// Depth-first walk over edge subsets, pruning a vertex as soon as its
// strength balance can no longer return to zero.  `found` sees each
// balanced subset once, as a sorted list of chosen edge ids.
template <typename Sink>
void eulerian_scan(const AugmentedOrientation& a, Sink&& found) {
  const int m = static_cast<int>(a.g.edges.size());
  std::vector<long long> balance(a.g.n, 0);
  std::vector<long long> slack(a.g.n, 0);  // undecided incident strength
  for (int k = 0; k < m; ++k) {
    slack[a.g.edges[k].u] += a.strength[k];
    slack[a.g.edges[k].v] += a.strength[k];
  }
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      found(chosen);
      return;
    }
    const Edge& e = a.g.edges[k];
    const int h = a.head[k], t = e.other(h), s = a.strength[k];
    slack[e.u] -= s;
    slack[e.v] -= s;
    auto feasible = [&] {
      return std::llabs(balance[e.u]) <= slack[e.u] &&
             std::llabs(balance[e.v]) <= slack[e.v];
    };
    if (feasible()) self(self, k + 1);  // skip edge k
    balance[h] += s;
    balance[t] -= s;
    if (feasible()) {
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
    balance[h] -= s;
    balance[t] += s;
    slack[e.u] += s;
    slack[e.v] += s;
  };
  rec(rec, 0);
}

}  // namespace detail

// Count balanced edge subsets (augmented in-degree = augmented out-degree
// at every vertex) split by subset-cardinality parity.  The empty subset
// lands in `even`, flagged by includes_empty.
inline EulerianCount count_eulerian_structures(const AugmentedOrientation& a, int cap = 26) {
  ValidationReport r = validate_augmented(a);
  if (!r.ok()) throw Error("invalid augmented orientation: " + r.summary());
  if (static_cast<int>(a.g.edges.size()) > cap)
    throw CapExceeded("count_eulerian_structures: " + std::to_string(a.g.edges.size()) +
                      " edges exceed cap " + std::to_string(cap));
  EulerianCount out;
  detail::eulerian_scan(a, [&](const std::vector<int>& chosen) {
    (chosen.size() % 2 == 0 ? out.even : out.odd) += 1;
  });
  return out;
}

// The nonempty balanced subsets themselves, for structural spot checks.
inline std::vector<std::vector<int>> enumerate_eulerian_structures(
    const AugmentedOrientation& a, int cap = 20) {
  ValidationReport r = validate_augmented(a);
  if (!r.ok()) throw Error("invalid augmented orientation: " + r.summary());
  if (static_cast<int>(a.g.edges.size()) > cap)
    throw CapExceeded("enumerate_eulerian_structures: " + std::to_string(a.g.edges.size()) +
                      " edges exceed cap " + std::to_string(cap));
  std::vector<std::vector<int>> out;
  detail::eulerian_scan(a, [&](const std::vector<int>& chosen) {
    if (!chosen.empty()) out.push_back(chosen);
  });
  return out;
}

// Directed cycle search restricted to the given edge subset.
inline bool has_directed_cycle(const AugmentedOrientation& a, const std::vector<int>& edge_ids) {
  std::vector<std::vector<int>> adj(a.g.n);
  for (int k : edge_ids) adj[a.g.edges[k].other(a.head[k])].push_back(a.head[k]);
  std::vector<int> state(a.g.n, 0);  // 0 new, 1 on stack, 2 done
  auto dfs = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && self(self, w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < a.g.n; ++v)
    if (state[v] == 0 && dfs(dfs, v)) return true;
  return false;
}

// The certificate: the procedure's orientation and strengths over all edges,
// the doubled tree, and the resulting bound max_aug_indegree + 1.
struct ATCertificate {
  PlaneTriangulation base;
  AugmentedOrientation augmented;  // edge ids follow base.edges()
  std::vector<int> doubled_tree;
  int max_aug_indegree = 0;
  std::optional<EulerianCount> eulerian;
  int claimed_bound = 0;
};

// Run the procedure, package the result, and when the instance is small
// enough prove "no nonempty Eulerian structure" by exhaustive count.
inline ATCertificate build_certificate(const PlaneTriangulation& t, int eulerian_cap = 26) {
  ThomassenResult res = thomassen_procedure(t);
  ATCertificate cert{t, {simple_graph_of(t), res.head, res.strength},
                     doubled_edges(res), 0, std::nullopt, 0};
  cert.max_aug_indegree = max_augmented_indegree(cert.augmented);
  if (cert.max_aug_indegree > 4)
    throw Error("procedure exceeded augmented in-degree 4");  // cannot happen
  cert.claimed_bound = cert.max_aug_indegree + 1;
  if (static_cast<int>(t.edge_total()) <= eulerian_cap) {
    EulerianCount ec = count_eulerian_structures(cert.augmented, eulerian_cap);
    if (ec.even != 1 || ec.odd != 0) {  // cannot happen; witness the refutation
      auto witness = enumerate_eulerian_structures(cert.augmented, eulerian_cap);
      std::string ids;
      if (!witness.empty())
        for (int e : witness[0]) ids += (ids.empty() ? "" : ",") + std::to_string(e);
      throw Error("certificate admits a nonempty Eulerian structure, edge ids [" +
                  ids + "]");
    }
    cert.eulerian = ec;
  }
  return cert;
}

// Removal order by repeated minimum degree (bucket queue, ties by vertex
// id); also returns the largest degree seen at a removal.
inline std::pair<std::vector<int>, int> degeneracy_removal(const SimpleGraph& g) {
  ValidationReport r = validate_simple_graph(g);
  if (!r.ok()) throw Error("invalid graph: " + r.summary());
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> deg(g.n);
  std::vector<std::set<int>> bucket(g.n + 1);
  for (int v = 0; v < g.n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    bucket[deg[v]].insert(v);
  }
  std::vector<char> gone(g.n, 0);
  std::vector<int> order;
  int max_removal_degree = 0;
  for (int round = 0; round < g.n; ++round) {
    int d = 0;
    while (bucket[d].empty()) ++d;
    int v = *bucket[d].begin();
    bucket[d].erase(bucket[d].begin());
    gone[v] = 1;
    order.push_back(v);
    max_removal_degree = std::max(max_removal_degree, d);
    for (int w : adj[v]) {
      if (gone[w]) continue;
      bucket[deg[w]].erase(w);
      bucket[--deg[w]].insert(w);
    }
  }
  return {order, max_removal_degree};
}

struct ForestDecomposition {
  Color removed;              // which realizer class is the forest
  std::vector<int> forest;    // its edge ids
  std::vector<int> head;      // orientation of the rest; -1 on forest edges
  std::vector<int> removal_order;  // 2-degeneracy witness for t - F
};

// F is one color class of the canonical realizer.  What remains carries the
// realizer orientation on the interior (in-degree exactly 2 there) plus an
// acyclic orientation of the outer triangle into the root of the removed
// color; acyclicity of the whole is verified by topological sort.
inline ForestDecomposition forest_decomposition(const PlaneTriangulation& t,
                                                Color removed = Color::green) {
  Realizer rz = realizer_from_orientation(canonical_orientation(t));
  ForestDecomposition out{removed, {}, std::vector<int>(t.edge_total(), -1), {}};
  for (int e = 0; e < t.edge_total(); ++e) {
    if (rz.color[e] == int(removed))
      out.forest.push_back(e);
    else if (t.interior_edge(e))
      out.head[e] = rz.head[e];
  }
  // outer triangle: both other corners point into the removed color's root
  const int sink = rz.roots[int(removed)];
  std::vector<int> rest;
  for (int i = 0; i < 3; ++i)
    if (t.outer_vertex(i) != sink) rest.push_back(t.outer_vertex(i));
  out.head[t.emb().edge_id(rest[0], rest[1])] = rest[1];
  out.head[t.emb().edge_id(rest[0], sink)] = sink;
  out.head[t.emb().edge_id(rest[1], sink)] = sink;

  // in-degree bounds: 2 at interior vertices, at most 2 outside
  std::vector<int> indeg(t.n(), 0);
  for (int e = 0; e < t.edge_total(); ++e)
    if (out.head[e] >= 0) ++indeg[out.head[e]];
  for (int v = 0; v < t.n(); ++v) {
    if (indeg[v] > 2) throw Error("in-degree above 2 in the decomposition");
    if (t.interior_vertex(v) && indeg[v] != 2)
      throw Error("interior in-degree is not 2 in the decomposition");
  }

  // acyclicity by Kahn's algorithm
  {
    std::vector<std::vector<int>> adj(t.n());
    std::vector<int> d = indeg;
    for (int e = 0; e < t.edge_total(); ++e)
      if (out.head[e] >= 0) adj[t.edges()[e].other(out.head[e])].push_back(out.head[e]);
    std::vector<int> q;
    for (int v = 0; v < t.n(); ++v)
      if (d[v] == 0) q.push_back(v);
    size_t taken = 0;
    while (taken < q.size()) {
      int v = q[taken++];
      for (int w : adj[v])
        if (--d[w] == 0) q.push_back(w);
    }
    if (taken != static_cast<size_t>(t.n()))
      throw Error("decomposition orientation contains a directed cycle");
  }

  // t - F is 2-degenerate
  SimpleGraph rest_graph{t.n(), {}};
  for (int e = 0; e < t.edge_total(); ++e)
    if (out.head[e] >= 0) rest_graph.edges.push_back(t.edges()[e]);
  auto [order, worst] = degeneracy_removal(rest_graph);
  if (worst > 2) throw Error("t - F is not 2-degenerate");
  out.removal_order = std::move(order);
  return out;
}

}  // namespace atcert
