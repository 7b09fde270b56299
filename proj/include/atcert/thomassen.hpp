#pragma once

// The modified Thomassen procedure: recursively orients every edge of a
// near-triangulation and assigns strengths 1/2.  Chord steps split along a
// chord of the outer cycle; orienting steps remove the vertex after v2 in
// clockwise order, directing its outer-cycle edges into it (strength 1) and
// the rest away from it (strength 2).  The trace records enough per step to
// replay the run and check invariants I1-I3.

#include "atcert/schnyder.hpp"

namespace atcert {

struct OrientedEdgeRecord {
  int eid;
  int head;
  int strength;
};

struct TraceStep {
  enum class Kind { chord, orienting } kind;
  std::vector<int> walk;  // current outer cycle, clockwise, v1 first then v2
  // chord step
  int chord_eid = -1;
  std::vector<int> walk1;  // same distinguished pair, v1 first
  std::vector<int> walk2;  // new pair: walk2[0], walk2[1] = chord endpoints
  // orienting step
  int central = -1;
  std::vector<OrientedEdgeRecord> oriented;
  std::vector<int> next_walk;  // may shrink to just {v1, v2} when done
};

struct ProcedureTrace {
  OrientedEdgeRecord preoriented;
  std::vector<TraceStep> steps;
};

struct ThomassenResult {
  std::vector<int> head;      // per edge id, every edge oriented
  std::vector<int> strength;  // per edge id, 1 or 2
  ProcedureTrace trace;
};

namespace detail {

inline std::vector<char> vertex_mask(const Embedding& emb, const std::vector<int>& cycle) {
  auto sub = enclosed_subgraph(emb, cycle);
  std::vector<char> mask(emb.n(), 0);
  for (int v : sub.vertices) mask[v] = 1;
  return mask;
}

}  // namespace detail

// preoriented_head chooses the direction of the distinguished edge v1v2;
// default directs it v2 -> v1.
inline ThomassenResult thomassen_procedure(const NearTriangulation& nt,
                                           int preoriented_head = -1) {
  const Embedding& emb = nt.emb();
  const PlaneGraph& g = emb.graph();
  if (preoriented_head == -1) preoriented_head = nt.v1();
  if (preoriented_head != nt.v1() && preoriented_head != nt.v2())
    throw Error("preoriented head must be v1 or v2");

  ThomassenResult res;
  res.head.assign(emb.edge_total(), -1);
  res.strength.assign(emb.edge_total(), 0);

  auto orient = [&](int eid, int head, int strength) {
    if (res.head[eid] != -1) throw Error("edge oriented twice");
    res.head[eid] = head;
    res.strength[eid] = strength;
    return OrientedEdgeRecord{eid, head, strength};
  };

  {
    int e = emb.edge_id(nt.v1(), nt.v2());
    res.trace.preoriented = orient(e, preoriented_head, 1);
  }

  // clockwise distance from v2 (walk position 1) to walk position t
  auto dist_from_v2 = [](size_t t, size_t L) { return (t + L - 1) % L; };

  auto run = [&](auto&& self, const std::vector<int>& walk) -> void {
    const size_t L = walk.size();

    // chords: graph edges between non-consecutive walk vertices
    int best_i = -1, best_j = -1;
    size_t best_d = 0;
    int best_other = -1;
    for (size_t i = 0; i < L; ++i)
      for (size_t j = i + 2; j < L; ++j) {
        if (i == 0 && j == L - 1) continue;
        if (emb.find_edge(walk[i], walk[j]) < 0) continue;
        size_t di = dist_from_v2(i, L), dj = dist_from_v2(j, L);
        size_t d = std::min(di, dj);
        int other = di < dj ? walk[j] : walk[i];
        if (best_i < 0 || d < best_d || (d == best_d && other < best_other)) {
          best_i = static_cast<int>(i);
          best_j = static_cast<int>(j);
          best_d = d;
          best_other = other;
        }
      }

    if (best_i >= 0) {
      const size_t i = best_i, j = best_j;
      TraceStep st;
      st.kind = TraceStep::Kind::chord;
      st.walk = walk;
      st.chord_eid = emb.edge_id(walk[i], walk[j]);
      if (i == 0) {
        // chord at v1: the arc 0..j keeps the pair, the rest goes to walk2
        st.walk1.assign(walk.begin(), walk.begin() + j + 1);
        st.walk2.push_back(walk[0]);
        for (size_t p = j; p < L; ++p) st.walk2.push_back(walk[p]);
      } else {
        for (size_t p = 0; p <= i; ++p) st.walk1.push_back(walk[p]);
        for (size_t p = j; p < L; ++p) st.walk1.push_back(walk[p]);
        st.walk2.push_back(walk[j]);
        for (size_t p = i; p < j; ++p) st.walk2.push_back(walk[p]);
      }
      std::vector<int> w1 = st.walk1, w2 = st.walk2;
      res.trace.steps.push_back(std::move(st));
      self(self, w1);
      self(self, w2);
      return;
    }

    // no chord: orient around the vertex after v2
    TraceStep st;
    st.kind = TraceStep::Kind::orienting;
    st.walk = walk;
    const int v3 = walk[2];
    st.central = v3;
    const int vp = walk[1];           // clockwise predecessor of v3
    const int vn = walk[3 % L];       // clockwise successor (v1 on triangles)
    st.oriented.push_back(orient(emb.edge_id(vp, v3), v3, 1));
    st.oriented.push_back(orient(emb.edge_id(vn, v3), v3, 1));

    // fan: neighbours of v3 inside the current graph, counterclockwise
    // strictly between vp and vn; they replace v3 on the outer cycle
    std::vector<char> inside = detail::vertex_mask(emb, walk);
    std::vector<int> rot;
    for (int w : g.rotations[v3])
      if (inside[w]) rot.push_back(w);
    int pp = detail::index_of(rot, vp);
    std::vector<int> fan;
    for (size_t k = 1; k < rot.size(); ++k) {
      int w = rot[(pp + k) % rot.size()];
      if (w == vn) break;
      fan.push_back(w);
      st.oriented.push_back(orient(emb.edge_id(v3, w), w, 2));
    }

    st.next_walk = {walk[0], walk[1]};
    st.next_walk.insert(st.next_walk.end(), fan.begin(), fan.end());
    for (size_t p = 3; p < L; ++p) st.next_walk.push_back(walk[p]);
    std::vector<int> nw = st.next_walk;
    res.trace.steps.push_back(std::move(st));
    if (nw.size() >= 3) self(self, nw);
  };

  // normalize the outer walk to start v1, v2
  std::vector<int> walk = emb.outer().boundary;
  int at = detail::index_of(walk, nt.v1());
  std::rotate(walk.begin(), walk.begin() + at, walk.end());
  if (walk[1] != nt.v2()) throw Error("outer walk does not continue with v2");
  run(run, walk);

  for (int e = 0; e < emb.edge_total(); ++e)
    if (res.head[e] == -1) throw Error("procedure left an edge unoriented");
  return res;
}

inline ThomassenResult thomassen_procedure(const PlaneTriangulation& t) {
  return thomassen_procedure(NearTriangulation::of(t));
}

// Interior restriction of a procedure run on a full triangulation.
inline InternalOrientation interior_orientation(const PlaneTriangulation& t,
                                                const ThomassenResult& res) {
  std::vector<int> head(t.edge_total(), -1);
  for (int e = 0; e < t.edge_total(); ++e)
    if (t.interior_edge(e)) head[e] = res.head[e];
  return orientation_checked(t, std::move(head));
}

inline std::vector<int> doubled_edges(const ThomassenResult& res) {
  std::vector<int> out;
  for (size_t e = 0; e < res.strength.size(); ++e)
    if (res.strength[e] == 2) out.push_back(static_cast<int>(e));
  return out;
}

// Replay a trace against the host embedding, checking the three invariants:
// (I1) at the start of each step no inner edge of the current graph is
// oriented; (I2) from the second step on, every non-distinguished vertex of
// the current outer cycle has exactly one incoming oriented edge, off the
// cycle and doubled; (I3) edges touching a removed vertex and oriented
// later point away from it.  I2 presumes the run began with an orienting
// step, as any run on a full triangulation does; replaying a run that
// opened with a chord step needs check_i2 = false.
inline ValidationReport replay_trace(const NearTriangulation& nt,
                                     const ThomassenResult& res,
                                     bool check_i2 = true) {
  ValidationReport rep;
  const Embedding& emb = nt.emb();
  const auto& trace = res.trace;

  std::vector<int> oriented_at(emb.edge_total(), -1);  // step index, -2 = preoriented
  if (trace.preoriented.eid >= 0) oriented_at[trace.preoriented.eid] = -2;
  for (size_t k = 0; k < trace.steps.size(); ++k)
    for (const auto& r : trace.steps[k].oriented) {
      if (oriented_at[r.eid] != -1)
        rep.fail("edge " + std::to_string(r.eid) + " oriented twice in trace");
      oriented_at[r.eid] = static_cast<int>(k);
      if (r.head != res.head[r.eid] || r.strength != res.strength[r.eid])
        rep.fail("trace disagrees with result on edge " + std::to_string(r.eid));
    }
  for (int e = 0; e < emb.edge_total(); ++e)
    if (oriented_at[e] == -1) rep.fail("edge " + std::to_string(e) + " never oriented");
  if (!rep.ok()) return rep;

  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& st = trace.steps[k];
    std::vector<char> inside = detail::vertex_mask(emb, st.walk);
    std::vector<char> on_walk(emb.n(), 0);
    std::vector<char> walk_edge(emb.edge_total(), 0);
    for (size_t p = 0; p < st.walk.size(); ++p) {
      on_walk[st.walk[p]] = 1;
      walk_edge[emb.edge_id(st.walk[p], st.walk[(p + 1) % st.walk.size()])] = 1;
    }

    // I1: oriented edges of the current graph all lie on the outer cycle
    for (int e = 0; e < emb.edge_total(); ++e) {
      const Edge& ed = emb.edges()[e];
      if (!inside[ed.u] || !inside[ed.v]) continue;
      bool before = oriented_at[e] == -2 || (oriented_at[e] >= 0 && oriented_at[e] < static_cast<int>(k));
      if (before && !walk_edge[e])
        rep.fail("step " + std::to_string(k) + ": inner edge {" +
                 std::to_string(ed.u) + "," + std::to_string(ed.v) +
                 "} oriented early (I1)");
    }

    // I2: skipped for the very first step
    if (check_i2 && k > 0) {
      for (int v : st.walk) {
        if (v == st.walk[0] || v == st.walk[1]) continue;
        int count = 0, in_eid = -1;
        for (int e = 0; e < emb.edge_total(); ++e) {
          bool before = oriented_at[e] == -2 ||
                        (oriented_at[e] >= 0 && oriented_at[e] < static_cast<int>(k));
          if (before && res.head[e] == v) {
            ++count;
            in_eid = e;
          }
        }
        if (count != 1)
          rep.fail("step " + std::to_string(k) + ": vertex " + std::to_string(v) +
                   " has " + std::to_string(count) + " incoming edges (I2)");
        else if (walk_edge[in_eid] || res.strength[in_eid] != 2)
          rep.fail("step " + std::to_string(k) + ": incoming edge of " +
                   std::to_string(v) + " not an off-cycle doubled edge (I2)");
      }
    }
  }

  // I3: once removed, a vertex only gains outgoing edges
  std::vector<int> removed_at(emb.n(), -1);
  for (size_t k = 0; k < trace.steps.size(); ++k)
    if (trace.steps[k].kind == TraceStep::Kind::orienting)
      removed_at[trace.steps[k].central] = static_cast<int>(k);
  for (int e = 0; e < emb.edge_total(); ++e) {
    const Edge& ed = emb.edges()[e];
    for (int v : {ed.u, ed.v}) {
      if (removed_at[v] < 0 || oriented_at[e] < 0) continue;
      if (oriented_at[e] > removed_at[v] && res.head[e] == v)
        rep.fail("edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                 "} oriented into removed vertex " + std::to_string(v) + " (I3)");
    }
  }
  return rep;
}

}  // namespace atcert
