#pragma once

// JSON serialization for graphs, orientations, realizers, traces, and
// certificates, plus strict parsers for each.  Emission is deterministic:
// ordered keys, two-space indentation, trailing newline.

#include <json.hpp>

#include "atcert/certificate.hpp"

namespace atcert {

using Json = nlohmann::ordered_json;

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const Json& require_key(const Json& j, const char* key, const char* who) {
  if (!j.is_object()) throw Error(std::string(who) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string(who) + ": missing key \"" + key + "\"");
  return *it;
}

inline int require_int(const Json& j, const char* who) {
  if (!j.is_number_integer()) throw Error(std::string(who) + ": expected an integer");
  return j.get<int>();
}

inline std::vector<int> require_int_array(const Json& j, const char* who) {
  if (!j.is_array()) throw Error(std::string(who) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(require_int(x, who));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph: {"n": ..., "rotations": [[...], ...], "outer_face": [...]}

inline Json graph_to_json(const PlaneGraph& g) {
  Json j;
  j["n"] = g.n;
  j["rotations"] = g.rotations;
  j["outer_face"] = g.outer_face;
  return j;
}

inline PlaneGraph graph_from_json(const Json& j) {
  PlaneGraph g;
  g.n = detail::require_int(detail::require_key(j, "n", "graph"), "graph.n");
  const Json& rot = detail::require_key(j, "rotations", "graph");
  if (!rot.is_array()) throw Error("graph.rotations: expected an array");
  for (const auto& r : rot)
    g.rotations.push_back(detail::require_int_array(r, "graph.rotations"));
  g.outer_face = detail::require_int_array(
      detail::require_key(j, "outer_face", "graph"), "graph.outer_face");
  return g;
}

// ---------------------------------------------------------------------------
// edge records: [{"u", "v", "head", "color", "strength"}, ...]
// "head" is null for unoriented edges, "color" is null for uncolored ones.

namespace detail {

inline Json edge_record(const Edge& e, int head, int color, int strength) {
  Json r;
  r["u"] = e.u;
  r["v"] = e.v;
  if (head < 0)
    r["head"] = nullptr;
  else
    r["head"] = head;
  if (color < 0)
    r["color"] = nullptr;
  else
    r["color"] = color_name(static_cast<Color>(color));
  r["strength"] = strength;
  return r;
}

}  // namespace detail

struct EdgeRecords {
  int n = 0;  // inferred as max endpoint + 1 unless the caller overrides
  std::vector<Edge> edges;
  std::vector<int> head;      // -1 for null
  std::vector<int> color;     // -1 for null
  std::vector<int> strength;  // defaults to 1
};

inline Json orientation_to_json(const InternalOrientation& o) {
  Json out = Json::array();
  for (int e = 0; e < o.base.edge_total(); ++e)
    out.push_back(detail::edge_record(o.base.edges()[e], o.head[e], -1, 1));
  return out;
}

inline Json realizer_to_json(const Realizer& rz) {
  Json out = Json::array();
  for (int e = 0; e < rz.base.edge_total(); ++e)
    out.push_back(detail::edge_record(rz.base.edges()[e], rz.head[e], rz.color[e], 1));
  return out;
}

inline Json augmented_to_json(const AugmentedOrientation& a,
                              const std::vector<int>* color = nullptr) {
  Json out = Json::array();
  for (size_t k = 0; k < a.g.edges.size(); ++k)
    out.push_back(detail::edge_record(a.g.edges[k], a.head[k],
                                      color ? (*color)[k] : -1, a.strength[k]));
  return out;
}

inline EdgeRecords edge_records_from_json(const Json& j) {
  if (!j.is_array()) throw Error("edge records: expected an array");
  EdgeRecords out;
  for (const auto& r : j) {
    int u = detail::require_int(detail::require_key(r, "u", "edge record"), "edge.u");
    int v = detail::require_int(detail::require_key(r, "v", "edge record"), "edge.v");
    if (u == v || u < 0 || v < 0) throw Error("edge record: bad endpoints");
    out.edges.push_back(Edge(u, v));
    out.n = std::max({out.n, u + 1, v + 1});

    const Json& h = detail::require_key(r, "head", "edge record");
    out.head.push_back(h.is_null() ? -1 : detail::require_int(h, "edge.head"));

    auto cit = r.find("color");
    if (cit == r.end() || cit->is_null()) {
      out.color.push_back(-1);
    } else {
      const std::string name = cit->get<std::string>();
      int c = -1;
      for (int k = 0; k < 3; ++k)
        if (name == color_name(static_cast<Color>(k))) c = k;
      if (c < 0) throw Error("edge record: unknown color \"" + name + "\"");
      out.color.push_back(c);
    }

    auto sit = r.find("strength");
    out.strength.push_back(sit == r.end() || sit->is_null()
                               ? 1
                               : detail::require_int(*sit, "edge.strength"));
  }
  return out;
}

// Rebuild a fully-oriented augmented orientation from parsed records.
inline AugmentedOrientation augmented_from_records(const EdgeRecords& rec) {
  AugmentedOrientation a{{rec.n, rec.edges}, rec.head, rec.strength};
  // the record order is free, but counting wants sorted ids
  std::vector<size_t> idx(rec.edges.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t x, size_t y) { return rec.edges[x] < rec.edges[y]; });
  a.g.edges.clear();
  a.head.clear();
  a.strength.clear();
  for (size_t i : idx) {
    a.g.edges.push_back(rec.edges[i]);
    a.head.push_back(rec.head[i]);
    a.strength.push_back(rec.strength[i]);
  }
  ValidationReport r = validate_augmented(a);
  if (!r.ok()) throw Error("augmented orientation: " + r.summary());
  return a;
}

// ---------------------------------------------------------------------------
// procedure trace

namespace detail {

inline Json oriented_record_to_json(const PlaneTriangulation& t,
                                    const OrientedEdgeRecord& r) {
  Json j;
  j["u"] = t.edges()[r.eid].u;
  j["v"] = t.edges()[r.eid].v;
  j["head"] = r.head;
  j["strength"] = r.strength;
  return j;
}

inline OrientedEdgeRecord oriented_record_from_json(const PlaneTriangulation& t,
                                                    const Json& j) {
  int u = require_int(require_key(j, "u", "trace record"), "trace.u");
  int v = require_int(require_key(j, "v", "trace record"), "trace.v");
  OrientedEdgeRecord r;
  r.eid = t.emb().edge_id(u, v);
  r.head = require_int(require_key(j, "head", "trace record"), "trace.head");
  r.strength = require_int(require_key(j, "strength", "trace record"), "trace.strength");
  return r;
}

}  // namespace detail

inline Json trace_to_json(const PlaneTriangulation& t, const ProcedureTrace& tr) {
  Json j;
  j["preoriented"] = detail::oriented_record_to_json(t, tr.preoriented);
  Json steps = Json::array();
  for (const TraceStep& s : tr.steps) {
    Json js;
    js["kind"] = s.kind == TraceStep::Kind::chord ? "chord" : "orienting";
    js["walk"] = s.walk;
    if (s.kind == TraceStep::Kind::chord) {
      Json chord;
      chord["u"] = t.edges()[s.chord_eid].u;
      chord["v"] = t.edges()[s.chord_eid].v;
      js["chord"] = chord;
      js["walk1"] = s.walk1;
      js["walk2"] = s.walk2;
    } else {
      js["central"] = s.central;
      Json oriented = Json::array();
      for (const OrientedEdgeRecord& r : s.oriented)
        oriented.push_back(detail::oriented_record_to_json(t, r));
      js["oriented"] = oriented;
      js["next_walk"] = s.next_walk;
    }
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline ProcedureTrace trace_from_json(const PlaneTriangulation& t, const Json& j) {
  ProcedureTrace tr;
  tr.preoriented = detail::oriented_record_from_json(
      t, detail::require_key(j, "preoriented", "trace"));
  const Json& steps = detail::require_key(j, "steps", "trace");
  if (!steps.is_array()) throw Error("trace.steps: expected an array");
  for (const Json& js : steps) {
    TraceStep s;
    const std::string kind =
        detail::require_key(js, "kind", "trace step").get<std::string>();
    s.walk = detail::require_int_array(detail::require_key(js, "walk", "trace step"),
                                       "trace.walk");
    if (kind == "chord") {
      s.kind = TraceStep::Kind::chord;
      const Json& chord = detail::require_key(js, "chord", "trace step");
      s.chord_eid = t.emb().edge_id(
          detail::require_int(detail::require_key(chord, "u", "chord"), "chord.u"),
          detail::require_int(detail::require_key(chord, "v", "chord"), "chord.v"));
      s.walk1 = detail::require_int_array(detail::require_key(js, "walk1", "trace step"),
                                          "trace.walk1");
      s.walk2 = detail::require_int_array(detail::require_key(js, "walk2", "trace step"),
                                          "trace.walk2");
    } else if (kind == "orienting") {
      s.kind = TraceStep::Kind::orienting;
      s.central = detail::require_int(detail::require_key(js, "central", "trace step"),
                                      "trace.central");
      const Json& oriented = detail::require_key(js, "oriented", "trace step");
      if (!oriented.is_array()) throw Error("trace.oriented: expected an array");
      for (const Json& r : oriented)
        s.oriented.push_back(detail::oriented_record_from_json(t, r));
      s.next_walk = detail::require_int_array(
          detail::require_key(js, "next_walk", "trace step"), "trace.next_walk");
    } else {
      throw Error("trace step: unknown kind \"" + kind + "\"");
    }
    tr.steps.push_back(std::move(s));
  }
  return tr;
}

// ---------------------------------------------------------------------------
// certificate: schema "at-certificate/1"

inline Json eulerian_to_json(const EulerianCount& ec) {
  Json j;
  j["even"] = ec.even;
  j["odd"] = ec.odd;
  j["includes_empty"] = ec.includes_empty;
  return j;
}

inline Json certificate_to_json(const ATCertificate& cert) {
  Json j;
  j["format"] = "at-certificate/1";
  j["n"] = cert.base.n();
  j["graph"] = graph_to_json(cert.base.graph());
  auto rz = realizer_from_orientation(canonical_orientation(cert.base));
  j["edges"] = augmented_to_json(cert.augmented, &rz.color);
  j["doubled_tree"] = cert.doubled_tree;
  j["max_aug_indegree"] = cert.max_aug_indegree;
  if (cert.eulerian.has_value())
    j["eulerian"] = eulerian_to_json(*cert.eulerian);
  else
    j["eulerian"] = nullptr;
  j["claimed_bound"] = cert.claimed_bound;
  return j;
}

inline ATCertificate certificate_from_json(const Json& j) {
  const std::string format =
      detail::require_key(j, "format", "certificate").get<std::string>();
  if (format != "at-certificate/1")
    throw Error("certificate: unsupported format \"" + format + "\"");

  auto base = PlaneTriangulation::checked(
      graph_from_json(detail::require_key(j, "graph", "certificate")));
  if (base.n() != detail::require_int(detail::require_key(j, "n", "certificate"),
                                      "certificate.n"))
    throw Error("certificate: n does not match the graph");

  auto rec = edge_records_from_json(detail::require_key(j, "edges", "certificate"));
  auto augmented = augmented_from_records(rec);
  if (augmented.g.edges != base.edges())
    throw Error("certificate: edge list does not match the graph");

  ATCertificate cert{std::move(base), std::move(augmented), {}, 0, std::nullopt, 0};
  cert.doubled_tree = detail::require_int_array(
      detail::require_key(j, "doubled_tree", "certificate"), "certificate.doubled_tree");
  for (int e : cert.doubled_tree) {
    if (e < 0 || e >= cert.base.edge_total())
      throw Error("certificate: doubled_tree edge id out of range");
    if (cert.augmented.strength[e] != 2)
      throw Error("certificate: doubled_tree edge lacks strength 2");
  }
  cert.max_aug_indegree = detail::require_int(
      detail::require_key(j, "max_aug_indegree", "certificate"),
      "certificate.max_aug_indegree");
  if (cert.max_aug_indegree != max_augmented_indegree(cert.augmented))
    throw Error("certificate: max_aug_indegree does not match the orientation");

  const Json& ec = detail::require_key(j, "eulerian", "certificate");
  if (!ec.is_null()) {
    EulerianCount count;
    count.even = detail::require_key(ec, "even", "eulerian").get<long long>();
    count.odd = detail::require_key(ec, "odd", "eulerian").get<long long>();
    count.includes_empty =
        detail::require_key(ec, "includes_empty", "eulerian").get<bool>();
    cert.eulerian = count;
  }
  cert.claimed_bound = detail::require_int(
      detail::require_key(j, "claimed_bound", "certificate"), "certificate.claimed_bound");
  return cert;
}

// ---------------------------------------------------------------------------
// forest decomposition

inline Json decomposition_to_json(const PlaneTriangulation& t,
                                  const ForestDecomposition& fd) {
  Json j;
  j["removed"] = color_name(fd.removed);
  j["forest"] = fd.forest;
  Json edges = Json::array();
  for (int e = 0; e < t.edge_total(); ++e)
    edges.push_back(detail::edge_record(t.edges()[e], fd.head[e], -1, 1));
  j["edges"] = edges;
  j["removal_order"] = fd.removal_order;
  return j;
}

}  // namespace atcert
