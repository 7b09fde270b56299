// Command-line front door: ingest graph JSON, run the pipeline, persist
// certificates and drawings.  Exit codes: 0 success, 1 verification
// failure, 2 usage/input error (including cap refusals).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "atcert/export.hpp"
#include "atcert/generate.hpp"
#include "atcert/json_io.hpp"
#include "atcert/polynomial.hpp"

namespace {

using namespace atcert;

// Errors in reading or decoding inputs exit 2; everything semantic exits 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
}

// Wrap the decoding phase so schema problems exit 2, not 1.
template <class F>
auto decode(F&& f) {
  try {
    return f();
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << content;
}

void log_step(Json j) { std::cerr << j.dump() << "\n"; }

Json load_graph_json(const std::string& input) {
  return decode([&] { return parse_json(read_input(input)); });
}

PlaneGraph load_graph(const std::string& input) {
  return decode([&] { return graph_from_json(parse_json(read_input(input))); });
}

// Shared head of most pipelines: parse, validate, report, require a clean
// embedding (exit 1 otherwise via Error).
PlaneGraph validated_graph(const std::string& input) {
  PlaneGraph g = load_graph(input);
  ValidationReport r = validate(g);
  log_step({{"step", "validate"}, {"ok", r.ok()}, {"problems", r.problems}});
  if (!r.ok()) throw Error("invalid embedding: " + r.summary());
  return g;
}

PlaneTriangulation triangulation_of(PlaneGraph g) {
  if (validate_triangulation(g).ok())
    return PlaneTriangulation::checked(std::move(g));
  TriangulateResult res = triangulate(g);
  Json added = Json::array();
  for (const Edge& e : res.added) added.push_back({{"u", e.u}, {"v", e.v}});
  log_step({{"step", "triangulate"}, {"added", added}});
  return std::move(res.triangulation);
}

int run_validate(const std::string& input, const std::string& out) {
  PlaneGraph g = load_graph(input);
  ValidationReport r = validate(g);
  Json result;
  result["ok"] = r.ok();
  result["n"] = g.n;
  result["edges"] = static_cast<int>(edge_count(g));
  result["triangulation"] = r.ok() && validate_triangulation(g).ok();
  result["problems"] = r.problems;
  emit(out, dump_json(result));
  return r.ok() ? 0 : 1;
}

int run_triangulate(const std::string& input, const std::string& out) {
  PlaneGraph g = validated_graph(input);
  TriangulateResult res = triangulate(g);
  log_step({{"step", "triangulate"}, {"added", static_cast<int>(res.added.size())}});
  emit(out, dump_json(graph_to_json(res.triangulation.graph())));
  return 0;
}

int run_realizer(const std::string& input, const std::string& out) {
  auto t = PlaneTriangulation::checked(validated_graph(input));
  auto rz = realizer_from_orientation(canonical_orientation(t));
  log_step({{"step", "realizer"}, {"roots", rz.roots}});
  emit(out, dump_json(realizer_to_json(rz)));
  return 0;
}

int run_canonical(const std::string& input, const std::string& out) {
  auto t = PlaneTriangulation::checked(validated_graph(input));
  auto o = canonical_orientation(t);
  log_step({{"step", "canonical"}, {"edges", t.edge_total()}});
  emit(out, dump_json(orientation_to_json(o)));
  return 0;
}

int run_certify(const std::string& input, const std::string& out, int cap_eulerian,
                int cap_expand) {
  auto t = triangulation_of(validated_graph(input));
  auto cert = build_certificate(t, cap_eulerian);
  log_step({{"step", "thomassen"},
            {"max_aug_indegree", cert.max_aug_indegree},
            {"doubled", static_cast<int>(cert.doubled_tree.size())}});
  if (cert.eulerian.has_value())
    log_step({{"step", "eulerian"},
              {"even", cert.eulerian->even},
              {"odd", cert.eulerian->odd}});
  else
    log_step({{"step", "eulerian"}, {"skipped", "cap"}, {"cap", cap_eulerian}});

  if (t.edge_total() <= cap_expand) {
    auto rep = certify_monomial(cert, cap_expand);
    log_step({{"step", "monomial"},
              {"coefficient", rep.coefficient},
              {"alpha_w", rep.alpha_w},
              {"alpha_f", rep.alpha_f},
              {"at_bound", rep.at_bound},
              {"ok", rep.ok()}});
    if (!rep.ok()) throw Error("monomial certification failed: " + rep.checks.summary());
  } else {
    log_step({{"step", "monomial"}, {"skipped", "cap"}, {"cap", cap_expand}});
  }
  emit(out, dump_json(certificate_to_json(cert)));
  return 0;
}

int run_eulerian_count(const std::string& input, const std::string& out,
                       int cap_eulerian) {
  Json j = load_graph_json(input);
  bool from_certificate = j.is_object() && j.contains("format");
  AugmentedOrientation a = decode([&] {
    if (from_certificate) return certificate_from_json(j).augmented;
    return augmented_from_records(edge_records_from_json(j));
  });
  EulerianCount ec = count_eulerian_structures(a, cap_eulerian);
  log_step({{"step", "eulerian"}, {"even", ec.even}, {"odd", ec.odd}});
  emit(out, dump_json(eulerian_to_json(ec)));
  if (from_certificate && (ec.even != 1 || ec.odd != 0)) {
    std::string witness = "unavailable above the enumeration cap";
    if (a.g.edges.size() <= 20) {
      auto all = enumerate_eulerian_structures(a);
      if (!all.empty()) {
        witness.clear();
        for (int e : all[0]) witness += (witness.empty() ? "" : ",") + std::to_string(e);
      }
    }
    throw Error("certificate admits a nonempty Eulerian structure, edge ids [" +
                witness + "]");
  }
  return 0;
}

SimpleGraph simple_graph_from(const std::string& input) {
  PlaneGraph g = validated_graph(input);
  Embedding emb = Embedding::build(std::move(g));
  return {emb.n(), emb.edges()};
}

int run_polynomial(const std::string& input, const std::string& out, int cap_expand) {
  SimpleGraph g = simple_graph_from(input);
  auto p = graph_polynomial(g, cap_expand);
  log_step({{"step", "polynomial"},
            {"terms", static_cast<int>(p.terms.size())},
            {"degree", p.degree()}});
  emit(out, to_canonical_text(p) + "\n");
  return 0;
}

int run_at_exact(const std::string& input, const std::string& out, int cap_expand) {
  SimpleGraph g = simple_graph_from(input);
  int at = at_number_exact(g, cap_expand);
  log_step({{"step", "at-exact"}, {"value", at}});
  emit(out, std::to_string(at) + "\n");
  return 0;
}

int run_decompose(const std::string& input, const std::string& out,
                  const std::string& color_arg) {
  auto t = PlaneTriangulation::checked(validated_graph(input));
  int c = -1;
  for (int k = 0; k < 3; ++k)
    if (color_arg == color_name(static_cast<Color>(k))) c = k;
  if (c < 0) throw InputError("unknown color \"" + color_arg + "\"");
  auto fd = forest_decomposition(t, static_cast<Color>(c));
  log_step({{"step", "decompose"},
            {"removed", color_arg},
            {"forest_edges", static_cast<int>(fd.forest.size())}});
  emit(out, dump_json(decomposition_to_json(t, fd)));
  return 0;
}

int run_draw(const std::string& input, const std::string& out) {
  auto t = PlaneTriangulation::checked(validated_graph(input));
  auto rz = realizer_from_orientation(canonical_orientation(t));
  auto d = schnyder_drawing(rz);
  log_step({{"step", "draw"}, {"grid", 2 * t.n() - 5}});
  emit(out, to_svg(rz, d));
  return 0;
}

int run_gen(int n, std::uint64_t seed, const std::string& out) {
  auto t = stacked_triangulation({n, seed});
  log_step({{"step", "gen"}, {"n", n}, {"seed", seed}});
  emit(out, dump_json(graph_to_json(t.graph())));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alon-Tarsi certificates for planar graphs via Schnyder woods"};
  app.require_subcommand(1);

  std::string input, out;
  int cap_eulerian = 26, cap_expand = 20;
  int gen_n = 0;
  std::uint64_t seed = 0;
  std::string removed_color = "green";

  auto add_io = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input)
      cmd->add_option("input", input, "graph JSON file, or - for stdin")->required();
    cmd->add_option("--out", out, "output file (default: stdout)");
  };

  auto* c_validate = app.add_subcommand("validate", "check a rotation-system embedding");
  add_io(c_validate);
  auto* c_triangulate = app.add_subcommand("triangulate", "add chords until all faces are triangles");
  add_io(c_triangulate);
  auto* c_realizer = app.add_subcommand("realizer", "three-color the canonical orientation");
  add_io(c_realizer);
  auto* c_canonical = app.add_subcommand("canonical", "the unique orientation without clockwise cycles");
  add_io(c_canonical);
  auto* c_certify = app.add_subcommand("certify", "build and verify an at-certificate/1");
  add_io(c_certify);
  c_certify->add_option("--cap-eulerian", cap_eulerian, "edge cap for structure counting");
  c_certify->add_option("--cap-expand", cap_expand, "edge cap for polynomial expansion");
  auto* c_eulerian = app.add_subcommand("eulerian-count", "count Eulerian structures of an orientation or certificate");
  add_io(c_eulerian);
  c_eulerian->add_option("--cap-eulerian", cap_eulerian, "edge cap for structure counting");
  auto* c_polynomial = app.add_subcommand("polynomial", "expand the graph polynomial");
  add_io(c_polynomial);
  c_polynomial->add_option("--cap-expand", cap_expand, "edge cap for polynomial expansion");
  auto* c_at_exact = app.add_subcommand("at-exact", "exact Alon-Tarsi number by expansion");
  add_io(c_at_exact);
  c_at_exact->add_option("--cap-expand", cap_expand, "edge cap for polynomial expansion");
  auto* c_decompose = app.add_subcommand("decompose", "split into a forest and a 2-degenerate rest");
  add_io(c_decompose);
  c_decompose->add_option("--removed-color", removed_color, "color class to remove (red|green|blue)");
  auto* c_draw = app.add_subcommand("draw", "straight-line grid drawing as SVG");
  add_io(c_draw);
  auto* c_gen = app.add_subcommand("gen", "generate a stacked triangulation");
  c_gen->add_option("--n", gen_n, "number of vertices")->required();
  c_gen->add_option("--seed", seed, "generator seed");
  c_gen->add_option("--out", out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_validate->parsed()) return run_validate(input, out);
    if (c_triangulate->parsed()) return run_triangulate(input, out);
    if (c_realizer->parsed()) return run_realizer(input, out);
    if (c_canonical->parsed()) return run_canonical(input, out);
    if (c_certify->parsed()) return run_certify(input, out, cap_eulerian, cap_expand);
    if (c_eulerian->parsed()) return run_eulerian_count(input, out, cap_eulerian);
    if (c_polynomial->parsed()) return run_polynomial(input, out, cap_expand);
    if (c_at_exact->parsed()) return run_at_exact(input, out, cap_expand);
    if (c_decompose->parsed()) return run_decompose(input, out, removed_color);
    if (c_draw->parsed()) return run_draw(input, out);
    if (c_gen->parsed()) return run_gen(gen_n, seed, out);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}
