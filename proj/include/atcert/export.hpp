#pragma once

// Graphviz DOT and SVG renderings.  All coordinates are integers, so both
// outputs are byte-deterministic.

#include "atcert/canonical.hpp"

namespace atcert {

// Directed DOT graph; colored edges point tail -> head, exterior edges are
// gray and undirected.
inline std::string to_dot(const Realizer& rz) {
  const PlaneTriangulation& t = rz.base;
  std::string out = "digraph atcert {\n  node [shape=circle];\n";
  for (int e = 0; e < t.edge_total(); ++e) {
    const Edge& ed = t.edges()[e];
    if (rz.head[e] < 0) {
      out += "  " + std::to_string(ed.u) + " -> " + std::to_string(ed.v) +
             " [color=gray, dir=none];\n";
    } else {
      int tail = ed.other(rz.head[e]);
      out += "  " + std::to_string(tail) + " -> " + std::to_string(rz.head[e]) +
             " [color=" + color_name(static_cast<Color>(rz.color[e])) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

// Straight-line SVG of a drawing on the (2n-5) x (2n-5) grid, edges tinted
// by realizer color, exterior edges gray.
inline std::string to_svg(const Realizer& rz, const Drawing& d) {
  const PlaneTriangulation& t = rz.base;
  const long long side = 2 * t.n() - 5;
  const long long scale = 40, margin = 30, span = 2 * margin + side * scale;
  auto X = [&](int v) { return margin + d.pos[v][0] * scale; };
  auto Y = [&](int v) { return margin + (side - d.pos[v][1]) * scale; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(span) + "\" height=\"" + std::to_string(span) +
                    "\" viewBox=\"0 0 " + std::to_string(span) + " " +
                    std::to_string(span) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int e = 0; e < t.edge_total(); ++e) {
    const Edge& ed = t.edges()[e];
    const char* stroke =
        rz.color[e] < 0 ? "gray" : color_name(static_cast<Color>(rz.color[e]));
    out += "  <line x1=\"" + std::to_string(X(ed.u)) + "\" y1=\"" +
           std::to_string(Y(ed.u)) + "\" x2=\"" + std::to_string(X(ed.v)) +
           "\" y2=\"" + std::to_string(Y(ed.v)) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"2\"/>\n";
  }
  for (int v = 0; v < t.n(); ++v) {
    out += "  <circle cx=\"" + std::to_string(X(v)) + "\" cy=\"" +
           std::to_string(Y(v)) + "\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n";
    out += "  <text x=\"" + std::to_string(X(v)) + "\" y=\"" +
           std::to_string(Y(v) + 4) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + std::to_string(v) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace atcert
