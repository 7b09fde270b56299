#pragma once

// Sparse exact expansion of the graph polynomial and its augmented variant,
// alpha, exact Alon-Tarsi numbers for tiny graphs, and the orientation-sum
// coefficient oracle.  Everything here is an independent check on the
// certificate pipeline, so it favours directness over speed.
//
// Coefficients are 64-bit: every coefficient is a signed count of expansion
// choices, bounded by 2^E, and expansion refuses E > 32 outright.

#include <cctype>
#include <cstdlib>

#include "atcert/certificate.hpp"

namespace atcert {

// Exponent-vector keyed polynomial; the map order (ascending lexicographic)
// is the storage order, serialization walks it backwards.
struct SparsePolynomial {
  int nvars = 0;
  std::map<std::vector<int>, long long> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int best = -1;
    for (const auto& [m, c] : terms) {
      int d = 0;
      for (int e : m) d += e;
      best = std::max(best, d);
    }
    return best;
  }
  long long coefficient(const std::vector<int>& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const SparsePolynomial&) const = default;
};

namespace detail {

inline void add_term(SparsePolynomial& p, std::vector<int> m, long long c) {
  if (c == 0) return;
  auto [it, fresh] = p.terms.try_emplace(std::move(m), c);
  if (!fresh && (it->second += c) == 0) p.terms.erase(it);
}

// Multiply by a short factor given as (exponent bump on one variable, sign).
struct FactorTerm {
  int var;
  int exponent;
  long long coefficient;
};

inline SparsePolynomial multiply_factor(const SparsePolynomial& p,
                                        const std::vector<FactorTerm>& factor) {
  SparsePolynomial out{p.nvars, {}};
  for (const auto& [m, c] : p.terms)
    for (const auto& ft : factor) {
      std::vector<int> nm = m;
      nm[ft.var] += ft.exponent;
      add_term(out, std::move(nm), c * ft.coefficient);
    }
  return out;
}

inline SparsePolynomial one(int nvars) {
  SparsePolynomial p{nvars, {}};
  p.terms[std::vector<int>(nvars, 0)] = 1;
  return p;
}

inline void check_expansion_cap(size_t edges, int cap, const char* who) {
  if (static_cast<int>(edges) > cap || edges > 32)
    throw CapExceeded(std::string(who) + ": " + std::to_string(edges) +
                      " edges exceed cap " + std::to_string(std::min(cap, 32)));
}

}  // namespace detail

inline SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.nvars != b.nvars) throw Error("multiply: variable count mismatch");
  SparsePolynomial out{a.nvars, {}};
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> m = ma;
      for (int i = 0; i < out.nvars; ++i) m[i] += mb[i];
      detail::add_term(out, std::move(m), ca * cb);
    }
  return out;
}

// f_G = product over edges {i < j} of (x_i - x_j), expanded exactly.
inline SparsePolynomial graph_polynomial(const SimpleGraph& g, int cap = 20) {
  ValidationReport r = validate_simple_graph(g);
  if (!r.ok()) throw Error("invalid graph: " + r.summary());
  detail::check_expansion_cap(g.edges.size(), cap, "graph_polynomial");
  SparsePolynomial p = detail::one(g.n);
  for (const Edge& e : g.edges)
    p = detail::multiply_factor(p, {{e.u, 1, 1}, {e.v, 1, -1}});
  return p;
}

// W_{G,D} = product over edges {i < j} of (x_i^D(e) - x_j^D(e)); depends on
// the strengths only, not on the orientation.
inline SparsePolynomial augmented_polynomial(const AugmentedOrientation& a, int cap = 20) {
  ValidationReport r = validate_augmented(a);
  if (!r.ok()) throw Error("invalid augmented orientation: " + r.summary());
  detail::check_expansion_cap(a.g.edges.size(), cap, "augmented_polynomial");
  SparsePolynomial p = detail::one(a.g.n);
  for (size_t k = 0; k < a.g.edges.size(); ++k) {
    const Edge& e = a.g.edges[k];
    int d = a.strength[k];
    p = detail::multiply_factor(p, {{e.u, d, 1}, {e.v, d, -1}});
  }
  return p;
}

// Minimum over top-degree monomials of the largest single exponent.
inline int alpha(const SparsePolynomial& p) {
  if (p.is_zero()) throw Error("alpha of the zero polynomial");
  const int deg = p.degree();
  int best = -1;
  for (const auto& [m, c] : p.terms) {
    int total = 0, mx = 0;
    for (int e : m) {
      total += e;
      mx = std::max(mx, e);
    }
    if (total == deg && (best < 0 || mx < best)) best = mx;
  }
  return best;
}

inline int at_number_exact(const SimpleGraph& g, int cap = 20) {
  return alpha(graph_polynomial(g, cap)) + 1;
}

// Coefficient of monomial m in W_{G,D} by summing orientation signs:
// heading edge {i < j} at j contributes the -x_j^D term, so the sign is
// (-1)^(number of edges whose head is the larger endpoint).
inline long long coefficient_via_orientations(const SimpleGraph& g,
                                              const std::vector<int>& strength,
                                              const std::vector<int>& m,
                                              int cap = 26) {
  // heads are free here, so validate with a placeholder orientation
  AugmentedOrientation probe{g, {}, strength};
  probe.head.reserve(g.edges.size());
  for (const Edge& e : g.edges) probe.head.push_back(e.u);
  ValidationReport r = validate_augmented(probe);
  if (!r.ok()) throw Error("invalid input: " + r.summary());
  if (static_cast<int>(m.size()) != g.n) throw Error("monomial size mismatch");
  if (static_cast<int>(g.edges.size()) > cap)
    throw CapExceeded("coefficient_via_orientations: " + std::to_string(g.edges.size()) +
                      " edges exceed cap " + std::to_string(cap));

  std::vector<int> indeg(g.n, 0);
  std::vector<int> slack(g.n, 0);  // undecided incident strength
  for (size_t k = 0; k < g.edges.size(); ++k) {
    slack[g.edges[k].u] += strength[k];
    slack[g.edges[k].v] += strength[k];
  }
  for (int v = 0; v < g.n; ++v)
    if (m[v] < 0 || m[v] > slack[v]) return 0;

  long long sum = 0;
  auto rec = [&](auto&& self, size_t k, int sign) -> void {
    if (k == g.edges.size()) {
      sum += sign;
      return;
    }
    const Edge& e = g.edges[k];
    const int s = strength[k];
    slack[e.u] -= s;
    slack[e.v] -= s;
    for (int h : {e.u, e.v}) {
      indeg[h] += s;
      if (indeg[e.u] <= m[e.u] && indeg[e.v] <= m[e.v] &&
          m[e.u] - indeg[e.u] <= slack[e.u] && m[e.v] - indeg[e.v] <= slack[e.v])
        self(self, k + 1, h == e.v ? -sign : sign);
      indeg[h] -= s;
    }
    slack[e.u] += s;
    slack[e.v] += s;
  };
  rec(rec, 0, 1);
  return sum;
}

// Augmented in-degree sequence: the monomial the certificate stakes out.
inline std::vector<int> orientation_monomial(const AugmentedOrientation& a) {
  std::vector<int> m(a.g.n, 0);
  for (size_t k = 0; k < a.g.edges.size(); ++k) m[a.head[k]] += a.strength[k];
  return m;
}

struct MonomialCertification {
  std::vector<int> monomial;  // augmented in-degree sequence
  long long coefficient = 0;  // of that monomial in W_{G,D}
  int monomial_degree = 0;
  int polynomial_degree = 0;  // deg W = total strength
  int max_exponent = 0;
  int alpha_w = -1;
  int alpha_f = -1;
  int at_bound = 0;  // alpha_w + 1
  ValidationReport checks;
  bool ok() const { return checks.ok(); }
};

// The full verification chain behind "AT <= 5": the certificate monomial
// has coefficient +-1 in W, sits at top degree with exponents <= 4, W
// factors exactly as f_G times the geometric-sum product, and therefore
// alpha(f_G) <= alpha(W) <= 4.
inline MonomialCertification certify_monomial(const ATCertificate& cert, int cap = 20) {
  const AugmentedOrientation& a = cert.augmented;
  MonomialCertification rep;
  rep.monomial = orientation_monomial(a);
  for (int e : rep.monomial) {
    rep.monomial_degree += e;
    rep.max_exponent = std::max(rep.max_exponent, e);
  }

  SparsePolynomial w = augmented_polynomial(a, cap);
  rep.polynomial_degree = w.degree();
  rep.coefficient = w.coefficient(rep.monomial);
  rep.alpha_w = alpha(w);
  rep.at_bound = rep.alpha_w + 1;

  if (rep.coefficient != 1 && rep.coefficient != -1)
    rep.checks.fail("certificate monomial has coefficient " +
                    std::to_string(rep.coefficient) + ", expected +-1");
  if (rep.monomial_degree != rep.polynomial_degree)
    rep.checks.fail("certificate monomial is not of top degree");
  if (rep.max_exponent > 4)
    rep.checks.fail("certificate monomial has exponent above 4");
  if (rep.alpha_w > 4) rep.checks.fail("alpha(W) above 4");
  if (rep.alpha_w > rep.max_exponent)
    rep.checks.fail("alpha(W) above the certificate monomial's max exponent");

  // divisibility: W = f_G * prod over edges of sum_{i<D} x_u^i x_v^(D-1-i)
  SparsePolynomial f = graph_polynomial(a.g, cap);
  SparsePolynomial p = detail::one(a.g.n);
  for (size_t k = 0; k < a.g.edges.size(); ++k) {
    const int d = a.strength[k];
    if (d == 1) continue;
    SparsePolynomial gs{a.g.n, {}};
    for (int i = 0; i < d; ++i) {
      std::vector<int> m(a.g.n, 0);
      m[a.g.edges[k].u] = i;
      m[a.g.edges[k].v] = d - 1 - i;
      detail::add_term(gs, std::move(m), 1);
    }
    p = multiply(p, gs);
  }
  if (multiply(f, p) == w) {
    rep.alpha_f = alpha(f);
    if (rep.alpha_f > rep.alpha_w)
      rep.checks.fail("alpha(f) exceeds alpha(W) despite divisibility");
  } else {
    rep.checks.fail("W is not f_G times the geometric-sum product");
  }
  return rep;
}

// Canonical text form: terms in descending lexicographic exponent order,
// each as an explicitly signed coefficient followed by its variables,
// e.g. "+1 x0^2 x1 -1 x0^2 x2".
inline std::string to_canonical_text(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += ' ';
    out += (c < 0 ? '-' : '+');
    out += std::to_string(std::llabs(c));
    for (int v = 0; v < p.nvars; ++v) {
      if (m[v] == 0) continue;
      out += " x" + std::to_string(v);
      if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
  }
  return out;
}

// Monomial syntax: x<var>[^<exp>] joined by '*', e.g. "x0^2*x1".
inline std::vector<int> parse_monomial(const std::string& text, int nvars) {
  std::vector<int> m(nvars, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&] {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("parse_monomial: digit expected at position " + std::to_string(i));
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      value = value * 10 + (text[i++] - '0');
    return value;
  };
  skip_ws();
  if (i == text.size()) throw Error("parse_monomial: empty input");
  for (;;) {
    skip_ws();
    if (i >= text.size() || text[i] != 'x')
      throw Error("parse_monomial: 'x' expected at position " + std::to_string(i));
    ++i;
    int var = number();
    if (var >= nvars) throw Error("parse_monomial: variable x" + std::to_string(var) +
                                  " out of range");
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = number();
    }
    m[var] += exp;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '*')
      throw Error("parse_monomial: '*' expected at position " + std::to_string(i));
    ++i;
  }
  return m;
}

}  // namespace atcert
