#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "atcert/certificate.hpp"
#include "atcert/generate.hpp"
#include "fixtures.hpp"

using namespace atcert;

namespace {

// Oracle for the oracle: unpruned subset scan.
EulerianCount naive_count(const AugmentedOrientation& a) {
  const int m = static_cast<int>(a.g.edges.size());
  REQUIRE(m <= 20);
  EulerianCount out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<long long> bal(a.g.n, 0);
    int bits = 0;
    for (int k = 0; k < m; ++k) {
      if (!(mask >> k & 1)) continue;
      ++bits;
      bal[a.head[k]] += a.strength[k];
      bal[a.g.edges[k].other(a.head[k])] -= a.strength[k];
    }
    if (std::all_of(bal.begin(), bal.end(), [](long long b) { return b == 0; }))
      (bits % 2 ? out.odd : out.even) += 1;
  }
  return out;
}

AugmentedOrientation directed_cycle(int n, std::vector<int> strengths) {
  SimpleGraph g{n, {}};
  std::vector<int> head;
  for (int i = 0; i < n; ++i) {
    g.edges.push_back(Edge(i, (i + 1) % n));
    head.push_back((i + 1) % n);
  }
  // Edge normalizes endpoints, so rebuild in sorted-id order
  std::vector<size_t> idx(g.edges.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t x, size_t y) { return g.edges[x] < g.edges[y]; });
  AugmentedOrientation a{{n, {}}, {}, {}};
  for (size_t i : idx) {
    a.g.edges.push_back(g.edges[i]);
    a.head.push_back(head[i]);
    a.strength.push_back(strengths[i]);
  }
  return a;
}

bool topologically_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : arcs) {
    adj[u].push_back(v);
    ++indeg[v];
  }
  std::vector<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  size_t taken = 0;
  while (taken < q.size()) {
    int v = q[taken++];
    for (int w : adj[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  return taken == static_cast<size_t>(n);
}

}  // namespace

TEST_CASE("K4 certificate: in-degree 4 at the center, no structures") {
  auto t = PlaneTriangulation::checked(fixtures::k4());
  auto cert = build_certificate(t);
  CHECK(cert.max_aug_indegree == 4);
  CHECK(augmented_in_degree(cert.augmented, 3) == 4);
  CHECK(cert.claimed_bound == 5);
  CHECK(cert.doubled_tree == std::vector<int>{t.emb().edge_id(2, 3)});
  REQUIRE(cert.eulerian.has_value());
  CHECK(cert.eulerian->even == 1);
  CHECK(cert.eulerian->odd == 0);
  CHECK(cert.eulerian->includes_empty);

  auto naive = naive_count(cert.augmented);
  CHECK(naive.even == 1);
  CHECK(naive.odd == 0);
  CHECK(enumerate_eulerian_structures(cert.augmented).empty());
}

TEST_CASE("K3 certificate: bound 3, nothing doubled") {
  auto t = PlaneTriangulation::checked(fixtures::k3());
  auto cert = build_certificate(t);
  CHECK(cert.max_aug_indegree == 2);
  CHECK(cert.claimed_bound == 3);
  CHECK(cert.doubled_tree.empty());
  REQUIRE(cert.eulerian.has_value());
  CHECK(cert.eulerian->even == 1);
  CHECK(cert.eulerian->odd == 0);
}

TEST_CASE("octahedron certificate survives the 2^12 subset sweep") {
  auto t = PlaneTriangulation::checked(fixtures::octahedron());
  auto cert = build_certificate(t);
  CHECK(cert.max_aug_indegree == 4);
  CHECK(cert.claimed_bound == 5);
  REQUIRE(cert.eulerian.has_value());
  CHECK(cert.eulerian->even == 1);
  CHECK(cert.eulerian->odd == 0);

  auto naive = naive_count(cert.augmented);
  CHECK(naive.even == cert.eulerian->even);
  CHECK(naive.odd == cert.eulerian->odd);
  CHECK(enumerate_eulerian_structures(cert.augmented).empty());
}

TEST_CASE("directed cycles as counting fixtures") {
  auto c3 = directed_cycle(3, {1, 1, 1});
  auto ec3 = count_eulerian_structures(c3);
  CHECK(ec3.even == 1);
  CHECK(ec3.odd == 1);  // the full cycle, three edges

  auto c3s = directed_cycle(3, {2, 1, 1});
  auto ec3s = count_eulerian_structures(c3s);
  CHECK(ec3s.even == 1);
  CHECK(ec3s.odd == 0);  // strength 2 breaks the balance

  auto c4 = directed_cycle(4, {1, 1, 1, 1});
  auto ec4 = count_eulerian_structures(c4);
  CHECK(ec4.even == 2);  // empty plus the full cycle
  CHECK(ec4.odd == 0);

  for (auto* a : {&c3, &c3s, &c4}) {
    auto naive = naive_count(*a);
    auto fast = count_eulerian_structures(*a);
    CHECK(naive.even == fast.even);
    CHECK(naive.odd == fast.odd);
  }
}

TEST_CASE("nonempty Eulerian structures always contain a directed cycle") {
  // orient the K4 shell as a cycle so structures exist
  auto t = PlaneTriangulation::checked(fixtures::k4());
  AugmentedOrientation a{simple_graph_of(t), {}, std::vector<int>(6, 1)};
  a.head.assign(6, -1);
  auto set_head = [&](int u, int v, int h) { a.head[t.emb().edge_id(u, v)] = h; };
  set_head(0, 1, 1);
  set_head(1, 2, 2);
  set_head(0, 2, 0);
  for (int v : {0, 1, 2}) set_head(v, 3, 3);

  auto structures = enumerate_eulerian_structures(a);
  REQUIRE(structures.size() == 1);  // exactly the shell cycle
  CHECK(structures[0] ==
        std::vector<int>{t.emb().edge_id(0, 1), t.emb().edge_id(0, 2),
                         t.emb().edge_id(1, 2)});
  for (const auto& s : structures) CHECK(has_directed_cycle(a, s));

  auto ec = count_eulerian_structures(a);
  CHECK(ec.even == 1);
  CHECK(ec.odd == 1);

  // the same claim on every structure of every shell orientation of K4
  for (int mask = 0; mask < 8; ++mask) {
    auto b = a;
    b.head[t.emb().edge_id(0, 1)] = (mask & 1) ? 1 : 0;
    b.head[t.emb().edge_id(1, 2)] = (mask & 2) ? 2 : 1;
    b.head[t.emb().edge_id(0, 2)] = (mask & 4) ? 2 : 0;
    for (const auto& s : enumerate_eulerian_structures(b))
      CHECK(has_directed_cycle(b, s));
  }
}

TEST_CASE("certificates keep exterior vertices off directed cycles") {
  for (int n : {4, 6, 8, 10}) {
    auto t = n == 6 ? PlaneTriangulation::checked(fixtures::octahedron())
                    : stacked_triangulation({n, 7});
    auto cert = build_certificate(t);
    const auto& a = cert.augmented;

    std::vector<int> outer_edges;
    for (int e = 0; e < t.edge_total(); ++e) {
      if (t.interior_edge(e)) {
        // interior edges never head into the exterior
        CHECK(t.interior_vertex(a.head[e]));
      } else {
        outer_edges.push_back(e);
      }
    }
    // so any cycle through an exterior vertex would live on the outer
    // triangle, which is not directed
    CHECK_FALSE(has_directed_cycle(a, outer_edges));

    // outer edges follow the fixed extension rule
    int v1 = t.outer_vertex(0), v2 = t.outer_vertex(1), v3 = t.outer_vertex(2);
    CHECK(a.head[t.emb().edge_id(v1, v2)] == v1);
    CHECK(a.head[t.emb().edge_id(v1, v3)] == v3);
    CHECK(a.head[t.emb().edge_id(v2, v3)] == v3);
  }
}

TEST_CASE("forest decomposition on K4 removes one spoke") {
  auto t = PlaneTriangulation::checked(fixtures::k4());
  auto fd = forest_decomposition(t);
  CHECK(fd.removed == Color::green);
  CHECK(fd.forest == std::vector<int>{t.emb().edge_id(2, 3)});
  CHECK(fd.head[t.emb().edge_id(2, 3)] == -1);
  CHECK(fd.head[t.emb().edge_id(0, 3)] == 3);
  CHECK(fd.head[t.emb().edge_id(1, 3)] == 3);
  CHECK(fd.head[t.emb().edge_id(0, 1)] == 1);
  CHECK(fd.head[t.emb().edge_id(0, 2)] == 2);
  CHECK(fd.head[t.emb().edge_id(1, 2)] == 2);
  CHECK(fd.removal_order.size() == 4);
}

TEST_CASE("forest decomposition on K3 is the acyclic triangle") {
  auto t = PlaneTriangulation::checked(fixtures::k3());
  auto fd = forest_decomposition(t);
  CHECK(fd.forest.empty());
  std::vector<std::pair<int, int>> arcs;
  int indeg[3] = {0, 0, 0};
  for (int e = 0; e < 3; ++e) {
    REQUIRE(fd.head[e] >= 0);
    arcs.push_back({t.edges()[e].other(fd.head[e]), fd.head[e]});
    ++indeg[fd.head[e]];
  }
  CHECK(topologically_acyclic(3, arcs));
  CHECK(*std::max_element(indeg, indeg + 3) <= 2);
}

TEST_CASE("forest decomposition properties across colors and instances") {
  for (Color removed : {Color::red, Color::green, Color::blue}) {
    for (int n : {6, 8, 10}) {
      auto t = n == 6 ? PlaneTriangulation::checked(fixtures::octahedron())
                      : stacked_triangulation({n, 13});
      auto fd = forest_decomposition(t, removed);

      // partition: forest and oriented remainder cover each edge once
      std::vector<char> covered(t.edge_total(), 0);
      for (int e : fd.forest) {
        CHECK(fd.head[e] == -1);
        covered[e] = 1;
      }
      std::vector<std::pair<int, int>> arcs;
      std::vector<int> indeg(t.n(), 0);
      for (int e = 0; e < t.edge_total(); ++e) {
        if (fd.head[e] < 0) continue;
        CHECK_FALSE(covered[e]);
        covered[e] = 1;
        arcs.push_back({t.edges()[e].other(fd.head[e]), fd.head[e]});
        ++indeg[fd.head[e]];
      }
      CHECK(std::count(covered.begin(), covered.end(), 1) == t.edge_total());

      CHECK(topologically_acyclic(t.n(), arcs));
      for (int v = 0; v < t.n(); ++v) {
        CHECK(indeg[v] <= 2);
        if (t.interior_vertex(v)) CHECK(indeg[v] == 2);
      }

      // forest really is the removed color class and therefore acyclic
      auto rz = realizer_from_orientation(canonical_orientation(t));
      std::vector<int> cls;
      for (int e = 0; e < t.edge_total(); ++e)
        if (rz.color[e] == int(removed)) cls.push_back(e);
      CHECK(fd.forest == cls);

      // 2-degeneracy witness: replay the removal order
      CHECK(fd.removal_order.size() == static_cast<size_t>(t.n()));
      std::set<int> left(fd.removal_order.begin(), fd.removal_order.end());
      REQUIRE(left.size() == static_cast<size_t>(t.n()));
      for (int v : fd.removal_order) {
        int deg = 0;
        for (int e = 0; e < t.edge_total(); ++e) {
          if (fd.head[e] < 0) continue;
          const Edge& ed = t.edges()[e];
          if ((ed.u == v && left.count(ed.v)) || (ed.v == v && left.count(ed.u))) ++deg;
        }
        CHECK(deg <= 2);
        left.erase(v);
      }
    }
  }
}

TEST_CASE("pairwise unions of color classes are acyclic") {
  for (int n : {6, 9, 11}) {
    auto t = n == 6 ? PlaneTriangulation::checked(fixtures::octahedron())
                    : stacked_triangulation({n, 21});
    auto rz = realizer_from_orientation(canonical_orientation(t));
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = c1 + 1; c2 < 3; ++c2) {
        std::vector<std::pair<int, int>> arcs;
        for (int e = 0; e < t.edge_total(); ++e)
          if (rz.color[e] == c1 || rz.color[e] == c2)
            arcs.push_back({t.edges()[e].other(rz.head[e]), rz.head[e]});
        INFO("classes " << c1 << " and " << c2 << " at n=" << n);
        CHECK(topologically_acyclic(t.n(), arcs));
      }
  }
}

TEST_CASE("degeneracy removal reports the right worst degree") {
  auto t = PlaneTriangulation::checked(fixtures::k4());
  auto [order_full, worst_full] = degeneracy_removal(simple_graph_of(t));
  CHECK(worst_full == 3);  // K4 itself is only 3-degenerate
  CHECK(order_full[0] == 0);  // tie on degree 3 broken by id

  SimpleGraph minus_spoke{4, {}};
  for (int e = 0; e < 6; ++e)
    if (e != t.emb().edge_id(2, 3)) minus_spoke.edges.push_back(t.edges()[e]);
  auto [order, worst] = degeneracy_removal(minus_spoke);
  CHECK(worst == 2);
  CHECK(order[0] == 2);  // 2 and 3 both sit at degree 2; id breaks the tie
}

TEST_CASE("caps and validation refusals") {
  auto big = stacked_triangulation({11, 0});  // 27 edges
  auto cert = build_certificate(big);         // counting silently skipped
  CHECK_FALSE(cert.eulerian.has_value());
  CHECK(cert.max_aug_indegree <= 4);
  CHECK_THROWS_AS(count_eulerian_structures(cert.augmented), CapExceeded);
  CHECK_THROWS_AS(enumerate_eulerian_structures(cert.augmented), CapExceeded);

  auto small = build_certificate(stacked_triangulation({6, 1}));
  REQUIRE(small.eulerian.has_value());
  CHECK(small.eulerian->even == 1);
  CHECK(small.eulerian->odd == 0);

  AugmentedOrientation broken{{2, {Edge(0, 1)}}, {5}, {1}};
  CHECK_THROWS_AS(count_eulerian_structures(broken), Error);
  AugmentedOrientation weak{{2, {Edge(0, 1)}}, {1}, {0}};
  CHECK_THROWS_AS(count_eulerian_structures(weak), Error);
}

TEST_CASE("certificates across the stacked family") {
  for (int n : {5, 7, 9}) {
    for (std::uint64_t seed : {2ULL, 8ULL}) {
      auto t = stacked_triangulation({n, seed});
      auto cert = build_certificate(t);
      CHECK(cert.max_aug_indegree <= 4);
      CHECK(cert.claimed_bound <= 5);
      REQUIRE(cert.eulerian.has_value());
      CHECK(cert.eulerian->even == 1);
      CHECK(cert.eulerian->odd == 0);

      // doubled tree: one edge per interior vertex, heading into it
      std::set<int> heads;
      for (int e : cert.doubled_tree) {
        CHECK(cert.augmented.strength[e] == 2);
        CHECK(t.interior_vertex(cert.augmented.head[e]));
        heads.insert(cert.augmented.head[e]);
      }
      int interior = 0;
      for (int v = 0; v < t.n(); ++v) interior += t.interior_vertex(v) ? 1 : 0;
      CHECK(static_cast<int>(cert.doubled_tree.size()) == interior);
      CHECK(static_cast<int>(heads.size()) == interior);
    }
  }
}
