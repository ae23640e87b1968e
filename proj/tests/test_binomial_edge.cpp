#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "bei/binomial_edge.hpp"

using namespace bei;

namespace {

std::vector<int> vs(std::initializer_list<int> l) { return l; }

// All simple paths of G between s < t filtered by the definition.
std::set<std::vector<int>> brute_admissible(const Graph& g) {
  std::set<std::vector<int>> out;
  std::vector<int> path;
  std::function<void()> grow = [&] {
    const int s = path.front(), t = path.back();
    if (path.size() >= 2 && s < t) {
      bool ok = true;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) ok = ok && (path[k] < s || path[k] > t);
      if (ok) out.insert(path);
    }
    for (int v = 1; v <= g.n(); ++v)
      if (g.adjacent(path.back(), v) && std::find(path.begin(), path.end(), v) == path.end()) {
        path.push_back(v);
        grow();
        path.pop_back();
      }
  };
  for (int s = 1; s <= g.n(); ++s) {
    path = {s};
    grow();
  }
  return out;
}

Monomial mon(int n, std::string_view s) { return parse_monomial(s, n); }

}  // namespace

TEST_CASE("binomial edge generators") {
  const auto k2 = binomial_edge_generators(complete_graph(2));
  REQUIRE(k2.size() == 1);
  CHECK(to_string(k2[0]) == "x1*y2 - x2*y1");
  CHECK(binomial_edge_generators(Graph(3)).empty());
  const auto p3 = binomial_edge_generators(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(to_string(p3[1]) == "x2*y3 - x3*y2");
}

TEST_CASE("admissible path validation and text form") {
  CHECK(to_string(AdmissiblePath(vs({3, 1, 4}))) == "3->1->4");
  CHECK_THROWS(AdmissiblePath(vs({1})));
  CHECK_THROWS(AdmissiblePath(vs({2, 1})));
  CHECK_THROWS(AdmissiblePath(vs({1, 2, 3})));
  CHECK(AdmissiblePath(vs({2, 3})) < AdmissiblePath(vs({1, 3, 2})));
}

TEST_CASE("admissible paths of small graphs") {
  const auto k2 = admissible_paths(complete_graph(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].vertices() == vs({1, 2}));

  std::vector<std::vector<int>> k3;
  for (const auto& p : admissible_paths(complete_graph(3))) k3.push_back(p.vertices());
  CHECK(k3 == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 3, 2}, {2, 1, 3}});

  CHECK(admissible_paths(path_graph(3)).size() == 2);
  CHECK_THROWS_AS(admissible_paths(path_graph(13)), GuardError);
}

TEST_CASE("admissible paths match a brute-force enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n, false)) {
      std::set<std::vector<int>> got;
      const auto paths = admissible_paths(g);
      for (const auto& p : paths) got.insert(p.vertices());
      REQUIRE(got == brute_admissible(g));
      REQUIRE(std::is_sorted(paths.begin(), paths.end()));
      REQUIRE(got.size() == paths.size());
    }
}

TEST_CASE("path monomials") {
  CHECK(path_monomial(AdmissiblePath(vs({2, 5})), 5) == mon(5, "x2*y5"));
  CHECK(path_monomial(AdmissiblePath(vs({1, 3, 2})), 3) == mon(3, "x1*x3*y2"));
  CHECK(path_monomial(AdmissiblePath(vs({3, 1, 4})), 4) == mon(4, "y1*x3*y4"));
}

TEST_CASE("initial ideals of named graphs") {
  CHECK(initial_ideal(complete_graph(2)).generators() == std::vector<Monomial>{mon(2, "x1*y2")});
  CHECK(initial_ideal(complete_graph(3)).generators() ==
        std::vector<Monomial>{mon(3, "x1*y2"), mon(3, "x1*y3"), mon(3, "x2*y3")});
  for (int n = 2; n <= 8; ++n) {
    std::vector<Monomial> expected;
    for (int i = 1; i < n; ++i) expected.push_back(Monomial::x(n, i) * Monomial::y(n, i + 1));
    REQUIRE(initial_ideal(path_graph(n)).generators() == expected);
  }
  CHECK(initial_ideal(Graph(4)).is_zero());
}

TEST_CASE("path monomial properties over all graphs on 6 vertices") {
  for (const auto& g : enumerate_graphs(6, false)) {
    const PathGenerators gens = path_generators(g);
    for (const auto& m : gens.monomials) REQUIRE(mult(m).empty());
    const MonomialIdeal init = minimalize(g.n(), gens.monomials);
    std::vector<Monomial> quadrics, edges;
    for (const auto& m : init.generators())
      if (m.degree() == 2) quadrics.push_back(m);
    for (auto [i, j] : g.edges()) {
      edges.push_back(Monomial::x(6, i) * Monomial::y(6, j));
      REQUIRE(init.contains(edges.back()));
    }
    std::sort(quadrics.begin(), quadrics.end());
    std::sort(edges.begin(), edges.end());
    REQUIRE(quadrics == edges);
  }
}

TEST_CASE("wedges") {
  const AdmissiblePath p(vs({2, 4, 3}));
  const AdmissiblePath w = wedge(p, 1);
  CHECK(w.vertices() == vs({2, 4}));
  CHECK(path_monomial(w, 4).divides(path_monomial(p, 4) * Monomial::y(4, 4)));

  const AdmissiblePath q(vs({3, 1, 4}));
  const AdmissiblePath v = wedge(q, 1);
  CHECK(v.vertices() == vs({1, 4}));
  CHECK(path_monomial(v, 4).divides(path_monomial(q, 4) * Monomial::x(4, 1)));

  CHECK_THROWS_AS(wedge(AdmissiblePath(vs({1, 2})), 1), std::out_of_range);
  CHECK_THROWS_AS(wedge(q, 0), std::out_of_range);
}

TEST_CASE("wedge properties over all graphs on 6 vertices") {
  for (const auto& g : enumerate_graphs(6, false))
    for (const auto& p : admissible_paths(g))
      for (int k = 1; k < p.length(); ++k) {
        const AdmissiblePath w = wedge(p, k);
        const int v = p.vertices()[k];
        REQUIRE(is_admissible_in(g, w.vertices()));
        REQUIRE(w.length() < p.length());
        REQUIRE(w < p);
        const Monomial var = p.below(k) ? Monomial::x(6, v) : Monomial::y(6, v);
        REQUIRE(path_monomial(w, 6).divides(path_monomial(p, 6) * var));
      }
}

TEST_CASE("colon membership") {
  CHECK(check_lemma34(complete_graph(3)).empty());
  CHECK(check_lemma34(path_graph(6)).empty());
  // K_3, path 1->3->2: y_3 lies in (x1y2, x1y3, x2y3) : x1x3y2
  const auto gens = path_generators(complete_graph(3));
  REQUIRE(to_string(gens.paths[1]) == "1->3");
  REQUIRE(to_string(gens.paths[3]) == "1->3->2");
  CHECK(colon_generator(gens.monomials[1], gens.monomials[3]) == mon(3, "y3"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n, false)) REQUIRE(check_lemma34(g).empty());
}

TEST_CASE("colon membership detects a corrupted generator list") {
  PathGenerators gens;
  gens.paths = {AdmissiblePath(vs({2, 3})), AdmissiblePath(vs({1, 3, 2}))};
  for (const auto& p : gens.paths) gens.monomials.push_back(path_monomial(p, 3));
  const auto violations = check_lemma34(gens, 3);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == Lemma34Violation{2, 3});
}

TEST_CASE("initial ideal restricts to induced subgraphs") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_graphs(n, false)) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> w;
        const unsigned mask = std::uniform_int_distribution<unsigned>(1, (1u << n) - 1)(rng);
        for (int v = 1; v <= n; ++v)
          if ((mask >> (v - 1)) & 1) w.push_back(v);
        std::uint32_t vars = 0;
        for (int v : w) vars |= (1u << (v - 1)) | (1u << (n + v - 1));
        std::vector<Monomial> supported;
        const MonomialIdeal init = initial_ideal(g);
        for (const auto& m : init.generators())
          if ((m.support_mask() & ~vars) == 0) supported.push_back(m);
        REQUIRE(same_generator_set(MonomialIdeal(n, supported), initial_ideal(induced_on_full_vertex_set(g, w))));
      }
    }
}
