#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "bei/betti.hpp"
#include "bei/binomial_edge.hpp"
#include "bei/oracle.hpp"

using namespace bei;

namespace {

Monomial mon(int n, std::string_view s) { return parse_monomial(s, n); }

MonomialIdeal ideal(int n, std::initializer_list<std::string_view> gens) {
  std::vector<Monomial> out;
  for (auto g : gens) out.push_back(mon(n, g));
  return MonomialIdeal(n, out);
}

Monomial random_squarefree(int n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Monomial m(n);
  for (int k = 0; k < 2 * n; ++k)
    if (coin(rng)) m = m.times_var(k);
  return m;
}

std::set<Monomial> lcm_closure(const std::vector<Monomial>& gens) {
  std::set<Monomial> out(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<Monomial>(out.begin(), out.end()))
      for (const auto& g : gens) grew = out.insert(lcm(a, g)).second || grew;
  }
  return out;
}

}  // namespace

TEST_CASE("Betti tables of principal ideals and regular sequences") {
  const PrimeField f(2);
  const BettiTable t1 = hochster_betti(ideal(3, {"x1*y2"}), f);
  CHECK(t1.entries().size() == 2);
  CHECK(t1.at(1, mon(3, "x1*y2")) == 1);
  CHECK(regularity_of_ideal(t1) == 2);
  CHECK(projective_dimension(t1) == 1);
  CHECK(depth_of_quotient(t1, 4) == 3);

  const BettiTable t2 = hochster_betti(ideal(3, {"x1*y2", "x2*y3"}), f);
  CHECK(t2.at(1, mon(3, "x1*y2")) == 1);
  CHECK(t2.at(1, mon(3, "x2*y3")) == 1);
  CHECK(t2.at(2, mon(3, "x1*x2*y2*y3")) == 1);
  CHECK(t2.entries().size() == 4);
  CHECK(projective_dimension(t2) == 2);
  CHECK(regularity_of_ideal(t2) == 3);
  CHECK(depth_of_quotient(t2, 6) == 4);

  const BettiTable t3 = hochster_betti(ideal(4, {"x1*y2", "x2*y3", "x3*y4"}), f);
  CHECK(projective_dimension(t3) == 3);
}

TEST_CASE("Betti table of the complete graph on three vertices") {
  for (std::uint32_t p : {2u, 32003u}) {
    const BettiTable t = hochster_betti(initial_ideal(complete_graph(3)), PrimeField(p));
    const auto total = t.total_graded();
    CHECK(total.at({1, 2}) == 3);
    CHECK(total.at({2, 3}) == 2);
    CHECK(total.size() == 3);
    CHECK(regularity_of_ideal(t) == 2);
    CHECK(projective_dimension(t) == 2);
    CHECK(depth_of_quotient(t, 6) == 4);
    CHECK(t == taylor_betti(initial_ideal(complete_graph(3)), PrimeField(p)));
  }
}

TEST_CASE("regularity on paths and the spider") {
  CHECK(regularity_of_ideal(hochster_betti(initial_ideal(path_graph(3)), PrimeField(2))) == 3);
  CHECK(regularity_of_ideal(hochster_betti(initial_ideal(path_graph(5)), PrimeField(2))) == 5);
  for (std::uint32_t p : {2u, 32003u}) {
    const BettiTable t = hochster_betti(initial_ideal(spider_graph(3, 2)), PrimeField(p));
    CHECK(regularity_of_ideal(t) == 6);
    CHECK(verify_prop35(t).empty());
  }
  CHECK_FALSE(regularity_of_ideal(TotalBettiTable{{{0, 0}, 1}}).has_value());
}

TEST_CASE("hochster and taylor agree on random squarefree ideals") {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 32003u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Monomial> gens;
      const int count = 1 + static_cast<int>(rng() % 6);
      while (static_cast<int>(gens.size()) < count) {
        Monomial m = random_squarefree(3, rng, 0.35);
        if (!m.is_one()) gens.push_back(m);
      }
      const MonomialIdeal i = minimalize(3, gens);
      REQUIRE(hochster_betti(i, f) == taylor_betti(i, f));
    }
  }
}

TEST_CASE("Betti degrees lie in the lcm lattice and depth + pd = 2n") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n, false)) {
      const MonomialIdeal init = initial_ideal(g);
      if (init.is_zero()) continue;
      const BettiTable t = hochster_betti(init, PrimeField(2));
      const auto lattice = lcm_closure(init.generators());
      for (const auto& [key, v] : t.entries())
        if (key.first > 0) REQUIRE(lattice.count(key.second) == 1);
      REQUIRE(depth_of_quotient(t, 2 * n) + projective_dimension(t) == 2 * n);
      REQUIRE(t.at(0, Monomial(n)) == 1);
    }
}

TEST_CASE("init Betti numbers restrict to induced subgraphs") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n, false)) {
      if (g.edge_count() == 0) continue;
      const BettiTable full = hochster_betti(initial_ideal(g), PrimeField(2));
      for (int trial = 0; trial < 4; ++trial) {
        const unsigned mask = std::uniform_int_distribution<unsigned>(1, (1u << n) - 1)(rng);
        std::vector<int> w;
        std::uint32_t vars = 0;
        for (int v = 1; v <= n; ++v)
          if ((mask >> (v - 1)) & 1) {
            w.push_back(v);
            vars |= (1u << (v - 1)) | (1u << (n + v - 1));
          }
        const MonomialIdeal sub = initial_ideal(induced_on_full_vertex_set(g, w));
        const BettiTable restricted = sub.is_zero() ? BettiTable(2) : hochster_betti(sub, PrimeField(2));
        for (const auto& [key, v] : full.entries())
          if (key.first > 0 && (key.second.support_mask() & ~vars) == 0) REQUIRE(restricted.at(key.first, key.second) == v);
        for (const auto& [key, v] : restricted.entries())
          if (key.first > 0) REQUIRE(full.at(key.first, key.second) == v);
        // total-degree monotonicity
        const auto big = full.total_graded();
        for (const auto& [key, v] : restricted.total_graded()) {
          auto it = big.find(key);
          REQUIRE(it != big.end());
          REQUIRE(it->second >= v);
        }
      }
    }
}

TEST_CASE("vanishing check") {
  BettiTable synthetic(2);
  synthetic.add(0, Monomial(2), 1);
  synthetic.add(1, mon(2, "x1*y1"), 1);
  const auto v = verify_prop35(synthetic);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Prop35Violation{1, mon(2, "x1*y1")});
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n, false))
      if (g.edge_count()) REQUIRE(verify_prop35(hochster_betti(initial_ideal(g), PrimeField(2))).empty());
}

TEST_CASE("coarsening") {
  BettiTable t(2);
  t.add(1, mon(3, "x1*y2"), 1);
  const CoarseBettiTable c = coarsen(t);
  CHECK(c.at(1, CoarseDegree{{1, 1, 0}}) == 1);
  CHECK(coarsen(BettiTable(2)).empty());
  const CoarseBettiTable p3 = coarsen(hochster_betti(initial_ideal(path_graph(3)), PrimeField(2)));
  CHECK(p3.at(2, CoarseDegree{{1, 2, 1}}) == 1);
  CHECK(to_string(CoarseDegree{{1, 2, 1}}) == "(1,2,1)");
}

TEST_CASE("table dump format") {
  const BettiTable t = hochster_betti(ideal(2, {"x1*y2"}), PrimeField(2));
  CHECK(dump_betti_table(t, 4) == "i=0 deg=1 dim=1\ni=1 deg=x1*y2 dim=1\n# reg=2 pd=1 depth=3 field=2\n");
}

TEST_CASE("Hochster rejects non-squarefree and unit ideals") {
  CHECK_THROWS(hochster_betti(ideal(2, {"x1^2"}), PrimeField(2)));
  CHECK_THROWS(hochster_betti(MonomialIdeal(2, {Monomial(2)}), PrimeField(2)));
}
