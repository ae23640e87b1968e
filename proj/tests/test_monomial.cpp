#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bei/mapping_cone.hpp"
#include "bei/monomial.hpp"

using namespace bei;

namespace {

Monomial m3(std::string_view s) { return parse_monomial(s, 3); }
Monomial m4(std::string_view s) { return parse_monomial(s, 4); }

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Monomial random_squarefree(int n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Monomial m(n);
  for (int k = 0; k < 2 * n; ++k)
    if (coin(rng)) m = m.times_var(k);
  return m;
}

// Definition applied literally: every subset, every position, every earlier index.
bool naive_lyubeznik(const std::vector<int>& subset, const std::vector<Monomial>& gens) {
  for (std::size_t j = 0; j < subset.size(); ++j) {
    Monomial tail(gens[0].n());
    for (std::size_t k = j; k < subset.size(); ++k) tail = lcm(tail, gens[subset[k] - 1]);
    for (int l = 1; l < subset[j]; ++l)
      if (gens[l - 1].divides(tail)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monomial text form") {
  CHECK(to_string(m3("x1*y2")) == "x1*y2");
  CHECK(to_string(m3("y2*x1")) == "x1*y2");
  CHECK(to_string(m3("x1*x1")) == "x1^2");
  CHECK(to_string(Monomial(3)) == "1");
  CHECK(m3("1").is_one());
  CHECK_THROWS(m3("z1"));
  CHECK_THROWS(m3("x4"));
  CHECK_THROWS(m3(""));
}

TEST_CASE("lcm and gcd") {
  CHECK(lcm(m3("x1*y2"), m3("x2*y3")) == m3("x1*x2*y2*y3"));
  CHECK(lcm(m3("x1*y2"), m3("x1*y2")) == m3("x1*y2"));
  CHECK(lcm(m3("x1*y2"), m3("x1*y3")) == m3("x1*y2*y3"));
  CHECK(gcd(m3("x1*y2"), m3("x1*y3")) == m3("x1"));
  CHECK(m3("x1").divides(m3("x1*y2")));
  CHECK_FALSE(m3("x1*y2").divides(m3("x1")));
  CHECK(m3("x1*y2") / m3("y2") == m3("x1"));
  CHECK_THROWS(m3("x1") / m3("y2"));
}

TEST_CASE("lex order puts x1 first") {
  CHECK(lex_compare(m3("x1"), m3("x2*x3*y1")) > 0);
  CHECK(lex_compare(m3("x2*y1"), m3("x2*y2")) > 0);
  CHECK(lex_compare(m3("y3"), m3("y3")) == 0);
}

TEST_CASE("colon generators") {
  CHECK(colon_generator(m3("x1*y2"), m3("x2*y3")) == m3("x1*y2"));
  CHECK(colon_generator(m3("x1*y2"), m3("x1*y3")) == m3("y2"));
  CHECK(colon_generator(m3("x1*x3*y2"), m3("x1*y2")) == m3("x3"));
}

TEST_CASE("colon ideals") {
  const MonomialIdeal i1(3, {m3("x1*y2")});
  CHECK(same_generator_set(colon_ideal(i1, m3("x1*y3")), MonomialIdeal(3, {m3("y2")})));
  const MonomialIdeal i2(3, {m3("x1*y2"), m3("x2*y3")});
  CHECK(colon_ideal(i2, m3("x1*x2*y3")).is_unit());
  const MonomialIdeal i3(3, {m3("x1*y2"), m3("x1*x3*y2"), m3("x2*y3")});
  CHECK(colon_ideal(i3, Monomial(3)) == minimalize(i3));
}

TEST_CASE("colon ideals compose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 5; ++k) gens.push_back(random_squarefree(4, rng, 0.3));
    const MonomialIdeal ideal(4, gens);
    const Monomial a = random_squarefree(4, rng, 0.25), b = random_squarefree(4, rng, 0.25);
    REQUIRE(same_generator_set(colon_ideal(ideal, a * b), colon_ideal(colon_ideal(ideal, a), b)));
  }
}

TEST_CASE("minimalize") {
  CHECK(minimalize(3, {m3("x1*y2"), m3("x1*x3*y2")}).generators() == std::vector<Monomial>{m3("x1*y2")});
  const std::vector<Monomial> k3{m3("x1*y2"), m3("x1*y3"), m3("x2*y3"), m3("x1*x3*y2"), m3("x2*y1*y3")};
  CHECK(minimalize(3, k3).generators() == std::vector<Monomial>{m3("x1*y2"), m3("x1*y3"), m3("x2*y3")});
  CHECK(minimalize(3, {}).is_zero());
  CHECK(minimalize(3, {m3("x1"), m3("x1")}).size() == 1);
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 8; ++k) gens.push_back(random_squarefree(4, rng, 0.35));
    const MonomialIdeal once = minimalize(4, gens);
    REQUIRE(minimalize(once) == once);
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(sorted(minimalize(4, gens).generators()) == sorted(once.generators()));
  }
}

TEST_CASE("mult") {
  CHECK(mult(m3("x1*y1*x2*y3")) == std::vector<int>{1});
  CHECK(mult(m4("x1*y2*x3*y4")).empty());
  CHECK(mult(m3("x1*y1*x2*y2")) == std::vector<int>{1, 2});
}

TEST_CASE("Lyubeznik subsets") {
  const std::vector<Monomial> k3{m3("x1*y2"), m3("x1*y3"), m3("x2*y3")};
  CHECK(is_lyubeznik_subset({1}, k3));
  CHECK(is_lyubeznik_subset({2, 3}, k3));
  CHECK(is_lyubeznik_subset({1, 2, 3}, k3) == naive_lyubeznik({1, 2, 3}, k3));
  CHECK_THROWS(is_lyubeznik_subset({0}, k3));
  CHECK_THROWS(is_lyubeznik_subset({2, 1}, k3));

  CHECK(lyubeznik_subsets({m3("x1*y2")}, 3) == std::vector<std::vector<int>>{{1}});
  const std::vector<Monomial> reg{m3("x1*y2"), m3("x2*y3")};
  CHECK(lyubeznik_subsets(reg, 2) == std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
}

TEST_CASE("Lyubeznik enumeration matches the definition on random lists") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 7; ++k) gens.push_back(random_squarefree(3, rng, 0.4));
    std::vector<std::vector<int>> expected;
    for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
      std::vector<int> subset;
      for (int k = 0; k < static_cast<int>(gens.size()); ++k)
        if ((mask >> k) & 1) subset.push_back(k + 1);
      if (naive_lyubeznik(subset, gens)) expected.push_back(subset);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(lyubeznik_subsets(gens, gens.size()) == expected);
  }
}

TEST_CASE("mapping cone bound on small ideals") {
  const PoincareBound p1 = mapping_cone_bound(3, {m3("x1*y2")});
  CHECK(p1.terms().size() == 2);
  CHECK(p1.coefficient(0, Monomial(3)) == 1);
  CHECK(p1.coefficient(1, m3("x1*y2")) == 1);

  const PoincareBound p2 = mapping_cone_bound(3, {m3("x1*y2"), m3("x2*y3")});
  CHECK(p2.terms().size() == 4);
  CHECK(p2.coefficient(1, m3("x1*y2")) == 1);
  CHECK(p2.coefficient(1, m3("x2*y3")) == 1);
  CHECK(p2.coefficient(2, m3("x1*x2*y2*y3")) == 1);

  std::vector<Monomial> many(16, m3("x1"));
  CHECK_THROWS_AS(mapping_cone_bound(3, many), GuardError);
}
