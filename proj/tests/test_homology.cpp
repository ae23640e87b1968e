#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "bei/linalg.hpp"
#include "bei/monomial.hpp"
#include "bei/simplicial.hpp"

using namespace bei;

namespace {

// Plain dense Gaussian elimination over GF(p) with 64-bit arithmetic.
std::size_t dense_rank(std::vector<std::vector<long long>> m, long long p) {
  auto power = [p](long long b, long long e) {
    long long r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = power(m[rank][c], p - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const long long factor = m[r][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

FaceMask bits(std::initializer_list<int> points) {
  FaceMask m = 0;
  for (int p : points) m |= FaceMask{1} << p;
  return m;
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  const std::vector<std::array<int, 3>> tri{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<FaceMask> facets;
  for (auto [a, b, c] : tri) facets.push_back(bits({a, b, c}));
  return SimplicialComplex(bits({0, 1, 2, 3, 4, 5}), facets);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f(32003);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.reduce(-1) == 32002);
  CHECK(f.add(32002, 5) == 4);
  CHECK(f.sub(3, 5) == 32001);
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(32004));
  CHECK_THROWS(f.inv(0));
}

TEST_CASE("three rank routines agree with dense elimination") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
      const double density = (rng() % 100) / 100.0;
      std::bernoulli_distribution coin(density);
      std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols, 0));
      std::vector<SparseVector> sparse(rows);
      std::vector<SparseVector> columns(cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (coin(rng)) {
            const std::uint32_t v = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
            dense[r][c] = v;
            sparse[r].emplace_back(static_cast<std::uint32_t>(c), v);
            columns[c].emplace_back(static_cast<std::uint32_t>(r), v);
          }
      const std::size_t expected = dense_rank(dense, p);
      REQUIRE(sparse_matrix_rank(sparse, cols, f) == expected);
      SparseRowEchelon echelon(f);
      for (const auto& row : sparse) echelon.add_row(row);
      REQUIRE(echelon.rank() == expected);
      ColumnReducer reducer(f);
      for (const auto& col : columns) reducer.add_column(col);
      REQUIRE(reducer.rank() == expected);
      if (p == 2) {
        BitMatrixGF2 m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
          for (const auto& [c, v] : sparse[r]) m.flip(r, c);
        REQUIRE(m.rank() == expected);
      }
    }
  }
}

TEST_CASE("bit matrix spans several words") {
  BitMatrixGF2 m(3, 200);
  m.flip(0, 0);
  m.flip(0, 150);
  m.flip(1, 150);
  m.flip(2, 0);
  CHECK(m.get(0, 150));
  CHECK(m.rank() == 2);
}

TEST_CASE("reduced homology of small complexes") {
  const PrimeField f(2);
  const SimplicialComplex circle(bits({0, 1, 2}), {bits({0, 1}), bits({1, 2}), bits({0, 2})});
  CHECK(reduced_homology_dims(circle, f) == std::vector<long long>{0, 0, 1});
  const SimplicialComplex points(bits({0, 1}), {bits({0}), bits({1})});
  CHECK(reduced_homology_dims(points, f) == std::vector<long long>{0, 1});
  const SimplicialComplex simplex(bits({0, 1, 2, 3}), {bits({0, 1, 2, 3})});
  CHECK(reduced_homology_dims(simplex, f) == std::vector<long long>{0, 0, 0, 0, 0});
  const SimplicialComplex void_complex(bits({0, 1}), {});
  CHECK(reduced_homology_dims(void_complex, f) == std::vector<long long>{1});
}

TEST_CASE("homology sees torsion through the field") {
  const SimplicialComplex rp2 = projective_plane();
  CHECK(reduced_homology_dims(rp2, PrimeField(2)) == std::vector<long long>{0, 0, 1, 1});
  CHECK(reduced_homology_dims(rp2, PrimeField(32003)) == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("homology is independent of face order") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FaceMask> facets;
    for (int k = 0; k < 5; ++k) facets.push_back(static_cast<FaceMask>(rng() % 256));
    const SimplicialComplex c(0xFF, facets);
    std::vector<FaceMask> faces = c.faces();
    for (std::uint32_t p : {2u, 32003u}) {
      const auto expected = reduced_homology_of_faces(faces, PrimeField(p));
      std::shuffle(faces.begin(), faces.end(), rng);
      REQUIRE(reduced_homology_of_faces(faces, PrimeField(p)) == expected);
    }
  }
}

TEST_CASE("Euler characteristic matches the face count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FaceMask> facets;
    for (int k = 0; k < 4; ++k) facets.push_back(static_cast<FaceMask>(rng() % 1024));
    const SimplicialComplex c(0x3FF, facets);
    long long chi_faces = 0, chi_homology = 0;
    for (FaceMask face : c.faces()) chi_faces += (std::popcount(face) % 2 == 0) ? -1 : 1;
    const auto h = reduced_homology_dims(c, PrimeField(32003));
    for (std::size_t k = 0; k < h.size(); ++k) chi_homology += (k % 2 == 0 ? -1 : 1) * h[k];
    REQUIRE(chi_faces == chi_homology);
  }
}

TEST_CASE("Stanley-Reisner complexes") {
  const MonomialIdeal i(2, {parse_monomial("x1*y2", 2)});
  const SimplicialComplex c = stanley_reisner(i);
  // variables: x1 = 0, x2 = 1, y1 = 2, y2 = 3
  std::vector<FaceMask> expected{bits({0, 1, 2}), bits({1, 2, 3})};
  std::sort(expected.begin(), expected.end());
  CHECK(c.facets() == expected);
  CHECK_FALSE(c.contains(bits({0, 3})));
  CHECK(stanley_reisner(MonomialIdeal(2)).facets() == std::vector<FaceMask>{0xF});
  CHECK_THROWS(stanley_reisner(MonomialIdeal(2, {Monomial(2)})));
  CHECK_THROWS(stanley_reisner(MonomialIdeal(2, {parse_monomial("x1^2", 2)})));
}
