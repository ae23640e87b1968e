#pragma once
// Simplicial complexes on at most 32 labelled points (bitmask faces), the
// Stanley-Reisner complex of a squarefree monomial ideal, and reduced
// homology over GF(p).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bei/graph.hpp"
#include "bei/linalg.hpp"
#include "bei/monomial.hpp"

namespace bei {

using FaceMask = std::uint32_t;

class SimplicialComplex {
 public:
  SimplicialComplex(FaceMask ground, std::vector<FaceMask> facets) : ground_(ground), facets_(std::move(facets)) {
    for (FaceMask f : facets_)
      if (f & ~ground_) throw std::invalid_argument("facet outside the ground set");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::erase_if(facets_, [&](FaceMask f) {
      return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask g) { return g != f && (f & g) == f; });
    });
    if (facets_.empty()) facets_.push_back(0);
  }

  FaceMask ground() const { return ground_; }
  const std::vector<FaceMask>& facets() const { return facets_; }

  bool contains(FaceMask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask f) { return (face & f) == face; });
  }

  int dimension() const {
    int d = -1;
    for (FaceMask f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  /// All faces, including the empty face.
  std::vector<FaceMask> faces() const {
    std::vector<FaceMask> out;
    for (FaceMask f : facets_)
      for (FaceMask sub = f;; sub = (sub - 1) & f) {
        out.push_back(sub);
        if (sub == 0) break;
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  FaceMask ground_;
  std::vector<FaceMask> facets_;
};

namespace detail {

// Faces of the complex on points 0..m-1 whose minimal non-faces are
// `nonfaces`, found by adding points in increasing order. A non-face is
// completed exactly when its largest point is added.
inline std::vector<FaceMask> faces_avoiding(int m, const std::vector<FaceMask>& nonfaces) {
  std::vector<std::vector<FaceMask>> closing(m);
  for (FaceMask nf : nonfaces) closing[31 - std::countl_zero(nf)].push_back(nf);
  std::vector<FaceMask> out{0};
  std::vector<FaceMask> stack{0};
  // Each stack entry is a face; extensions use points above its maximum.
  while (!stack.empty()) {
    const FaceMask face = stack.back();
    stack.pop_back();
    const int start = face ? 32 - std::countl_zero(face) : 0;
    for (int v = start; v < m; ++v) {
      const FaceMask next = face | (FaceMask{1} << v);
      bool ok = true;
      for (FaceMask nf : closing[v])
        if ((nf & next) == nf) {
          ok = false;
          break;
        }
      if (!ok) continue;
      out.push_back(next);
      stack.push_back(next);
    }
  }
  return out;
}

}  // namespace detail

/// Reduced homology dimensions over GF(p) of the complex whose faces are
/// listed (any order, must include the empty face and be downward closed).
/// Entry k of the result is dim H~_{k-1}.
inline std::vector<long long> reduced_homology_of_faces(const std::vector<FaceMask>& faces, const PrimeField& f) {
  int top = -1;
  for (FaceMask face : faces) top = std::max(top, std::popcount(face) - 1);
  std::vector<std::vector<FaceMask>> by_dim(top + 2);
  for (FaceMask face : faces) by_dim[std::popcount(face)].push_back(face);
  if (by_dim[0].size() != 1) throw std::invalid_argument("face list must contain the empty face exactly once");

  std::vector<std::unordered_map<FaceMask, std::uint32_t>> index(top + 2);
  for (int d = 0; d <= top + 1; ++d) {
    index[d].reserve(by_dim[d].size() * 2);
    for (std::uint32_t k = 0; k < by_dim[d].size(); ++k) index[d].emplace(by_dim[d][k], k);
  }

  // rank of the boundary from faces with c points to faces with c-1 points,
  // computed top-down so that pivot rows of the level above clear columns here.
  std::vector<long long> rank(top + 3, 0);
  std::vector<char> cleared;
  for (int c = top + 1; c >= 1; --c) {
    ColumnReducer reducer(f);
    std::vector<char> next_cleared(by_dim[c - 1].size(), 0);
    for (std::uint32_t k = 0; k < by_dim[c].size(); ++k) {
      if (!cleared.empty() && cleared[k]) continue;
      const FaceMask face = by_dim[c][k];
      SparseVector col;
      col.reserve(c);
      int pos = 0;
      for (FaceMask rest = face; rest; rest &= rest - 1, ++pos) {
        const FaceMask facet = face & ~(rest & (~rest + 1));
        const std::uint32_t coeff = (pos % 2 == 0) ? 1 : f.neg(1);
        col.emplace_back(index[c - 1].at(facet), coeff);
      }
      std::sort(col.begin(), col.end());
      const long long low = reducer.add_column(std::move(col));
      if (low >= 0) next_cleared[low] = 1;
    }
    rank[c] = static_cast<long long>(reducer.rank());
    cleared = std::move(next_cleared);
  }

  std::vector<long long> out(top + 2, 0);
  for (int c = 0; c <= top + 1; ++c)
    out[c] = static_cast<long long>(by_dim[c].size()) - rank[c] - rank[c + 1];
  return out;
}

/// Entry k is dim H~_{k-1}(C; GF(p)) for k-1 = -1..dim C.
inline std::vector<long long> reduced_homology_dims(const SimplicialComplex& c, const PrimeField& f) {
  constexpr int kMaxGround = 24;
  if (std::popcount(c.ground()) > kMaxGround)
    throw GuardError("reduced_homology_dims: ground set larger than 24 points");
  return reduced_homology_of_faces(c.faces(), f);
}

/// Complex on the 2n variables whose faces are supports of squarefree
/// monomials outside I.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.squarefree()) throw std::invalid_argument("stanley_reisner: ideal is not squarefree");
  if (ideal.is_unit()) throw std::invalid_argument("stanley_reisner: unit ideal has no complex");
  const int m = 2 * ideal.n();
  std::vector<FaceMask> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support_mask());
  const std::vector<FaceMask> faces = detail::faces_avoiding(m, nonfaces);
  // Facets: faces that cannot be extended by any point.
  std::vector<FaceMask> facets;
  std::unordered_map<FaceMask, char> is_face;
  for (FaceMask face : faces) is_face.emplace(face, 1);
  for (FaceMask face : faces) {
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v)
      if (!(face >> v & 1) && is_face.count(face | (FaceMask{1} << v))) maximal = false;
    if (maximal) facets.push_back(face);
  }
  const FaceMask ground = m == 32 ? ~FaceMask{0} : (FaceMask{1} << m) - 1;
  return SimplicialComplex(ground, facets);
}

}  // namespace bei
