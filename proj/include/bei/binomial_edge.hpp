#pragma once
// Binomial edge ideals: generators, admissible paths, the path monomials m_P
// generating the lex initial ideal, wedges, and the colon-membership check.

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial.hpp"

namespace bei {

/// x_i y_j - x_j y_i for an edge {i,j} with i < j.
struct Binomial {
  Monomial positive;  // x_i y_j
  Monomial negative;  // x_j y_i
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline std::string to_string(const Binomial& b) { return to_string(b.positive) + " - " + to_string(b.negative); }

inline std::vector<Binomial> binomial_edge_generators(const Graph& g) {
  std::vector<Binomial> out;
  for (auto [i, j] : g.edges())
    out.push_back({Monomial::x(g.n(), i) * Monomial::y(g.n(), j), Monomial::x(g.n(), j) * Monomial::y(g.n(), i)});
  return out;
}

/// Path s = v_0 -> ... -> v_r = t with s < t and every inner vertex outside [s, t].
class AdmissiblePath {
 public:
  explicit AdmissiblePath(std::vector<int> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 2) throw std::invalid_argument("a path needs at least two vertices");
    if (v_.front() >= v_.back()) throw std::invalid_argument("admissible path must run from the smaller end");
    for (std::size_t k = 1; k + 1 < v_.size(); ++k)
      if (v_[k] >= v_.front() && v_[k] <= v_.back())
        throw std::invalid_argument("inner vertex " + std::to_string(v_[k]) + " lies between the ends");
  }

  const std::vector<int>& vertices() const { return v_; }
  int s() const { return v_.front(); }
  int t() const { return v_.back(); }
  int length() const { return static_cast<int>(v_.size()) - 1; }
  std::vector<int> inner() const { return std::vector<int>(v_.begin() + 1, v_.end() - 1); }

  /// True for inner vertices below s, false for those above t.
  bool below(int inner_index) const { return v_[inner_index] < s(); }

  friend bool operator==(const AdmissiblePath&, const AdmissiblePath&) = default;

  /// Shorter paths first, then lexicographic vertex sequence.
  friend bool operator<(const AdmissiblePath& a, const AdmissiblePath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.v_ < b.v_;
  }

 private:
  std::vector<int> v_;
};

inline std::string to_string(const AdmissiblePath& p) {
  std::string out;
  for (int v : p.vertices()) {
    if (!out.empty()) out += "->";
    out += std::to_string(v);
  }
  return out;
}

/// Checks adjacency and distinctness in g on top of the admissibility invariant.
inline bool is_admissible_in(const Graph& g, const std::vector<int>& v) {
  if (v.size() < 2 || v.front() >= v.back()) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > g.n()) return false;
    for (std::size_t l = k + 1; l < v.size(); ++l)
      if (v[k] == v[l]) return false;
    if (k + 1 < v.size() && !g.adjacent(v[k], v[k + 1])) return false;
    if (k > 0 && k + 1 < v.size() && v[k] >= v.front() && v[k] <= v.back()) return false;
  }
  return true;
}

namespace detail {

// `min_above` is the smallest inner vertex greater than s; any admissible
// endpoint reachable from here must lie strictly between s and it.
inline void extend_admissible(const Graph& g, std::vector<int>& path, VertexMask used, int min_above,
                              std::vector<AdmissiblePath>& out) {
  const int s = path.front();
  const int c = path.back();
  for (VertexMask cand = g.neighbors(c) & ~used; cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand) + 1;
    path.push_back(v);
    if (v > s && v < min_above) out.emplace_back(path);
    const int next_min = v > s ? std::min(min_above, v) : min_above;
    if (next_min > s + 1) extend_admissible(g, path, used | (VertexMask{1} << (v - 1)), next_min, out);
    path.pop_back();
  }
}

}  // namespace detail

inline std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  constexpr int kMaxVertices = 12;
  if (g.n() > kMaxVertices)
    throw GuardError("admissible_paths: enumeration limited to n <= 12, got n = " + std::to_string(g.n()));
  std::vector<AdmissiblePath> out;
  std::vector<int> path;
  for (int s = 1; s < g.n(); ++s) {
    path.assign(1, s);
    detail::extend_admissible(g, path, VertexMask{1} << (s - 1), g.n() + 1, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// m_P = (prod_{v_k < s} y_{v_k}) (prod_{v_k > t} x_{v_k}) x_s y_t.
inline Monomial path_monomial(const AdmissiblePath& p, int n) {
  Monomial m = Monomial::x(n, p.s()) * Monomial::y(n, p.t());
  for (int k = 1; k < p.length(); ++k) {
    const int v = p.vertices()[k];
    m = m * (p.below(k) ? Monomial::y(n, v) : Monomial::x(n, v));
  }
  return m;
}

/// Length-ordered admissible paths with their monomials, before minimalization.
struct PathGenerators {
  std::vector<AdmissiblePath> paths;
  std::vector<Monomial> monomials;
};

inline PathGenerators path_generators(const Graph& g) {
  PathGenerators out{admissible_paths(g), {}};
  out.monomials.reserve(out.paths.size());
  for (const auto& p : out.paths) out.monomials.push_back(path_monomial(p, g.n()));
  return out;
}

/// Lex initial ideal of J_G, minimal generators in path order.
inline MonomialIdeal initial_ideal(const Graph& g) { return minimalize(g.n(), path_generators(g).monomials); }

/// Wedge of P at inner index k: a strictly shorter admissible subpath whose
/// monomial divides x_{v_k} m_P (v_k < s) or y_{v_k} m_P (v_k > t).
inline AdmissiblePath wedge(const AdmissiblePath& p, int k) {
  if (k < 1 || k > p.length() - 1)
    throw std::out_of_range("wedge: inner index " + std::to_string(k) + " outside [1, r-1]");
  const auto& v = p.vertices();
  const int vk = v[k];
  if (vk < p.s()) {
    for (int l = k + 1; l <= p.length(); ++l)
      if (vk < v[l] && v[l] <= p.t()) return AdmissiblePath(std::vector<int>(v.begin() + k, v.begin() + l + 1));
  } else {
    for (int l = k - 1; l >= 0; --l)
      if (p.s() <= v[l] && v[l] < vk) return AdmissiblePath(std::vector<int>(v.begin() + l, v.begin() + k + 1));
  }
  throw std::logic_error("wedge: no terminal index found for " + to_string(p));
}

struct Lemma34Violation {
  int j;       // 1-based position in the length-ordered path list
  int vertex;  // offending inner vertex
  friend bool operator==(const Lemma34Violation&, const Lemma34Violation&) = default;
};

/// For every j >= 2 and inner vertex v of P_j, checks x_v (v < s) or y_v
/// (v > t) lies in (m_1, ..., m_{j-1}) : m_j. Returns the failures.
inline std::vector<Lemma34Violation> check_lemma34(const PathGenerators& gens, int n) {
  std::vector<Lemma34Violation> out;
  for (std::size_t j = 1; j < gens.paths.size(); ++j) {
    const auto& p = gens.paths[j];
    const Monomial& mj = gens.monomials[j];
    for (int k = 1; k < p.length(); ++k) {
      const int v = p.vertices()[k];
      const Monomial var = p.below(k) ? Monomial::x(n, v) : Monomial::y(n, v);
      bool member = false;
      for (std::size_t i = 0; i < j && !member; ++i) member = colon_generator(gens.monomials[i], mj).divides(var);
      if (!member) out.push_back({static_cast<int>(j + 1), v});
    }
  }
  return out;
}

inline std::vector<Lemma34Violation> check_lemma34(const Graph& g) { return check_lemma34(path_generators(g), g.n()); }

}  // namespace bei
