#pragma once
// Multigraded Betti tables and the Hochster-formula engine for squarefree
// monomial ideals: beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta_sigma).

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bei/linalg.hpp"
#include "bei/monomial.hpp"
#include "bei/simplicial.hpp"

namespace bei {

/// Degree in N^n under deg x_i = deg y_i = e_i.
struct CoarseDegree {
  std::vector<int> a;
  auto operator<=>(const CoarseDegree&) const = default;
};

inline int total_degree(const Monomial& m) { return m.degree(); }
inline int total_degree(const CoarseDegree& d) {
  int s = 0;
  for (int v : d.a) s += v;
  return s;
}

inline std::string to_string(const CoarseDegree& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.a.size(); ++k) out += (k ? "," : "") + std::to_string(d.a[k]);
  return out + ")";
}

inline CoarseDegree coarse_degree(const Monomial& m) {
  CoarseDegree d{std::vector<int>(m.n())};
  for (int i = 1; i <= m.n(); ++i) d.a[i - 1] = m.x_exponent(i) + m.y_exponent(i);
  return d;
}

/// Betti numbers of a quotient S/I in the convention beta_{0,0} = 1, keyed by
/// (homological index, degree). Zero entries are never stored.
template <class Degree>
class GradedBettiTable {
 public:
  using Key = std::pair<int, Degree>;

  GradedBettiTable() = default;
  explicit GradedBettiTable(std::uint32_t field) : field_(field) {}

  std::uint32_t field() const { return field_; }
  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  void add(int i, const Degree& d, long long v) {
    if (v == 0) return;
    auto& slot = entries_[{i, d}];
    slot += v;
    if (slot == 0) entries_.erase({i, d});
  }

  long long at(int i, const Degree& d) const {
    auto it = entries_.find({i, d});
    return it == entries_.end() ? 0 : it->second;
  }

  /// beta_{i,j} = sum over degrees of total degree j.
  std::map<std::pair<int, int>, long long> total_graded() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, v] : entries_) out[{key.first, total_degree(key.second)}] += v;
    return out;
  }

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;

 private:
  std::uint32_t field_ = 0;
  std::map<Key, long long> entries_;
};

using BettiTable = GradedBettiTable<Monomial>;
using CoarseBettiTable = GradedBettiTable<CoarseDegree>;
using TotalBettiTable = std::map<std::pair<int, int>, long long>;

/// reg(I) = max_{i>=1} (j - i + 1) over beta_{i,j}(S/I) != 0; nullopt for the zero ideal.
inline std::optional<int> regularity_of_ideal(const TotalBettiTable& t) {
  std::optional<int> reg;
  for (const auto& [key, v] : t)
    if (key.first >= 1 && v != 0) reg = std::max(reg.value_or(key.second - key.first + 1), key.second - key.first + 1);
  return reg;
}

template <class Degree>
std::optional<int> regularity_of_ideal(const GradedBettiTable<Degree>& t) {
  return regularity_of_ideal(t.total_graded());
}

template <class Degree>
int projective_dimension(const GradedBettiTable<Degree>& t) {
  int pd = 0;
  for (const auto& [key, v] : t.entries())
    if (v != 0) pd = std::max(pd, key.first);
  return pd;
}

template <class Degree>
int depth_of_quotient(const GradedBettiTable<Degree>& t, int num_vars) {
  return num_vars - projective_dimension(t);
}

/// Sums entries over the N^2n -> N^n coarsening (a, b) -> a + b.
inline CoarseBettiTable coarsen(const BettiTable& t) {
  CoarseBettiTable out(t.field());
  for (const auto& [key, v] : t.entries()) out.add(key.first, coarse_degree(key.second), v);
  return out;
}

struct Prop35Violation {
  int p;
  Monomial w;
  friend bool operator==(const Prop35Violation&, const Prop35Violation&) = default;
};

/// Entries beta_{p,w} != 0 with p > 0 and #mult(w) >= p.
inline std::vector<Prop35Violation> verify_prop35(const BettiTable& t) {
  std::vector<Prop35Violation> out;
  for (const auto& [key, v] : t.entries())
    if (key.first > 0 && v != 0 && static_cast<int>(mult(key.second).size()) >= key.first)
      out.push_back({key.first, key.second});
  return out;
}

/// Join-closure of the generator supports (the lcm lattice without its bottom).
inline std::vector<FaceMask> lcm_lattice(const std::vector<FaceMask>& gens) {
  std::unordered_set<FaceMask> seen(gens.begin(), gens.end());
  std::vector<FaceMask> order(seen.begin(), seen.end());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (FaceMask g : gens) {
      const FaceMask joined = order[k] | g;
      if (seen.insert(joined).second) order.push_back(joined);
    }
  std::sort(order.begin(), order.end());
  return order;
}

namespace detail {

// Maps the points of `sigma` onto 0..|sigma|-1 preserving order.
inline FaceMask compress(FaceMask mask, FaceMask sigma) {
  FaceMask out = 0;
  int k = 0;
  for (FaceMask s = sigma; s; s &= s - 1, ++k)
    if (mask & (s & (~s + 1))) out |= FaceMask{1} << k;
  return out;
}

}  // namespace detail

/// Multigraded Betti numbers of S/I for a squarefree monomial ideal I, via
/// Hochster's formula restricted to the lcm lattice of the generators.
inline BettiTable hochster_betti(const MonomialIdeal& ideal, const PrimeField& f) {
  if (!ideal.squarefree()) throw std::invalid_argument("hochster_betti: ideal is not squarefree");
  if (ideal.is_unit()) throw std::invalid_argument("hochster_betti: unit ideal");
  const int n = ideal.n();
  BettiTable table(f.characteristic());
  table.add(0, Monomial(n), 1);

  const MonomialIdeal minimal = minimalize(ideal);
  std::vector<FaceMask> gens;
  for (const auto& g : minimal.generators()) gens.push_back(g.support_mask());
  for (FaceMask sigma : lcm_lattice(gens)) {
    const int m = std::popcount(sigma);
    std::vector<FaceMask> local;
    for (FaceMask g : gens)
      if ((g & sigma) == g) local.push_back(detail::compress(g, sigma));
    const std::vector<FaceMask> faces = detail::faces_avoiding(m, local);
    const std::vector<long long> h = reduced_homology_of_faces(faces, f);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      const int homology_degree = static_cast<int>(k) - 1;
      table.add(m - homology_degree - 1, Monomial::from_mask(n, sigma), h[k]);
    }
  }
  return table;
}

/// One line per entry, "i=<i> deg=<monomial> dim=<d>", sorted by (i, degree
/// text), then "# reg=<r> pd=<p> depth=<d> field=<p>".
inline std::string dump_betti_table(const BettiTable& t, int num_vars) {
  std::map<std::pair<int, std::string>, long long> rows;
  for (const auto& [key, v] : t.entries()) rows[{key.first, to_string(key.second)}] = v;
  std::ostringstream out;
  for (const auto& [key, v] : rows) out << "i=" << key.first << " deg=" << key.second << " dim=" << v << "\n";
  const auto reg = regularity_of_ideal(t);
  out << "# reg=" << (reg ? std::to_string(*reg) : std::string("undefined")) << " pd=" << projective_dimension(t)
      << " depth=" << depth_of_quotient(t, num_vars) << " field=" << t.field() << "\n";
  return out.str();
}

}  // namespace bei
