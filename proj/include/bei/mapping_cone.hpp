#pragma once
// Lyubeznik subsets of an ordered generator list and the recursive
// mapping-cone upper bound on the multigraded Poincare series of S/I.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial.hpp"

namespace bei {

/// F = {i_1 < ... < i_k} (1-based) is Lyubeznik if for every j no generator
/// with index below i_j divides lcm(m_{i_j}, ..., m_{i_k}).
inline bool is_lyubeznik_subset(const std::vector<int>& subset, const std::vector<Monomial>& gens) {
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 1 || subset[k] > static_cast<int>(gens.size()))
      throw std::out_of_range("Lyubeznik subset index out of range: " + std::to_string(subset[k]));
    if (k > 0 && subset[k] <= subset[k - 1])
      throw std::invalid_argument("Lyubeznik subset indices must be strictly increasing");
  }
  for (std::size_t j = 0; j < subset.size(); ++j) {
    Monomial tail = gens[subset[j] - 1];
    for (std::size_t k = j + 1; k < subset.size(); ++k) tail = lcm(tail, gens[subset[k] - 1]);
    for (int l = 1; l < subset[j]; ++l)
      if (gens[l - 1].divides(tail)) return false;
  }
  return true;
}

namespace detail {

// Lyubeznik subsets are closed under taking tails, so they are grown by
// prepending smaller indices to an already-valid tail.
inline void grow_lyubeznik(const std::vector<Monomial>& gens, std::vector<int>& tail, const Monomial& tail_lcm,
                           std::size_t max_size, std::vector<std::vector<int>>& out) {
  out.emplace_back(tail.rbegin(), tail.rend());
  if (tail.size() == max_size) return;
  for (int i = tail.back() - 1; i >= 1; --i) {
    const Monomial joined = lcm(tail_lcm, gens[i - 1]);
    bool ok = true;
    for (int l = 1; l < i && ok; ++l) ok = !gens[l - 1].divides(joined);
    if (!ok) continue;
    tail.push_back(i);
    grow_lyubeznik(gens, tail, joined, max_size, out);
    tail.pop_back();
  }
}

}  // namespace detail

/// All Lyubeznik subsets of size 1..max_size, lexicographically ordered.
inline std::vector<std::vector<int>> lyubeznik_subsets(const std::vector<Monomial>& gens, std::size_t max_size,
                                                       std::size_t guard = 64) {
  if (gens.size() > guard)
    throw GuardError("lyubeznik_subsets: " + std::to_string(gens.size()) + " generators exceed guard " +
                     std::to_string(guard));
  std::vector<std::vector<int>> out;
  if (max_size == 0) return out;
  for (int last = 1; last <= static_cast<int>(gens.size()); ++last) {
    bool ok = true;
    for (int l = 1; l < last && ok; ++l) ok = !gens[l - 1].divides(gens[last - 1]);
    if (!ok) continue;
    std::vector<int> tail{last};
    detail::grow_lyubeznik(gens, tail, gens[last - 1], max_size, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficients of a multigraded Poincare series: (homological index, degree) -> count.
class PoincareBound {
 public:
  using Key = std::pair<int, Monomial>;

  static PoincareBound one(int n) {
    PoincareBound b;
    b.terms_[{0, Monomial(n)}] = 1;
    return b;
  }

  unsigned long long coefficient(int k, const Monomial& degree) const {
    auto it = terms_.find({k, degree});
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Key, unsigned long long>& terms() const { return terms_; }

  void add(const PoincareBound& other) {
    for (const auto& [key, c] : other.terms_) terms_[key] += c;
  }

  /// Multiplies the series by m * t.
  PoincareBound shifted(const Monomial& m) const {
    PoincareBound out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first + 1, key.second * m}] += c;
    return out;
  }

  friend bool operator==(const PoincareBound&, const PoincareBound&) = default;

 private:
  std::map<Key, unsigned long long> terms_;
};

namespace detail {

struct MappingConeEvaluator {
  int n;
  std::map<std::vector<Monomial>, PoincareBound> memo;

  const PoincareBound& bound(const std::vector<Monomial>& gens) {
    if (auto it = memo.find(gens); it != memo.end()) return it->second;
    PoincareBound total = PoincareBound::one(n);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::vector<Monomial> earlier(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(j));
      const MonomialIdeal prefix(n, earlier);
      if (prefix.contains(gens[j])) continue;
      const MonomialIdeal colon = colon_ideal(prefix, gens[j]);
      total.add(bound(colon.generators()).shifted(gens[j]));
    }
    return memo.emplace(gens, std::move(total)).first->second;
  }
};

}  // namespace detail

/// Coefficient-wise upper bound on the Betti numbers of S/(gens) obtained by
/// iterating the mapping cone of multiplication by m_j over the prefix ideals.
/// The bound depends on the generator order.
inline PoincareBound mapping_cone_bound(int n, const std::vector<Monomial>& gens, std::size_t guard = 15) {
  if (gens.size() > guard)
    throw GuardError("mapping_cone_bound: " + std::to_string(gens.size()) + " generators exceed guard " +
                     std::to_string(guard));
  detail::MappingConeEvaluator eval{n, {}};
  return eval.bound(gens);
}

}  // namespace bei
