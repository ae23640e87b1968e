#pragma once
// Brute-force ground truth for tiny instances:
//  * Taylor-complex Betti numbers of arbitrary monomial ideals;
//  * Koszul-homology Betti numbers of S/J_G itself, using normal forms
//    against a lex Groebner basis to work in the standard-monomial basis;
//  * the induced-subgraph Betti equality for J_G.
// Nothing here depends on admissible paths or on the Hochster engine.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei/betti.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/linalg.hpp"
#include "bei/monomial.hpp"

namespace bei {

/// Minimal Betti numbers of S/I from the Taylor complex tensored with the
/// field: in multidegree sigma the complex is spanned by the generator
/// subsets with lcm exactly sigma.
inline BettiTable taylor_betti(const MonomialIdeal& ideal, const PrimeField& f, std::size_t guard = 16) {
  const std::vector<Monomial>& gens = ideal.generators();
  if (gens.size() > guard)
    throw GuardError("taylor_betti: " + std::to_string(gens.size()) + " generators exceed guard " + std::to_string(guard));
  if (ideal.is_unit()) throw std::invalid_argument("taylor_betti: unit ideal");
  const int n = ideal.n();
  const std::uint32_t subsets = std::uint32_t{1} << gens.size();
  std::vector<Monomial> lcm_of(subsets, Monomial(n));
  std::map<Monomial, std::vector<std::uint32_t>> by_lcm;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (s) lcm_of[s] = lcm(lcm_of[s & (s - 1)], gens[std::countr_zero(s)]);
    by_lcm[lcm_of[s]].push_back(s);
  }

  BettiTable table(f.characteristic());
  for (const auto& [sigma, members] : by_lcm) {
    std::vector<std::vector<std::uint32_t>> by_size(gens.size() + 2);
    for (std::uint32_t s : members) by_size[std::popcount(s)].push_back(s);
    std::map<std::uint32_t, std::uint32_t> position;
    for (const auto& level : by_size)
      for (std::uint32_t k = 0; k < level.size(); ++k) position[level[k]] = k;
    // rank of d: size-i subsets -> size-(i-1) subsets, restricted to lcm sigma.
    std::vector<long long> rank(gens.size() + 2, 0);
    for (std::size_t i = 1; i <= gens.size(); ++i) {
      if (by_size[i].empty() || by_size[i - 1].empty()) continue;
      std::vector<SparseVector> rows;
      for (std::uint32_t s : by_size[i]) {
        SparseVector row;
        int pos = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1, ++pos) {
          const std::uint32_t face = s & ~(rest & (~rest + 1));
          if (lcm_of[face] != sigma) continue;
          row.emplace_back(position.at(face), pos % 2 == 0 ? 1 : f.neg(1));
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
      }
      rank[i] = static_cast<long long>(sparse_matrix_rank(rows, by_size[i - 1].size(), f));
    }
    for (std::size_t i = 0; i <= gens.size(); ++i) {
      const long long b = static_cast<long long>(by_size[i].size()) - rank[i] - rank[i + 1];
      table.add(static_cast<int>(i), sigma, b);
    }
  }
  return table;
}

/// Koszul-homology Betti numbers of S/J_G in the N^n grading.
struct KoszulResult {
  CoarseBettiTable table;
  bool certified = false;   // every possibly nonzero entry was computed
  int reg_cap = 0;          // rows computed: j - i + 1 <= reg_cap for i >= 1
  int certificate = 0;      // reg of the lead-term ideal (upper bound for reg J_G)
  std::vector<Polynomial> groebner_basis;

  /// reg(J_G), only when certified.
  std::optional<int> regularity() const {
    if (!certified) return std::nullopt;
    return regularity_of_ideal(table);
  }
};

struct KoszulOptions {
  int reg_cap = -1;  // -1: one row beyond the certificate
  int box = 2;       // multidegrees a with every a_k <= box
  int max_vertices = 5;
};

namespace detail {

class KoszulBlocks {
 public:
  KoszulBlocks(int n, const std::vector<Polynomial>& gb, const PrimeField& f) : n_(n), gb_(gb), f_(f) {
    for (const auto& g : gb_) leads_.push_back(g.lead().monomial);
  }

  // Standard monomials (not divisible by any lead) of coarse degree c.
  const std::vector<Monomial>& standard(const std::vector<int>& c) {
    auto it = standard_.find(c);
    if (it != standard_.end()) return it->second;
    std::vector<Monomial> out{Monomial(n_)};
    for (int k = 0; k < n_; ++k) {
      std::vector<Monomial> next;
      for (const auto& m : out)
        for (int xe = 0; xe <= c[k]; ++xe) next.push_back(m.times_var(k, xe).times_var(n_ + k, c[k] - xe));
      out = std::move(next);
    }
    std::erase_if(out, [&](const Monomial& m) {
      return std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
    });
    std::sort(out.begin(), out.end());
    return standard_.emplace(c, std::move(out)).first->second;
  }

  const Polynomial& reduce(const Monomial& m) {
    auto it = nf_.find(m);
    if (it != nf_.end()) return it->second;
    return nf_.emplace(m, normal_form(Polynomial::monomial(m), gb_, f_)).first->second;
  }

  std::vector<int> degree_of(std::uint32_t vars) const {
    std::vector<int> d(n_, 0);
    for (; vars; vars &= vars - 1) ++d[std::countr_zero(vars) % n_];
    return d;
  }

  // Basis of the Koszul complex in homological degree i and multidegree a:
  // (exterior monomial e_S, standard monomial of degree a - deg S).
  std::vector<std::pair<std::uint32_t, Monomial>> basis(int i, const std::vector<int>& a) {
    std::vector<std::pair<std::uint32_t, Monomial>> out;
    const std::uint32_t all = (std::uint32_t{1} << (2 * n_)) - 1;
    for (std::uint32_t s = 0; s <= all; ++s) {
      if (std::popcount(s) != i) continue;
      std::vector<int> rest = a;
      const auto d = degree_of(s);
      bool fits = true;
      for (int k = 0; k < n_; ++k) fits = fits && (rest[k] -= d[k]) >= 0;
      if (!fits) continue;
      for (const auto& m : standard(rest)) out.emplace_back(s, m);
    }
    return out;
  }

  // rank of the Koszul differential C_i(a) -> C_{i-1}(a).
  long long differential_rank(int i, const std::vector<int>& a) {
    const auto source = basis(i, a);
    const auto target = basis(i - 1, a);
    if (source.empty() || target.empty()) return 0;
    std::map<std::pair<std::uint32_t, Monomial>, std::uint32_t> index;
    for (std::uint32_t k = 0; k < target.size(); ++k) index.emplace(target[k], k);
    std::vector<SparseVector> rows;
    rows.reserve(source.size());
    for (const auto& [s, m] : source) {
      std::map<std::uint32_t, std::uint32_t> acc;
      int pos = 0;
      for (std::uint32_t rest = s; rest; rest &= rest - 1, ++pos) {
        const int var = std::countr_zero(rest);
        const std::uint32_t sign = pos % 2 == 0 ? 1 : f_.neg(1);
        const std::uint32_t face = s & ~(std::uint32_t{1} << var);
        for (const auto& t : reduce(m.times_var(var)).terms()) {
          const std::uint32_t col = index.at({face, t.monomial});
          acc[col] = f_.add(acc[col], f_.mul(sign, t.coeff));
        }
      }
      SparseVector row;
      for (auto [c, v] : acc)
        if (v) row.emplace_back(c, v);
      rows.push_back(std::move(row));
    }
    return static_cast<long long>(sparse_matrix_rank(rows, target.size(), f_));
  }

 private:
  int n_;
  const std::vector<Polynomial>& gb_;
  PrimeField f_;
  std::vector<Monomial> leads_;
  std::map<std::vector<int>, std::vector<Monomial>> standard_;
  std::map<Monomial, Polynomial> nf_;
};

}  // namespace detail

/// Betti numbers beta_{i,a}(S/J_G) for a in {0..box}^n and rows up to
/// reg_cap, by homology of the Koszul complex on all 2n variables.
///
/// Certification: reg(J_G) <= reg(in(J_G)) for any term order, and the
/// lex-degenerate Betti numbers bound those of J_G in each N^n degree, so
/// computing up to reg(in J_G) inside the box {0,1,2}^n captures every
/// nonzero entry. A cap below the certificate yields an uncertified result.
inline KoszulResult koszul_betti(const Graph& g, const PrimeField& f, KoszulOptions opt = {}) {
  const int n = g.n();
  if (n > opt.max_vertices)
    throw GuardError("koszul_betti: n = " + std::to_string(n) + " exceeds the oracle limit of " +
                     std::to_string(opt.max_vertices));
  KoszulResult result;
  result.table = CoarseBettiTable(f.characteristic());
  result.groebner_basis = buchberger(binomial_edge_polynomials(g, f), f);
  result.table.add(0, CoarseDegree{std::vector<int>(n, 0)}, 1);

  std::vector<Monomial> leads;
  for (const auto& p : result.groebner_basis) leads.push_back(p.lead().monomial);
  const MonomialIdeal lead_ideal = minimalize(n, leads);
  result.certificate =
      lead_ideal.is_zero() ? 0 : regularity_of_ideal(taylor_betti(lead_ideal, f, 24)).value_or(0);
  result.reg_cap = opt.reg_cap < 0 ? result.certificate + 1 : opt.reg_cap;
  result.certified = result.reg_cap >= result.certificate && opt.box >= 2;
  if (lead_ideal.is_zero()) return result;

  detail::KoszulBlocks blocks(n, result.groebner_basis, f);
  std::vector<int> a(n, 0);
  while (true) {
    // next multidegree in {0..box}^n
    int k = 0;
    while (k < n && a[k] == opt.box) a[k++] = 0;
    if (k == n) break;
    ++a[k];
    int total = 0;
    for (int v : a) total += v;
    std::map<int, long long> rank;
    auto rank_of = [&](int i) {
      if (i < 1 || i > 2 * n) return 0LL;
      auto it = rank.find(i);
      if (it != rank.end()) return it->second;
      return rank[i] = blocks.differential_rank(i, a);
    };
    for (int i = 1; i <= 2 * n; ++i) {
      if (total - i + 1 > result.reg_cap) continue;
      const long long dim = static_cast<long long>(blocks.basis(i, a).size());
      if (dim == 0) continue;
      result.table.add(i, CoarseDegree{a}, dim - rank_of(i) - rank_of(i + 1));
    }
  }
  return result;
}

/// Compares the entries supported in W of two certified N^n-graded tables.
inline bool agree_on_support(const KoszulResult& full, const KoszulResult& restricted, int n,
                             const std::vector<int>& w) {
  if (!full.certified || !restricted.certified) throw GuardError("check_lemma21: Koszul computation not certified");
  std::vector<char> in_w(n + 1, 0);
  for (int v : w) in_w[v] = 1;
  auto supported_in_w = [&](const CoarseDegree& d) {
    for (int k = 0; k < n; ++k)
      if (d.a[k] && !in_w[k + 1]) return false;
    return true;
  };
  std::map<std::pair<int, CoarseDegree>, long long> lhs, rhs;
  for (const auto& [key, v] : full.table.entries())
    if (supported_in_w(key.second)) lhs[key] = v;
  for (const auto& [key, v] : restricted.table.entries())
    if (supported_in_w(key.second)) rhs[key] = v;
  return lhs == rhs;
}

/// beta_{i,a}(J_G) = beta_{i,a}(J_{G_W}) for all a with supp(a) in W, with
/// G_W kept on the vertex set [n].
inline bool check_lemma21(const Graph& g, const std::vector<int>& w, const PrimeField& f, KoszulOptions opt = {}) {
  opt.max_vertices = std::min(opt.max_vertices, 4);
  const std::vector<int> checked = checked_vertex_set(g, w);
  const KoszulResult full = koszul_betti(g, f, opt);
  const KoszulResult restricted = koszul_betti(induced_on_full_vertex_set(g, checked), f, opt);
  return agree_on_support(full, restricted, g.n(), checked);
}

}  // namespace bei
