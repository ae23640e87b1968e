#pragma once
// Polynomials over GF(p) in S = K[x_1..x_n, y_1..y_n] with the lex order
// x_1 > ... > x_n > y_1 > ... > y_n, and a plain Buchberger algorithm.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bei/graph.hpp"
#include "bei/linalg.hpp"
#include "bei/monomial.hpp"

namespace bei {

struct Term {
  Monomial monomial;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted lex-descending with nonzero coefficients in [1, p).
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_terms(std::vector<Term> terms, const PrimeField& f) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_compare(a.monomial, b.monomial) > 0; });
    Polynomial p;
    for (const auto& t : terms) {
      const std::uint32_t c = f.reduce(t.coeff);
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff = f.add(p.terms_.back().coeff, c);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (c != 0) {
        p.terms_.push_back({t.monomial, c});
      }
    }
    return p;
  }

  static Polynomial monomial(const Monomial& m) {
    Polynomial p;
    p.terms_.push_back({m, 1});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
  }

  /// this + c * shift * g.
  Polynomial add_multiple(const Polynomial& g, std::uint32_t c, const Monomial& shift, const PrimeField& f) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      const Monomial shifted = g.terms_[j].monomial * shift;
      const auto cmp = i < terms_.size() ? lex_compare(terms_[i].monomial, shifted) : std::strong_ordering::less;
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({shifted, f.mul(c, g.terms_[j++].coeff)});
      } else {
        const std::uint32_t sum = f.add(terms_[i].coeff, f.mul(c, g.terms_[j].coeff));
        if (sum) out.terms_.push_back({shifted, sum});
        ++i, ++j;
      }
    }
    return out;
  }

  Polynomial monic(const PrimeField& f) const {
    if (is_zero()) return *this;
    Polynomial out = *this;
    const std::uint32_t s = f.inv(lead().coeff);
    for (auto& t : out.terms_) t.coeff = f.mul(t.coeff, s);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// "x1*y2 - x2*y1": terms lex-descending, coefficients printed as signed
/// representatives in (-p/2, p/2].
inline std::string to_string(const Polynomial& p, const PrimeField& f) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    long long c = t.coeff;
    if (c > static_cast<long long>(f.characteristic() / 2)) c -= f.characteristic();
    const bool negative = c < 0;
    const long long mag = negative ? -c : c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    const bool unit = t.monomial.is_one();
    if (mag != 1 || unit) out << mag << (unit ? "" : "*");
    if (!unit) out << to_string(t.monomial);
    first = false;
  }
  return out.str();
}

/// Full reduction: no term of the result is divisible by a lead term of `basis`.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const PrimeField& field) {
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.lead();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.lead().monomial.divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      const std::uint32_t c = field.neg(field.mul(lt.coeff, field.inv(divisor->lead().coeff)));
      rest = rest.add_multiple(*divisor, c, lt.monomial / divisor->lead().monomial, field);
    } else {
      remainder.push_back(lt);
      rest = rest.add_multiple(Polynomial::monomial(lt.monomial), field.neg(lt.coeff), Monomial(lt.monomial.n()), field);
    }
  }
  return Polynomial::from_terms(std::move(remainder), field);
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  const Monomial l = lcm(a.lead().monomial, b.lead().monomial);
  const Polynomial left = Polynomial().add_multiple(a, f.inv(a.lead().coeff), l / a.lead().monomial, f);
  return left.add_multiple(b, f.neg(f.inv(b.lead().coeff)), l / b.lead().monomial, f);
}

struct BuchbergerLimits {
  int max_vars = 12;
  std::size_t max_reductions = 200000;
};

/// Reduced lex Groebner basis, monic, sorted by leading monomial (lex
/// ascending). S-pairs are taken smallest lcm first (degree, then lex).
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const PrimeField& f,
                                          BuchbergerLimits limits = {}) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  if (!gens.empty() && gens.front().lead().monomial.num_vars() > limits.max_vars)
    throw GuardError("buchberger: workload guard exceeded (" +
                     std::to_string(gens.front().lead().monomial.num_vars()) + " variables)");
  std::vector<Polynomial> basis;
  for (auto& g : gens) basis.push_back(g.monic(f));

  using Pair = std::tuple<int, Monomial, std::size_t, std::size_t>;  // (deg, lcm, i, j)
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    const auto c = lex_compare(std::get<1>(a), std::get<1>(b));
    if (c != 0) return c < 0;
    return std::tie(std::get<2>(a), std::get<3>(a)) < std::tie(std::get<2>(b), std::get<3>(b));
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].lead().monomial;
      const Monomial& b = basis[j].lead().monomial;
      if (gcd(a, b).is_one()) continue;  // coprime leads: S-pair reduces to zero
      const Monomial l = lcm(a, b);
      pairs.emplace_back(l.degree(), l, i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const Pair chosen = *best;
    pairs.erase(best);
    if (++reductions > limits.max_reductions) throw GuardError("buchberger: workload guard exceeded (reductions)");
    const Polynomial r = normal_form(s_polynomial(basis[std::get<2>(chosen)], basis[std::get<3>(chosen)], f), basis, f);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(f));
    add_pairs(basis.size() - 1);
  }

  // Minimal basis: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == k || !basis[j].lead().monomial.divides(basis[k].lead().monomial)) continue;
      redundant = basis[j].lead().monomial != basis[k].lead().monomial || j < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  // Reduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(minimal[j]);
    const Polynomial tail = minimal[k].add_multiple(Polynomial::monomial(minimal[k].lead().monomial),
                                                    f.neg(1), Monomial(minimal[k].lead().monomial.n()), f);
    const Polynomial tail_nf = normal_form(tail, others, f);
    reduced.push_back(tail_nf.add_multiple(Polynomial::monomial(minimal[k].lead().monomial), 1,
                                           Monomial(minimal[k].lead().monomial.n()), f));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return lex_compare(a.lead().monomial, b.lead().monomial) < 0;
  });
  return reduced;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& f) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], f), basis, f).is_zero()) return false;
  return true;
}

/// J_G as polynomials: x_i y_j - x_j y_i for each edge i < j.
inline std::vector<Polynomial> binomial_edge_polynomials(const Graph& g, const PrimeField& f) {
  std::vector<Polynomial> out;
  const int n = g.n();
  for (auto [i, j] : g.edges())
    out.push_back(Polynomial::from_terms({{Monomial::x(n, i) * Monomial::y(n, j), 1},
                                          {Monomial::x(n, j) * Monomial::y(n, i), f.neg(1)}},
                                         f));
  return out;
}

/// GB dump: one polynomial per line.
inline std::string dump_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& f) {
  std::string out;
  for (const auto& g : basis) out += to_string(g, f) + "\n";
  return out;
}

}  // namespace bei
