#pragma once
// Monomials in S = K[x_1..x_n, y_1..y_n] and monomial ideals.
//
// Variable index k in [0, n) is x_{k+1}; index n + k is y_{k+1}. Exponents are
// 8-bit saturating counters, enough for everything in this library.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bei {

class Monomial {
 public:
  static constexpr int kMaxVertices = 16;
  static constexpr int kMaxVars = 2 * kMaxVertices;

  Monomial() = default;
  explicit Monomial(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("monomial ring supports n <= 16, got " + std::to_string(n));
  }

  static Monomial x(int n, int i) { return Monomial(n).times_var(i - 1); }
  static Monomial y(int n, int i) { return Monomial(n).times_var(n + i - 1); }

  /// Squarefree monomial with support `mask` (bit k = variable k).
  static Monomial from_mask(int n, std::uint32_t mask) {
    Monomial m(n);
    for (; mask; mask &= mask - 1) m.exp_[std::countr_zero(mask)] = 1;
    return m;
  }

  int n() const { return n_; }
  int num_vars() const { return 2 * n_; }
  int exponent(int var) const { return exp_[var]; }
  int x_exponent(int i) const { return exp_[i - 1]; }
  int y_exponent(int i) const { return exp_[n_ + i - 1]; }

  Monomial times_var(int var, int power = 1) const {
    Monomial m = *this;
    m.exp_[var] = saturate(m.exp_[var] + power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (int k = 0; k < num_vars(); ++k) d += exp_[k];
    return d;
  }

  bool is_one() const { return degree() == 0; }

  bool squarefree() const {
    for (int k = 0; k < num_vars(); ++k)
      if (exp_[k] > 1) return false;
    return true;
  }

  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    for (int k = 0; k < num_vars(); ++k)
      if (exp_[k]) mask |= std::uint32_t{1} << k;
    return mask;
  }

  bool divides(const Monomial& other) const {
    for (int k = 0; k < num_vars(); ++k)
      if (exp_[k] > other.exp_[k]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial m(a.n_);
    for (int k = 0; k < a.num_vars(); ++k) m.exp_[k] = saturate(a.exp_[k] + b.exp_[k]);
    return m;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    if (!b.divides(a)) throw std::invalid_argument("monomial division is not exact");
    Monomial m(a.n_);
    for (int k = 0; k < a.num_vars(); ++k) m.exp_[k] = static_cast<std::uint8_t>(a.exp_[k] - b.exp_[k]);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial m(a.n_);
    for (int k = 0; k < a.num_vars(); ++k) m.exp_[k] = std::max(a.exp_[k], b.exp_[k]);
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial m(a.n_);
    for (int k = 0; k < a.num_vars(); ++k) m.exp_[k] = std::min(a.exp_[k], b.exp_[k]);
    return m;
  }

  /// Lex comparison with x_1 > ... > x_n > y_1 > ... > y_n: the first
  /// differing exponent in variable-index order decides.
  friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    for (int k = 0; k < a.num_vars(); ++k)
      if (a.exp_[k] != b.exp_[k]) return a.exp_[k] <=> b.exp_[k];
    return std::strong_ordering::equal;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static std::uint8_t saturate(int v) { return static_cast<std::uint8_t>(std::min(v, 255)); }
  static void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomials from different rings");
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxVars> exp_{};
};

/// Text form: factors x-block then y-block ascending, "x1^2" for powers, "1" for the unit.
inline std::string to_string(const Monomial& m) {
  std::string out;
  auto emit = [&](char name, int index, int e) {
    if (e == 0) return;
    if (!out.empty()) out.push_back('*');
    out.push_back(name);
    out += std::to_string(index);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (int i = 1; i <= m.n(); ++i) emit('x', i, m.x_exponent(i));
  for (int i = 1; i <= m.n(); ++i) emit('y', i, m.y_exponent(i));
  return out.empty() ? "1" : out;
}

inline Monomial parse_monomial(std::string_view text, int n) {
  Monomial m(n);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return m;
  if (text.empty()) throw std::invalid_argument("empty monomial text");
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view factor = trim(text.substr(start, end - start));
    if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'y'))
      throw std::invalid_argument("bad monomial factor: " + std::string(factor));
    std::size_t caret = factor.find('^');
    int index = std::stoi(std::string(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1)));
    int power = caret == std::string_view::npos ? 1 : std::stoi(std::string(factor.substr(caret + 1)));
    if (index < 1 || index > n || power < 0) throw std::invalid_argument("monomial factor out of range: " + std::string(factor));
    m = m.times_var(factor[0] == 'x' ? index - 1 : n + index - 1, power);
    start = end + 1;
  }
  return m;
}

/// m_i / gcd(m_i, m): the generator that m_i contributes to a colon ideal by m.
inline Monomial colon_generator(const Monomial& mi, const Monomial& m) { return mi / gcd(mi, m); }

/// Vertices k with x_k y_k dividing w (1-based, ascending).
inline std::vector<int> mult(const Monomial& w) {
  std::vector<int> out;
  for (int k = 1; k <= w.n(); ++k)
    if (w.x_exponent(k) > 0 && w.y_exponent(k) > 0) out.push_back(k);
  return out;
}

/// Monomial ideal given by an ordered generator list. The order matters for
/// mapping cones and Lyubeznik subsets, so it is never silently changed.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n) : n_(n) {}
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.n() != n) throw std::invalid_argument("generator from a different ring");
  }

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
  }
  bool squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_;
  std::vector<Monomial> gens_;
};

/// Drops every generator divisible by another one (first copy of duplicates
/// survives); survivors keep their relative order.
inline MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j == k || !gens[j].divides(gens[k])) continue;
      redundant = gens[j] != gens[k] || j < k;
    }
    if (!redundant) out.push_back(gens[k]);
  }
  return MonomialIdeal(n, std::move(out));
}

inline MonomialIdeal minimalize(const MonomialIdeal& ideal) { return minimalize(ideal.n(), ideal.generators()); }

inline MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon_generator(g, m));
  return minimalize(ideal.n(), gens);
}

/// Same generators as sets (order ignored).
inline bool same_generator_set(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto sa = a.generators(), sb = b.generators();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace bei
