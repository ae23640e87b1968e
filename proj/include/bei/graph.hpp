#pragma once
// Simple undirected graphs on vertices 1..n, graph6 I/O, induced subgraphs,
// longest induced paths and small-n isomorphism-class enumeration.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bei {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexMask = std::uint64_t;

/// Simple graph on [n], 1 <= n <= 62. Interfaces are 1-based; storage is a
/// row bitmask per vertex (bit v-1 set in row u-1 iff {u,v} is an edge).
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph vertex count out of range: " + std::to_string(n));
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u - 1] |= VertexMask{1} << (v - 1);
    rows_[v - 1] |= VertexMask{1} << (u - 1);
  }

  bool adjacent(int u, int v) const {
    return (rows_[u - 1] >> (v - 1)) & 1U;
  }

  /// Neighbourhood of u as a 0-based bitmask.
  VertexMask neighbors(int u) const { return rows_[u - 1]; }

  int degree(int u) const { return std::popcount(rows_[u - 1]); }

  int edge_count() const {
    int twice = 0;
    for (int u = 0; u < n_; ++u) twice += std::popcount(rows_[u]);
    return twice / 2;
  }

  /// Edges {i,j} with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  bool connected() const {
    VertexMask seen = 1, frontier = 1;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n_;
  }

  /// Graph with vertex k relabelled perm[k-1] (perm is a permutation of 1..n).
  Graph relabeled(const std::vector<int>& perm) const {
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u - 1], perm[v - 1]);
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int u = 0; u < a.n_; ++u)
      if (a.rows_[u] != b.rows_[u]) return false;
    return true;
  }

 private:
  void check_vertex(int u) const {
    if (u < 1 || u > n_) throw std::out_of_range("vertex out of range: " + std::to_string(u));
  }

  int n_;
  std::array<VertexMask, kMaxVertices> rows_{};
};

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

/// Spider with `legs` legs of `leg_length` edges each; the centre is vertex 1
/// and leg k occupies consecutive labels outward from the centre.
inline Graph spider_graph(int legs, int leg_length) {
  Graph g(1 + legs * leg_length);
  int next = 2;
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 1;
    for (int step = 0; step < leg_length; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// graph6

inline std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 62) throw std::invalid_argument("graph6 encoder supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw FormatError("empty graph6 record", 0);
  for (std::size_t k = 0; k < line.size(); ++k) {
    const auto c = static_cast<unsigned char>(line[k]);
    if (c < 63 || c > 126) throw FormatError("non-printable or out-of-range graph6 byte", k);
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n == 63) throw FormatError("graph6 records with n > 62 are not supported", 0);
  if (n < 1) throw FormatError("graph6 length byte encodes n = 0", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() < expected) throw FormatError("truncated graph6 bit field", line.size());
  if (line.size() > expected) throw FormatError("trailing bytes after graph6 bit field", expected);

  Graph g(n);
  std::size_t pos = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++pos) {
      const int byte = static_cast<unsigned char>(line[1 + pos / 6]) - 63;
      if ((byte >> (5 - pos % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int byte = static_cast<unsigned char>(line[last]) - 63;
    if (byte & ((1 << (6 - bits % 6)) - 1)) throw FormatError("nonzero graph6 padding bits", last);
  }
  return g;
}

/// Reads one graph per line; blank lines are ignored and a leading
/// ">>graph6<<" header is stripped.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  constexpr std::string_view header = ">>graph6<<";
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (body.starts_with(header)) body.remove_prefix(header.size());
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
    if (body.empty()) continue;
    try {
      out.push_back(parse_graph6(body));
    } catch (const FormatError& e) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// subgraphs and paths

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[k-1] = vertex of G labelled k in the subgraph
};

inline std::vector<int> checked_vertex_set(const Graph& g, std::vector<int> w) {
  if (w.empty()) throw std::invalid_argument("vertex subset is empty");
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end())
    throw std::invalid_argument("vertex subset has duplicates");
  if (w.front() < 1 || w.back() > g.n()) throw std::out_of_range("vertex subset out of range");
  return w;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> w) {
  w = checked_vertex_set(g, std::move(w));
  InducedSubgraph out{Graph(static_cast<int>(w.size())), w};
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (g.adjacent(w[a], w[b])) out.graph.add_edge(static_cast<int>(a + 1), static_cast<int>(b + 1));
  return out;
}

/// G_W kept on the full vertex set [n]: edges of G with both ends in W.
inline Graph induced_on_full_vertex_set(const Graph& g, std::vector<int> w) {
  w = checked_vertex_set(g, std::move(w));
  Graph out(g.n());
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (g.adjacent(w[a], w[b])) out.add_edge(w[a], w[b]);
  return out;
}

struct InducedPathWitness {
  int length = 0;
  std::vector<int> vertices;
};

inline bool is_induced_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] == p[b]) return false;
      if (g.adjacent(p[a], p[b]) != (b == a + 1)) return false;
    }
  return true;
}

namespace detail {

inline void extend_induced_path(const Graph& g, std::vector<int>& path, VertexMask used,
                                VertexMask blocked, InducedPathWitness& best) {
  if (static_cast<int>(path.size()) - 1 > best.length) {
    best.length = static_cast<int>(path.size()) - 1;
    best.vertices = path;
  }
  if (best.length == g.n() - 1) return;
  const int last = path.back();
  // Candidates: neighbours of the last vertex that touch no earlier path vertex.
  VertexMask cand = g.neighbors(last) & ~used & ~blocked;
  const VertexMask closed_last = g.neighbors(last) | (VertexMask{1} << (last - 1));
  for (; cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand) + 1;
    path.push_back(v);
    extend_induced_path(g, path, used | (VertexMask{1} << (v - 1)), blocked | closed_last, best);
    path.pop_back();
  }
}

}  // namespace detail

inline InducedPathWitness longest_induced_path(const Graph& g) {
  InducedPathWitness best{0, {1}};
  std::vector<int> path;
  for (int s = 1; s <= g.n(); ++s) {
    path.assign(1, s);
    detail::extend_induced_path(g, path, VertexMask{1} << (s - 1), 0, best);
  }
  return best;
}

inline bool is_path_graph(const Graph& g) {
  if (!g.connected() || g.edge_count() != g.n() - 1) return false;
  for (int u = 1; u <= g.n(); ++u)
    if (g.degree(u) > 2) return false;
  return true;
}

// ---------------------------------------------------------------------------
// canonical forms and enumeration

/// Minimal graph6-order upper-triangle bit string over all relabellings.
struct CanonicalForm {
  int n = 0;
  std::string bits;  // '0'/'1', column-major upper triangle

  auto operator<=>(const CanonicalForm&) const = default;

  /// Hex digest used for cache keys: "n<n>-<hex>".
  std::string key() const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "n" + std::to_string(n) + "-";
    for (std::size_t k = 0; k < bits.size(); k += 4) {
      int nibble = 0;
      for (std::size_t b = k; b < k + 4; ++b) nibble = (nibble << 1) | (b < bits.size() && bits[b] == '1');
      out.push_back(kHex[nibble]);
    }
    return out;
  }
};

namespace detail {

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<int> perm;  // perm[position] = original vertex (1-based)
  std::string current;
  std::string best;
  bool have_best = false;

  // Prunes any branch whose prefix already exceeds the best string found.
  void search(int pos, VertexMask used) {
    if (pos == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if ((used >> (v - 1)) & 1) continue;
      const std::size_t start = current.size();
      for (int i = 0; i < pos; ++i) current.push_back(g.adjacent(perm[i], v) ? '1' : '0');
      if (!have_best || current.compare(0, current.size(), best, 0, current.size()) <= 0) {
        perm[pos] = v;
        search(pos + 1, used | (VertexMask{1} << (v - 1)));
      }
      current.resize(start);
    }
  }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  constexpr int kMaxBruteForce = 10;
  if (g.n() > kMaxBruteForce)
    throw GuardError("canonical_form: brute force limited to n <= 10, got n = " + std::to_string(g.n()));
  detail::CanonicalSearch s{g, g.n(), std::vector<int>(g.n()), {}, {}, false};
  s.search(0, 0);
  return {g.n(), s.best};
}

inline Graph graph_from_canonical(const CanonicalForm& c) {
  Graph g(c.n);
  std::size_t pos = 0;
  for (int j = 2; j <= c.n; ++j)
    for (int i = 1; i < j; ++i, ++pos)
      if (c.bits[pos] == '1') g.add_edge(i, j);
  return g;
}

namespace detail {

inline std::vector<CanonicalForm> classes_on(int n) {
  if (n == 1) return {CanonicalForm{1, ""}};
  std::vector<CanonicalForm> out;
  for (const auto& smaller : classes_on(n - 1)) {
    const Graph base = graph_from_canonical(smaller);
    for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (VertexMask m = nb; m; m &= m - 1) g.add_edge(std::countr_zero(m) + 1, n);
      out.push_back(canonical_form(g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// One canonically labelled representative per isomorphism class, ordered by
/// canonical form. Built-in support is limited to n <= 7.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  constexpr int kMaxBuiltin = 7;
  if (n < 1 || n > kMaxBuiltin)
    throw GuardError("built-in enumeration supports 1 <= n <= 7 (got " + std::to_string(n) +
                     "); supply a graph6 file with --input instead");
  std::vector<Graph> out;
  for (const auto& c : detail::classes_on(n)) {
    Graph g = graph_from_canonical(c);
    if (!connected_only || g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace bei
