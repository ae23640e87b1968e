#pragma once
// Batch pipelines over graph collections: per-graph bound verification, the
// extremal-regularity scan, cross-check suites against the oracles, report
// rendering and an on-disk result cache.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bei/betti.hpp"
#include "bei/binomial_edge.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/linalg.hpp"
#include "bei/mapping_cone.hpp"
#include "bei/monomial.hpp"
#include "bei/oracle.hpp"
#include "bei/parallel.hpp"

namespace bei {

using Json = nlohmann::json;

enum class RecordStatus { ok, skipped, error };

struct GraphRecord {
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  int ell = 0;
  std::optional<int> reg_init;  // nullopt: zero ideal
  int pd_init = 0;
  int depth_init = 0;
  std::uint32_t field = 2;
  bool bounds_ok = false;
  bool prop35_ok = false;
  bool lemma34_ok = false;
  bool is_path = false;
  long long ms = 0;
  RecordStatus status = RecordStatus::ok;
  std::string error;
  std::optional<int> reg_init_min, reg_init_max;  // relabelling sweep

  bool violation() const { return status == RecordStatus::ok && !(bounds_ok && prop35_ok && lemma34_ok); }
  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

class ResultCache;

struct VerifyOptions {
  std::uint32_t field = 2;
  int jobs = 1;
  bool timing = false;      // fill GraphRecord::ms; off keeps reports byte-stable
  long long budget_ms = 0;  // wall-clock budget for a whole batch, 0 = none
  int relabel_sweep = 0;
  ResultCache* cache = nullptr;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------------------
// JSON / CSV

inline const char* status_text(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::skipped: return "skipped: no edges";
    case RecordStatus::error: return "error";
  }
  return "?";
}

inline Json to_json(const GraphRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["ell"] = r.ell;
  j["reg_init"] = r.reg_init ? Json(*r.reg_init) : Json("undefined");
  j["pd_init"] = r.pd_init;
  j["depth_init"] = r.depth_init;
  j["field"] = r.field;
  j["bounds_ok"] = r.bounds_ok;
  j["prop35_ok"] = r.prop35_ok;
  j["lemma34_ok"] = r.lemma34_ok;
  j["is_path"] = r.is_path;
  j["ms"] = r.ms;
  j["status"] = status_text(r.status);
  if (!r.error.empty()) j["error"] = r.error;
  if (r.reg_init_min) j["reg_init_min"] = *r.reg_init_min;
  if (r.reg_init_max) j["reg_init_max"] = *r.reg_init_max;
  return j;
}

inline GraphRecord record_from_json(const Json& j) {
  GraphRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.edge_count = j.at("edges").get<int>();
  r.ell = j.at("ell").get<int>();
  if (j.at("reg_init").is_number_integer()) r.reg_init = j.at("reg_init").get<int>();
  else if (j.at("reg_init").get<std::string>() != "undefined") throw std::runtime_error("bad reg_init");
  r.pd_init = j.at("pd_init").get<int>();
  r.depth_init = j.at("depth_init").get<int>();
  r.field = j.at("field").get<std::uint32_t>();
  r.bounds_ok = j.at("bounds_ok").get<bool>();
  r.prop35_ok = j.at("prop35_ok").get<bool>();
  r.lemma34_ok = j.at("lemma34_ok").get<bool>();
  r.is_path = j.at("is_path").get<bool>();
  r.ms = j.at("ms").get<long long>();
  const std::string status = j.at("status").get<std::string>();
  if (status == "ok") r.status = RecordStatus::ok;
  else if (status == "skipped: no edges") r.status = RecordStatus::skipped;
  else if (status == "error") r.status = RecordStatus::error;
  else throw std::runtime_error("bad status: " + status);
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("reg_init_min")) r.reg_init_min = j.at("reg_init_min").get<int>();
  if (j.contains("reg_init_max")) r.reg_init_max = j.at("reg_init_max").get<int>();
  return r;
}

inline constexpr const char* kCsvHeader =
    "graph6,n,edges,ell,reg_init,pd_init,depth_init,field,bounds_ok,prop35_ok,lemma34_ok,is_path,ms";

/// Computed and skipped records, one row each; errored graphs only appear in
/// the JSON report.
inline std::string records_csv(const std::vector<GraphRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : records) {
    if (r.status == RecordStatus::error) continue;
    // graph6 uses bytes 63..126, which include neither ',' nor '"'
    out << r.graph6 << ',' << r.n << ',' << r.edge_count << ',' << r.ell << ','
        << (r.reg_init ? std::to_string(*r.reg_init) : std::string("undefined")) << ',' << r.pd_init << ','
        << r.depth_init << ',' << r.field << ',' << b(r.bounds_ok) << ',' << b(r.prop35_ok) << ','
        << b(r.lemma34_ok) << ',' << b(r.is_path) << ',' << r.ms << "\n";
  }
  return out.str();
}

/// {"records": [...], "skipped": [graph6...], "errors": [{graph6, error}...]}
inline Json records_json(const std::vector<GraphRecord>& records) {
  Json j;
  j["records"] = Json::array();
  j["skipped"] = Json::array();
  j["errors"] = Json::array();
  for (const auto& r : records) {
    if (r.status == RecordStatus::error) j["errors"].push_back({{"graph6", r.graph6}, {"error", r.error}});
    else {
      if (r.status == RecordStatus::skipped) j["skipped"].push_back(r.graph6);
      j["records"].push_back(to_json(r));
    }
  }
  return j;
}

/// Writes to a file, or to stdout when destination is empty or "-".
inline void write_output(const std::string& text, const std::string& destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + destination + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + destination);
}

inline std::string render_records(const std::vector<GraphRecord>& records, const std::string& format) {
  if (format == "csv") return records_csv(records);
  if (format == "json") return records_json(records).dump(2) + "\n";
  throw std::invalid_argument("unknown format '" + format + "' (expected json or csv)");
}

inline void emit_report(const std::vector<GraphRecord>& records, const std::string& format,
                        const std::string& destination) {
  write_output(render_records(records, format), destination);
}

// ---------------------------------------------------------------------------
// cache

/// One JSON file per (isomorphism class, field, sweep size), holding the
/// records of every labelling seen so far keyed by graph6.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  }

  const std::filesystem::path& directory() const { return dir_; }

  std::string key(const Graph& g, std::uint32_t field, int sweep = 0) const {
    std::string base;
    if (g.n() <= 10) {
      base = canonical_form(g).key();
    } else {
      std::ostringstream h;
      h << "g6-" << std::hex << fnv1a(encode_graph6(g));
      base = h.str();
    }
    return base + "-p" + std::to_string(field) + (sweep ? "-r" + std::to_string(sweep) : "");
  }

  std::optional<GraphRecord> lookup(const Graph& g, std::uint32_t field, int sweep = 0) {
    const std::string k = key(g, field, sweep);
    std::lock_guard lock(mutex_for(k));
    const auto entries = load(k);
    auto it = entries.find(encode_graph6(g));
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  void store(const Graph& g, const GraphRecord& r, int sweep = 0) {
    const std::string k = key(g, r.field, sweep);
    std::lock_guard lock(mutex_for(k));
    auto entries = load(k);
    entries[r.graph6] = r;
    Json j = Json::object();
    for (const auto& [g6, rec] : entries) j[g6] = to_json(rec);
    const auto final_path = path_of(k);
    auto tmp = final_path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    write_output(j.dump(1) + "\n", tmp.string());
    std::filesystem::rename(tmp, final_path);
  }

 private:
  std::filesystem::path path_of(const std::string& k) const { return dir_ / (k + ".json"); }

  std::mutex& mutex_for(const std::string& k) {
    std::lock_guard lock(table_mutex_);
    return locks_[k];
  }

  // A missing file is an empty entry; an unreadable one is reported and
  // treated as empty so the next store overwrites it.
  std::map<std::string, GraphRecord> load(const std::string& k) const {
    std::map<std::string, GraphRecord> out;
    std::ifstream in(path_of(k), std::ios::binary);
    if (!in) return out;
    try {
      const Json j = Json::parse(in);
      for (const auto& [g6, rec] : j.items()) {
        GraphRecord r = record_from_json(rec);
        if (r.graph6 != g6) throw std::runtime_error("key/graph6 mismatch");
        out.emplace(g6, std::move(r));
      }
    } catch (const std::exception& e) {
      std::cerr << "warning: corrupt cache entry " << path_of(k).string() << " (" << e.what()
                << "); recomputing\n";
      out.clear();
    }
    return out;
  }

  std::filesystem::path dir_;
  std::mutex table_mutex_;
  std::map<std::string, std::mutex> locks_;
};

// ---------------------------------------------------------------------------
// per-graph pipeline

inline std::optional<int> init_regularity(const Graph& g, const PrimeField& f) {
  const MonomialIdeal init = initial_ideal(g);
  if (init.is_zero()) return std::nullopt;
  return regularity_of_ideal(hochster_betti(init, f));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Full verdict for one graph under its given labelling.
inline GraphRecord compute_record(const Graph& g, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  GraphRecord r;
  r.graph6 = encode_graph6(g);
  r.n = g.n();
  r.edge_count = g.edge_count();
  r.field = opt.field;
  try {
    if (g.n() > Monomial::kMaxVertices) throw GuardError("n = " + std::to_string(g.n()) + " exceeds 16 vertices");
    const PrimeField f(opt.field);
    r.ell = longest_induced_path(g).length;
    r.is_path = is_path_graph(g);
    if (r.edge_count == 0) {
      r.status = RecordStatus::skipped;
      r.depth_init = 2 * g.n();
      r.bounds_ok = r.prop35_ok = r.lemma34_ok = true;
      return r;
    }
    const PathGenerators gens = path_generators(g);
    const MonomialIdeal init = minimalize(g.n(), gens.monomials);
    const BettiTable table = hochster_betti(init, f);
    r.reg_init = regularity_of_ideal(table);
    r.pd_init = projective_dimension(table);
    r.depth_init = depth_of_quotient(table, 2 * g.n());
    r.bounds_ok = r.reg_init && r.ell + 1 <= *r.reg_init && *r.reg_init <= g.n();
    r.prop35_ok = verify_prop35(table).empty();
    r.lemma34_ok = check_lemma34(gens, g.n()).empty();
    if (opt.relabel_sweep > 0) {
      std::mt19937_64 rng(fnv1a(r.graph6));
      r.reg_init_min = r.reg_init_max = r.reg_init;
      for (int k = 0; k < opt.relabel_sweep; ++k) {
        const auto reg = init_regularity(g.relabeled(random_permutation(g.n(), rng)), f);
        r.reg_init_min = std::min(*r.reg_init_min, *reg);
        r.reg_init_max = std::max(*r.reg_init_max, *reg);
      }
    }
  } catch (const std::exception& e) {
    GraphRecord failed;
    failed.graph6 = r.graph6;
    failed.n = r.n;
    failed.edge_count = r.edge_count;
    failed.field = r.field;
    failed.status = RecordStatus::error;
    failed.error = e.what();
    return failed;
  }
  if (opt.timing)
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// One record per input graph, in input order, whatever opt.jobs is.
inline std::vector<GraphRecord> run_bounds(const std::vector<Graph>& graphs, const VerifyOptions& opt) {
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opt.budget_ms);
  return ordered_parallel_map(graphs, opt.jobs, [&](const Graph& g) {
    if (opt.budget_ms > 0 && std::chrono::steady_clock::now() > deadline) {
      GraphRecord r;
      r.graph6 = encode_graph6(g);
      r.n = g.n();
      r.edge_count = g.edge_count();
      r.field = opt.field;
      r.status = RecordStatus::error;
      r.error = "budget exceeded";
      return r;
    }
    if (opt.cache) {
      if (auto hit = opt.cache->lookup(g, opt.field, opt.relabel_sweep)) return *hit;
    }
    GraphRecord r = compute_record(g, opt);
    if (opt.cache && r.status != RecordStatus::error) opt.cache->store(g, r, opt.relabel_sweep);
    return r;
  });
}

/// Stable sort by edge count.
inline std::vector<Graph> scan_order(std::vector<Graph> graphs) {
  std::stable_sort(graphs.begin(), graphs.end(),
                   [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  return graphs;
}

// ---------------------------------------------------------------------------
// extremal scan

struct ScanSummary {
  int n = 0;
  std::uint32_t field = 2;
  int total = 0;
  int skipped_no_edges = 0;
  int errors = 0;
  int violations = 0;
  std::vector<std::string> extremal;  // graph6 of graphs with reg_init = n
  bool path_extremal = false;         // some extremal graph is a path
  bool conjecture_ok = false;         // every extremal graph is a path
  std::vector<std::string> notes;

  bool passed() const { return errors == 0 && violations == 0 && conjecture_ok; }
};

struct ScanResult {
  ScanSummary summary;
  std::vector<GraphRecord> records;
};

inline std::vector<std::string> scan_notes(std::uint32_t field) {
  std::vector<std::string> notes{
      "soundness: the scan measures reg(in(J_G)) for the lex order; reg(J_G) <= reg(in(J_G)) <= n, so "
      "reg(J_G) = n forces reg(in(J_G)) = n, and an extremal set made only of paths confirms the statement for "
      "this n and field",
      "wording: the statement says 'a path of length n', while a path on n vertices has length n-1; the scan "
      "tests 'is a path on n vertices'",
      "labelling: in(J_G) depends on the vertex labelling; each graph is scanned under its given labelling"};
  if (field != 2)
    notes.push_back("field: characteristic 0 is approximated by GF(" + std::to_string(field) +
                    "); torsion at other primes is not excluded");
  notes.push_back("scale: built-in enumeration stops at 7 vertices");
  return notes;
}

inline ScanSummary summarize_scan(int n, std::uint32_t field, const std::vector<GraphRecord>& records) {
  ScanSummary s;
  s.n = n;
  s.field = field;
  s.total = static_cast<int>(records.size());
  s.conjecture_ok = true;
  for (const auto& r : records) {
    if (r.status == RecordStatus::skipped) ++s.skipped_no_edges;
    if (r.status == RecordStatus::error) ++s.errors;
    if (r.violation()) ++s.violations;
    if (r.status == RecordStatus::ok && r.reg_init == r.n) {
      s.extremal.push_back(r.graph6);
      s.path_extremal = s.path_extremal || r.is_path;
      s.conjecture_ok = s.conjecture_ok && r.is_path;
    }
  }
  s.notes = scan_notes(field);
  return s;
}

/// All isomorphism classes on n vertices (or the supplied graphs), smallest
/// edge count first.
inline ScanResult run_conjecture_scan(int n, const VerifyOptions& opt,
                                      std::optional<std::vector<Graph>> source = std::nullopt) {
  std::vector<Graph> graphs;
  if (source) {
    if (n > 8 || (n == 8 && opt.budget_ms <= 0))
      throw GuardError("scan of n = " + std::to_string(n) + " needs n <= 7, or n = 8 with --budget-ms");
    for (const auto& g : *source)
      if (g.n() == n) graphs.push_back(g);
  } else {
    graphs = enumerate_graphs(n, false);
  }
  ScanResult out;
  out.records = run_bounds(scan_order(std::move(graphs)), opt);
  out.summary = summarize_scan(n, opt.field, out.records);
  return out;
}

inline Json to_json(const ScanSummary& s) {
  return Json{{"n", s.n},
              {"field", s.field},
              {"total", s.total},
              {"skipped_no_edges", s.skipped_no_edges},
              {"errors", s.errors},
              {"violations", s.violations},
              {"extremal", s.extremal},
              {"path_extremal", s.path_extremal},
              {"conjecture_ok", s.conjecture_ok},
              {"notes", s.notes}};
}

// ---------------------------------------------------------------------------
// cross-checks

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> details;  // first few failures
};

struct CrosscheckReport {
  int max_n = 0;
  std::uint32_t field = 2;
  std::vector<SuiteResult> suites;
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
  }
  const SuiteResult* suite(const std::string& name) const {
    for (const auto& s : suites)
      if (s.name == name) return &s;
    return nullptr;
  }
};

struct CrosscheckOptions {
  std::uint32_t field = 2;
  int jobs = 1;
  int oracle_max_n = 4;  // Koszul suites
  int restriction_subsets = 20;
  bool mutant = false;  // drop one admissible path (negative control)
};

/// Over every Lyubeznik subset F of the length-ordered admissible-path list:
/// (i)  mult(lcm F) avoids the inner vertices of the first path of F;
/// (ii) if it avoids the inner vertices of every path of F, #mult <= |F| - 1.
inline std::vector<std::string> check_lyubeznik_properties(const PathGenerators& gens, int n) {
  std::vector<std::string> out;
  for (const auto& subset : lyubeznik_subsets(gens.monomials, static_cast<std::size_t>(2 * n), 256)) {
    Monomial l(n);
    for (int i : subset) l = lcm(l, gens.monomials[i - 1]);
    const std::vector<int> m = mult(l);
    auto hits_inner = [&](int index) {
      const auto& v = gens.paths[index - 1].vertices();
      for (std::size_t k = 1; k + 1 < v.size(); ++k)
        if (std::find(m.begin(), m.end(), v[k]) != m.end()) return true;
      return false;
    };
    std::string where = "{";
    for (int i : subset) where += (where.size() > 1 ? "," : "") + std::to_string(i);
    where += "}";
    if (hits_inner(subset.front())) out.push_back("(i) " + where);
    const bool avoids_all = std::none_of(subset.begin(), subset.end(), hits_inner);
    if (avoids_all && m.size() + 1 > subset.size()) out.push_back("(ii) " + where);
  }
  return out;
}

/// Wedge properties for every admissible path and inner index.
inline std::vector<std::string> check_wedges(const Graph& g, const PathGenerators& gens) {
  std::vector<std::string> out;
  std::map<std::vector<int>, std::size_t> position;
  for (std::size_t k = 0; k < gens.paths.size(); ++k) position[gens.paths[k].vertices()] = k;
  for (std::size_t j = 0; j < gens.paths.size(); ++j) {
    const auto& p = gens.paths[j];
    for (int k = 1; k < p.length(); ++k) {
      const AdmissiblePath w = wedge(p, k);
      const int v = p.vertices()[k];
      const Monomial var = p.below(k) ? Monomial::x(g.n(), v) : Monomial::y(g.n(), v);
      auto it = position.find(w.vertices());
      const bool ok = it != position.end() && it->second < j && w.length() < p.length() &&
                      path_monomial(w, g.n()).divides(gens.monomials[j] * var);
      if (!ok) out.push_back("wedge " + to_string(p) + " at " + std::to_string(k) + " -> " + to_string(w));
    }
  }
  return out;
}

namespace detail {

struct GraphChecks {
  std::map<std::string, std::pair<long long, std::vector<std::string>>> suites;  // name -> (cases, failures)
  std::vector<std::string> notes;

  void record(const std::string& suite, const std::vector<std::string>& failures, long long cases = 1) {
    auto& slot = suites[suite];
    slot.first += cases;
    slot.second.insert(slot.second.end(), failures.begin(), failures.end());
  }
  void record(const std::string& suite, bool ok, const std::string& detail) {
    record(suite, ok ? std::vector<std::string>{} : std::vector<std::string>{detail});
  }
};

inline GraphChecks crosscheck_graph(const Graph& g, const CrosscheckOptions& opt) {
  GraphChecks c;
  const PrimeField f(opt.field);
  const std::string g6 = encode_graph6(g);
  const PathGenerators gens = path_generators(g);
  const MonomialIdeal init = minimalize(g.n(), gens.monomials);

  // admissible-path monomials vs Groebner lead terms
  {
    MonomialIdeal claimed = init;
    if (opt.mutant && !init.is_zero()) {
      std::vector<Monomial> rest(init.generators().begin() + 1, init.generators().end());
      claimed = MonomialIdeal(g.n(), rest);
    }
    std::vector<Monomial> leads;
    for (const auto& p : buchberger(binomial_edge_polynomials(g, f), f)) leads.push_back(p.lead().monomial);
    c.record("initial-ideal", same_generator_set(claimed, minimalize(g.n(), leads)), g6);
  }

  c.record("wedges", check_wedges(g, gens));
  {
    std::vector<std::string> fails;
    for (const auto& v : check_lemma34(gens, g.n()))
      fails.push_back(g6 + " path " + std::to_string(v.j) + " vertex " + std::to_string(v.vertex));
    c.record("colon-membership", fails);
  }
  {
    auto fails = check_lyubeznik_properties(gens, g.n());
    for (auto& s : fails) s = g6 + " " + s;
    c.record("lyubeznik", fails);
  }
  if (init.is_zero()) return c;

  const BettiTable table = hochster_betti(init, f);
  c.record("vanishing", verify_prop35(table).empty(), g6);
  {
    const PoincareBound bound = mapping_cone_bound(g.n(), init.generators());
    bool ok = true;
    for (const auto& [key, v] : table.entries())
      ok = ok && static_cast<long long>(bound.coefficient(key.first, key.second)) >= v;
    c.record("mapping-cone", ok, g6);
  }
  c.record("taylor", taylor_betti(init, f) == table, g6);

  if (g.n() > opt.oracle_max_n) return c;
  KoszulOptions kopt;
  kopt.max_vertices = opt.oracle_max_n;
  const KoszulResult exact = koszul_betti(g, f, kopt);
  if (!exact.certified) {
    c.record("degeneration", false, g6 + " uncertified");
    return c;
  }
  {
    const int reg = *exact.regularity();
    const int reg_init = *regularity_of_ideal(table);
    const int ell = longest_induced_path(g).length;
    bool ok = reg <= reg_init && ell + 1 <= reg && reg <= g.n();
    const auto lhs = exact.table.total_graded();
    const auto rhs = table.total_graded();
    for (const auto& [key, v] : lhs) {
      auto it = rhs.find(key);
      ok = ok && it != rhs.end() && v <= it->second;
    }
    c.record("degeneration", ok, g6 + " reg=" + std::to_string(reg) + " reg_init=" + std::to_string(reg_init));
    if (reg < reg_init) c.notes.push_back("reg(in J_G) > reg(J_G) for " + g6);
  }
  if (g.connected()) {
    const int depth = depth_of_quotient(exact.table, 2 * g.n());
    c.record("depth", depth <= g.n() + 1, g6 + " depth=" + std::to_string(depth));
  }
  {
    std::mt19937_64 rng(fnv1a(g6) ^ opt.field);
    std::uniform_int_distribution<int> pick(1, (1 << g.n()) - 1);
    std::map<int, KoszulResult> restricted;
    std::vector<std::string> fails;
    for (int k = 0; k < opt.restriction_subsets; ++k) {
      const int mask = pick(rng);
      std::vector<int> w;
      for (int v = 1; v <= g.n(); ++v)
        if ((mask >> (v - 1)) & 1) w.push_back(v);
      auto it = restricted.find(mask);
      if (it == restricted.end())
        it = restricted.emplace(mask, koszul_betti(induced_on_full_vertex_set(g, w), f, kopt)).first;
      if (!agree_on_support(exact, it->second, g.n(), w)) fails.push_back(g6 + " W mask " + std::to_string(mask));
    }
    c.record("restriction", fails, opt.restriction_subsets);
  }
  return c;
}

}  // namespace detail

inline const std::vector<std::string>& crosscheck_suite_names() {
  static const std::vector<std::string> names{"initial-ideal", "wedges",       "colon-membership", "lyubeznik",
                                              "vanishing",     "mapping-cone", "taylor",           "degeneration",
                                              "depth",         "restriction"};
  return names;
}

/// Every suite over all isomorphism classes on 1..max_n vertices.
inline CrosscheckReport run_crosschecks(int max_n, const CrosscheckOptions& opt) {
  if (max_n < 1 || max_n > 5) throw GuardError("crosscheck supports 1 <= max_n <= 5");
  if (opt.oracle_max_n > 5) throw GuardError("oracle suites support n <= 5");
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : enumerate_graphs(n, false)) graphs.push_back(std::move(g));
  const auto per_graph =
      ordered_parallel_map(graphs, opt.jobs, [&](const Graph& g) { return detail::crosscheck_graph(g, opt); });

  CrosscheckReport report;
  report.max_n = max_n;
  report.field = opt.field;
  constexpr std::size_t kMaxDetails = 10;
  for (const auto& name : crosscheck_suite_names()) {
    SuiteResult s{name, 0, 0, {}};
    for (const auto& c : per_graph) {
      auto it = c.suites.find(name);
      if (it == c.suites.end()) continue;
      s.cases += it->second.first;
      s.failures += static_cast<long long>(it->second.second.size());
      for (const auto& d : it->second.second)
        if (s.details.size() < kMaxDetails) s.details.push_back(d);
    }
    report.suites.push_back(std::move(s));
  }
  for (const auto& c : per_graph) report.notes.insert(report.notes.end(), c.notes.begin(), c.notes.end());
  if (opt.field != 2)
    report.notes.push_back("field: characteristic 0 is approximated by GF(" + std::to_string(opt.field) + ")");
  if (opt.mutant) report.notes.push_back("mutant: first minimal admissible-path generator dropped");
  return report;
}

inline Json to_json(const CrosscheckReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites)
    suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"details", s.details}});
  return Json{{"max_n", r.max_n}, {"field", r.field}, {"suites", suites}, {"notes", r.notes}, {"passed", r.passed()}};
}

inline std::string crosscheck_csv(const CrosscheckReport& r) {
  std::string out = "suite,cases,failures\n";
  for (const auto& s : r.suites) out += s.name + "," + std::to_string(s.cases) + "," + std::to_string(s.failures) + "\n";
  return out;
}

}  // namespace bei
