#pragma once

// Command-line front end: transform, analyze, sweep, tables.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlab/ehrhart_io.hpp"
#include "vlab/vlab.hpp"

namespace vlab::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kVerification = 3, kBudget = 4 };

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string hText;
  std::string polytopePath;
  unsigned d = 0;
  unsigned n = 1;
  std::string nRange = "1:20";
  std::string method = "definition";
  std::string format = "text";
  std::string predicate = "all";
  unsigned widthBits = kDefaultIsolationBits;
  std::uint64_t budget = kDefaultPointBudget;
  unsigned threads = 0;
  unsigned coeffMax = 1;
  bool verify = false;
  unsigned eulerianD = 0, stirlingD = 0, rootsD = 0;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using nlohmann::json;

inline std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    BigInt v;
    if (item.empty() || v.set_str(item, 10) != 0) throw ValidationError("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

inline std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("n-range must look like a:b");
  unsigned a = 0, b = 0;
  auto parse = [&](std::string_view s, unsigned& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ValidationError("bad n-range bound: " + std::string(s));
  };
  parse(std::string_view(text).substr(0, colon), a);
  parse(std::string_view(text).substr(colon + 1), b);
  if (a == 0 || a > b) throw ValidationError("n-range must satisfy 1 <= a <= b");
  return {a, b};
}

inline Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw ValidationError("unknown format: " + f);
}

inline unsigned thread_budget(unsigned requested) {
  unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("VLAB_THREADS")) {
    unsigned c = 0;
    auto [p, ec] = std::from_chars(cap, cap + std::char_traits<char>::length(cap), c);
    if (ec == std::errc() && c > 0) n = std::min(n, c);
  }
  return n;
}

// Dilation-ready h-vector with h_0 = 1 and degree <= d.
inline HVector validated_h(const std::string& text, unsigned d) {
  if (d == 0) throw ValidationError("--d must be a positive integer");
  auto coeffs = parse_int_list(text);
  if (coeffs.size() > d + 1) throw ValidationError("h has more than d + 1 coefficients");
  if (coeffs[0] != 1) throw ValidationError("h_0 must equal 1");
  return HVector(d, std::move(coeffs));
}

inline json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline json interval_json(const RootInterval& r) {
  return json{{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"exact", r.exact()}};
}

inline std::string interval_text(const RootInterval& r) {
  if (r.exact()) return r.lo.get_str();
  return "(" + r.lo.get_str() + "," + r.hi.get_str() + ")";
}

inline json root_report_json(const RootReport& r) {
  json iv = json::array();
  for (const auto& x : r.isolatingIntervals) iv.push_back(interval_json(x));
  return json{{"degree", r.degree},
              {"realRootCount", r.realRootCount},
              {"negativeRootCount", r.negativeRootCount},
              {"zeroMultiplicity", r.zeroMultiplicity},
              {"squarefree", r.squarefree},
              {"allRealSimpleNegative", r.allRealSimpleNegative},
              {"isolatingIntervals", iv}};
}

inline json report_json(const DiagnosticsReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks) {
    json j{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    j["index"] = c.index ? json(*c.index) : json(nullptr);
    j["margin"] = c.margin ? json(c.margin->get_str()) : json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void report_text(std::ostream& out, const std::string& section, const DiagnosticsReport& rep) {
  out << "[" << section << "]\n";
  for (const auto& c : rep.checks) {
    out << "  " << c.name;
    if (c.index) out << "[" << *c.index << "]";
    out << ": " << to_string(c.status);
    if (c.margin) out << " (margin " << c.margin->get_str() << ")";
    if (!c.note.empty()) out << " -- " << c.note;
    out << "\n";
  }
}

inline int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  const HVector h = validated_h(cfg.hText, cfg.d);
  if (cfg.n == 0) throw ValidationError("--n must be positive");
  UnMethod method;
  if (cfg.method == "definition") method = UnMethod::Definition;
  else if (cfg.method == "convolution") method = UnMethod::Convolution;
  else if (cfg.method == "eulerian") method = UnMethod::Eulerian;
  else throw ValidationError("unknown method: " + cfg.method);
  const Format fmt = parse_format(cfg.format);

  const UnResult result = apply_un(h, cfg.n, method);
  if (cfg.verify) {
    for (UnMethod m : {UnMethod::Definition, UnMethod::Convolution, UnMethod::Eulerian}) {
      const UnResult other = apply_un(h, cfg.n, m);
      if (other.coeffs != result.coeffs)
        throw VerificationError("engine " + std::string(to_string(m)) + " disagrees: " + join(other.coeffs) + " vs " +
                                join(result.coeffs));
    }
  }
  switch (fmt) {
    case Format::Text: out << join(result.coeffs) << "\n"; break;
    case Format::Csv:
      out << "h;d;n;method;coeffs\n" << h.str() << ";" << h.d() << ";" << cfg.n << ";" << to_string(method) << ";"
          << join(result.coeffs) << "\n";
      break;
    case Format::Json:
      out << json{{"h", strings(h.trimmed())}, {"d", h.d()}, {"n", cfg.n}, {"method", std::string(to_string(method))},
                  {"verified", cfg.verify}, {"coeffs", strings(result.coeffs)}}
                 .dump(2)
          << "\n";
      break;
  }
  return kOk;
}

// Runs a diagnostic whose precondition may fail, recording the failure as a
// not-applicable entry instead of aborting the whole analysis.
template <typename F>
DiagnosticsReport guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const PreconditionFailed& e) {
    DiagnosticsReport rep;
    rep.not_applicable(name, e.what());
    return rep;
  }
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::Csv) throw ValidationError("analyze supports text and json output");
  if (cfg.n == 0) throw ValidationError("--n must be positive");
  if (!cfg.hText.empty() == !cfg.polytopePath.empty()) throw ValidationError("give exactly one of --h or --polytope");

  std::optional<HVector> hv;
  json polytopeInfo;
  if (!cfg.polytopePath.empty()) {
    LatticePolytope poly = [&] {
      try {
        return ingest_polytope(load_polytope_file(cfg.polytopePath));
      } catch (const PreconditionFailed& e) {
        throw ValidationError(e.what());
      } catch (const NotFullDimensional& e) {
        throw ValidationError(e.what());
      } catch (const DimensionTooLarge& e) {
        throw ValidationError(e.what());
      }
    }();
    CountOptions opt{cfg.budget, thread_budget(cfg.threads)};
    const DeltaVector delta = delta_vector(poly, opt);
    hv = delta.as_hvector();
    json facets = json::array();
    for (const auto& f : poly.facets()) facets.push_back(json{{"normal", f.normal}, {"offset", f.offset}});
    polytopeInfo = json{{"vertices", poly.vertices()}, {"facets", facets}, {"delta", strings(delta.delta)}};
  } else {
    hv = validated_h(cfg.hText, cfg.d);
  }
  const HVector& h = *hv;
  const UnResult un = un_definition(h, cfg.n);
  const SymDecomp parts = decompose(h);

  std::vector<std::pair<std::string, DiagnosticsReport>> sections;
  sections.emplace_back("betke_mcmullen", guarded("betke_mcmullen", [&] { return betke_mcmullen_bounds(h); }));
  sections.emplace_back("runner", guarded("runner", [&] { return runner_bounds(h); }));
  sections.emplace_back("leading_bounds", deadset_bounds(h));
  sections.emplace_back("hibi", guarded("hibi", [&] { return hibi_inequalities(h); }));
  sections.emplace_back("ahs", ahs_inequalities(h));
  sections.emplace_back("coefficients_dilated", logconcave_unimodal(un.coeffs));
  sections.emplace_back("chain", lebron_chain(h, cfg.n));

  json beijing;
  std::string beijingText;
  try {
    const BeijingResult b = beijing_guarantee(h, cfg.n);
    beijing = json{{"holds", b.holds}, {"threshold", b.threshold}, {"certified", b.certified}};
    beijingText = std::string("holds=") + (b.holds ? "true" : "false") + " threshold=" + std::to_string(b.threshold) +
                  " certified=" + (b.certified ? "true" : "false");
  } catch (const PreconditionFailed& e) {
    beijing = json{{"precondition", e.what()}};
    beijingText = std::string("not-applicable -- ") + e.what();
  }

  const RootReport rootsH = sturm_real_roots(h.poly(), cfg.widthBits);
  const RootReport rootsU = sturm_real_roots(un.poly(), cfg.widthBits);

  if (fmt == Format::Json) {
    json diag = json::object();
    for (const auto& [name, rep] : sections) diag[name] = report_json(rep);
    json doc{{"h", strings(h.trimmed())},
             {"d", h.d()},
             {"n", cfg.n},
             {"decomposition", {{"a", strings(parts.a.padded(h.d() + 1))}, {"b", strings(parts.b.padded(h.d() + 2))}}},
             {"dilated", strings(un.coeffs)},
             {"m_d", lebron_md(h.d()).get_str()},
             {"diagnostics", diag},
             {"beijing", beijing},
             {"roots", {{"h", root_report_json(rootsH)}, {"dilated", root_report_json(rootsU)}}}};
    if (!polytopeInfo.is_null()) doc["polytope"] = polytopeInfo;
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "h = " << h.str() << "  (d = " << h.d() << ")\n";
  if (!polytopeInfo.is_null()) out << "polytope facets: " << polytopeInfo["facets"].size() << "\n";
  out << "a = " << join(parts.a.padded(h.d() + 1)) << "\n";
  out << "b = " << join(parts.b.padded(h.d() + 2)) << "\n";
  out << "U_" << cfg.n << " h = " << join(un.coeffs) << "\n";
  out << "m_d = " << lebron_md(h.d()).get_str() << "\n";
  for (const auto& [name, rep] : sections) report_text(out, name, rep);
  out << "[beijing]\n  " << beijingText << "\n";
  auto roots_text = [&](const char* label, const RootReport& r) {
    out << "[roots " << label << "]\n  degree " << r.degree << ", " << r.realRootCount << " real roots (" << r.negativeRootCount
        << " negative), squarefree " << (r.squarefree ? "yes" : "no") << ", all real simple negative "
        << (r.allRealSimpleNegative ? "yes" : "no") << "\n";
    for (const auto& iv : r.isolatingIntervals) out << "  " << interval_text(iv) << "\n";
  };
  roots_text("h", rootsH);
  roots_text("U_n h", rootsU);
  return kOk;
}

// Every h = (1, h_1, ..., h_d) with 0 <= h_i <= coeffMax, lexicographic.
inline std::vector<HVector> sweep_grid(unsigned d, unsigned coeffMax) {
  std::vector<HVector> out;
  std::vector<long> digits(d, 0);
  while (true) {
    std::vector<BigInt> c{BigInt(1)};
    for (long x : digits) c.emplace_back(x);
    out.emplace_back(d, std::move(c));
    std::size_t i = d;
    while (i > 0 && digits[i - 1] == static_cast<long>(coeffMax)) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F&& fn) {
  std::vector<T> out(count);
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failureMutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.d == 0) throw ValidationError("--d must be a positive integer");
  if (cfg.d > 8) throw ValidationError("sweep supports d <= 8");
  const auto [nMin, nMax] = parse_range(cfg.nRange);
  const Format fmt = parse_format(cfg.format);
  if (fmt == Format::Text) throw ValidationError("sweep supports csv and json output");
  std::vector<Predicate> preds;
  if (cfg.predicate == "all") {
    preds = {Predicate::RealRooted, Predicate::LogConcave, Predicate::Unimodal, Predicate::Chain, Predicate::HibiStrict};
  } else if (auto p = parse_predicate(cfg.predicate)) {
    preds = {*p};
  } else {
    throw ValidationError("unknown predicate: " + cfg.predicate);
  }
  const auto grid = sweep_grid(cfg.d, cfg.coeffMax);
  const std::size_t jobs = grid.size() * preds.size();
  const auto results = parallel_map<ThresholdSearch>(jobs, thread_budget(cfg.threads), [&](std::size_t k) {
    return minimal_n_search(grid[k / preds.size()], preds[k % preds.size()], nMax, nMin);
  });

  auto threshold_str = [](const std::optional<unsigned>& t) { return t ? std::to_string(*t) : std::string("none"); };
  json rows = json::array();
  std::ostringstream csv;
  csv << "h;d;n;predicate;threshold;stable\n";
  for (std::size_t k = 0; k < jobs; ++k) {
    const HVector& h = grid[k / preds.size()];
    const auto pred = std::string(to_string(preds[k % preds.size()]));
    const ThresholdSearch& r = results[k];
    csv << h.str() << ";" << cfg.d << ";" << cfg.nRange << ";" << pred << ";" << threshold_str(r.threshold) << ";"
        << (r.nonMonotone ? "false" : "true") << "\n";
    rows.push_back(json{{"h", strings(h.trimmed())}, {"predicate", pred}, {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
                        {"stable", !r.nonMonotone}});
  }
  json summary = json::array();
  for (std::size_t p = 0; p < preds.size(); ++p) {
    std::optional<unsigned> worst = 0;
    bool stable = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const ThresholdSearch& r = results[i * preds.size() + p];
      stable = stable && !r.nonMonotone;
      if (!r.threshold) worst.reset();
      else if (worst) worst = std::max(*worst, *r.threshold);
    }
    const auto pred = std::string(to_string(preds[p]));
    csv << "max;" << cfg.d << ";" << cfg.nRange << ";" << pred << ";" << threshold_str(worst) << ";" << (stable ? "true" : "false")
        << "\n";
    summary.push_back(json{{"predicate", pred}, {"threshold", worst ? json(*worst) : json(nullptr)}, {"stable", stable}});
  }
  if (fmt == Format::Csv) {
    out << csv.str();
  } else {
    out << json{{"d", cfg.d}, {"coeffMax", cfg.coeffMax}, {"nRange", cfg.nRange}, {"rows", rows}, {"summary", summary}}.dump(2)
        << "\n";
  }
  return kOk;
}

inline int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const Format fmt = parse_format(cfg.format);
  const int chosen = (cfg.eulerianD > 0) + (cfg.stirlingD > 0) + (cfg.rootsD > 0);
  if (chosen != 1) throw ValidationError("choose exactly one of --eulerian, --stirling, --eulerian-roots (1 <= d <= 20)");
  const unsigned d = std::max({cfg.eulerianD, cfg.stirlingD, cfg.rootsD});
  if (d > 20) throw ValidationError("tables require d <= 20");
  if (cfg.eulerianD || cfg.stirlingD) {
    std::vector<BigInt> values;
    std::string kind;
    if (cfg.eulerianD) {
      kind = "eulerian";
      const auto p = eulerian_poly(d).padded(d + 1);
      values.assign(p.begin() + 1, p.end());
    } else {
      kind = "stirling";
      values = stirling_first(d).values();
    }
    if (fmt == Format::Json) out << json{{"table", kind}, {"d", d}, {"values", strings(values)}}.dump(2) << "\n";
    else out << join(values) << "\n";
    return kOk;
  }
  const EulerianRoots roots = eulerian_roots(d, cfg.widthBits);
  if (fmt == Format::Json) {
    json iv = json::array();
    for (const auto& r : roots.intervals) iv.push_back(interval_json(r));
    out << json{{"table", "eulerian-roots"}, {"d", d}, {"intervals", iv}}.dump(2) << "\n";
  } else {
    for (const auto& r : roots.intervals) out << interval_text(r) << "\n";
  }
  return kOk;
}

/// Parses argv and dispatches; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilation operator U_n on Ehrhart / Hilbert numerators"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* transform = app.add_subcommand("transform", "Compute U_n h");
  transform->add_option("--h", cfg.hText, "h-vector, comma separated, h_0 = 1")->required();
  transform->add_option("--d", cfg.d, "ambient degree d")->required();
  transform->add_option("--n", cfg.n, "dilation factor")->required();
  transform->add_option("--method", cfg.method, "definition | convolution | eulerian");
  transform->add_flag("--verify", cfg.verify, "run all engines and fail on disagreement");
  transform->add_option("--format", cfg.format, "text | json | csv");

  auto* analyze = app.add_subcommand("analyze", "Decomposition, inequality checks and root certification");
  analyze->add_option("--h", cfg.hText, "h-vector, comma separated, h_0 = 1");
  analyze->add_option("--d", cfg.d, "ambient degree d");
  analyze->add_option("--polytope", cfg.polytopePath, "polytope JSON file; analyzes its delta-vector");
  analyze->add_option("--n", cfg.n, "dilation factor for the chain and root checks");
  analyze->add_option("--width-bits", cfg.widthBits, "isolating intervals narrower than 2^-bits");
  analyze->add_option("--budget", cfg.budget, "lattice-point scan budget");
  analyze->add_option("--threads", cfg.threads, "worker threads");
  analyze->add_option("--format", cfg.format, "text | json");

  auto* sweep = app.add_subcommand("sweep", "Empirical thresholds over a grid of h-vectors");
  sweep->add_option("--d", cfg.d, "ambient degree d")->required();
  sweep->add_option("--coeff-max", cfg.coeffMax, "h_i ranges over 0..coeff-max for i >= 1")->required();
  sweep->add_option("--n-range", cfg.nRange, "a:b, scanned window of n");
  sweep->add_option("--predicate", cfg.predicate, "real-rooted | log-concave | unimodal | chain | hibi-strict | all");
  sweep->add_option("--threads", cfg.threads, "worker threads (capped by VLAB_THREADS)");
  cfg.format = "text";
  sweep->add_option("--format", cfg.format, "csv | json");

  auto* tables = app.add_subcommand("tables", "Eulerian, Stirling and Eulerian-root tables");
  tables->add_option("--eulerian", cfg.eulerianD, "A(d, 1..d)");
  tables->add_option("--stirling", cfg.stirlingD, "S_0(d)..S_d(d)");
  tables->add_option("--eulerian-roots", cfg.rootsD, "isolating intervals of the roots of A_d");
  tables->add_option("--width-bits", cfg.widthBits, "isolating intervals narrower than 2^-bits");
  tables->add_option("--format", cfg.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (transform->parsed()) return cmd_transform(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (sweep->parsed()) {
      if (cfg.format == "text") cfg.format = "csv";
      return cmd_sweep(cfg, out);
    }
    if (tables->parsed()) return cmd_tables(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const InternalError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  }
  return kValidation;
}

}  // namespace vlab::cli
