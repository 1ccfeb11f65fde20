#include "knotspan/bracket.hpp"
#include "knotspan/extremal.hpp"
#include "knotspan/harness.hpp"
#include "knotspan/kauffman.hpp"
#include "knotspan/states.hpp"
#include "knotspan/tangles.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>

using namespace knotspan;

namespace {

std::unique_ptr<PolyCache> open_cache() {
  const char* path = std::getenv("KNOTSPAN_CACHE");
  if (!path || !*path) return nullptr;
  return std::make_unique<PolyCache>(path);
}

std::vector<CorpusEntry> load(const std::string& path) {
  IngestResult r = ingest(path);
  for (const IngestIssue& issue : r.issues)
    std::cerr << path << ":" << issue.line << ": " << issue.message << "\n";
  return std::move(r.entries);
}

// Cached text of an invariant; `compute` runs only on a miss.
template <typename F>
std::string cached(PolyCache* cache, const LinkDiagram& d,
                   const std::string& kind, F compute) {
  std::string code;
  if (cache) {
    code = diagram_code(d);
    if (auto hit = cache->get(code, kind)) return *hit;
  }
  std::string value = compute();
  if (cache) cache->put(code, kind, value);
  return value;
}

int cmd_bracket(const std::string& path) {
  auto cache = open_cache();
  for (const CorpusEntry& e : load(path)) {
    std::string text = cached(cache.get(), e.pd, "bracket", [&] {
      return kauffman_bracket(e.pd).to_string();
    });
    BracketReport r = bracket_report(e.pd);
    std::cout << e.name << ": " << text << "  span=" << r.spanBracket
              << " M=" << r.M << " m=" << r.m << " aM=" << r.aM.str()
              << " am=" << r.am.str() << "\n";
  }
  return 0;
}

int cmd_jones(const std::string& path) {
  auto cache = open_cache();
  for (const CorpusEntry& e : load(path)) {
    std::string text = cached(cache.get(), e.pd, "jones",
                              [&] { return jones(e.pd).to_string(); });
    std::cout << e.name << ": " << text << "  span_t=" << span_jones(e.pd)
              << "\n";
  }
  return 0;
}

int cmd_kauffman(const std::string& path, int maxCrossings) {
  auto cache = open_cache();
  KauffmanEngine engine(maxCrossings);
  for (const CorpusEntry& e : load(path)) {
    std::string text = cached(cache.get(), e.pd, "lambda", [&] {
      return engine.lambda(e.pd).to_string();
    });
    KauffmanReport r = engine.report(e.pd);
    std::cout << e.name << ": Lambda = " << text << "\n"
              << e.name << ": F = " << r.F.to_string()
              << "  span_a=" << r.spanA << " support_ok=" << r.supportOK
              << " adequate=" << (r.adequacyWitness ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_states(const std::string& path) {
  for (const CorpusEntry& e : load(path)) {
    for (Side side : {Side::A, Side::B}) {
      StateGeometry g = resolve_all(e.pd, side);
      nlohmann::json j{{"name", e.name},
                       {"state", side == Side::A ? "A" : "B"},
                       {"circles", g.circleCount},
                       {"chords", decorated_state(g).size()}};
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_adequacy(const std::string& path) {
  for (const CorpusEntry& e : load(path))
    std::cout << e.name << ": A-adequate=" << is_A_adequate(e.pd)
              << " B-adequate=" << is_B_adequate(e.pd)
              << " adequate=" << is_adequate_diagram(e.pd) << "\n";
  return 0;
}

int cmd_turaev(const std::string& path) {
  for (const CorpusEntry& e : load(path)) {
    if (!is_connected(e.pd)) {
      std::cout << e.name << ": diagram not connected\n";
      continue;
    }
    std::cout << e.name << ": g_T(D)=" << turaev_genus_diagram(e.pd) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& path) {
  for (const CorpusEntry& e : load(path)) {
    TangleDecomposition td = decompose(e.pd);
    CycleFormReport cf = is_genus_one_cycle_form(e.pd);
    nlohmann::json conns = nlohmann::json::array();
    for (const Connector& c : td.connectors)
      conns.push_back({{"edge", c.label},
                       {"sign", c.sign},
                       {"tangles", {c.tangle1, c.tangle2}}});
    nlohmann::json j{{"name", e.name},
                     {"tangles", td.tangleCount},
                     {"connectors", conns},
                     {"genus_one_cycle_form", cf.isCycleForm}};
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_extremal(const std::string& path) {
  for (const CorpusEntry& e : load(path)) {
    if (!is_connected(e.pd)) {
      std::cout << e.name << ": diagram not connected\n";
      continue;
    }
    std::cout << e.name
              << ": a_M=" << extreme_coefficient(e.pd, Extreme::Max).str()
              << " a_m=" << extreme_coefficient(e.pd, Extreme::Min).str()
              << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& path,
               int maxCrossings) {
  std::vector<CorpusEntry> entries = load(path);
  KauffmanEngine engine(maxCrossings);
  if (theorem == "1.1") {
    std::cout << record_csv_header() << "\n";
    try {
      for (const VerificationRecord& r :
           verify_theorem_1_1(entries, &engine, /*abortOnViolation=*/false)) {
        std::cout << record_to_csv(r) << "\n";
        std::cerr << record_to_json(r) << "\n";
        if (r.status == Theorem11Status::Violation) return 1;
      }
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return 2;
    }
    return 0;
  }
  if (theorem == "3.3") {
    Conjecture33Report rep = verify_conjecture_3_3(entries, maxCrossings, engine);
    std::cout << "checked=" << rep.checked << " violations=" << rep.violations
              << " flagged_inadequate=" << rep.flaggedInadequate
              << " skipped=" << rep.skipped << "\n";
    for (const std::string& n : rep.violatingNames)
      std::cout << "VIOLATION " << n << "\n";
    return rep.violations == 0 ? 0 : 1;
  }
  if (theorem == "5.1") {
    int failures = 0;
    for (const CorpusEntry& e : entries) {
      if (!is_connected(e.pd) || !is_adequate_diagram(e.pd) ||
          turaev_genus_diagram(e.pd) != 1)
        continue;
      if (e.pd.crossing_count() > maxCrossings) continue;
      Corollary51Report r = corollary_5_1_check(e.pd, engine);
      std::cout << e.name << ": maxdeg_a=" << r.maxdegA
                << " mindeg_a=" << r.mindegA << " span_a=" << r.spanA
                << " expected=(" << r.expectedMax << "," << r.expectedMin
                << "," << r.expectedSpan << ") ok=" << r.ok << "\n";
      if (!r.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
  }
  if (theorem == "5.2") {
    int failures = 0;
    for (const CorpusEntry& e : entries) {
      if (!is_connected(e.pd)) continue;
      int c = e.declaredCrossingNumber.value_or(e.pd.crossing_count());
      JonesPoly v = jones(e.pd);
      if (v.span_t() != c - 1) continue;
      bool unit = !v.q.is_zero() && abs(v.q.coeff(v.q.maxdeg())) == 1 &&
                  abs(v.q.coeff(v.q.mindeg())) == 1;
      std::cout << e.name << ": |leading|=|trailing|=1: " << unit << "\n";
      if (!unit) ++failures;
    }
    return failures == 0 ? 0 : 1;
  }
  std::cerr << "unknown theorem " << theorem << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagrammatic link invariants: bracket/Jones, Kauffman states, "
               "Turaev genus, adequacy, extreme coefficients, the two-variable "
               "Kauffman polynomial, and batch verification"};
  app.require_subcommand(1);
  int maxCrossings = 16;
  app.add_option("--max-crossings", maxCrossings,
                 "Skein-recursion cutoff (crossings)");

  std::string pdfile, corpusDir, theorem;
  std::uint64_t seed = 0;
  int width = 2, length = 1;

  auto addPd = [&](CLI::App* sub) {
    sub->add_option("pdfile", pdfile, "PD corpus file")->required();
  };
  addPd(app.add_subcommand("bracket", "Kauffman bracket with degree bounds"));
  addPd(app.add_subcommand("jones", "Jones polynomial (in q = t^{1/4})"));
  addPd(app.add_subcommand("kauffman", "Two-variable Kauffman polynomial"));
  addPd(app.add_subcommand("states", "All-A/all-B state summaries (JSONL)"));
  addPd(app.add_subcommand("adequacy", "A-/B-adequacy of each diagram"));
  addPd(app.add_subcommand("turaev-genus", "Turaev genus of each diagram"));
  addPd(app.add_subcommand("decompose", "Alternating tangle decomposition"));
  addPd(app.add_subcommand("extremal", "Extreme bracket coefficients"));

  CLI::App* verify = app.add_subcommand("verify", "Batch theorem checks");
  verify->add_option("--theorem", theorem, "1.1, 3.3, 5.1 or 5.2")->required();
  verify->add_option("corpus", pdfile, "PD corpus file")->required();

  CLI::App* scan = app.add_subcommand("scan-table1",
                                      "Count entries with span V = c-1");
  scan->add_option("dir", corpusDir, "directory of .pd corpora")->required();

  CLI::App* random = app.add_subcommand("random", "Random braid closure");
  random->add_option("--seed", seed)->required();
  random->add_option("--width", width)->required();
  random->add_option("--length", length)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("bracket")) return cmd_bracket(pdfile);
    if (app.got_subcommand("jones")) return cmd_jones(pdfile);
    if (app.got_subcommand("kauffman")) return cmd_kauffman(pdfile, maxCrossings);
    if (app.got_subcommand("states")) return cmd_states(pdfile);
    if (app.got_subcommand("adequacy")) return cmd_adequacy(pdfile);
    if (app.got_subcommand("turaev-genus")) return cmd_turaev(pdfile);
    if (app.got_subcommand("decompose")) return cmd_decompose(pdfile);
    if (app.got_subcommand("extremal")) return cmd_extremal(pdfile);
    if (app.got_subcommand("verify"))
      return cmd_verify(theorem, pdfile, maxCrossings);
    if (app.got_subcommand("scan-table1")) {
      for (const auto& [c, n] : scan_table_1(corpusDir))
        std::cout << "c=" << c << " count=" << n << "\n";
      return 0;
    }
    if (app.got_subcommand("random")) {
      std::cout << serialize_pd(random_diagram(seed, width, length)) << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
