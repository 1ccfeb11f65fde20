#include "knotspan/harness.hpp"

#include "knotspan/bracket.hpp"
#include "knotspan/extremal.hpp"
#include "knotspan/states.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace knotspan {

namespace {

// Unoriented diagram under construction: tuples counterclockwise with the
// under-strand at slots 0 and 2, arbitrary edge ids.
struct Proto {
  std::vector<std::array<int, 4>> cr;
  int freeLoops = 0;
};

using ProtoEnds = std::map<int, std::vector<std::pair<int, int>>>;

ProtoEnds proto_ends(const Proto& p) {
  ProtoEnds ends;
  for (int i = 0; i < static_cast<int>(p.cr.size()); ++i)
    for (int s = 0; s < 4; ++s) ends[p.cr[i][s]].push_back({i, s});
  return ends;
}

std::pair<int, int> proto_other(const ProtoEnds& ends, int edge, int cr,
                                int slot) {
  const auto& occ = ends.at(edge);
  return occ[0] == std::pair{cr, slot} ? occ[1] : occ[0];
}

void proto_fuse(Proto& p, int from, int to) {
  for (auto& x : p.cr)
    for (int s = 0; s < 4; ++s)
      if (x[s] == from) x[s] = to;
}

// Orient each strand (deterministically, from its lowest edge id), relabel
// edges 1..2n consecutively along the orientation, and rotate every tuple so
// the incoming under-strand edge sits at slot 0.
LinkDiagram proto_to_pd(const Proto& p, const std::string& name) {
  ProtoEnds ends = proto_ends(p);
  int n = static_cast<int>(p.cr.size());
  std::map<int, int> label;
  std::vector<std::array<bool, 4>> arrives(n, {false, false, false, false});
  int next = 1;
  for (const auto& [e0, occ0] : ends) {
    if (label.count(e0)) continue;
    int edge = e0;
    auto [cr, slot] = occ0[0];
    while (true) {
      label[edge] = next++;
      arrives[cr][slot] = true;
      int exit = (slot + 2) % 4;
      int nextEdge = p.cr[cr][exit];
      if (nextEdge == e0) break;
      auto [cr2, s2] = proto_other(ends, nextEdge, cr, exit);
      edge = nextEdge;
      cr = cr2;
      slot = s2;
    }
  }
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(n);
  for (int i = 0; i < n; ++i) {
    // The under-strand passage enters at exactly one of slots 0, 2.
    int rot = arrives[i][0] ? 0 : 2;
    std::array<int, 4> t;
    for (int s = 0; s < 4; ++s) t[s] = label.at(p.cr[i][(rot + s) % 4]);
    tuples.push_back(t);
  }
  return make_diagram(tuples, p.freeLoops, name);
}

}  // namespace

LinkDiagram braid_closure(const std::vector<int>& word, int width,
                          const std::string& name) {
  if (width < 2) throw std::invalid_argument("braid_closure: width < 2");
  if (word.empty()) throw std::invalid_argument("braid_closure: empty word");
  for (int l : word)
    if (l == 0 || std::abs(l) >= width)
      throw std::invalid_argument("braid_closure: letter out of range");

  Proto p;
  int nextEdge = 0;
  std::vector<int> top(width + 1), cur(width + 1);
  std::vector<bool> used(width + 1, false);
  for (int j = 1; j <= width; ++j) top[j] = cur[j] = nextEdge++;
  for (int l : word) {
    int i = std::abs(l);
    used[i] = used[i + 1] = true;
    int nw = cur[i], ne = cur[i + 1];
    int sw = nextEdge++, se = nextEdge++;
    // Strands run downward; positive letters put the right strand on top.
    if (l > 0)
      p.cr.push_back({nw, sw, se, ne});
    else
      p.cr.push_back({ne, nw, sw, se});
    cur[i] = sw;
    cur[i + 1] = se;
  }
  for (int j = 1; j <= width; ++j) {
    if (!used[j]) {
      ++p.freeLoops;
      continue;
    }
    proto_fuse(p, cur[j], top[j]);
  }
  return proto_to_pd(p, name);
}

LinkDiagram random_diagram(std::uint64_t seed, int braidWidth,
                           int braidLength) {
  if (braidWidth < 2 || braidLength < 1)
    throw std::invalid_argument("random_diagram: width >= 2, length >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2 * (braidWidth - 1) - 1);
  std::vector<int> word;
  word.reserve(braidLength);
  for (int k = 0; k < braidLength; ++k) {
    int v = pick(rng);
    int letter = v / 2 + 1;
    word.push_back(v % 2 ? -letter : letter);
  }
  std::ostringstream nm;
  nm << "random-s" << seed << "-w" << braidWidth << "-l" << braidLength;
  return braid_closure(word, braidWidth, nm.str());
}

LinkDiagram pretzel_diagram(const std::vector<int>& twists,
                            const std::string& name) {
  if (twists.empty()) throw std::invalid_argument("pretzel: no twist regions");
  for (int t : twists)
    if (t == 0) throw std::invalid_argument("pretzel: zero twist region");

  Proto p;
  int nextEdge = 0;
  struct ColumnEnds {
    int tl, tr, bl, br;
  };
  std::vector<ColumnEnds> cols;
  for (int pj : twists) {
    int k = std::abs(pj);
    ColumnEnds ce{nextEdge++, nextEdge++, -1, -1};
    int nw = ce.tl, ne = ce.tr;
    for (int t = 0; t < k; ++t) {
      int sw = nextEdge++, se = nextEdge++;
      // Positive twist: the SW-NE strand passes over; negative: under.
      if (pj > 0)
        p.cr.push_back({nw, sw, se, ne});
      else
        p.cr.push_back({sw, se, ne, nw});
      nw = sw;
      ne = se;
    }
    ce.bl = nw;
    ce.br = ne;
    cols.push_back(ce);
  }
  int n = static_cast<int>(cols.size());
  for (int j = 0; j + 1 < n; ++j) {
    proto_fuse(p, cols[j + 1].tl, cols[j].tr);
    proto_fuse(p, cols[j + 1].bl, cols[j].br);
  }
  // Numerator closure: one arc over all the tops, one under all the bottoms.
  proto_fuse(p, cols[n - 1].tr, cols[0].tl);
  proto_fuse(p, cols[n - 1].br, cols[0].bl);

  std::string nm = name;
  if (nm.empty()) {
    std::ostringstream os;
    os << "P(";
    for (int j = 0; j < n; ++j) os << (j ? "," : "") << twists[j];
    os << ")";
    nm = os.str();
  }
  return proto_to_pd(p, nm);
}

CorpusEntry parse_corpus_line(const std::string& line) {
  auto colon = line.find(':');
  if (colon == std::string::npos)
    throw PdError(PdError::Kind::Syntax, "corpus line: missing ':'");
  std::istringstream head(line.substr(0, colon));
  CorpusEntry e;
  std::string tok;
  bool haveName = false;
  while (head >> tok) {
    if (tok.rfind("c=", 0) == 0) {
      e.declaredCrossingNumber = std::stoi(tok.substr(2));
    } else if (tok.rfind("alt=", 0) == 0) {
      if (tok != "alt=0" && tok != "alt=1")
        throw PdError(PdError::Kind::Syntax, "corpus line: alt must be 0 or 1");
      e.declaredAlternating = tok == "alt=1";
    } else if (!haveName) {
      e.name = tok;
      haveName = true;
    } else {
      throw PdError(PdError::Kind::Syntax,
                    "corpus line: unexpected token '" + tok + "'");
    }
  }
  if (!haveName)
    throw PdError(PdError::Kind::Syntax, "corpus line: missing name");
  e.pd = parse_pd(line.substr(colon + 1));
  e.pd.name = e.name;
  return e;
}

IngestResult ingest_stream(std::istream& in) {
  IngestResult r;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      r.entries.push_back(parse_corpus_line(line));
    } catch (const std::exception& ex) {
      r.issues.push_back({lineNo, ex.what()});
    }
  }
  return r;
}

IngestResult ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ingest: cannot open " + path);
  return ingest_stream(in);
}

const char* to_string(Theorem11Status s) {
  switch (s) {
    case Theorem11Status::AdequateGenusOne: return "adequate-genus-one";
    case Theorem11Status::Alternating: return "alternating";
    case Theorem11Status::Other: return "other";
    case Theorem11Status::Violation: return "VIOLATION";
  }
  return "?";
}

std::vector<VerificationRecord> verify_theorem_1_1(
    const std::vector<CorpusEntry>& entries, KauffmanEngine* engine,
    bool abortOnViolation) {
  std::vector<VerificationRecord> out;
  out.reserve(entries.size());
  for (const CorpusEntry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    const LinkDiagram& d = e.pd;
    int cD = d.crossing_count();
    if (e.declaredCrossingNumber && *e.declaredCrossingNumber != cD)
      throw std::invalid_argument(e.name +
                                  ": declared crossing number differs from "
                                  "the diagram; entry is not minimal");
    if (!is_connected(d))
      throw std::invalid_argument(e.name + ": diagram is not connected");

    VerificationRecord rec;
    rec.name = e.name;
    rec.c = cD;
    rec.writhe = writhe(d);
    JonesPoly v = jones(d);
    rec.spanJones = v.span_t();
    rec.jonesExtremesUnit =
        !v.q.is_zero() && abs(v.q.coeff(v.q.maxdeg())) == 1 &&
        abs(v.q.coeff(v.q.mindeg())) == 1;
    rec.gTDiagram = turaev_genus_diagram(d);
    rec.adequate = is_adequate_diagram(d);
    rec.aM = extreme_coefficient(d, Extreme::Max);
    rec.am = extreme_coefficient(d, Extreme::Min);
    if (engine) {
      try {
        rec.spanALambda = engine->lambda(d).span_a();
      } catch (const CutoffExceeded&) {
      }
    }
    bool spanHit = rec.spanJones == rec.c - 1;
    bool adequateGenusOne = rec.adequate && rec.gTDiagram == 1;
    if (spanHit != adequateGenusOne)
      rec.status = Theorem11Status::Violation;
    else if (adequateGenusOne)
      rec.status = Theorem11Status::AdequateGenusOne;
    else if (rec.spanJones == rec.c)
      rec.status = Theorem11Status::Alternating;
    else
      rec.status = Theorem11Status::Other;
    rec.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    if (rec.status == Theorem11Status::Violation && abortOnViolation)
      throw TheoremViolation(e.name + ": span V = c-1 and adequacy/genus-one "
                                      "classification disagree",
                             rec);
    out.push_back(std::move(rec));
  }
  return out;
}

Conjecture33Report verify_conjecture_3_3(const std::vector<CorpusEntry>& entries,
                                         int maxC, KauffmanEngine& engine) {
  Conjecture33Report rep;
  for (const CorpusEntry& e : entries) {
    int cD = e.pd.crossing_count();
    if (cD > maxC) {
      ++rep.skipped;
      continue;
    }
    if (!is_adequate_diagram(e.pd)) {
      ++rep.flaggedInadequate;
      continue;
    }
    int spanA = engine.lambda(e.pd).span_a();
    int gT = turaev_genus_diagram(e.pd);
    ++rep.checked;
    if (spanA > cD - 2 * gT) {
      ++rep.violations;
      rep.violatingNames.push_back(e.name);
    }
  }
  return rep;
}

std::map<int, int> scan_table_1(const std::string& corpusDir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(corpusDir))
    throw std::runtime_error("scan_table_1: no such directory: " + corpusDir);
  std::map<int, int> counts;
  bool any = false;
  for (const auto& entry : fs::directory_iterator(corpusDir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".pd")
      continue;
    any = true;
    IngestResult r = ingest(entry.path().string());
    for (const IngestIssue& issue : r.issues)
      std::cerr << entry.path().string() << ":" << issue.line << ": "
                << issue.message << "\n";
    for (const CorpusEntry& e : r.entries) {
      int c = e.declaredCrossingNumber.value_or(e.pd.crossing_count());
      counts.try_emplace(c, 0);
      if (span_jones(e.pd) == c - 1) ++counts[c];
    }
  }
  if (!any)
    throw std::runtime_error("scan_table_1: no .pd corpus files in " +
                             corpusDir);
  return counts;
}

PolyCache::PolyCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      store_[j.at("code").get<std::string>() + '\x1f' +
             j.at("kind").get<std::string>()] =
          j.at("poly").get<std::string>();
    } catch (const std::exception&) {
      std::cerr << "cache: skipping corrupt line " << lineNo << " of " << path_
                << "\n";
    }
  }
}

std::optional<std::string> PolyCache::get(const std::string& code,
                                          const std::string& kind) const {
  auto it = store_.find(code + '\x1f' + kind);
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

void PolyCache::put(const std::string& code, const std::string& kind,
                    const std::string& poly) {
  nlohmann::json j{{"code", code}, {"kind", kind}, {"poly", poly}};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cache: cannot append to " + path_);
  out << j.dump() << "\n";
  store_[code + '\x1f' + kind] = poly;
}

std::string record_to_json(const VerificationRecord& r) {
  nlohmann::json j{{"name", r.name},
                   {"c", r.c},
                   {"writhe", r.writhe},
                   {"spanJones", r.spanJones},
                   {"gT_diagram", r.gTDiagram},
                   {"adequate", r.adequate},
                   {"aM", r.aM.str()},
                   {"am", r.am.str()},
                   {"jones_extremes_unit", r.jonesExtremesUnit},
                   {"theorem11_status", to_string(r.status)},
                   {"millis", r.millis}};
  if (r.spanALambda)
    j["spanA_Lambda"] = *r.spanALambda;
  else
    j["spanA_Lambda"] = nullptr;
  return j.dump();
}

std::string record_csv_header() {
  return "name,c,writhe,spanJones,gT_diagram,adequate,aM,am,spanA_Lambda,"
         "jones_extremes_unit,theorem11_status,millis";
}

std::string record_to_csv(const VerificationRecord& r) {
  std::ostringstream os;
  os << r.name << ',' << r.c << ',' << r.writhe << ',' << r.spanJones << ','
     << r.gTDiagram << ',' << (r.adequate ? 1 : 0) << ',' << r.aM.str() << ','
     << r.am.str() << ',';
  if (r.spanALambda) os << *r.spanALambda;
  os << ',' << (r.jonesExtremesUnit ? 1 : 0) << ',' << to_string(r.status)
     << ',' << r.millis;
  return os.str();
}

}  // namespace knotspan
