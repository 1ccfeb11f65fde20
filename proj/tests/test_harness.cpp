#include "knotspan/harness.hpp"

#include "fixtures.hpp"
#include "knotspan/bracket.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace knotspan;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("knotspan-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("corpus line parsing") {
  CorpusEntry e = parse_corpus_line(
      "3_1 c=3 alt=1 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(e.name == "3_1");
  CHECK(e.declaredCrossingNumber == 3);
  CHECK(e.declaredAlternating == true);
  CHECK(e.pd.crossing_count() == 3);

  CorpusEntry bare = parse_corpus_line("k : X[1,1,2,2]");
  CHECK(bare.name == "k");
  CHECK(!bare.declaredCrossingNumber.has_value());
  CHECK(!bare.declaredAlternating.has_value());

  CHECK_THROWS(parse_corpus_line("oops c=x : X[1,1,2,2]"));
  CHECK_THROWS(parse_corpus_line("no-pd c=3"));
}

TEST_CASE("ingest keeps good lines and reports bad ones with line numbers") {
  std::istringstream in(
      "# comment\n"
      "a : X[1,1,2,2]\n"
      "\n"
      "broken : X[1,2,3]\n"
      "b alt=0 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n");
  IngestResult r = ingest_stream(in);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].name == "a");
  CHECK(r.entries[1].name == "b");
  CHECK(r.entries[1].declaredAlternating == false);
  REQUIRE(r.issues.size() == 1);
  CHECK(r.issues[0].line == 4);
}

TEST_CASE("ingest of the shipped corpus") {
  IngestResult r = ingest(fixtures::data_dir() + "/corpus.pd");
  CHECK(r.issues.empty());
  CHECK(r.entries.size() == 21);
  for (const CorpusEntry& e : r.entries) CHECK(is_connected(e.pd));
}

TEST_CASE("generators are deterministic") {
  LinkDiagram a = braid_closure({1, 1, 1}, 2, "t");
  LinkDiagram b = braid_closure({1, 1, 1}, 2, "t");
  CHECK(serialize_pd(a) == serialize_pd(b));
  CHECK(a.crossing_count() == 3);
  CHECK(is_alternating_diagram(a));  // 2-strand torus closures alternate
  CHECK(component_count(a) == 1);

  LinkDiagram r1 = random_diagram(1, 2, 3);
  LinkDiagram r2 = random_diagram(1, 2, 3);
  CHECK(serialize_pd(r1) == serialize_pd(r2));
  CHECK(r1.crossing_count() == 3);
  CHECK(r1.name == "random-s1-w2-l3");
  CHECK(serialize_pd(random_diagram(2, 2, 3)) != serialize_pd(r1));
}

TEST_CASE("verify_theorem_1_1 on the shipped corpus") {
  IngestResult r = ingest(fixtures::data_dir() + "/corpus.pd");
  REQUIRE(r.issues.empty());
  KauffmanEngine eng;
  std::vector<VerificationRecord> recs = verify_theorem_1_1(r.entries, &eng);
  REQUIRE(recs.size() == r.entries.size());
  int semiAlternating = 0, alternating = 0;
  for (const VerificationRecord& rec : recs) {
    CHECK(rec.status != Theorem11Status::Violation);
    if (rec.status == Theorem11Status::AdequateGenusOne) {
      ++semiAlternating;
      CHECK(rec.spanJones == rec.c - 1);
      CHECK(rec.gTDiagram == 1);
      CHECK(rec.adequate);
      CHECK(rec.spanALambda == rec.c - 2);
    }
    if (rec.status == Theorem11Status::Alternating) {
      ++alternating;
      CHECK(rec.spanJones == rec.c);
      CHECK(rec.gTDiagram == 0);
    }
  }
  CHECK(alternating == 12);
  CHECK(semiAlternating == 5);
}

TEST_CASE("verify_theorem_1_1 rejects a wrong declared crossing number") {
  CorpusEntry e = parse_corpus_line(
      "lie c=5 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK_THROWS(verify_theorem_1_1({e}));
}

TEST_CASE("conjecture 3.3 sweep") {
  IngestResult r = ingest(fixtures::data_dir() + "/corpus.pd");
  KauffmanEngine eng;
  Conjecture33Report rep = verify_conjecture_3_3(r.entries, 12, eng);
  CHECK(rep.violations == 0);
  CHECK(rep.violatingNames.empty());
  CHECK(rep.checked + rep.flaggedInadequate + rep.skipped ==
        static_cast<int>(r.entries.size()));
  CHECK(rep.checked >= 17);  // all alternating + semi-alternating entries
}

TEST_CASE("scan_table_1") {
  TempDir dir;
  write_file(dir.path / "knots3.pd",
             "t c=3 : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n");
  write_file(dir.path / "knots8.pd",
             "p c=8 : " + serialize_pd(pretzel_diagram({2, 2, -2, -2})) + "\n");
  std::map<int, int> counts = scan_table_1(dir.path.string());
  CHECK(counts.at(3) == 0);  // alternating: span = c, not c-1
  CHECK(counts.at(8) == 1);  // semi-alternating: span = c-1
  TempDir empty;
  CHECK_THROWS(scan_table_1(empty.path.string()));
}

TEST_CASE("PolyCache round-trip, persistence and corruption handling") {
  TempDir dir;
  std::string file = (dir.path / "cache.jsonl").string();
  {
    PolyCache cache(file);
    CHECK(cache.size() == 0);
    CHECK(!cache.get("k1", "bracket").has_value());
    cache.put("k1", "bracket", "A^7 - A^3 - A^-5");
    cache.put("k1", "lambda", "a");
    CHECK(cache.get("k1", "bracket") == "A^7 - A^3 - A^-5");
  }
  // Reload from disk, then overwrite one key.
  {
    PolyCache cache(file);
    CHECK(cache.size() == 2);
    CHECK(cache.get("k1", "lambda") == "a");
    cache.put("k1", "lambda", "a^2");
  }
  // Inject a corrupt line; later reads skip it and keep the rest.
  {
    std::ofstream out(file, std::ios::app);
    out << "{not json\n";
  }
  PolyCache cache(file);
  CHECK(cache.size() == 2);
  CHECK(cache.get("k1", "lambda") == "a^2");  // last writer wins
}

TEST_CASE("record serialization") {
  VerificationRecord rec;
  rec.name = "x";
  rec.c = 8;
  rec.spanJones = 7;
  rec.adequate = true;
  rec.status = Theorem11Status::AdequateGenusOne;
  std::string json = record_to_json(rec);
  CHECK(json.find("\"name\":\"x\"") != std::string::npos);
  CHECK(json.find("\"spanJones\":7") != std::string::npos);
  std::string csv = record_to_csv(rec);
  CHECK(csv.find("x,") == 0);
  CHECK(record_csv_header().find("spanJones") != std::string::npos);
}
