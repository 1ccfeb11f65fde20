#pragma once

#include "knotspan/diagram.hpp"
#include "knotspan/kauffman.hpp"
#include "knotspan/laurent.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotspan {

/// One corpus line. Corpus line grammar: `NAME [c=INT] [alt=0|1] : PD`.
/// `c=` is the table crossing number (trusted to be minimal), `alt=` a table
/// alternating flag.
struct CorpusEntry {
  std::string name;
  LinkDiagram pd;
  std::optional<int> declaredCrossingNumber;
  std::optional<bool> declaredAlternating;
};

struct IngestIssue {
  int line = 0;
  std::string message;
};

/// Entries from well-formed lines plus per-line diagnostics; a malformed
/// line is reported and skipped, the others are retained.
struct IngestResult {
  std::vector<CorpusEntry> entries;
  std::vector<IngestIssue> issues;
};

IngestResult ingest(const std::string& path);
IngestResult ingest_stream(std::istream& in);
CorpusEntry parse_corpus_line(const std::string& line);

/// Closure of a braid word on `width` strands; letter +i / -i is the positive
/// / negative elementary braid between strands i and i+1 (1 <= i < width).
LinkDiagram braid_closure(const std::vector<int>& word, int width,
                          const std::string& name = "");

/// Closure of a uniformly random braid word; deterministic per seed.
LinkDiagram random_diagram(std::uint64_t seed, int braidWidth, int braidLength);

/// Standard pretzel diagram P(p1,...,pn); every |pi| >= 1.
LinkDiagram pretzel_diagram(const std::vector<int>& twists,
                            const std::string& name = "");

enum class Theorem11Status { AdequateGenusOne, Alternating, Other, Violation };

const char* to_string(Theorem11Status s);

struct VerificationRecord {
  std::string name;
  int c = 0;  // declared crossing number when present, else c(D)
  int writhe = 0;
  int spanJones = 0;
  int gTDiagram = 0;
  bool adequate = false;
  BigInt aM, am;
  std::optional<int> spanALambda;
  bool jonesExtremesUnit = false;  // |leading| = |trailing| = 1 in V_L
  Theorem11Status status = Theorem11Status::Other;
  double millis = 0.0;
};

/// Raised when a record classifies as VIOLATION and aborting was requested.
class TheoremViolation : public std::runtime_error {
public:
  TheoremViolation(const std::string& msg, VerificationRecord rec)
      : std::runtime_error(msg), record(std::move(rec)) {}
  VerificationRecord record;
};

/// Span/adequacy/genus classification per entry. Entries must be minimal
/// diagrams (declared c, when present, must equal c(D)). When `engine` is
/// non-null, span_a Lambda is computed for entries within its cutoff.
std::vector<VerificationRecord> verify_theorem_1_1(
    const std::vector<CorpusEntry>& entries, KauffmanEngine* engine = nullptr,
    bool abortOnViolation = true);

struct Conjecture33Report {
  int checked = 0;           // adequate entries with c <= maxC
  int violations = 0;        // span_a > c - 2*gT among those
  int flaggedInadequate = 0; // reported with conservative slack only
  int skipped = 0;           // above maxC
  std::vector<std::string> violatingNames;
};

/// span_a Lambda <= c - 2*gT(D) for adequate entries (where gT(D) = gT(L));
/// inadequate entries are flagged, not failed.
Conjecture33Report verify_conjecture_3_3(const std::vector<CorpusEntry>& entries,
                                         int maxC, KauffmanEngine& engine);

/// Per crossing number: entries in `knots<c>.pd` files under corpusDir with
/// spanJones = c-1. Throws when the directory holds no corpus files.
std::map<int, int> scan_table_1(const std::string& corpusDir);

/// Append-only JSONL polynomial cache keyed by (canonical diagram code,
/// invariant kind). Corrupt lines are skipped with a warning on stderr;
/// duplicate keys resolve to the last record in file order.
class PolyCache {
public:
  explicit PolyCache(std::string path);

  std::optional<std::string> get(const std::string& code,
                                 const std::string& kind) const;
  void put(const std::string& code, const std::string& kind,
           const std::string& poly);

  const std::string& path() const { return path_; }
  std::size_t size() const { return store_.size(); }

private:
  std::string path_;
  std::map<std::string, std::string> store_;
};

std::string record_to_json(const VerificationRecord& r);
std::string record_csv_header();
std::string record_to_csv(const VerificationRecord& r);

}  // namespace knotspan
