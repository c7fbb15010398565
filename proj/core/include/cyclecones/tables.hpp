#ifndef CYCLECONES_TABLES_HPP
#define CYCLECONES_TABLES_HPP

#include "cyclecones/fixtures.hpp"
#include "cyclecones/json_io.hpp"
#include "cyclecones/verdict.hpp"

#include <string>
#include <vector>

namespace cyclecones {

// Outcome of diffing one recomputed table against its fixture.
//   Match     — recomputation agrees with the fixture row for row.
//   KnownDiff — all differences are registered, certified discrepancies.
//   Mismatch  — an unregistered difference, or a registered one whose
//               certificates fail to verify.
enum class DiffStatus { Match, KnownDiff, Mismatch };
std::string diffStatusName(DiffStatus s);  // "match" / "known-diff" / "mismatch"

// One verification step inside a table run.  Checks assert the expected
// state; for registered discrepancies the expected state is the discrepancy
// itself, so a healthy run has every check passing.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A registered, certified difference between a fixture row and the
// recomputation.  `certificate` holds exact machine-checkable data (the two
// vectors, a separating functional, a failing pairing value, ...).
struct KnownDiffFinding {
  std::string id;           // register id, e.g. "appendix-x423/alpha9"
  std::string description;  // what differs and what the recomputation says
  bool certified = false;   // all certificates verified this run
  OrderedJson certificate = OrderedJson::object();
};

struct DiffReport {
  std::string tableId;
  DiffStatus status = DiffStatus::Mismatch;
  std::vector<CheckLine> checks;
  std::vector<KnownDiffFinding> knownDiffs;
  Fixture fixture;
  // The recomputed table in the fixture schema (round-trips through
  // fixtureFromJson), rows orbit-compressed.
  OrderedJson computed = OrderedJson::object();
};

// The closed register of discrepancies between the reference tables and the
// recomputation.  A difference outside this list is always a Mismatch.
struct KnownDiffEntry {
  std::string id;
  std::string tableId;
  std::string description;
};
const std::vector<KnownDiffEntry>& knownDiffRegister();

// Recomputes the table `tableId` from first principles and diffs it against
// <fixturesDir>/<tableId>.json.  Throws std::invalid_argument for unknown
// ids and propagates fixture I/O errors.
DiffReport runTable(const std::string& tableId, const std::string& fixturesDir);

struct RunAllResult {
  std::vector<DiffReport> reports;  // in allTableIds() order
  VerdictMatrix verdicts;
  bool anyMismatch = false;
};
RunAllResult runAll(const std::string& fixturesDir);

// Renderers for the recomputed table carried by a report.  Markdown appends
// a verification section with the check lines; csv and json are pure data.
// expandOrbits replaces each row by its full orbit, suffixing labels with
// "#1", "#2", ...
std::string renderMarkdown(const DiffReport& report, bool expandOrbits = false);
std::string renderCsv(const DiffReport& report, bool expandOrbits = false);
OrderedJson renderJson(const DiffReport& report, bool expandOrbits = false);

// Full diff report as JSON (status, checks, known diffs, fixture, computed).
OrderedJson reportToJson(const DiffReport& report);

// One status line plus one line per check, for terminal output.
std::string renderReportText(const DiffReport& report);

}  // namespace cyclecones

#endif  // CYCLECONES_TABLES_HPP
