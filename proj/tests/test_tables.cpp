#include <doctest.h>

#include <cyclecones/fixtures.hpp>
#include <cyclecones/json_io.hpp>
#include <cyclecones/tables.hpp>
#include <cyclecones/verdict.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

using namespace cyclecones;

namespace {

const std::string kFixtures = CYCLECONES_FIXTURES_DIR;

const std::set<std::string>& knownDiffTables() {
  static const std::set<std::string> ids{"lin2-x55",  "appendix-x423", "decomp-alpha9",
                                         "curves-p4", "curves-p5",     "divisors-p4"};
  return ids;
}

}  // namespace

TEST_CASE("every fixture loads and survives a json round-trip") {
  CHECK(allTableIds().size() == 27);
  for (const std::string& id : allTableIds()) {
    CAPTURE(id);
    const Fixture f = loadFixture(kFixtures, id);
    CHECK(f.tableId == id);
    CHECK_FALSE(f.source.empty());
    const Fixture g = fixtureFromJson(fixtureToJson(f));
    CHECK(g.tableId == f.tableId);
    CHECK(g.columns == f.columns);
    CHECK(g.rows.size() == f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
      CHECK(g.rows[i].label == f.rows[i].label);
      CHECK(g.rows[i].coords == f.rows[i].coords);
    }
    CHECK(g.extra == f.extra);
  }
  CHECK_THROWS(loadFixture(kFixtures, "no-such-table"));
}

TEST_CASE("fixture row lookup") {
  const Fixture f = loadFixture(kFixtures, "dual2-x44");
  CHECK(f.row("α").coords == IntVec{1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS(f.row("no-such-row"));
  CHECK(f.rowVectors().size() == f.rows.size());
}

TEST_CASE("the full table suite reproduces the reference values") {
  const RunAllResult res = runAll(kFixtures);
  REQUIRE(res.reports.size() == allTableIds().size());
  CHECK_FALSE(res.anyMismatch);

  for (const DiffReport& rep : res.reports) {
    CAPTURE(rep.tableId);
    for (const CheckLine& check : rep.checks) {
      CAPTURE(check.name);
      CHECK(check.pass);
    }
    if (knownDiffTables().count(rep.tableId)) {
      CHECK(rep.status == DiffStatus::KnownDiff);
      CHECK_FALSE(rep.knownDiffs.empty());
    } else {
      CHECK(rep.status == DiffStatus::Match);
      CHECK(rep.knownDiffs.empty());
    }
    for (const KnownDiffFinding& f : rep.knownDiffs) {
      CAPTURE(f.id);
      CHECK(f.certified);
      CHECK_FALSE(f.certificate.empty());
    }
  }
}

TEST_CASE("the known-diff register is closed in both directions") {
  const RunAllResult res = runAll(kFixtures);

  std::set<std::string> reported;
  for (const DiffReport& rep : res.reports)
    for (const KnownDiffFinding& f : rep.knownDiffs) reported.insert(f.id);

  std::set<std::string> registered;
  for (const KnownDiffEntry& entry : knownDiffRegister()) {
    registered.insert(entry.id);
    CHECK(knownDiffTables().count(entry.tableId));
  }

  CHECK(registered.size() == 10);
  CHECK(reported == registered);
}

TEST_CASE("specific findings carry their certificates") {
  const DiffReport rep = runTable("appendix-x423", kFixtures);
  REQUIRE(rep.status == DiffStatus::KnownDiff);
  REQUIRE(rep.knownDiffs.size() == 4);
  std::set<std::string> ids;
  for (const auto& f : rep.knownDiffs) ids.insert(f.id);
  CHECK(ids == std::set<std::string>{"appendix-x423/alpha4", "appendix-x423/alpha6",
                                     "appendix-x423/alpha9", "appendix-x423/dual-span"});
  for (const auto& f : rep.knownDiffs) {
    if (f.id == "appendix-x423/dual-span") {
      CHECK(f.certificate.contains("extraOrbitClasses"));
      CHECK(f.certificate["extraOrbitClasses"] == 9);
    } else {
      CHECK(f.certificate.contains("printedRow"));
      CHECK(f.certificate.contains("recomputedRow"));
      CHECK(f.certificate.contains("violatingGenerator"));
      CHECK(f.certificate.contains("pairing"));
      CHECK(f.certificate["pairing"].get<long long>() < 0);
    }
  }

  const DiffReport lin = runTable("lin2-x55", kFixtures);
  CHECK(lin.status == DiffStatus::KnownDiff);
  CHECK(lin.knownDiffs.size() == 2);
}

TEST_CASE("an edited fixture value is a mismatch, not a known diff") {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "cyclecones-tamper-test";
  fs::create_directories(tmp);

  SUBCASE("tampering with a reference number") {
    OrderedJson j = readJsonFile(kFixtures + "/int-matrix-4.json");
    j["rows"][0]["coords"][0] = 2;  // H^4 is 1, claim 2
    writeJsonFile((tmp / "int-matrix-4.json").string(), j);
    const DiffReport rep = runTable("int-matrix-4", tmp.string());
    CHECK(rep.status == DiffStatus::Mismatch);
    bool anyFailed = false;
    for (const auto& c : rep.checks) anyFailed |= !c.pass;
    CHECK(anyFailed);
    CHECK(rep.knownDiffs.empty());
  }

  SUBCASE("tampering with a dual table row") {
    OrderedJson j = readJsonFile(kFixtures + "/dual2-x44.json");
    j["rows"][0]["coords"][0] = 2;
    writeJsonFile((tmp / "dual2-x44.json").string(), j);
    // The dual runner also reads the primal table from the same directory.
    fs::copy_file(kFixtures + "/lin2-x44.json", tmp / "lin2-x44.json",
                  fs::copy_options::overwrite_existing);
    const DiffReport rep = runTable("dual2-x44", tmp.string());
    CHECK(rep.status == DiffStatus::Mismatch);
  }

  fs::remove_all(tmp);
}

TEST_CASE("unknown table ids are rejected") {
  CHECK_THROWS(runTable("no-such-table", kFixtures));
}

TEST_CASE("reports and renders are deterministic within a process") {
  const RunAllResult a = runAll(kFixtures);
  const RunAllResult b = runAll(kFixtures);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(reportToJson(a.reports[i]).dump(2) == reportToJson(b.reports[i]).dump(2));
    CHECK(renderMarkdown(a.reports[i], true) == renderMarkdown(b.reports[i], true));
    CHECK(renderCsv(a.reports[i]) == renderCsv(b.reports[i]));
    CHECK(renderReportText(a.reports[i]) == renderReportText(b.reports[i]));
  }
  CHECK(verdictToJson(a.verdicts).dump(2) == verdictToJson(b.verdicts).dump(2));
  CHECK(renderVerdictText(a.verdicts) == renderVerdictText(b.verdicts));
}

TEST_CASE("render formats include the fixture rows") {
  const DiffReport rep = runTable("dual2-x44", kFixtures);
  const std::string md = renderMarkdown(rep);
  CHECK(md.find("H^2") != std::string::npos);
  CHECK(md.find("α") != std::string::npos);
  const std::string csv = renderCsv(rep);
  CHECK(csv.find("H^2") != std::string::npos);
  const OrderedJson j = renderJson(rep);
  CHECK(j.contains("rows"));

  // Orbit expansion renders strictly more rows for an orbit-compressed table.
  const std::string expanded = renderMarkdown(rep, true);
  CHECK(expanded.size() > md.size());
}

TEST_CASE("verdict grids summarize the cone results") {
  const RunAllResult res = runAll(kFixtures);
  const VerdictGrid& d4 = res.verdicts.dim4;
  REQUIRE(d4.kRows == std::vector<int>{1, 2, 3});
  REQUIRE(d4.columnLabels.size() == 9);
  for (const auto& row : d4.cells) REQUIRE(row.size() == d4.columnLabels.size());

  // Curves on the fourfold: generation holds through r = 7, fails at r = 10
  // with an arithmetic witness, and r = 8, 9 stay open.
  CHECK(d4.cells[0][0].verdict == Verdict::Yes);
  CHECK(d4.cells[0][6].verdict == Verdict::Unknown);
  CHECK(d4.cells[0][8].verdict == Verdict::No);
  CHECK(d4.cells[0][8].evidence == Evidence::ArithmeticallyVerified);

  // 2-cycles: the quadric witness kills r = 5 and propagates rightward.
  CHECK(d4.cells[1][3].verdict == Verdict::No);
  CHECK(d4.cells[1][3].evidence == Evidence::ArithmeticallyVerified);
  CHECK(d4.cells[1][4].verdict == Verdict::Blank);
  CHECK(d4.cells[1][4].evidence == Evidence::Propagated);

  const VerdictGrid& d5 = res.verdicts.dim5;
  REQUIRE(d5.kRows == std::vector<int>{1, 2, 3, 4});
  CHECK(d5.cells[0][3].evidence == Evidence::ArithmeticallyVerified);
  CHECK(d5.cells[1][3].verdict == Verdict::Unknown);
  CHECK(d5.cells[2][1].evidence == Evidence::ArithmeticallyVerified);
  CHECK(d5.cells[3][1].evidence == Evidence::ArithmeticallyVerified);

  const std::string text = renderVerdictText(res.verdicts);
  CHECK(text.find("x") != std::string::npos);
  CHECK(text.find("+") != std::string::npos);
}
