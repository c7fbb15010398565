// Command-line front end: recompute the shipped tables and diff them against
// the fixtures, or run the individual engines (dualization, membership,
// self-intersection, Schubert products) on JSON inputs.

#include "cyclecones/cone.hpp"
#include "cyclecones/graded_class.hpp"
#include "cyclecones/json_io.hpp"
#include "cyclecones/schubert.hpp"
#include "cyclecones/tables.hpp"
#include "cyclecones/verdict.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

namespace {

using namespace cyclecones;

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(outPath, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + outPath + "'");
  os << text;
}

int commandTable(const std::string& id, const std::string& fixturesDir,
                 const std::string& format, bool expandOrbits, const std::string& outPath) {
  const DiffReport rep = runTable(id, fixturesDir);
  if (format == "markdown") {
    emit(renderMarkdown(rep, expandOrbits), outPath);
  } else if (format == "csv") {
    emit(renderCsv(rep, expandOrbits), outPath);
    std::cerr << rep.tableId << ": " << diffStatusName(rep.status) << "\n";
  } else if (format == "json") {
    emit(renderJson(rep, expandOrbits).dump(2) + "\n", outPath);
    std::cerr << rep.tableId << ": " << diffStatusName(rep.status) << "\n";
  } else if (format == "report") {
    emit(reportToJson(rep).dump(2) + "\n", outPath);
  } else {
    throw std::runtime_error("unknown format '" + format + "'");
  }
  return rep.status == DiffStatus::Mismatch ? 1 : 0;
}

int commandAll(const std::string& fixturesDir, bool asJson, const std::string& outPath) {
  const RunAllResult res = runAll(fixturesDir);
  if (asJson) {
    OrderedJson j;
    OrderedJson reports = OrderedJson::array();
    for (const DiffReport& rep : res.reports) reports.push_back(reportToJson(rep));
    j["reports"] = std::move(reports);
    j["verdicts"] = verdictToJson(res.verdicts);
    j["anyMismatch"] = res.anyMismatch;
    emit(j.dump(2) + "\n", outPath);
  } else {
    std::string text;
    for (const DiffReport& rep : res.reports) text += renderReportText(rep) + "\n";
    text += renderVerdictText(res.verdicts);
    emit(text, outPath);
  }
  return res.anyMismatch ? 1 : 0;
}

int commandDual(const std::string& conePath, const std::string& outPath) {
  const RayCone cone = coneFromJson(readJsonFile(conePath));
  emit(coneToJson(dualCone(cone)).dump(2) + "\n", outPath);
  return 0;
}

int commandMember(const std::string& vecPath, const std::string& conePath) {
  const RatVec target = ratVecFromJson(readJsonFile(vecPath));
  const RayCone cone = coneFromJson(readJsonFile(conePath));
  const MembershipResult r = membership(target, cone);
  std::cout << membershipToJson(r).dump(2) << "\n";
  return 0;
}

int commandSelfInt(const std::string& classPath) {
  const GradedClass c = classFromJson(readJsonFile(classPath));
  std::cout << ratToString(selfIntersectionNumber(c)) << "\n";
  return 0;
}

// "G(a,n) s2*s1^4" or "G(a,n) s{2,1}*s1^2": the first factor may be any
// partition, later factors must be single-row (Pieri) classes.
int commandSchubert(const std::string& expr) {
  static const std::regex head(R"(^\s*G\((\d+)\s*,\s*(\d+)\)\s*(.*?)\s*$)");
  std::smatch m;
  if (!std::regex_match(expr, m, head))
    throw std::runtime_error("expected an expression like \"G(2,4) s2*s1^4\"");
  const Grassmannian g(std::stoi(m[1]), std::stoi(m[2]));
  std::string rest = m[3];

  std::vector<std::string> factors;
  std::size_t start = 0;
  while (start <= rest.size()) {
    const std::size_t pos = rest.find('*', start);
    factors.push_back(rest.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }

  static const std::regex factorRe(R"(^\s*s(?:(\d+)|\{([\d,\s]*)\})(?:\^(\d+))?\s*$)");
  SchubertExpression result = SchubertExpression::sigma(g, {});
  bool first = true;
  for (const std::string& factor : factors) {
    if (factor.empty() || factor.find_first_not_of(" \t") == std::string::npos) {
      if (first) break;  // bare "G(a,n)" is the fundamental class
      throw std::runtime_error("empty factor in '" + rest + "'");
    }
    std::smatch fm;
    if (!std::regex_match(factor, fm, factorRe))
      throw std::runtime_error("cannot parse factor '" + factor + "'");
    Partition p;
    if (fm[1].matched) {
      p.push_back(std::stoi(fm[1]));
    } else {
      static const std::regex num(R"(\d+)");
      const std::string inner = fm[2];
      for (auto it = std::sregex_iterator(inner.begin(), inner.end(), num);
           it != std::sregex_iterator(); ++it)
        p.push_back(std::stoi(it->str()));
    }
    const int exponent = fm[3].matched ? std::stoi(fm[3]) : 1;
    if (first) {
      if (exponent != 1 && p.size() > 1)
        throw std::runtime_error("only single-row factors may carry an exponent");
      result = SchubertExpression::sigma(g, p);
      if (exponent > 1)
        for (int i = 1; i < exponent; ++i) result = result.pieri(p.at(0));
      first = false;
      continue;
    }
    if (p.size() != 1)
      throw std::runtime_error("later factors must be single-row classes (Pieri)");
    for (int i = 0; i < exponent; ++i) result = result.pieri(p.at(0));
  }

  std::cout << result.str() << "\n";
  if (!result.isZero() && result.codimension() == g.dimension()) {
    const Partition box(static_cast<std::size_t>(g.rows()), g.cols());
    std::cout << "top coefficient: " << ratToString(result.coefficient(box)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle-cone verification harness"};
  app.require_subcommand(1);

  std::string fixturesDir = "fixtures";
  std::string outPath;

  auto* tableCmd = app.add_subcommand("table", "recompute one table and diff it");
  std::string tableId;
  std::string format = "markdown";
  bool expandOrbits = false;
  tableCmd->add_option("id", tableId, "table identifier")->required();
  tableCmd->add_option("--format", format, "markdown, json, csv, or report")
      ->check(CLI::IsMember({"markdown", "json", "csv", "report"}));
  tableCmd->add_flag("--expand-orbits", expandOrbits, "expand orbit representatives");
  tableCmd->add_option("--fixtures", fixturesDir, "fixtures directory");
  tableCmd->add_option("--out", outPath, "write output to a file");

  auto* allCmd = app.add_subcommand("all", "recompute every table and the verdict grids");
  bool allJson = false;
  allCmd->add_flag("--json", allJson, "emit one JSON document");
  allCmd->add_option("--fixtures", fixturesDir, "fixtures directory");
  allCmd->add_option("--out", outPath, "write output to a file");

  auto* dualCmd = app.add_subcommand("dual", "dualize a cone file");
  std::string conePath, vecPath;
  dualCmd->add_option("cone", conePath, "cone JSON file")->required();
  dualCmd->add_option("--out", outPath, "write output to a file");

  auto* memberCmd = app.add_subcommand("member", "test cone membership with certificates");
  memberCmd->add_option("vector", vecPath, "coordinate vector JSON file")->required();
  memberCmd->add_option("cone", conePath, "cone JSON file")->required();

  auto* selfintCmd = app.add_subcommand("selfint", "self-intersection number of a divisor class");
  std::string classPath;
  selfintCmd->add_option("class", classPath, "class JSON file")->required();

  auto* schubertCmd = app.add_subcommand("schubert", "evaluate a Schubert product");
  std::string expr;
  schubertCmd->add_option("expr", expr, "e.g. \"G(2,4) s2*s1^4\"")->required();

  try {
    app.parse(argc, argv);
    if (tableCmd->parsed())
      return commandTable(tableId, fixturesDir, format, expandOrbits, outPath);
    if (allCmd->parsed()) return commandAll(fixturesDir, allJson, outPath);
    if (dualCmd->parsed()) return commandDual(conePath, outPath);
    if (memberCmd->parsed()) return commandMember(vecPath, conePath);
    if (selfintCmd->parsed()) return commandSelfInt(classPath);
    if (schubertCmd->parsed()) return commandSchubert(expr);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
