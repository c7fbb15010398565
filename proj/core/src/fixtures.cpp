#include "cyclecones/fixtures.hpp"

#include <stdexcept>

namespace cyclecones {

const FixtureRow& Fixture::row(const std::string& label) const {
  for (const FixtureRow& r : rows)
    if (r.label == label) return r;
  throw std::invalid_argument("fixture '" + tableId + "' has no row '" + label + "'");
}

std::vector<IntVec> Fixture::rowVectors() const {
  std::vector<IntVec> out;
  out.reserve(rows.size());
  for (const FixtureRow& r : rows) out.push_back(r.coords);
  return out;
}

Fixture fixtureFromJson(const OrderedJson& j) {
  Fixture f;
  f.tableId = j.at("tableId").get<std::string>();
  f.source = j.value("source", std::string());
  if (j.contains("space")) f.space = spaceFromJson(j["space"]);
  if (j.contains("degree")) f.degree = j["degree"].get<int>();
  if (j.contains("columns"))
    for (const auto& c : j["columns"]) f.columns.push_back(c.get<std::string>());
  if (j.contains("rows"))
    for (const auto& r : j["rows"]) {
      FixtureRow row;
      row.label = r.at("label").get<std::string>();
      row.coords = intVecFromJson(r.at("coords"));
      if (!f.columns.empty() && row.coords.size() != f.columns.size())
        throw std::invalid_argument("fixture row '" + row.label +
                                    "' does not match the column count");
      f.rows.push_back(std::move(row));
    }
  if (j.contains("groups"))
    for (const auto& g : j["groups"]) {
      std::vector<std::string> group;
      for (const auto& label : g) group.push_back(label.get<std::string>());
      f.groups.push_back(std::move(group));
    }
  if (j.contains("extra")) f.extra = j["extra"];
  return f;
}

OrderedJson fixtureToJson(const Fixture& f) {
  OrderedJson j;
  j["tableId"] = f.tableId;
  if (!f.source.empty()) j["source"] = f.source;
  if (f.space) j["space"] = spaceToJson(*f.space);
  if (f.degree) j["degree"] = *f.degree;
  if (!f.columns.empty()) j["columns"] = f.columns;
  if (!f.rows.empty()) {
    OrderedJson rows = OrderedJson::array();
    for (const FixtureRow& r : f.rows)
      rows.push_back(OrderedJson{{"label", r.label}, {"coords", intVecToJson(r.coords)}});
    j["rows"] = std::move(rows);
  }
  if (!f.groups.empty()) j["groups"] = f.groups;
  if (!f.extra.empty()) j["extra"] = f.extra;
  return j;
}

Fixture loadFixture(const std::string& dir, const std::string& tableId) {
  Fixture f = fixtureFromJson(readJsonFile(dir + "/" + tableId + ".json"));
  if (f.tableId != tableId)
    throw std::invalid_argument("fixture file '" + tableId + ".json' declares tableId '" +
                                f.tableId + "'");
  return f;
}

const std::vector<std::string>& allTableIds() {
  static const std::vector<std::string> ids = {
      "int-matrix-3",    "int-matrix-4",     "int-matrix-5",
      "lin2-x44",        "dual2-x44",
      "lin2-x55",        "dual2-x55-maxinc",
      "appendix-x322",   "appendix-x331",    "appendix-x423",
      "decomp-lambda",   "decomp-xi",        "decomp-delta",
      "decomp-alpha8",   "decomp-alpha9",
      "witness-quadric", "witness-segre",    "witness-cubic-divisor",
      "selfint-p4",      "selfint-p5",       "selfint-antican-x45",
      "curves-p4",       "curves-p5",
      "divisors-p4",     "divisors-p5",
      "schubert-anchors", "expected-codim",
  };
  return ids;
}

}  // namespace cyclecones
