#ifndef CYCLECONES_FIXTURES_HPP
#define CYCLECONES_FIXTURES_HPP

#include "cyclecones/json_io.hpp"
#include "cyclecones/rational.hpp"
#include "cyclecones/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclecones {

// A fixture is a published reference table stored verbatim as canonical JSON:
// labelled integer coordinate rows over a display basis, plus table-specific
// payload under "extra".  Fixtures are read-only inputs; the table runners
// recompute everything from first principles and diff against them.
struct FixtureRow {
  std::string label;
  IntVec coords;
};

struct Fixture {
  std::string tableId;
  std::string source;  // one-line description of the reference table
  std::optional<SpaceSignature> space;
  std::optional<int> degree;  // codimension of the row classes
  std::vector<std::string> columns;
  std::vector<FixtureRow> rows;
  // Display row grouping (horizontal rules in the printed table); each group
  // is a list of row labels.
  std::vector<std::vector<std::string>> groups;
  OrderedJson extra = OrderedJson::object();

  const FixtureRow& row(const std::string& label) const;  // throws if absent
  std::vector<IntVec> rowVectors() const;
};

Fixture fixtureFromJson(const OrderedJson& j);
OrderedJson fixtureToJson(const Fixture& f);

// Reads <dir>/<tableId>.json.
Fixture loadFixture(const std::string& dir, const std::string& tableId);

// The full list of table ids, in canonical run order.
const std::vector<std::string>& allTableIds();

}  // namespace cyclecones

#endif  // CYCLECONES_FIXTURES_HPP
