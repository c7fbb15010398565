#include "cyclecones/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace cyclecones {

namespace {

constexpr long long kMaxJsonInt = std::numeric_limits<long long>::max();

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("json_io: " + what);
}

const OrderedJson& field(const OrderedJson& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

OrderedJson ratToJson(const Rat& x) {
  if (isInteger(x)) {
    const Int n = numerator(x);
    if (n <= Int(kMaxJsonInt) && n >= Int(-kMaxJsonInt))
      return OrderedJson(n.convert_to<long long>());
  }
  return OrderedJson(ratToString(x));
}

Rat ratFromJson(const OrderedJson& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return ratFromString(j.get<std::string>());
  fail("expected integer or rational string, got " + j.dump());
}

OrderedJson ratVecToJson(const RatVec& v) {
  OrderedJson out = OrderedJson::array();
  for (const Rat& x : v) out.push_back(ratToJson(x));
  return out;
}

OrderedJson intVecToJson(const IntVec& v) {
  OrderedJson out = OrderedJson::array();
  for (const Int& x : v) out.push_back(ratToJson(Rat(x)));
  return out;
}

RatVec ratVecFromJson(const OrderedJson& j) {
  if (!j.is_array()) fail("expected array of coordinates");
  RatVec out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(ratFromJson(e));
  return out;
}

IntVec intVecFromJson(const OrderedJson& j) {
  const RatVec rv = ratVecFromJson(j);
  IntVec out;
  out.reserve(rv.size());
  for (const Rat& x : rv) {
    if (!isInteger(x)) fail("expected integer entry, got " + ratToString(x));
    out.push_back(numerator(x));
  }
  return out;
}

OrderedJson spaceToJson(const SpaceSignature& X) {
  return OrderedJson{{"n", X.n}, {"r", X.r}, {"s", X.s}};
}

SpaceSignature spaceFromJson(const OrderedJson& j) {
  return SpaceSignature(field(j, "n").get<int>(), field(j, "r").get<int>(),
                        field(j, "s").get<int>());
}

OrderedJson classToJson(const GradedClass& c) {
  OrderedJson out;
  out["space"] = spaceToJson(c.space());
  out["degree"] = c.degree();
  out["coords"] = ratVecToJson(c.coords());
  return out;
}

GradedClass classFromJson(const OrderedJson& j) {
  const SpaceSignature X = spaceFromJson(field(j, "space"));
  const int degree = field(j, "degree").get<int>();
  return GradedClass::fromCoords(X, degree, ratVecFromJson(field(j, "coords")));
}

OrderedJson coneToJson(const RayCone& c) {
  OrderedJson out;
  out["ambientDim"] = c.ambientDim;
  OrderedJson rays = OrderedJson::array();
  for (const IntVec& r : c.rays) rays.push_back(intVecToJson(r));
  out["rays"] = std::move(rays);
  if (!c.lineality.empty()) {
    OrderedJson lin = OrderedJson::array();
    for (const IntVec& l : c.lineality) lin.push_back(intVecToJson(l));
    out["lineality"] = std::move(lin);
  }
  if (c.pairing) {
    OrderedJson m = OrderedJson::array();
    for (const RatVec& row : *c.pairing) m.push_back(ratVecToJson(row));
    out["pairing"] = std::move(m);
  }
  return out;
}

RayCone coneFromJson(const OrderedJson& j) {
  const std::size_t dim = field(j, "ambientDim").get<std::size_t>();
  std::vector<IntVec> rays;
  for (const auto& r : field(j, "rays")) {
    rays.push_back(intVecFromJson(r));
    if (rays.back().size() != dim) fail("ray length does not match ambientDim");
  }
  std::vector<IntVec> lineality;
  if (j.contains("lineality"))
    for (const auto& l : j["lineality"]) {
      lineality.push_back(intVecFromJson(l));
      if (lineality.back().size() != dim) fail("lineality length does not match ambientDim");
    }
  std::optional<RatMatrix> pairing;
  if (j.contains("pairing")) {
    RatMatrix m;
    for (const auto& row : j["pairing"]) m.push_back(ratVecFromJson(row));
    pairing = std::move(m);
  }
  return makeCone(dim, rays, pairing, lineality);
}

OrderedJson membershipToJson(const MembershipResult& r) {
  OrderedJson out;
  out["member"] = r.inside;
  if (r.inside) {
    OrderedJson comb = OrderedJson::object();
    for (const auto& [i, c] : r.combination) comb[std::to_string(i)] = ratToJson(c);
    out["combination"] = std::move(comb);
    if (!r.linealityPart.empty()) {
      OrderedJson lin = OrderedJson::object();
      for (const auto& [i, c] : r.linealityPart) lin[std::to_string(i)] = ratToJson(c);
      out["linealityCombination"] = std::move(lin);
    }
  } else {
    out["separator"] = ratVecToJson(r.separator);
  }
  return out;
}

OrderedJson readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  OrderedJson j;
  in >> j;
  return j;
}

void writeJsonFile(const std::string& path, const OrderedJson& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace cyclecones
