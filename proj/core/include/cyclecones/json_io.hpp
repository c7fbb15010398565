#ifndef CYCLECONES_JSON_IO_HPP
#define CYCLECONES_JSON_IO_HPP

#include "cyclecones/cone.hpp"
#include "cyclecones/graded_class.hpp"
#include "cyclecones/rational.hpp"
#include "cyclecones/space.hpp"

#include <json.hpp>

#include <string>

namespace cyclecones {

// All serialization goes through nlohmann::ordered_json so that reports are
// byte-stable: insertion order is part of the format.
using OrderedJson = nlohmann::ordered_json;

// Integers that fit in 64 bits serialize as JSON numbers, everything else as
// "p/q" strings.  The readers accept either form.
OrderedJson ratToJson(const Rat& x);
Rat ratFromJson(const OrderedJson& j);

OrderedJson ratVecToJson(const RatVec& v);
OrderedJson intVecToJson(const IntVec& v);
RatVec ratVecFromJson(const OrderedJson& j);
IntVec intVecFromJson(const OrderedJson& j);  // throws on non-integers

OrderedJson spaceToJson(const SpaceSignature& X);
SpaceSignature spaceFromJson(const OrderedJson& j);

// {"space": {...}, "degree": k, "coords": [...]} with coordinates in the
// canonical monomial basis of the given codimension.
OrderedJson classToJson(const GradedClass& c);
GradedClass classFromJson(const OrderedJson& j);

// {"ambientDim": N, "rays": [[...]], "lineality": [[...]], "pairing": [[...]]}
// with lineality and pairing optional.
OrderedJson coneToJson(const RayCone& c);
RayCone coneFromJson(const OrderedJson& j);

// Membership certificates: {"member": true, "combination": {"i": c_i},
// "linealityCombination": {...}} or {"member": false, "separator": [...]}.
OrderedJson membershipToJson(const MembershipResult& r);

OrderedJson readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const OrderedJson& j);

}  // namespace cyclecones

#endif  // CYCLECONES_JSON_IO_HPP
