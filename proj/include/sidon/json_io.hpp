#pragma once

// JSON encoding of groups, elements, sets and reports. Elements serialize as
// coordinate arrays in invariant-factor order.

#include <json.hpp>
#include <string>

#include "sidon/field.hpp"
#include "sidon/group.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon::io {

using Json = nlohmann::ordered_json;

/// A group spec "n1,n2,..." of arbitrary cyclic orders with the map into
/// invariant-factor form.
struct GroupSpec {
  CyclicProductIso iso;
  const AbelianGroup& group() const { return iso.target(); }
};
GroupSpec parse_group_spec(const std::string& text);

Json group_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);
Json elem_json(const AbelianGroup& g, Elem x);
Json set_json(const AbelianGroup& g, const ElemSet& s);

/// Elements as integers (cyclic groups) or coordinate arrays. With a spec the
/// coordinates refer to its source orders; otherwise to g's invariant factors.
ElemSet set_from_json(const AbelianGroup& g, const Json& j, const CyclicProductIso* source = nullptr);
/// "1,2,4" (cyclic) or a JSON array.
ElemSet parse_set(const GroupSpec& spec, const std::string& text);

Json field_json(const FiniteField& f);
/// Floating-point value with its precision annotation.
Json approx(double value, const char* precision = "binary64");

Json sidon_report_json(const AbelianGroup& g, const SidonReport& r);

FrameworkSpec framework_spec_from_json(const Json& j);
Json framework_spec_json(const FrameworkSpec& spec);

}  // namespace sidon::io
