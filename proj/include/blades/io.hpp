#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "blades/blade_complex.hpp"
#include "blades/building_blocks.hpp"
#include "blades/enumeration.hpp"
#include "blades/heights.hpp"
#include "blades/tropical.hpp"

namespace blades::io {

using Json = nlohmann::json;

/// A payload that parses as JSON but violates the schema. The message starts
/// with the JSON pointer of the offending value.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : std::invalid_argument(pointer + ": " + what) {}
};

/// Parses text, rethrowing syntax errors with line and column.
Json parse(const std::string& text);

/// Canonical compact text: sorted keys, no whitespace.
std::string dump(const Json& j);

Json to_json(Subset s);
Subset subset_from_json(const Json& j, const std::string& pointer = "");

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& pointer = "");

/// {"k","n","terms":[{"L":[],"J":[..],"c":"p/q"}]} sorted by (|L|, L, J).
Json to_json(const Arrangement& a);
/// k and n come from the payload, else from the fallbacks (0 = required).
Arrangement arrangement_from_json(const Json& j, int k = 0, int n = 0);

/// {"k","n","coords":[{"J":[..],"v":"p/q"}]}, zeros omitted.
Json to_json(const VertexVector& v);
VertexVector vertex_vector_from_json(const Json& j, int k = 0, int n = 0);

/// {"blocks":[[..]],"weights":[..]}
Json to_json(const DecoratedOsp& d);
DecoratedOsp dosp_from_json(const Json& j);

/// {"J":[..],"I_blocks":[[..]]}, plus "L" when the face is nonempty.
Json to_json(const TauSpec& spec);
TauSpec tau_spec_from_json(const Json& j, int k = 0, int n = 0);

Json to_json(const Witness& w);
/// {"in_Z":bool,"witness":{...}}; the key names the tested set.
Json certificate(const Membership& m, const std::string& key);
Json to_json(const PluckerCheck& c);
Json to_json(const FaceWeightTable& t);
Json to_json(const TauClosureReport& r);
Json to_json(const RayEntry& e);

}  // namespace blades::io
