#include "blades/io.hpp"

namespace blades::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(pointer + "/" + key, "missing field");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& pointer) {
  const Json& a = field(j, key, pointer);
  if (!a.is_array()) throw SchemaError(pointer + "/" + key, "expected an array");
  return a;
}

int int_value(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  return j.get<int>();
}

int size_param(const Json& j, const char* key, int fallback, const std::string& pointer) {
  if (j.is_object() && j.contains(key)) return int_value(j.at(key), pointer + "/" + key);
  if (fallback > 0) return fallback;
  throw SchemaError(pointer + "/" + key, "missing field (or pass it as a flag)");
}

template <class F>
auto at_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(pointer.empty() ? "/" : pointer, e.what());
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Offsets are 1-based byte positions; report line and column as well.
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw std::invalid_argument("malformed JSON at line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

Json to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an array of elements");
  Subset s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    const int x = int_value(j[i], p);
    if (x < 1 || x > kMaxGroundSize) throw SchemaError(p, "element " + std::to_string(x) + " out of range");
    if (s.contains(x)) throw SchemaError(p, "duplicate element " + std::to_string(x));
    s = s.with(x);
  }
  return s;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected a rational string \"p/q\"");
  return at_pointer(pointer, [&] { return parse_rational(j.get<std::string>()); });
}

Json to_json(const Arrangement& a) {
  Json terms = Json::array();
  for (const auto& [key, c] : a.terms())
    terms.push_back(Json{{"L", to_json(key.face)}, {"J", to_json(key.support)}, {"c", to_json(c)}});
  return Json{{"k", a.k()}, {"n", a.n()}, {"terms", terms}};
}

Arrangement arrangement_from_json(const Json& j, int k, int n) {
  const int kk = size_param(j, "k", k, "");
  const int nn = size_param(j, "n", n, "");
  Arrangement a = at_pointer("", [&] { return Arrangement(kk, nn); });
  const Json& terms = array_field(j, "terms", "");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "/terms/" + std::to_string(i);
    const Json& t = terms[i];
    const Subset L = t.is_object() && t.contains("L") ? subset_from_json(t.at("L"), p + "/L") : Subset{};
    const Subset J = subset_from_json(field(t, "J", p), p + "/J");
    const Rational c = rational_from_json(field(t, "c", p), p + "/c");
    at_pointer(p, [&] { a.add(L, J, c); });
  }
  return a;
}

Json to_json(const VertexVector& v) {
  Json coords = Json::array();
  for (const auto& [J, c] : v.coords()) coords.push_back(Json{{"J", to_json(J)}, {"v", to_json(c)}});
  return Json{{"k", v.k()}, {"n", v.n()}, {"coords", coords}};
}

VertexVector vertex_vector_from_json(const Json& j, int k, int n) {
  const int kk = size_param(j, "k", k, "");
  const int nn = size_param(j, "n", n, "");
  VertexVector v = at_pointer("", [&] { return VertexVector(kk, nn); });
  const Json& coords = array_field(j, "coords", "");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string p = "/coords/" + std::to_string(i);
    const Subset J = subset_from_json(field(coords[i], "J", p), p + "/J");
    const Rational c = rational_from_json(field(coords[i], "v", p), p + "/v");
    at_pointer(p, [&] { v.add(J, c); });
  }
  return v;
}

Json to_json(const DecoratedOsp& d) {
  Json blocks = Json::array();
  for (Subset b : d.blocks) blocks.push_back(to_json(b));
  return Json{{"blocks", blocks}, {"weights", d.weights}};
}

DecoratedOsp dosp_from_json(const Json& j) {
  DecoratedOsp d;
  const Json& blocks = array_field(j, "blocks", "");
  const Json& weights = array_field(j, "weights", "");
  if (blocks.size() != weights.size()) throw SchemaError("/weights", "needs one weight per block");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    d.blocks.push_back(subset_from_json(blocks[i], "/blocks/" + std::to_string(i)));
    d.weights.push_back(int_value(weights[i], "/weights/" + std::to_string(i)));
  }
  return d;
}

Json to_json(const TauSpec& spec) {
  Json blocks = Json::array();
  for (Subset b : spec.I_blocks) blocks.push_back(to_json(b));
  Json out{{"J", to_json(spec.J)}, {"I_blocks", blocks}};
  if (!spec.face.empty()) out["L"] = to_json(spec.face);
  return out;
}

TauSpec tau_spec_from_json(const Json& j, int k, int n) {
  TauSpec spec;
  spec.n = size_param(j, "n", n, "");
  spec.face = j.is_object() && j.contains("L") ? subset_from_json(j.at("L"), "/L") : Subset{};
  spec.J = subset_from_json(field(j, "J", ""), "/J");
  spec.k = j.is_object() && j.contains("k") ? int_value(j.at("k"), "/k") : k > 0 ? k : spec.J.size() + spec.face.size();
  const Json& blocks = array_field(j, "I_blocks", "");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    spec.I_blocks.push_back(subset_from_json(blocks[i], "/I_blocks/" + std::to_string(i)));
  at_pointer("", [&] { validate(spec); });
  return spec;
}

Json to_json(const Witness& w) {
  Json pairs = Json::array();
  for (Subset p : w.pairs) pairs.push_back(to_json(p));
  return Json{{"L", to_json(w.face)}, {"pairs", pairs}, {"reason", w.reason}};
}

Json certificate(const Membership& m, const std::string& key) {
  Json out{{key, m.member}};
  if (m.witness) out["witness"] = to_json(*m.witness);
  return out;
}

Json to_json(const PluckerCheck& c) {
  Json out{{"pos_plucker", c.holds}};
  if (c.witness) out["witness"] = Json{{"L", to_json(c.witness->L)}, {"Q", to_json(c.witness->Q)}};
  return out;
}

Json to_json(const FaceWeightTable& t) {
  Json weights = Json::array();
  for (const auto& [pair, w] : t.weights) weights.push_back(Json{{"pair", to_json(pair)}, {"w", to_json(w)}});
  return Json{{"L", to_json(t.face)}, {"weights", weights}};
}

Json to_json(const TauClosureReport& r) {
  Json steps = Json::array();
  for (const TauClosureStep& s : r.steps) {
    Json step{{"j", s.j}, {"zero", s.zero}};
    if (s.match) {
      step["match"] = to_json(*s.match);
      step["totally_nonfrozen"] = s.totally_nonfrozen;
    }
    steps.push_back(step);
  }
  return Json{{"closed", r.closed()}, {"steps", steps}};
}

Json to_json(const RayEntry& e) {
  return Json{{"ray", to_json(e.ray)}, {"orbit_size", e.orbit_size}, {"negative_terms", e.negative_terms}, {"tag", e.tag}};
}

}  // namespace blades::io
