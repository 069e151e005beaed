#include "commands.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "blades/io.hpp"

namespace blades::cli {

using io::Json;

namespace {

constexpr std::array kVerbs = {"boundary", "check", "to-blades", "faces", "eta",
                               "tau",      "enumerate", "catalog", "replay-paper-examples"};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
  return *v;
}

Json lines_summary(const Json& summary) { return Json{{"summary", summary}}; }

Outcome emit(const Json& j, int status = kOk) { return Outcome{status, io::dump(j) + "\n", {}}; }

Outcome boundary_verb(const Json& in, const Options& o) {
  const Arrangement a = io::arrangement_from_json(in, o.k.value_or(0), o.frame.value_or(0));
  if (o.j) return emit(io::to_json(boundary_j(a, *o.j)));
  if (o.face) return emit(io::to_json(boundary_L(a, *o.face)));
  return emit(io::to_json(boundary(a)));
}

Outcome check_verb(const Json& in, const Options& o) {
  if (o.plucker) {
    const PluckerVector p = io::vertex_vector_from_json(in, o.k.value_or(0), o.frame.value_or(0));
    const PluckerCheck pc = is_pos_plucker(p);
    const Membership z = is_in_Z(to_blades(p));
    Json out = io::to_json(pc);
    out["blades"] = io::certificate(z, "in_Z");
    return emit(out, pc.holds && z.member ? kOk : kNotMember);
  }
  const Arrangement a = io::arrangement_from_json(in, o.k.value_or(0), o.frame.value_or(0));
  Membership m;
  if (o.test == "x") m = is_in_X(a);
  else if (o.test == "y") m = is_in_Y(a);
  else if (o.test == "z") m = is_in_Z(a);
  else throw std::invalid_argument("unknown membership test '" + o.test + "' (use x, y or z)");
  std::string key = "in_" + o.test;
  key.back() = static_cast<char>(std::toupper(key.back()));
  return emit(io::certificate(m, key), m.member ? kOk : kNotMember);
}

Outcome to_blades_verb(const Json& in, const Options& o) {
  return emit(io::to_json(to_blades(io::vertex_vector_from_json(in, o.k.value_or(0), o.frame.value_or(0)))));
}

Outcome faces_verb(const Json& in, const Options& o) {
  const Arrangement a = io::arrangement_from_json(in, o.k.value_or(0), o.frame.value_or(0));
  if (o.face) return emit(io::to_json(face_weights(a, *o.face)));
  try {
    Json faces = Json::array();
    for (const auto& [L, report] : faces_report(a)) {
      Json splits = Json::array();
      for (const DecoratedOsp& d : report.splits) splits.push_back(io::to_json(d));
      faces.push_back(Json{{"L", io::to_json(L)}, {"component", io::to_json(report.component)}, {"splits", splits}});
    }
    return emit(Json{{"faces", faces}});
  } catch (const MembershipError& e) {
    return emit(Json{{"in_Z", false}, {"witness", io::to_json(e.witness())}}, kNotMember);
  }
}

Outcome eta_verb(const Json& in, const Options& o) {
  const VertexVector v = io::vertex_vector_from_json(in, o.k.value_or(0), o.frame.value_or(0));
  if (o.expand) {
    Json planar = Json::array();
    for (const auto& [J, c] : express_in_planar(v))
      if (c != 0) planar.push_back(Json{{"J", io::to_json(J)}, {"v", io::to_json(c)}});
    return emit(Json{{"planar", planar}});
  }
  const KinematicVector s(v);
  if (o.J) return emit(Json{{"J", io::to_json(*o.J)}, {"v", io::to_json(eta(s, *o.J))}});
  Json values = Json::array();
  const GroundFrame frame(v.n());
  for (Subset J : k_subsets(Subset::range(v.n()), v.k()))
    if (!is_frozen(frame, J)) values.push_back(Json{{"J", io::to_json(J)}, {"v", io::to_json(eta(s, J))}});
  return emit(Json{{"eta", values}});
}

Outcome tau_verb(const Json& in, const Options& o) {
  if (in.is_object() && !in.contains("I_blocks")) {
    const int n = in.contains("n") ? in.at("n").get<int>() : require(o.frame, "--frame");
    const Subset L = in.contains("L") ? io::subset_from_json(in.at("L"), "/L") : Subset{};
    const Subset J = io::subset_from_json(in.at("J"), "/J");
    const int k = o.k.value_or(J.size() + L.size());
    Json specs = Json::array();
    for (const TauSpec& s : dj_vertices(k, n, J, L)) specs.push_back(io::to_json(s));
    return emit(Json{{"count", tau_count(k, n, J, L)}, {"specs", specs}});
  }
  const TauSpec spec = io::tau_spec_from_json(in, o.k.value_or(0), o.frame.value_or(0));
  Json out{{"tau", io::to_json(tau(spec))}};
  if (o.closure) out["closure"] = io::to_json(check_tau_closure(spec));
  return emit(out);
}

Outcome enumerate_verb(const Options& o) {
  const int k = require(o.k, "--k");
  const int n = require(o.frame, "--frame");
  std::ostringstream lines;
  long count = 0;
  if (o.multisplits) {
    for (const DecoratedOsp& d : enumerate_multisplits(k, n)) {
      ++count;
      if (!o.count_only) lines << io::dump(io::to_json(d)) << "\n";
    }
  } else {
    for_each_dosp(k, n, o.anchored, [&](const DecoratedOsp& d) {
      ++count;
      if (!o.count_only) lines << io::dump(io::to_json(d)) << "\n";
    });
  }
  Json summary{{"k", k}, {"n", n}, {"count", count}};
  if (o.anchored || o.multisplits) summary["eulerian"] = eulerian(n - 1, k - 1);
  lines << io::dump(lines_summary(summary)) << "\n";
  return Outcome{kOk, lines.str(), {}};
}

Outcome catalog_verb(const Options& o) {
  const int n = require(o.frame, "--n");
  const RayCatalog catalog = catalog_rays(n);
  std::ostringstream lines;
  std::map<std::string, std::pair<long, long>> by_tag;
  std::map<std::string, Json> example;
  for (const RayEntry& e : catalog.entries) {
    lines << io::dump(io::to_json(e)) << "\n";
    auto& [classes, rays] = by_tag[e.tag];
    ++classes;
    rays += e.orbit_size;
    example.emplace(e.tag, io::to_json(e.ray));
  }
  Json tags = Json::array();
  for (const auto& [tag, counts] : by_tag)
    tags.push_back(Json{{"tag", tag}, {"classes", counts.first}, {"rays", counts.second}, {"example", example[tag]}});
  lines << io::dump(lines_summary(Json{{"n", n},
                                       {"classes", catalog.entries.size()},
                                       {"total_rays", catalog.total_rays()},
                                       {"by_tag", tags}}))
        << "\n";
  return Outcome{kOk, lines.str(), {}};
}

}  // namespace

bool is_verb(const std::string& verb) {
  return std::find(kVerbs.begin(), kVerbs.end(), verb) != kVerbs.end();
}

Subset parse_subset_flag(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), t.end());
  Subset s;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || x < 1 || x > kMaxGroundSize)
      throw std::invalid_argument("bad subset element '" + item + "' in '" + text + "'");
    s = s.with(x);
  }
  return s;
}

Outcome run(const std::string& verb, const std::string& input, const Options& options) {
  if (!is_verb(verb)) return Outcome{kInputError, {}, "unknown verb '" + verb + "'"};
  try {
    if (verb == "enumerate") return enumerate_verb(options);
    if (verb == "catalog") return catalog_verb(options);
    if (verb == "replay-paper-examples") return replay_paper_examples(options.goldens);

    if (input.empty()) throw std::invalid_argument("verb '" + verb + "' needs a JSON input");
    const Json in = io::parse(input);
    if (verb == "boundary") return boundary_verb(in, options);
    if (verb == "check") return check_verb(in, options);
    if (verb == "to-blades") return to_blades_verb(in, options);
    if (verb == "faces") return faces_verb(in, options);
    if (verb == "eta") return eta_verb(in, options);
    return tau_verb(in, options);
  } catch (const std::invalid_argument& e) {
    return Outcome{kInputError, {}, e.what()};
  } catch (const std::domain_error& e) {
    return Outcome{kInputError, {}, e.what()};
  } catch (const Json::exception& e) {
    return Outcome{kInputError, {}, e.what()};
  }
}

}  // namespace blades::cli
