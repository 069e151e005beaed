#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "blades/io.hpp"
#include "blades/linalg.hpp"
#include "commands.hpp"

namespace blades::cli {

using io::Json;

namespace {

using Op = std::function<Json(const Json&)>;

Subset subset_arg(const Json& args, const char* key) {
  return args.contains(key) ? io::subset_from_json(args.at(key), std::string("/") + key) : Subset{};
}

GroundFrame frame_arg(const Json& args) { return GroundFrame(args.at("n").get<int>(), subset_arg(args, "L")); }

Arrangement arrangement_arg(const Json& args) { return io::arrangement_from_json(args.at("a")); }

Json subsets_json(const std::vector<Subset>& v) {
  Json out = Json::array();
  for (Subset s : v) out.push_back(io::to_json(s));
  return out;
}

Json sum_rho_cube(int k, int n, Subset J) {
  VertexVector total(k, n);
  for (Subset I : k_subsets(Subset::range(n), k)) total += Rational(rho(k, n, J, I)) * cube_L(k, n, I);
  return io::to_json(total);
}

const std::map<std::string, Op>& ops() {
  static const std::map<std::string, Op> table = {
      {"cyclic_intervals", [](const Json& a) { return subsets_json(cyclic_intervals(frame_arg(a), subset_arg(a, "J"))); }},
      {"interlaced_complements",
       [](const Json& a) { return subsets_json(interlaced_complements(frame_arg(a), subset_arg(a, "J"))); }},
      {"is_frozen", [](const Json& a) { return Json(is_frozen(frame_arg(a), subset_arg(a, "J"))); }},
      {"blade",
       [](const Json& a) {
         return io::to_json(blade(a.at("k").get<int>(), a.at("n").get<int>(), subset_arg(a, "L"), subset_arg(a, "J")));
       }},
      {"boundary_j", [](const Json& a) { return io::to_json(boundary_j(arrangement_arg(a), a.at("j").get<int>())); }},
      {"boundary", [](const Json& a) { return io::to_json(boundary(arrangement_arg(a))); }},
      {"boundary_L", [](const Json& a) { return io::to_json(boundary_L(arrangement_arg(a), subset_arg(a, "L"))); }},
      {"support_on_face",
       [](const Json& a) { return subsets_json(support_on_face(arrangement_arg(a), subset_arg(a, "L"))); }},
      {"dosp_from_vertex", [](const Json& a) { return io::to_json(dosp_from_vertex(frame_arg(a), subset_arg(a, "J"))); }},
      {"plate_system",
       [](const Json& a) {
         Json out = Json::array();
         for (const PlateInequality& p : plate_system(io::dosp_from_json(a.at("dosp"))))
           out.push_back(Json{{"subset", io::to_json(p.subset)}, {"rhs", p.rhs}});
         return out;
       }},
      // sum_I rho_J(e_I) L(e^I), as a vertex vector.
      {"rho_cube_sum",
       [](const Json& a) { return sum_rho_cube(a.at("k").get<int>(), a.at("n").get<int>(), subset_arg(a, "J")); }},
      {"cube_R_coordinate",
       [](const Json& a) {
         const VertexVector v = io::vertex_vector_from_json(a.at("v"));
         return io::to_json(cube_R(v)[subset_arg(a, "I")]);
       }},
      {"heights_pos_plucker",
       [](const Json& a) {
         const int k = a.at("k").get<int>();
         const int n = a.at("n").get<int>();
         for (Subset J : k_subsets(Subset::range(n), k))
           if (!is_pos_plucker(height_vector(k, n, J)).holds) return Json(false);
         return Json(true);
       }},
      {"to_blades_height",
       [](const Json& a) {
         return io::to_json(to_blades(height_vector(a.at("k").get<int>(), a.at("n").get<int>(), subset_arg(a, "J"))));
       }},
      {"eta_frozen_vanishes",
       [](const Json& a) {
         const int k = a.at("k").get<int>();
         const int n = a.at("n").get<int>();
         std::mt19937 rng(a.at("seed").get<unsigned>());
         std::uniform_int_distribution<int> coeff(-3, 3);
         const auto basis = kinematic_basis(k, n);
         const GroundFrame frame(n);
         for (int trial = 0; trial < 20; ++trial) {
           VertexVector v(k, n);
           for (const VertexVector& b : basis) v += Rational(coeff(rng)) * b;
           const KinematicVector s(v);
           for (Subset J : k_subsets(Subset::range(n), k))
             if (is_frozen(frame, J) && eta(s, J) != 0) return Json(false);
         }
         return Json(true);
       }},
      {"planar_rank",
       [](const Json& a) {
         const int k = a.at("k").get<int>();
         const int n = a.at("n").get<int>();
         const auto basis = kinematic_basis(k, n);
         const GroundFrame frame(n);
         std::vector<Subset> nonfrozen;
         for (Subset J : k_subsets(Subset::range(n), k))
           if (!is_frozen(frame, J)) nonfrozen.push_back(J);
         Matrix m(nonfrozen.size(), basis.size());
         for (std::size_t r = 0; r < nonfrozen.size(); ++r)
           for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = eta(KinematicVector(basis[c]), nonfrozen[r]);
         return Json(rank(m));
       }},
      {"face_weights",
       [](const Json& a) { return io::to_json(face_weights(arrangement_arg(a), subset_arg(a, "L"))); }},
      {"is_in_Z", [](const Json& a) { return Json(is_in_Z(arrangement_arg(a)).member); }},
      {"pairs_not_ws_check",
       [](const Json& a) { return Json(pairs_not_ws_check(arrangement_arg(a), subset_arg(a, "L"))); }},
      {"face_splits",
       [](const Json& a) {
         const auto report = faces_report(arrangement_arg(a));
         Json out = Json::array();
         for (const DecoratedOsp& d : report.at(subset_arg(a, "L")).splits) out.push_back(io::to_json(d));
         return out;
       }},
      {"tau",
       [](const Json& a) {
         return io::to_json(tau(io::tau_spec_from_json(a.at("spec"), a.at("k").get<int>(), a.at("n").get<int>())));
       }},
      {"tau_boundary_L",
       [](const Json& a) {
         const TauSpec spec = io::tau_spec_from_json(a.at("spec"), a.at("k").get<int>(), a.at("n").get<int>());
         return io::to_json(boundary_L(tau(spec), subset_arg(a, "L")));
       }},
      {"tau_closure",
       [](const Json& a) {
         const TauSpec spec = io::tau_spec_from_json(a.at("spec"), a.at("k").get<int>(), a.at("n").get<int>());
         return Json(check_tau_closure(spec).closed());
       }},
      {"dj_vertices_count",
       [](const Json& a) {
         return Json(dj_vertices(a.at("k").get<int>(), a.at("n").get<int>(), subset_arg(a, "J")).size());
       }},
      {"catalog_contains",
       [](const Json& a) {
         const Arrangement x = primitive(arrangement_arg(a));
         for (const Arrangement& r : expand_orbits(catalog_rays(a.at("n").get<int>())))
           if (r == x) return Json(true);
         return Json(false);
       }},
  };
  return table;
}

// Lists of DOSPs compare as sets of blades (modulo block rotation).
bool same_dosps(const Json& got, const Json& expected, int n, Subset L) {
  const auto as_list = [](const Json& j) {
    std::vector<DecoratedOsp> out;
    if (j.is_object()) out.push_back(io::dosp_from_json(j));
    else
      for (const Json& d : j) out.push_back(io::dosp_from_json(d));
    return out;
  };
  const auto g = as_list(got);
  const auto e = as_list(expected);
  if (g.size() != e.size()) return false;
  const GroundFrame frame(n, L);
  for (const DecoratedOsp& d : e)
    if (std::none_of(g.begin(), g.end(), [&](const DecoratedOsp& x) { return same_blade(x, d, frame); })) return false;
  return true;
}

bool same_arrangement(const Json& got, const Json& expected) {
  return io::arrangement_from_json(got) == io::arrangement_from_json(expected);
}

bool same_set(const Json& got, const Json& expected) {
  std::set<std::string> a;
  std::set<std::string> b;
  for (const Json& x : got) a.insert(x.dump());
  for (const Json& x : expected) b.insert(x.dump());
  return a == b;
}

}  // namespace

Outcome replay_paper_examples(const std::string& goldens_path) {
  std::ifstream file(goldens_path);
  if (!file) throw std::invalid_argument("cannot open goldens file '" + goldens_path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const Json goldens = io::parse(buffer.str());

  std::ostringstream out;
  int failures = 0;
  for (const Json& c : goldens.at("cases")) {
    const std::string name = c.at("name");
    const std::string op = c.at("op");
    const Json& args = c.at("args");
    const Json& expected = c.at("expected");
    const std::string compare = c.value("compare", "exact");
    Json got;
    bool ok = false;
    try {
      const auto it = ops().find(op);
      if (it == ops().end()) throw std::invalid_argument("unknown op '" + op + "'");
      got = it->second(args);
      if (compare == "arrangement") ok = same_arrangement(got, expected);
      else if (compare == "dosp") ok = same_dosps(got, expected, args.at("n").get<int>(), subset_arg(args, "L"));
      else if (compare == "set") ok = same_set(got, expected);
      else ok = got == expected;
    } catch (const std::exception& e) {
      got = Json{{"error", e.what()}};
    }
    Json line{{"name", name}, {"pass", ok}};
    if (!ok) {
      ++failures;
      line["got"] = got;
      line["expected"] = expected;
    }
    out << io::dump(line) << "\n";
  }
  out << io::dump(Json{{"summary", {{"cases", goldens.at("cases").size()}, {"failures", failures}}}}) << "\n";
  return Outcome{failures == 0 ? kOk : kNotMember, out.str(), {}};
}

}  // namespace blades::cli
