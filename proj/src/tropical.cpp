#include "blades/tropical.hpp"

#include <algorithm>

namespace blades {

namespace {

void require_grade_zero(const Arrangement& a, const char* what) {
  if (!a.is_grade_zero()) throw DomainError(std::string(what) + " expects a grade-0 arrangement");
}

void require_second_face(int k, int n, Subset L) {
  if (L.size() != k - 2 || !L.is_subset_of(Subset::range(n)))
    throw DomainError("face label " + to_string(L) + " is not a (k-2)-subset of [" + std::to_string(n) + "]");
}

// {a,b} and {i,j} alternate in the frame; disjointness is implied.
bool crossing(const GroundFrame& frame, Subset p, Subset q) {
  return !weakly_separated(frame, p, q);
}

}  // namespace

PluckerCheck is_pos_plucker(const PluckerVector& p) {
  PluckerCheck result;
  for_each_octahedron(p.k(), p.n(), [&](const Octahedron& oct) {
    if (!result.holds) return;
    const std::vector<int> q = oct.Q.elements();
    const auto at = [&](int x, int y) { return p[oct.L.with(x).with(y)]; };
    const Rational lhs = at(q[0], q[2]) + at(q[1], q[3]);
    const Rational r1 = at(q[0], q[1]) + at(q[2], q[3]);
    const Rational r2 = at(q[0], q[3]) + at(q[1], q[2]);
    if (lhs != std::max(r1, r2)) {
      result.holds = false;
      result.witness = oct;
    }
  });
  return result;
}

Arrangement to_blades(const PluckerVector& p) {
  Arrangement out(p.k(), p.n());
  for (const auto& [J, c] : p.coords()) {
    Arrangement l = l_element(p.k(), p.n(), {}, J);
    l *= c;
    out += l;
  }
  out *= Rational(-1, p.n());
  return out;
}

std::vector<Subset> nonfrozen_pairs(int n, Subset L) {
  const GroundFrame frame(n, L);
  std::vector<Subset> out;
  for (Subset pair : k_subsets(frame.active(), 2))
    if (!is_frozen(frame, pair)) out.push_back(pair);
  return out;
}

FaceWeightTable face_weights(const Arrangement& a, Subset L) {
  require_grade_zero(a, "face_weights");
  require_second_face(a.k(), a.n(), L);
  FaceWeightTable table{L, {}};
  for (Subset pair : nonfrozen_pairs(a.n(), L)) table.weights.emplace(pair, 0);
  const Arrangement face = boundary_L(a, L);
  for (const auto& [key, c] : face.terms()) table.weights[key.support] = c;
  return table;
}

FaceWeightTable face_weights_from_plucker(const PluckerVector& p, Subset L) {
  require_second_face(p.k(), p.n(), L);
  const GroundFrame frame(p.n(), L);
  const auto at = [&](int x, int y) { return p[L.with(x).with(y)]; };
  FaceWeightTable table{L, {}};
  for (Subset pair : nonfrozen_pairs(p.n(), L)) {
    const int i = pair.min();
    const int j = pair.max();
    const int i1 = frame.succ(i);
    const int j1 = frame.succ(j);
    table.weights.emplace(pair, (at(i, j) - at(i, j1) - at(i1, j) + at(i1, j1)) / p.n());
  }
  return table;
}

namespace {

enum class Test { kX, kY, kZ };

std::optional<Witness> negative_weight(const FaceWeightTable& table) {
  for (const auto& [pair, w] : table.weights)
    if (w < 0) return Witness{table.face, {pair}, "negative-weight"};
  return std::nullopt;
}

std::optional<Witness> crossing_support(const FaceWeightTable& table, int n) {
  const GroundFrame frame(n, table.face);
  std::vector<Subset> support;
  for (const auto& [pair, w] : table.weights)
    if (w != 0) support.push_back(pair);
  for (std::size_t x = 0; x < support.size(); ++x)
    for (std::size_t y = x + 1; y < support.size(); ++y)
      if (crossing(frame, support[x], support[y]))
        return Witness{table.face, {support[x], support[y]}, "not-weakly-separated"};
  return std::nullopt;
}

Membership certify(const Arrangement& a, Test test) {
  require_grade_zero(a, "membership test");
  for (Subset L : k_subsets(Subset::range(a.n()), a.k() - 2)) {
    const FaceWeightTable table = face_weights(a, L);
    std::optional<Witness> w;
    if (test != Test::kX) w = negative_weight(table);
    if (!w && test != Test::kY) w = crossing_support(table, a.n());
    if (w) return Membership{false, std::move(w)};
  }
  return {};
}

}  // namespace

Membership is_in_X(const Arrangement& a) { return certify(a, Test::kX); }
Membership is_in_Y(const Arrangement& a) { return certify(a, Test::kY); }
Membership is_in_Z(const Arrangement& a) { return certify(a, Test::kZ); }

bool pairs_not_ws_check(const Arrangement& a, Subset L) {
  const FaceWeightTable table = face_weights(a, L);
  const GroundFrame frame(a.n(), L);
  for (const auto& [pair, w] : table.weights) {
    Rational across = 0;
    for (const auto& [other, v] : table.weights)
      if (crossing(frame, pair, other)) across += v;
    if (std::min(w, across) != 0) return false;
  }
  return true;
}

std::map<Subset, FaceReport, CanonicalLess> faces_report(const Arrangement& a) {
  const Membership m = is_in_Z(a);
  if (!m.member) throw MembershipError("arrangement is not in Z: " + m.witness->reason, *m.witness);
  std::map<Subset, FaceReport, CanonicalLess> report;
  for (Subset L : k_subsets(Subset::range(a.n()), a.k() - 2)) {
    FaceReport face{boundary_L(a, L), {}};
    const GroundFrame frame(a.n(), L);
    for (const auto& [key, c] : face.component.terms()) face.splits.push_back(dosp_from_vertex(frame, key.support));
    report.emplace(L, std::move(face));
  }
  return report;
}

bool lineality_equal(const PluckerVector& p, const PluckerVector& q) { return to_blades(p) == to_blades(q); }

PluckerVector heights_of(const Arrangement& a) {
  require_grade_zero(a, "heights_of");
  PluckerVector p(a.k(), a.n());
  for (const auto& [key, c] : a.terms()) p += c * height_vector(a.k(), a.n(), key.support);
  return p;
}

int Dihedral::apply(int n, int i) const {
  const int r = reflect ? n + 1 - i : i;
  return ((r - 1 + shift) % n + n) % n + 1;
}

Subset Dihedral::apply(int n, Subset s) const {
  Subset out;
  for (int i : s.elements()) out = out.with(apply(n, i));
  return out;
}

std::vector<Dihedral> Dihedral::all(int n) {
  std::vector<Dihedral> out;
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int shift = 0; shift < n; ++shift) out.push_back(Dihedral{shift, reflect == 1});
  return out;
}

PluckerVector act(const Dihedral& g, const PluckerVector& p) {
  PluckerVector out(p.k(), p.n());
  for (const auto& [J, c] : p.coords()) out.set(g.apply(p.n(), J), c);
  return out;
}

Arrangement act(const Dihedral& g, const Arrangement& a) { return to_blades(act(g, heights_of(a))); }

}  // namespace blades
