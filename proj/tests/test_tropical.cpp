#include <doctest.h>

#include "blades/building_blocks.hpp"
#include "blades/tropical.hpp"
#include "support.hpp"

using namespace blades;
using blades::testing::arrangement;
using blades::testing::nonfrozen;
using blades::testing::random_arrangement;
using blades::testing::random_vector;

namespace {

Arrangement bipyramid() {
  return arrangement(3, 6, {{{}, {2, 4, 6}, -1}, {{}, {1, 2, 4}, 1}, {{}, {3, 4, 6}, 1}, {{}, {2, 5, 6}, 1}});
}

Arrangement w37() {
  return arrangement(3, 7, {{{}, {2, 4, 7}, -1}, {{}, {1, 2, 4}, 1}, {{}, {2, 5, 7}, 1}, {{}, {3, 4, 7}, 1}});
}

}  // namespace

TEST_CASE("positive tropical Plucker relations") {
  for (Subset J : k_subsets(Subset::range(6), 3)) CHECK(is_pos_plucker(height_vector(3, 6, J)).holds);
  VertexVector p(2, 4);
  p.set({1, 3}, 1);
  p.set({2, 4}, 1);
  const PluckerCheck c = is_pos_plucker(p);
  CHECK_FALSE(c.holds);
  REQUIRE(c.witness);
  CHECK(*c.witness == Octahedron{{}, {1, 2, 3, 4}});
  CHECK(is_pos_plucker(VertexVector(3, 6)).holds);
}

TEST_CASE("heights map to blades") {
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}, {3, 7}}) {
    const GroundFrame frame(n);
    for (Subset J : k_subsets(Subset::range(n), k)) CHECK(to_blades(height_vector(k, n, J)) == blade(k, n, {}, J));
    for (const VertexVector& l : lineality_basis(k, n)) CHECK(to_blades(l).is_zero());
  }
  Arrangement expected = l_element(3, 6, {}, {2, 4, 6});
  expected *= Rational(-1, 6);
  CHECK(to_blades(VertexVector::unit(3, 6, {2, 4, 6})) == expected);
}

TEST_CASE("face weight table on the last face") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Arrangement a = random_arrangement(3, 6, rng);
    const auto c = [&](Subset J) { return a.coefficient({}, J); };
    const FaceWeightTable t = face_weights(a, {6});
    CHECK(t.face == Subset{6});
    REQUIRE(t.weights.size() == 5);
    CHECK(t.weights.at({1, 3}) == c({1, 3, 6}));
    CHECK(t.weights.at({1, 4}) == c({1, 4, 6}));
    CHECK(t.weights.at({2, 4}) == c({1, 2, 4}) + c({2, 4, 6}));
    CHECK(t.weights.at({2, 5}) == c({1, 2, 5}) + c({2, 5, 6}));
    CHECK(t.weights.at({3, 5}) == c({1, 3, 5}) + c({2, 3, 5}) + c({3, 5, 6}));
  }
  const Arrangement a = blade(3, 6, {}, {1, 2, 4}) + blade(3, 6, {}, {2, 4, 6});
  CHECK(face_weights(a, {6}).weights.at({2, 4}) == 2);
  const FaceWeightTable zero = face_weights(Arrangement(3, 6), {6});
  for (const auto& [pair, w] : zero.weights) CHECK(w == 0);
  CHECK(nonfrozen_pairs(6, {6}) == std::vector<Subset>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

TEST_CASE("face weights from Plucker coordinates agree with the blade map") {
  std::mt19937 rng(23);
  for (auto [k, n] : {std::pair{3, 6}, {3, 7}, {4, 8}, {2, 6}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const VertexVector p = random_vector(k, n, rng);
      const Arrangement a = to_blades(p);
      for (Subset L : k_subsets(Subset::range(n), k - 2)) REQUIRE(face_weights_from_plucker(p, L) == face_weights(a, L));
    }
  }
  const FaceWeightTable h = face_weights_from_plucker(height_vector(3, 6, {2, 4, 6}), {6});
  for (const auto& [pair, w] : h.weights) CHECK((pair == Subset{2, 4} ? w == 1 : w == 0));
  const FaceWeightTable flat = face_weights_from_plucker(lineality_basis(3, 6)[2], {6});
  for (const auto& [pair, w] : flat.weights) CHECK(w == 0);
}

TEST_CASE("membership in X, Y and Z") {
  CHECK(is_in_Z(bipyramid()).member);
  CHECK(is_in_Z(w37()).member);
  const Arrangement yx = blade(3, 6, {}, {1, 3, 5}) + blade(3, 6, {}, {2, 4, 6});
  CHECK(is_in_Y(yx).member);
  const Membership x = is_in_X(yx);
  CHECK_FALSE(x.member);
  REQUIRE(x.witness);
  CHECK(x.witness->reason == "not-weakly-separated");
  CHECK(x.witness->pairs.size() == 2);

  const Membership neg = is_in_Z(Rational(-1) * blade(3, 6, {}, {2, 4, 6}));
  CHECK_FALSE(neg.member);
  REQUIRE(neg.witness);
  CHECK(neg.witness->reason == "negative-weight");
  CHECK_FALSE(is_in_Y(Rational(-1) * blade(3, 6, {}, {2, 4, 6})).member);
  CHECK(is_in_Z(Arrangement(3, 6)).member);
}

TEST_CASE("pairs-not-separated criterion") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Arrangement a = random_arrangement(3, 6, rng, 0, 2);
    bool all_faces = true;
    for (int f = 1; f <= 6; ++f) all_faces = all_faces && pairs_not_ws_check(a, {f});
    if (is_in_Y(a).member) CHECK(all_faces == is_in_Z(a).member);
  }
  CHECK(pairs_not_ws_check(bipyramid(), {6}));
  CHECK_FALSE(pairs_not_ws_check(blade(3, 6, {}, {1, 3, 5}) + blade(3, 6, {}, {2, 4, 6}), {6}));
  CHECK(pairs_not_ws_check(Arrangement(3, 6), {6}));
}

TEST_CASE("faces report") {
  const auto report = faces_report(w37());
  CHECK(report.size() == 7);
  const FaceReport& f1 = report.at({1});
  REQUIRE(f1.splits.size() == 2);
  const GroundFrame frame(7, {1});
  const DecoratedOsp a{{{3, 4}, {5, 6, 7, 2}}, {1, 1}};
  const DecoratedOsp b{{{2, 3, 4, 5}, {6, 7}}, {1, 1}};
  CHECK(((same_blade(f1.splits[0], a, frame) && same_blade(f1.splits[1], b, frame)) ||
         (same_blade(f1.splits[0], b, frame) && same_blade(f1.splits[1], a, frame))));

  const auto single = faces_report(blade(3, 6, {}, {2, 4, 6}));
  REQUIRE(single.at({6}).splits.size() == 1);
  CHECK(single.at({6}).splits[0] == dosp_from_vertex(GroundFrame(6, {6}), {2, 4}));

  Arrangement frozen_only(3, 6);
  frozen_only.add({}, {1, 2, 3}, 4);
  for (const auto& [L, r] : faces_report(frozen_only)) CHECK(r.splits.empty());
  CHECK_THROWS_AS(faces_report(Rational(-1) * blade(3, 6, {}, {2, 4, 6})), MembershipError);
}

TEST_CASE("lineality equality") {
  const VertexVector p = height_vector(3, 6, {1, 3, 5});
  CHECK(lineality_equal(p, p + lineality_basis(3, 6)[2]));
  CHECK_FALSE(lineality_equal(p, height_vector(3, 6, {2, 4, 6})));
  CHECK_FALSE(lineality_equal(p, Rational(2) * p));
}

TEST_CASE("Plucker relations match Z membership on random and structured samples") {
  std::mt19937 rng(31);
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    const auto all = k_subsets(Subset::range(n), k);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      VertexVector p = trial % 2 == 0 ? random_vector(k, n, rng, -2, 2) : height_vector(k, n, all[pick(rng)]);
      if (trial % 3 == 0) p += height_vector(k, n, all[pick(rng)]);
      REQUIRE(is_pos_plucker(p).holds == is_in_Z(to_blades(p)).member);
    }
  }
}

TEST_CASE("heights of an arrangement") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const Arrangement a = random_arrangement(3, 7, rng);
    CHECK(to_blades(heights_of(a)) == a);
  }
}

TEST_CASE("dihedral action") {
  CHECK(Dihedral::all(6).size() == 12);
  const Dihedral r{1, false};
  CHECK(r.apply(6, 6) == 1);
  CHECK(r.apply(6, Subset{1, 3, 5}) == Subset{2, 4, 6});
  const Dihedral s{0, true};
  CHECK(s.apply(6, 1) == 6);

  // Rotations relabel supports.
  const Arrangement b = bipyramid();
  Arrangement relabeled(3, 6);
  for (const auto& [key, c] : b.terms()) relabeled.add({}, r.apply(6, key.support), c);
  CHECK(act(r, b) == relabeled);

  for (const Dihedral& g : Dihedral::all(7)) CHECK(is_in_Z(act(g, w37())).member);
  const Arrangement image = act(s, b);
  CHECK(is_in_Z(image).member);
  CHECK(image.terms().size() == 1);

  const VertexVector p = height_vector(3, 6, {1, 2, 4});
  CHECK(act(r, p) == height_vector(3, 6, {2, 3, 5}));
}
