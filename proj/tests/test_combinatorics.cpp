#include <doctest.h>

#include "blades/combinatorics.hpp"

using namespace blades;

namespace {

// Brute force: I, J are separated unless some a<b<c<d alternate between I\J and J\I.
bool ws_oracle(const GroundFrame& frame, Subset I, Subset J) {
  const std::vector<int> order = frame.cyclic_order_from(frame.active().min());
  const Subset x = I - J;
  const Subset y = J - I;
  const std::size_t m = order.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          const bool xyxy = x.contains(order[a]) && y.contains(order[b]) && x.contains(order[c]) && y.contains(order[d]);
          const bool yxyx = y.contains(order[a]) && x.contains(order[b]) && y.contains(order[c]) && x.contains(order[d]);
          if (xyxy || yxyx) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("subset basics") {
  const Subset s{4, 1, 6};
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 6);
  CHECK(s.elements() == std::vector<int>{1, 4, 6});
  CHECK(to_string(s) == "{1,4,6}");
  CHECK(Subset::range(64).size() == 64);
  CHECK(s.without(4) == Subset{1, 6});
  CHECK_THROWS_AS(Subset({0}), DomainError);
  CHECK_THROWS_AS(Subset({65}), DomainError);
}

TEST_CASE("canonical order sorts by size then lexicographically") {
  const CanonicalLess less;
  CHECK(less(Subset{5}, Subset{1, 2}));
  CHECK(less(Subset{1, 2, 6}, Subset{1, 3, 4}));
  CHECK_FALSE(less(Subset{2, 3}, Subset{2, 3}));
  const auto subsets = k_subsets(Subset::range(5), 2);
  REQUIRE(subsets.size() == 10);
  CHECK(subsets.front() == Subset{1, 2});
  CHECK(subsets[4] == Subset{2, 3});
  CHECK(subsets.back() == Subset{4, 5});
  for (std::size_t i = 1; i < subsets.size(); ++i) CHECK(less(subsets[i - 1], subsets[i]));
}

TEST_CASE("gapped frame successor") {
  const GroundFrame frame(8, {1, 5});
  CHECK(frame.succ(4) == 6);
  CHECK(frame.succ(8) == 2);
  CHECK(frame.pred(2) == 8);
  CHECK(frame.pred(6) == 4);
  CHECK(frame.cyclic_order_from(6) == std::vector<int>{6, 7, 8, 2, 3, 4});
  CHECK_THROWS_AS(GroundFrame(3, {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(GroundFrame(4, {5}), DomainError);
}

TEST_CASE("cyclic intervals") {
  CHECK(cyclic_intervals(GroundFrame(6), {2, 4, 6}) == std::vector<Subset>{{2}, {4}, {6}});
  CHECK(cyclic_intervals(GroundFrame(8), {1, 4, 5, 6}) == std::vector<Subset>{{1}, {4, 5, 6}});
  CHECK(cyclic_intervals(GroundFrame(8, {1}), {4, 5, 6}) == std::vector<Subset>{{4, 5, 6}});
  // A run wrapping past n stays one block and comes first.
  CHECK(cyclic_intervals(GroundFrame(7), {1, 4, 7}) == std::vector<Subset>{{7, 1}, {4}});
  CHECK(cyclic_intervals(GroundFrame(7, {1}), {2, 7}) == std::vector<Subset>{{2, 7}});
}

TEST_CASE("interlaced complements") {
  CHECK(interlaced_complements(GroundFrame(9), {2, 5, 7, 8}) == std::vector<Subset>{{9, 1}, {3, 4}, {6}});
  CHECK(interlaced_complements(GroundFrame(6), {2, 4, 6}) == std::vector<Subset>{{1}, {3}, {5}});
  CHECK(interlaced_complements(GroundFrame(7, {1}), {2, 4}) == std::vector<Subset>{{5, 6, 7}, {3}});
  CHECK_THROWS_AS(interlaced_complements(GroundFrame(4), {1, 2, 3, 4}), DomainError);
}

TEST_CASE("frozen and totally nonfrozen") {
  CHECK(is_frozen(GroundFrame(6), {1, 2, 3}));
  CHECK(is_frozen(GroundFrame(8, {1}), {4, 5, 6}));
  CHECK(is_frozen(GroundFrame(6), {6, 1, 2}));
  CHECK_FALSE(is_frozen(GroundFrame(6), {1, 2, 4}));
  CHECK_THROWS_AS(is_frozen(GroundFrame(8, {1}), {1, 5, 6}), DomainError);
  CHECK(is_totally_nonfrozen(GroundFrame(6), {1, 3, 5}));
  CHECK_FALSE(is_totally_nonfrozen(GroundFrame(6), {1, 2, 4}));
  CHECK(is_totally_nonfrozen(GroundFrame(12), {1, 3, 5, 7, 9}));
}

TEST_CASE("weak separation examples") {
  CHECK_FALSE(weakly_separated(GroundFrame(4), {1, 3}, {2, 4}));
  CHECK(weakly_separated(GroundFrame(6), {1, 2, 4}, {2, 5, 6}));
  CHECK_FALSE(weakly_separated(GroundFrame(6), {1, 3, 5}, {2, 4, 6}));
  CHECK_THROWS_AS(weakly_separated(GroundFrame(6), {1, 2}, {2, 4, 6}), DomainError);

  const std::vector<Subset> c{{1, 2, 4}, {2, 5, 6}, {3, 4, 6}};
  const GroundFrame f6(6);
  bool pairwise = true;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) pairwise = pairwise && ws_oracle(f6, c[a], c[b]);
  CHECK(is_ws_collection(f6, c) == pairwise);
  const std::vector<Subset> single{{1, 3, 5}};
  CHECK(is_ws_collection(f6, single));
  const std::vector<Subset> bad{{1, 3, 5}, {2, 4, 6}};
  CHECK_FALSE(is_ws_collection(f6, bad));
}

TEST_CASE("weak separation agrees with the quadruple oracle") {
  for (int n = 4; n <= 8; ++n)
    for (Subset L : {Subset{}, Subset{2}, Subset{1, n}}) {
      if (L.max() > n) continue;
      const GroundFrame frame(n, L);
      for (int k = 1; k < frame.active_size(); ++k) {
        const auto subs = k_subsets(frame.active(), k);
        for (Subset I : subs)
          for (Subset J : subs) REQUIRE(weakly_separated(frame, I, J) == ws_oracle(frame, I, J));
      }
    }
}

TEST_CASE("octahedra counts") {
  CHECK(octahedra(3, 6).size() == 30);
  const auto o24 = octahedra(2, 4);
  REQUIRE(o24.size() == 1);
  CHECK(o24[0] == Octahedron{{}, {1, 2, 3, 4}});
  CHECK(octahedra(4, 8).size() == 420);
  CHECK_THROWS_AS(octahedra(1, 4), DomainError);
}

TEST_CASE("subset index") {
  const SubsetIndex idx(7, 3);
  CHECK(idx.size() == 35);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.at(i)) == i);
}
