#include "blades/combinatorics.hpp"

#include <algorithm>

namespace blades {

namespace {

void check_element(int i) {
  if (i < 1 || i > kMaxGroundSize)
    throw DomainError("element " + std::to_string(i) + " outside 1.." + std::to_string(kMaxGroundSize));
}

// Bits strictly above element i (elements i+1, i+2, ...).
constexpr std::uint64_t bits_above(int i) { return i >= kMaxGroundSize ? 0 : ~std::uint64_t{0} << i; }
// Bits strictly below element i (elements 1..i-1).
constexpr std::uint64_t bits_below(int i) { return i <= 1 ? 0 : (std::uint64_t{1} << (i - 1)) - 1; }

}  // namespace

Subset::Subset(std::initializer_list<int> elements) : Subset(std::span<const int>(elements.begin(), elements.size())) {}

Subset::Subset(std::span<const int> elements) {
  for (int i : elements) {
    check_element(i);
    bits_ |= std::uint64_t{1} << (i - 1);
  }
}

Subset Subset::range(int n) {
  if (n < 0 || n > kMaxGroundSize) throw DomainError("ground size " + std::to_string(n) + " unsupported");
  return from_bits(n == kMaxGroundSize ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

Subset Subset::with(int i) const {
  check_element(i);
  return from_bits(bits_ | (std::uint64_t{1} << (i - 1)));
}

Subset Subset::without(int i) const {
  check_element(i);
  return from_bits(bits_ & ~(std::uint64_t{1} << (i - 1)));
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

GroundFrame::GroundFrame(int n, Subset removed) : n_(n), removed_(removed) {
  if (n < 1 || n > kMaxGroundSize)
    throw DomainError("ground size n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxGroundSize));
  if (!removed.is_subset_of(Subset::range(n)))
    throw DomainError("removed set " + to_string(removed) + " not inside [" + std::to_string(n) + "]");
  active_ = Subset::range(n) - removed;
  if (active_.empty()) throw DomainError("frame has no active elements");
}

int GroundFrame::succ(int i) const {
  const std::uint64_t above = active_.bits() & bits_above(i);
  return above != 0 ? std::countr_zero(above) + 1 : active_.min();
}

int GroundFrame::pred(int i) const {
  const std::uint64_t below = active_.bits() & bits_below(i);
  return below != 0 ? Subset::from_bits(below).max() : active_.max();
}

void GroundFrame::require_active(Subset s, const char* what) const {
  if (!contains(s))
    throw DomainError(std::string(what) + " " + to_string(s) + " is not inside the active set " + to_string(active_));
}

std::vector<int> GroundFrame::cyclic_order_from(int start) const {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(active_size()));
  int i = start;
  do {
    order.push_back(i);
    i = succ(i);
  } while (i != start);
  return order;
}

int initial_point(const GroundFrame& frame, Subset block) {
  if (block.empty()) throw DomainError("empty block has no initial point");
  if (block == frame.active()) return frame.active().min();
  int i = block.min();
  while (block.contains(frame.pred(i))) i = frame.pred(i);
  return i;
}

std::vector<Subset> cyclic_intervals(const GroundFrame& frame, Subset J) {
  if (J.empty()) throw DomainError("cyclic_intervals of the empty set");
  frame.require_active(J, "subset");
  if (J == frame.active()) return {J};

  std::vector<Subset> blocks;
  Subset current;
  for (int i : frame.cyclic_order_from(initial_point(frame, J))) {
    if (J.contains(i)) {
      current = current.with(i);
    } else if (!current.empty()) {
      blocks.push_back(current);
      current = Subset{};
    }
  }
  if (!current.empty()) blocks.push_back(current);
  return blocks;
}

std::vector<Subset> interlaced_complements(const GroundFrame& frame, Subset J) {
  if (J.empty()) throw DomainError("interlaced_complements of the empty set");
  frame.require_active(J, "subset");
  if (J == frame.active()) throw DomainError("subset " + to_string(J) + " is the whole active set; no complement");

  // Walking from the start of J_1 visits J_1, C_2, J_2, ..., J_l, C_1.
  std::vector<Subset> trailing;
  Subset current;
  for (int i : frame.cyclic_order_from(initial_point(frame, J))) {
    if (!J.contains(i)) {
      current = current.with(i);
    } else if (!current.empty()) {
      trailing.push_back(current);
      current = Subset{};
    }
  }
  trailing.push_back(current);
  std::rotate(trailing.rbegin(), trailing.rbegin() + 1, trailing.rend());
  return trailing;
}

bool is_frozen(const GroundFrame& frame, Subset J) {
  frame.require_active(J, "subset");
  if (J.size() <= 1 || J == frame.active()) return true;
  return cyclic_intervals(frame, J).size() == 1;
}

bool is_totally_nonfrozen(const GroundFrame& frame, Subset J) {
  frame.require_active(J, "subset");
  if (J.empty()) return false;
  return cyclic_intervals(frame, J).size() == static_cast<std::size_t>(J.size());
}

bool weakly_separated(const GroundFrame& frame, Subset I, Subset J) {
  if (I.size() != J.size())
    throw DomainError("weak separation needs equal arities, got " + to_string(I) + " and " + to_string(J));
  frame.require_active(I, "subset");
  frame.require_active(J, "subset");
  const Subset only_i = I - J;
  const Subset only_j = J - I;
  // Separated iff the cyclic word of I\J / J\I labels has at most two runs.
  int changes = 0;
  bool have_prev = false;
  bool prev = false;
  bool first = false;
  for (int x : (only_i | only_j).elements()) {
    const bool label = only_i.contains(x);
    if (!have_prev) {
      first = label;
      have_prev = true;
    } else if (label != prev) {
      ++changes;
    }
    prev = label;
  }
  if (have_prev && prev != first) ++changes;
  return changes <= 2;
}

bool is_ws_collection(const GroundFrame& frame, std::span<const Subset> collection) {
  for (std::size_t a = 0; a < collection.size(); ++a)
    for (std::size_t b = a + 1; b < collection.size(); ++b)
      if (!weakly_separated(frame, collection[a], collection[b])) return false;
  if (collection.size() == 1) frame.require_active(collection[0], "subset");
  return true;
}

std::vector<Subset> k_subsets(Subset ground, int k) {
  const std::vector<int> elems = ground.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<Subset> out;
  if (k < 0 || k > m) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  // Lexicographic combinations of positions give canonical order directly.
  while (true) {
    std::uint64_t bits = 0;
    for (int p : pick) bits |= std::uint64_t{1} << (elems[static_cast<std::size_t>(p)] - 1);
    out.push_back(Subset::from_bits(bits));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

void for_each_octahedron(int k, int n, const std::function<void(const Octahedron&)>& visit) {
  if (k < 2 || k > n - 2)
    throw DomainError("octahedra need 2 <= k <= n-2, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  const Subset ground = Subset::range(n);
  for (Subset L : k_subsets(ground, k - 2))
    for (Subset Q : k_subsets(ground - L, 4)) visit(Octahedron{L, Q});
}

std::vector<Octahedron> octahedra(int k, int n) {
  std::vector<Octahedron> out;
  for_each_octahedron(k, n, [&](const Octahedron& o) { out.push_back(o); });
  return out;
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k), subsets_(k_subsets(Subset::range(n), k)) {
  index_.reserve(subsets_.size());
  for (std::size_t i = 0; i < subsets_.size(); ++i) index_.emplace(subsets_[i], i);
}

std::size_t SubsetIndex::index_of(Subset s) const {
  const auto it = index_.find(s);
  if (it == index_.end())
    throw DomainError(to_string(s) + " is not a " + std::to_string(k_) + "-subset of [" + std::to_string(n_) + "]");
  return it->second;
}

}  // namespace blades
