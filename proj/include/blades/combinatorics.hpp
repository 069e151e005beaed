#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace blades {

/// Raised when an argument violates an operation's domain (arity mismatch,
/// element outside the active set, out-of-range k, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxGroundSize = 64;

/// A subset of {1,...,64} stored as a bitmask; bit (i-1) marks element i.
class Subset {
 public:
  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);
  explicit Subset(std::span<const int> elements);

  static constexpr Subset from_bits(std::uint64_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }
  /// {1,...,n}
  static Subset range(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxGroundSize && ((bits_ >> (i - 1)) & 1U) != 0;
  }
  /// Smallest element; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : kMaxGroundSize - std::countl_zero(bits_); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Subset other) const { return (bits_ & other.bits_) == 0; }

  Subset with(int i) const;
  Subset without(int i) const;

  /// Ascending element list.
  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on the ascending element
/// lists. This is the ordering used for every serialized collection.
struct CanonicalLess {
  bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

struct SubsetHash {
  std::size_t operator()(Subset s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// "{1,3,5}"
std::string to_string(Subset s);

/// The ambient pair (n, L): the gapped cyclic order on {1,...,n} minus L.
class GroundFrame {
 public:
  GroundFrame(int n, Subset removed = {});

  int n() const { return n_; }
  Subset removed() const { return removed_; }
  Subset active() const { return active_; }
  int active_size() const { return active_.size(); }

  /// Next active element after i (i need not be active), wrapping around.
  int succ(int i) const;
  /// Previous active element before i, wrapping around.
  int pred(int i) const;

  bool contains(Subset s) const { return s.is_subset_of(active_); }
  /// Throws DomainError unless s lies in the active set.
  void require_active(Subset s, const char* what) const;

  /// Active elements in cyclic order starting at `start` (which must be active).
  std::vector<int> cyclic_order_from(int start) const;

  friend bool operator==(const GroundFrame&, const GroundFrame&) = default;

 private:
  int n_;
  Subset removed_;
  Subset active_;
};

/// Maximal successor runs of J. The run containing min(J) comes first and the
/// rest follow in cyclic order.
std::vector<Subset> cyclic_intervals(const GroundFrame& frame, Subset J);

/// First element of a cyclic interval block (the element whose frame
/// predecessor is outside the block).
int initial_point(const GroundFrame& frame, Subset block);

/// Complements C_1..C_l with (C_1,J_1,...,C_l,J_l) traversing the frame once.
std::vector<Subset> interlaced_complements(const GroundFrame& frame, Subset J);

bool is_frozen(const GroundFrame& frame, Subset J);
bool is_totally_nonfrozen(const GroundFrame& frame, Subset J);

bool weakly_separated(const GroundFrame& frame, Subset I, Subset J);
bool is_ws_collection(const GroundFrame& frame, std::span<const Subset> collection);

/// The octahedral face of Delta_{k,n} with vertices e_L + e_{xy}, {x,y} in Q.
struct Octahedron {
  Subset L;
  Subset Q;
  friend bool operator==(const Octahedron&, const Octahedron&) = default;
};

void for_each_octahedron(int k, int n, const std::function<void(const Octahedron&)>& visit);
std::vector<Octahedron> octahedra(int k, int n);

/// All k-element subsets of `ground`, in canonical order.
std::vector<Subset> k_subsets(Subset ground, int k);

/// Dense numbering of the k-subsets of [n] in canonical order.
class SubsetIndex {
 public:
  SubsetIndex(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<Subset>& subsets() const { return subsets_; }
  Subset at(std::size_t i) const { return subsets_[i]; }
  std::size_t index_of(Subset s) const;

 private:
  int n_;
  int k_;
  std::vector<Subset> subsets_;
  std::unordered_map<Subset, std::size_t, SubsetHash> index_;
};

}  // namespace blades
