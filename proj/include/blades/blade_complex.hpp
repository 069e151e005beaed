#pragma once

#include <map>
#include <vector>

#include "blades/combinatorics.hpp"
#include "blades/rational.hpp"

namespace blades {

/// The symbol beta^{(L)}_J: a blade at e_J restricted to the face x_L = 1.
struct BladeKey {
  Subset face;     // L
  Subset support;  // J, disjoint from L
  friend bool operator==(const BladeKey&, const BladeKey&) = default;
};

/// Orders keys by (|L|, L, J) with subsets compared canonically.
struct BladeKeyLess {
  bool operator()(const BladeKey& a, const BladeKey& b) const {
    const CanonicalLess less;
    if (a.face != b.face) return less(a.face, b.face);
    return less(a.support, b.support);
  }
};

/// A sparse exact-rational combination of blade symbols in B^*_{k,n}.
///
/// Symbols whose support is frozen in the frame (n, L) are zero and never
/// stored, nor are zero coefficients. Consequently every stored key has
/// |L| <= k-2.
class Arrangement {
 public:
  using Terms = std::map<BladeKey, Rational, BladeKeyLess>;

  Arrangement(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * beta^{(L)}_J. Frozen symbols vanish; mismatched arities throw.
  void add(Subset face, Subset support, const Rational& c);
  void add(const BladeKey& key, const Rational& c) { add(key.face, key.support, c); }

  Rational coefficient(Subset face, Subset support) const;
  /// True when every term has an empty face label.
  bool is_grade_zero() const;
  /// Terms with face label exactly L.
  Arrangement component(Subset face) const;

  Arrangement& operator+=(const Arrangement& other);
  Arrangement& operator-=(const Arrangement& other);
  Arrangement& operator*=(const Rational& c);
  friend Arrangement operator+(Arrangement a, const Arrangement& b) { return a += b; }
  friend Arrangement operator-(Arrangement a, const Arrangement& b) { return a -= b; }
  friend Arrangement operator*(const Rational& c, Arrangement a) { return a *= c; }
  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Arrangement& other) const;

  int k_;
  int n_;
  Terms terms_;
};

/// beta^{(L)}_J with coefficient 1, or zero when J is frozen in (n, L).
Arrangement blade(int k, int n, Subset L, Subset J);

/// The element removed from J by d_j when j is not in L: j itself if j is in
/// J, otherwise the first element of J met walking forward from j.
int boundary_target(int n, Subset J, int j);

Arrangement boundary_j(const Arrangement& a, int j);
/// d = d_1 + ... + d_n
Arrangement boundary(const Arrangement& a);
/// d_L = d_{l_1} ... d_{l_d}; the factors commute on every input.
Arrangement boundary_L(const Arrangement& a, Subset L);

/// The cube element L^{(L)}_J: signed sum of blades over decrements of the
/// initial points of J's cyclic intervals in the frame (n, L).
Arrangement l_element(int k, int n, Subset L, Subset J);

/// Supports of the grade-L terms of d_L(a), for |L| = k-2.
std::vector<Subset> support_on_face(const Arrangement& a, Subset L);

/// ((S_1)_{s_1}, ..., (S_l)_{s_l}) of hypersimplicial type.
struct DecoratedOsp {
  std::vector<Subset> blocks;
  std::vector<int> weights;

  int block_count() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const DecoratedOsp&, const DecoratedOsp&) = default;
};

/// Throws DomainError unless the blocks partition the frame's active set,
/// weights sum to k and 1 <= s_j <= |S_j| - 1.
void validate(const DecoratedOsp& d, const GroundFrame& frame, int k);

/// Cyclic rotation putting the block that holds the frame's least active
/// element first; blades are only defined up to such rotations.
DecoratedOsp normalized(const DecoratedOsp& d, const GroundFrame& frame);
bool same_blade(const DecoratedOsp& a, const DecoratedOsp& b, const GroundFrame& frame);

/// All l cyclic block rotations, starting from d itself.
std::vector<DecoratedOsp> rotations(const DecoratedOsp& d);

/// The multi-split blade induced by the blade translated to e_J.
DecoratedOsp dosp_from_vertex(const GroundFrame& frame, Subset J);

struct PlateInequality {
  Subset subset;  // x_subset >= rhs
  int rhs;
  friend bool operator==(const PlateInequality&, const PlateInequality&) = default;
};

/// x_{S_1} >= s_1, x_{S_1 u S_2} >= s_1 + s_2, ... through the (l-1)-th union.
std::vector<PlateInequality> plate_system(const DecoratedOsp& d);

}  // namespace blades
