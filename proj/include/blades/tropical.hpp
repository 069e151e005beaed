#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blades/blade_complex.hpp"
#include "blades/heights.hpp"

namespace blades {

/// Heights t_J on the vertices of Delta_{k,n}; compared modulo lineality.
using PluckerVector = VertexVector;

struct PluckerCheck {
  bool holds = true;
  /// First octahedron (L, {a<b<c<d}) where
  /// p_{Lac} + p_{Lbd} != max(p_{Lab} + p_{Lcd}, p_{Lad} + p_{Lbc}).
  std::optional<Octahedron> witness;
};

/// The three-term positive tropical Plucker relations on every octahedron.
PluckerCheck is_pos_plucker(const PluckerVector& p);

/// The blade arrangement -(1/n) sum_J p_J L_J in grade 0.
///
/// The -(1/n) normalization makes to_blades(h_J) = beta_J, so heights that
/// satisfy the max-convention relations land in Z_{k,n}. Its kernel is the
/// lineality space.
Arrangement to_blades(const PluckerVector& p);

/// Induced weights omega^{(L)}_{ij} on a second hypersimplicial face.
struct FaceWeightTable {
  Subset face;
  /// Every nonfrozen pair of the face's gapped order, zero weights included.
  std::map<Subset, Rational, CanonicalLess> weights;

  friend bool operator==(const FaceWeightTable&, const FaceWeightTable&) = default;
};

/// Nonfrozen 2-subsets of the frame (n, L).
std::vector<Subset> nonfrozen_pairs(int n, Subset L);

/// Coefficients of beta^{(L)}_{ij} in d_L(a), for grade-0 a and |L| = k-2.
FaceWeightTable face_weights(const Arrangement& a, Subset L);

/// omega^{(L)}_{ij} = (1/n)(p_{Lij} - p_{L,i,j+} - p_{L,i+,j} + p_{L,i+,j+}) with
/// + the gapped successor on [n] \ L. Equals face_weights(to_blades(p), L).
FaceWeightTable face_weights_from_plucker(const PluckerVector& p, Subset L);

struct Witness {
  Subset face;
  std::vector<Subset> pairs;
  std::string reason;  // "negative-weight" or "not-weakly-separated"
};

struct Membership {
  bool member = true;
  std::optional<Witness> witness;
};

/// Weakly separated face supports.
Membership is_in_X(const Arrangement& a);
/// Nonnegative face weights.
Membership is_in_Y(const Arrangement& a);
Membership is_in_Z(const Arrangement& a);

/// min{omega_ij, sum of omega_ab over pairs {a,b} crossing {i,j}} = 0 for all
/// nonfrozen pairs on the face L.
bool pairs_not_ws_check(const Arrangement& a, Subset L);

struct FaceReport {
  Arrangement component;             // d_L(a)
  std::vector<DecoratedOsp> splits;  // one 2-split per supported pair
};

/// Raised by faces_report when the arrangement is not in Z_{k,n}.
class MembershipError : public DomainError {
 public:
  MembershipError(const std::string& what, Witness witness) : DomainError(what), witness_(std::move(witness)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Tree-arrangement datum on every second hypersimplicial face.
std::map<Subset, FaceReport, CanonicalLess> faces_report(const Arrangement& a);

/// Equality of blade images, i.e. equality modulo lineality.
bool lineality_equal(const PluckerVector& p, const PluckerVector& q);

/// A preimage of a grade-0 arrangement: sum_J c_J h_J.
PluckerVector heights_of(const Arrangement& a);

/// An element of the dihedral group acting on [n]: i -> i + shift, preceded
/// by i -> n + 1 - i when reflect is set.
struct Dihedral {
  int shift = 0;
  bool reflect = false;

  int apply(int n, int i) const;
  Subset apply(int n, Subset s) const;
  static std::vector<Dihedral> all(int n);
};

/// (g.p)_{g(J)} = p_J
PluckerVector act(const Dihedral& g, const PluckerVector& p);

/// Dihedral action on grade-0 arrangements, transported through heights:
/// g*a = to_blades(g . heights_of(a)). Rotations act by relabeling supports;
/// reflections do not, because they reverse the orientation of every blade.
Arrangement act(const Dihedral& g, const Arrangement& a);

}  // namespace blades
