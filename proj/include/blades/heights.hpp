#pragma once

#include <map>
#include <span>
#include <vector>

#include "blades/combinatorics.hpp"
#include "blades/rational.hpp"

namespace blades {

/// A vector in R^{C(n,k)} indexed by k-subsets; absent keys are zero.
class VertexVector {
 public:
  using Coords = std::map<Subset, Rational, CanonicalLess>;

  VertexVector(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const Coords& coords() const { return coords_; }

  Rational operator[](Subset J) const;
  void set(Subset J, const Rational& value);
  void add(Subset J, const Rational& value);

  VertexVector& operator+=(const VertexVector& other);
  VertexVector& operator-=(const VertexVector& other);
  VertexVector& operator*=(const Rational& c);
  friend VertexVector operator+(VertexVector a, const VertexVector& b) { return a += b; }
  friend VertexVector operator-(VertexVector a, const VertexVector& b) { return a -= b; }
  friend VertexVector operator*(const Rational& c, VertexVector a) { return a *= c; }
  friend bool operator==(const VertexVector& a, const VertexVector& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.coords_ == b.coords_;
  }

  /// The basis vector e^J.
  static VertexVector unit(int k, int n, Subset J);

 private:
  void check_key(Subset J) const;
  void require_compatible(const VertexVector& other) const;

  int k_;
  int n_;
  Coords coords_;
};

/// h(x) = min_j L_j(x) on integer points of the hyperplane sum(x) = 0,
/// evaluated through the expansion x = sum t_j (e_j - e_{j+1}), min t = 0.
long hmin(std::span<const long> x);

/// rho_J(e_I) = h(e_I - e_J) <= 0; minus the number of root steps from e_J to e_I.
long rho(int k, int n, Subset J, Subset I);

/// h_J = sum_I rho_J(e_I) e^I.
VertexVector height_vector(int k, int n, Subset J);

/// L(e^J) = sum over the cube C_J of (-1)^{1+|M|} e^{J_M}.
VertexVector cube_L(int k, int n, Subset J);
VertexVector cube_L(const VertexVector& v);

/// R(e^J) = -(1/n) h_J, extended linearly. Inverse of cube_L.
VertexVector cube_R(const VertexVector& v);

/// The n point constraints sum_{J contains a} s_J = 0.
bool is_kinematic(const VertexVector& v);

/// A vertex vector known to lie in the kinematic space K_{k,n}.
class KinematicVector {
 public:
  /// Throws DomainError when v violates a point constraint.
  explicit KinematicVector(VertexVector v);
  const VertexVector& vector() const { return v_; }

 private:
  VertexVector v_;
};

/// eta_J(s) = -(1/n) sum_I s_I rho_J(e_I). Identically zero for frozen J.
Rational eta(const KinematicVector& s, Subset J);

/// A basis of K_{k,n} (dimension C(n,k) - n).
std::vector<VertexVector> kinematic_basis(int k, int n);

/// Expands the linear functional s -> sum_I a_I s_I, restricted to K_{k,n},
/// in the planar basis {eta_J : J nonfrozen}.
std::map<Subset, Rational, CanonicalLess> express_in_planar(const VertexVector& functional);

/// sum_{J contains a} e^J for a = 1..n.
std::vector<VertexVector> lineality_basis(int k, int n);

}  // namespace blades
