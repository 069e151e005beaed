#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "blades/blade_complex.hpp"
#include "blades/heights.hpp"

namespace blades::testing {

struct Term {
  Subset L;
  Subset J;
  long c;
};

inline Arrangement arrangement(int k, int n, std::initializer_list<Term> terms) {
  Arrangement a(k, n);
  for (const Term& t : terms) a.add(t.L, t.J, Rational(t.c));
  return a;
}

/// Random grade-0 arrangement with small integer coefficients on nonfrozen supports.
inline Arrangement random_arrangement(int k, int n, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  Arrangement a(k, n);
  const GroundFrame frame(n);
  for (Subset J : k_subsets(Subset::range(n), k))
    if (!is_frozen(frame, J)) a.add({}, J, Rational(coeff(rng)));
  return a;
}

inline VertexVector random_vector(int k, int n, std::mt19937& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  VertexVector v(k, n);
  for (Subset J : k_subsets(Subset::range(n), k)) v.set(J, Rational(coeff(rng)));
  return v;
}

inline std::vector<Subset> nonfrozen(int k, int n, Subset L = {}) {
  const GroundFrame frame(n, L);
  std::vector<Subset> out;
  for (Subset J : k_subsets(frame.active(), k))
    if (!is_frozen(frame, J)) out.push_back(J);
  return out;
}

}  // namespace blades::testing
