#pragma once

#include <optional>
#include <vector>

#include "blades/blade_complex.hpp"

namespace blades {

/// The vertex e_I of the product of the simplices Delta_{|J_j|, J_j u C_{j+1}}
/// used to build tau_{e_J,e_I}, over the frame (n, face).
struct TauSpec {
  int k = 0;
  int n = 0;
  Subset face;
  Subset J;
  std::vector<Subset> I_blocks;  // I_j replacing J_j, one per cyclic interval

  Subset I() const;
  friend bool operator==(const TauSpec&, const TauSpec&) = default;
};

/// Throws DomainError unless |I_j| = |J_j|, I_j is inside J_j u C_{j+1} and
/// I_j != J_j for every interval.
void validate(const TauSpec& spec);

/// Every I in the product over j of (|J_j|-subsets of J_j u C_{j+1}) \ {J_j}.
/// J must be nonfrozen in the frame (n, face).
std::vector<TauSpec> dj_vertices(int k, int n, Subset J, Subset face = {});

/// prod_j (C(|J_j| + |C_{j+1}|, |J_j|) - 1)
long tau_count(int k, int n, Subset J, Subset face = {});

/// -(l-2) beta_J + sum_j beta_{J_1 u ... u I_j u ... u J_l}
Arrangement tau(const TauSpec& spec);

struct TauClosureStep {
  int j = 0;
  bool zero = false;              // d_j(tau) vanishes
  std::optional<TauSpec> match;   // tau on the face {j} u L equal to d_j(tau)
  bool totally_nonfrozen = false; // the match's J is totally nonfrozen
};

struct TauClosureReport {
  std::vector<TauClosureStep> steps;  // j = 1..n, skipping j in the face
  bool closed() const;
};

/// Matches every d_j(tau(spec)) against the tau generators of the face.
TauClosureReport check_tau_closure(const TauSpec& spec);

}  // namespace blades
