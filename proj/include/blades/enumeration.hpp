#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blades/blade_complex.hpp"
#include "blades/tropical.hpp"

namespace blades {

/// Visits every hypersimplicial DOSP of type Delta_{k,n}, the trivial one
/// included. With `anchored`, only those with 1 in the first block.
void for_each_dosp(int k, int n, bool anchored, const std::function<void(const DecoratedOsp&)>& visit);
std::vector<DecoratedOsp> enumerate_dosps(int k, int n, bool anchored);

/// Permutations of {1..m} with exactly d descents.
long eulerian(int m, int d);

/// Nontrivial DOSPs (at least two blocks) modulo cyclic block rotation, each
/// in rotation-normalized form.
std::vector<DecoratedOsp> enumerate_multisplits(int k, int n);

/// x in Z_{k,n} spans a ray: the face weights vanishing on x cut out a line.
bool is_ray(const Arrangement& a);

/// Positive rescaling to a primitive integer vector.
Arrangement primitive(const Arrangement& a);

struct RayEntry {
  Arrangement ray;          // orbit representative, primitive
  int orbit_size = 0;       // under the dihedral group
  int negative_terms = 0;
  std::string tag;          // "blade", or "negatives=m"
};

struct RayCatalog {
  int n = 0;
  std::vector<RayEntry> entries;

  long total_rays() const;
};

/// Coarsest elements of Z_{3,n} for 6 <= n <= 9, up to dihedral relabeling.
///
/// Candidates are blades, every tau generator, and repeated fusions
/// x + tau - (shared positive blades) of multi-tripod rays with tau's. Each is
/// kept only if it passes the exact ray test.
RayCatalog catalog_rays(int n);

/// All rays in the dihedral orbits of the catalog entries.
std::vector<Arrangement> expand_orbits(const RayCatalog& catalog);

/// No entry is a positive multiple of y + z for non-proportional catalog
/// rays y, z.
bool passes_decomposition_filter(const RayCatalog& catalog);

/// For k = 3: every d_j(a) is a nonnegative combination of pairwise weakly
/// separated face blades, and tau-shaped entries satisfy check_tau_closure.
bool entry_boundaries_closed(const Arrangement& a);

}  // namespace blades
