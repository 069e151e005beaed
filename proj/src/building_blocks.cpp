#include "blades/building_blocks.hpp"

#include <algorithm>

namespace blades {

namespace {

struct Intervals {
  std::vector<Subset> blocks;  // J_1..J_l
  std::vector<Subset> ranges;  // J_j u C_{j+1}
};

Intervals intervals_of(const GroundFrame& frame, Subset J) {
  Intervals out;
  out.blocks = cyclic_intervals(frame, J);
  const std::vector<Subset> complements = interlaced_complements(frame, J);
  const std::size_t l = out.blocks.size();
  for (std::size_t j = 0; j < l; ++j) out.ranges.push_back(out.blocks[j] | complements[(j + 1) % l]);
  return out;
}

long binomial(int n, int r) {
  long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

void require_nonfrozen(const GroundFrame& frame, Subset J) {
  frame.require_active(J, "tau source");
  if (is_frozen(frame, J)) throw DomainError("tau source " + to_string(J) + " is frozen");
}

}  // namespace

Subset TauSpec::I() const {
  Subset out;
  for (Subset b : I_blocks) out = out | b;
  return out;
}

void validate(const TauSpec& spec) {
  const GroundFrame frame(spec.n, spec.face);
  require_nonfrozen(frame, spec.J);
  if (spec.face.size() + spec.J.size() != spec.k)
    throw DomainError("tau arity mismatch: |L|+|J| must be k=" + std::to_string(spec.k));
  const Intervals iv = intervals_of(frame, spec.J);
  if (spec.I_blocks.size() != iv.blocks.size())
    throw DomainError("tau spec for " + to_string(spec.J) + " needs " + std::to_string(iv.blocks.size()) +
                      " replacement blocks, got " + std::to_string(spec.I_blocks.size()));
  for (std::size_t j = 0; j < iv.blocks.size(); ++j) {
    const Subset b = spec.I_blocks[j];
    if (b.size() != iv.blocks[j].size() || !b.is_subset_of(iv.ranges[j]) || b == iv.blocks[j])
      throw DomainError("replacement block " + to_string(b) + " is not a vertex of the factor over " +
                        to_string(iv.ranges[j]) + " other than " + to_string(iv.blocks[j]));
  }
}

std::vector<TauSpec> dj_vertices(int k, int n, Subset J, Subset face) {
  const GroundFrame frame(n, face);
  require_nonfrozen(frame, J);
  const Intervals iv = intervals_of(frame, J);
  std::vector<std::vector<Subset>> factors;
  for (std::size_t j = 0; j < iv.blocks.size(); ++j) {
    std::vector<Subset> choices;
    for (Subset s : k_subsets(iv.ranges[j], iv.blocks[j].size()))
      if (s != iv.blocks[j]) choices.push_back(s);
    factors.push_back(std::move(choices));
  }

  std::vector<TauSpec> out;
  std::vector<std::size_t> digit(factors.size(), 0);
  while (true) {
    TauSpec spec{k, n, face, J, {}};
    for (std::size_t j = 0; j < factors.size(); ++j) spec.I_blocks.push_back(factors[j][digit[j]]);
    out.push_back(std::move(spec));
    std::size_t pos = factors.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < factors[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

long tau_count(int k, int n, Subset J, Subset face) {
  const GroundFrame frame(n, face);
  require_nonfrozen(frame, J);
  if (face.size() + J.size() != k) throw DomainError("tau arity mismatch");
  const Intervals iv = intervals_of(frame, J);
  long count = 1;
  for (std::size_t j = 0; j < iv.blocks.size(); ++j)
    count *= binomial(iv.ranges[j].size(), iv.blocks[j].size()) - 1;
  return count;
}

Arrangement tau(const TauSpec& spec) {
  validate(spec);
  const GroundFrame frame(spec.n, spec.face);
  const std::vector<Subset> blocks = cyclic_intervals(frame, spec.J);
  const long l = static_cast<long>(blocks.size());
  Arrangement out(spec.k, spec.n);
  out.add(spec.face, spec.J, -(l - 2));
  for (std::size_t j = 0; j < blocks.size(); ++j) out.add(spec.face, (spec.J - blocks[j]) | spec.I_blocks[j], 1);
  return out;
}

bool TauClosureReport::closed() const {
  return std::all_of(steps.begin(), steps.end(), [](const TauClosureStep& s) { return s.zero || (s.match && s.totally_nonfrozen); });
}

TauClosureReport check_tau_closure(const TauSpec& spec) {
  const Arrangement t = tau(spec);
  TauClosureReport report;
  for (int j = 1; j <= spec.n; ++j) {
    if (spec.face.contains(j)) continue;
    TauClosureStep step;
    step.j = j;
    const Arrangement d = boundary_j(t, j);
    if (d.is_zero()) {
      step.zero = true;
      report.steps.push_back(step);
      continue;
    }
    // The source of the boundary tau is the image of the source vertex.
    const Subset face = spec.face.with(j);
    const Subset source = spec.J.without(boundary_target(spec.n, spec.J, j));
    const GroundFrame frame(spec.n, face);
    if (!is_frozen(frame, source)) {
      for (const TauSpec& candidate : dj_vertices(spec.k, spec.n, source, face)) {
        if (tau(candidate) == d) {
          step.match = candidate;
          step.totally_nonfrozen = is_totally_nonfrozen(frame, source);
          break;
        }
      }
    }
    report.steps.push_back(step);
  }
  return report;
}

}  // namespace blades
