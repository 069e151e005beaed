#include "blades/blade_complex.hpp"

#include <algorithm>
#include <numeric>

namespace blades {

Arrangement::Arrangement(int k, int n) : k_(k), n_(n) {
  if (n < 2 || n > kMaxGroundSize) throw DomainError("unsupported ground size n=" + std::to_string(n));
  if (k < 1 || k > n - 1)
    throw DomainError("need 1 <= k <= n-1, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

void Arrangement::add(Subset face, Subset support, const Rational& c) {
  const Subset ground = Subset::range(n_);
  if (!face.is_subset_of(ground) || !support.is_subset_of(ground))
    throw DomainError("blade label outside [" + std::to_string(n_) + "]: L=" + to_string(face) +
                      " J=" + to_string(support));
  if (!face.disjoint(support))
    throw DomainError("blade labels overlap: L=" + to_string(face) + " J=" + to_string(support));
  if (face.size() + support.size() != k_)
    throw DomainError("blade arity mismatch: |L|+|J| must be k=" + std::to_string(k_) + ", got L=" +
                      to_string(face) + " J=" + to_string(support));
  if (c == 0) return;
  if (is_frozen(GroundFrame(n_, face), support)) return;

  const BladeKey key{face, support};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Arrangement::coefficient(Subset face, Subset support) const {
  const auto it = terms_.find(BladeKey{face, support});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Arrangement::is_grade_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.face.empty(); });
}

Arrangement Arrangement::component(Subset face) const {
  Arrangement out(k_, n_);
  for (const auto& [key, c] : terms_)
    if (key.face == face) out.terms_.emplace(key, c);
  return out;
}

void Arrangement::require_compatible(const Arrangement& other) const {
  if (k_ != other.k_ || n_ != other.n_)
    throw DomainError("arrangements over different hypersimplices: (" + std::to_string(k_) + "," +
                      std::to_string(n_) + ") vs (" + std::to_string(other.k_) + "," + std::to_string(other.n_) + ")");
}

Arrangement& Arrangement::operator+=(const Arrangement& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Arrangement& Arrangement::operator-=(const Arrangement& other) {
  require_compatible(other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Arrangement& Arrangement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

Arrangement blade(int k, int n, Subset L, Subset J) {
  Arrangement a(k, n);
  a.add(L, J, 1);
  return a;
}

int boundary_target(int n, Subset J, int j) {
  if (J.empty()) throw DomainError("boundary of a blade with empty support");
  if (J.contains(j)) return j;
  for (int step = 1; step < n; ++step) {
    const int i = (j - 1 + step) % n + 1;
    if (J.contains(i)) return i;
  }
  throw DomainError("support " + to_string(J) + " outside [" + std::to_string(n) + "]");
}

Arrangement boundary_j(const Arrangement& a, int j) {
  if (j < 1 || j > a.n())
    throw DomainError("boundary index j=" + std::to_string(j) + " outside 1.." + std::to_string(a.n()));
  Arrangement out(a.k(), a.n());
  for (const auto& [key, c] : a.terms()) {
    if (key.face.contains(j)) continue;
    const int removed = boundary_target(a.n(), key.support, j);
    out.add(key.face.with(j), key.support.without(removed), c);
  }
  return out;
}

Arrangement boundary(const Arrangement& a) {
  Arrangement out(a.k(), a.n());
  for (int j = 1; j <= a.n(); ++j) out += boundary_j(a, j);
  return out;
}

Arrangement boundary_L(const Arrangement& a, Subset L) {
  if (!L.is_subset_of(Subset::range(a.n())))
    throw DomainError("face label " + to_string(L) + " outside [" + std::to_string(a.n()) + "]");
  // d_{l_1}...d_{l_d} applies the largest index first.
  std::vector<int> order = L.elements();
  Arrangement out = a;
  for (auto it = order.rbegin(); it != order.rend(); ++it) out = boundary_j(out, *it);
  return out;
}

Arrangement l_element(int k, int n, Subset L, Subset J) {
  Arrangement out(k, n);
  const GroundFrame frame(n, L);
  frame.require_active(J, "support");
  if (J.empty() || L.size() + J.size() != k)
    throw DomainError("l_element arity mismatch: L=" + to_string(L) + " J=" + to_string(J) + " k=" + std::to_string(k));

  std::vector<int> initials;
  for (Subset block : cyclic_intervals(frame, J)) initials.push_back(initial_point(frame, block));
  const std::size_t t = initials.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    Subset corner = J;
    for (std::size_t b = 0; b < t; ++b)
      if ((mask >> b) & 1U) corner = corner.without(initials[b]).with(frame.pred(initials[b]));
    const int sign = std::popcount(mask) % 2 == 0 ? -1 : 1;
    out.add(L, corner, sign);
  }
  return out;
}

std::vector<Subset> support_on_face(const Arrangement& a, Subset L) {
  if (L.size() != a.k() - 2)
    throw DomainError("support_on_face needs |L| = k-2 = " + std::to_string(a.k() - 2) + ", got " + to_string(L));
  std::vector<Subset> out;
  const Arrangement d = boundary_L(a, L);
  for (const auto& [key, c] : d.terms())
    if (key.face == L) out.push_back(key.support);
  return out;
}

void validate(const DecoratedOsp& d, const GroundFrame& frame, int k) {
  if (d.blocks.empty() || d.blocks.size() != d.weights.size())
    throw DomainError("decorated OSP needs one weight per block");
  Subset seen;
  int total = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Subset s = d.blocks[i];
    if (s.empty() || !s.disjoint(seen)) throw DomainError("decorated OSP blocks must be nonempty and disjoint");
    seen = seen | s;
    if (d.weights[i] < 1 || d.weights[i] > s.size() - 1)
      throw DomainError("block " + to_string(s) + " has weight " + std::to_string(d.weights[i]) +
                        " outside 1.." + std::to_string(s.size() - 1));
    total += d.weights[i];
  }
  if (seen != frame.active()) throw DomainError("decorated OSP blocks do not partition the active set");
  if (total != k) throw DomainError("decorated OSP weights sum to " + std::to_string(total) + ", expected " + std::to_string(k));
}

std::vector<DecoratedOsp> rotations(const DecoratedOsp& d) {
  std::vector<DecoratedOsp> out;
  DecoratedOsp r = d;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    out.push_back(r);
    std::rotate(r.blocks.begin(), r.blocks.begin() + 1, r.blocks.end());
    std::rotate(r.weights.begin(), r.weights.begin() + 1, r.weights.end());
  }
  return out;
}

DecoratedOsp normalized(const DecoratedOsp& d, const GroundFrame& frame) {
  const int anchor = frame.active().min();
  for (const DecoratedOsp& r : rotations(d))
    if (!r.blocks.empty() && r.blocks.front().contains(anchor)) return r;
  throw DomainError("decorated OSP does not cover the frame's least element");
}

bool same_blade(const DecoratedOsp& a, const DecoratedOsp& b, const GroundFrame& frame) {
  return normalized(a, frame) == normalized(b, frame);
}

DecoratedOsp dosp_from_vertex(const GroundFrame& frame, Subset J) {
  if (is_frozen(frame, J))
    throw DomainError(to_string(J) + " is frozen; the trivial subdivision has no multi-split blade");
  const auto intervals = cyclic_intervals(frame, J);
  const auto complements = interlaced_complements(frame, J);
  DecoratedOsp d;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    d.blocks.push_back(complements[i] | intervals[i]);
    d.weights.push_back(intervals[i].size());
  }
  return d;
}

std::vector<PlateInequality> plate_system(const DecoratedOsp& d) {
  std::vector<PlateInequality> out;
  Subset prefix;
  int rhs = 0;
  for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i) {
    prefix = prefix | d.blocks[i];
    rhs += d.weights[i];
    out.push_back(PlateInequality{prefix, rhs});
  }
  return out;
}

}  // namespace blades
