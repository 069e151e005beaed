#include "blades/heights.hpp"

#include <algorithm>
#include <numeric>

#include "blades/linalg.hpp"

namespace blades {

VertexVector::VertexVector(int k, int n) : k_(k), n_(n) {
  if (n < 2 || n > kMaxGroundSize) throw DomainError("unsupported ground size n=" + std::to_string(n));
  if (k < 1 || k > n - 1)
    throw DomainError("need 1 <= k <= n-1, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
}

void VertexVector::check_key(Subset J) const {
  if (J.size() != k_ || !J.is_subset_of(Subset::range(n_)))
    throw DomainError(to_string(J) + " is not a " + std::to_string(k_) + "-subset of [" + std::to_string(n_) + "]");
}

Rational VertexVector::operator[](Subset J) const {
  check_key(J);
  const auto it = coords_.find(J);
  return it == coords_.end() ? Rational(0) : it->second;
}

void VertexVector::set(Subset J, const Rational& value) {
  check_key(J);
  if (value == 0)
    coords_.erase(J);
  else
    coords_[J] = value;
}

void VertexVector::add(Subset J, const Rational& value) {
  check_key(J);
  if (value == 0) return;
  auto [it, inserted] = coords_.try_emplace(J, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coords_.erase(it);
  }
}

void VertexVector::require_compatible(const VertexVector& other) const {
  if (k_ != other.k_ || n_ != other.n_) throw DomainError("vertex vectors over different hypersimplices");
}

VertexVector& VertexVector::operator+=(const VertexVector& other) {
  require_compatible(other);
  for (const auto& [J, c] : other.coords_) add(J, c);
  return *this;
}

VertexVector& VertexVector::operator-=(const VertexVector& other) {
  require_compatible(other);
  for (const auto& [J, c] : other.coords_) add(J, -c);
  return *this;
}

VertexVector& VertexVector::operator*=(const Rational& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [J, value] : coords_) value *= c;
  return *this;
}

VertexVector VertexVector::unit(int k, int n, Subset J) {
  VertexVector v(k, n);
  v.set(J, 1);
  return v;
}

long hmin(std::span<const long> x) {
  if (x.empty()) return 0;
  // x_i = t_i - t_{i-1}, so t_i = c + (x_1 + ... + x_i); c makes min t = 0.
  long partial = 0;
  long lowest = 0;
  long total = 0;
  for (long xi : x) {
    partial += xi;
    lowest = std::min(lowest, partial);
    total += partial;
  }
  if (partial != 0) throw DomainError("hmin needs coordinates summing to zero");
  const auto n = static_cast<long>(x.size());
  return -(total - n * lowest);
}

long rho(int k, int n, Subset J, Subset I) {
  if (J.size() != k || I.size() != k)
    throw DomainError("rho needs two " + std::to_string(k) + "-subsets, got " + to_string(J) + " and " + to_string(I));
  const Subset ground = Subset::range(n);
  if (!J.is_subset_of(ground) || !I.is_subset_of(ground)) throw DomainError("rho arguments outside [n]");
  std::vector<long> x(static_cast<std::size_t>(n), 0);
  for (int i : I.elements()) x[static_cast<std::size_t>(i - 1)] += 1;
  for (int j : J.elements()) x[static_cast<std::size_t>(j - 1)] -= 1;
  return hmin(x);
}

VertexVector height_vector(int k, int n, Subset J) {
  VertexVector h(k, n);
  for (Subset I : k_subsets(Subset::range(n), k)) h.set(I, rho(k, n, J, I));
  return h;
}

VertexVector cube_L(int k, int n, Subset J) {
  VertexVector out(k, n);
  if (J.size() != k) throw DomainError(to_string(J) + " is not a " + std::to_string(k) + "-subset");
  const GroundFrame frame(n);
  std::vector<int> initials;
  for (Subset block : cyclic_intervals(frame, J)) initials.push_back(initial_point(frame, block));
  const std::size_t t = initials.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    Subset corner = J;
    for (std::size_t b = 0; b < t; ++b)
      if ((mask >> b) & 1U) corner = corner.without(initials[b]).with(frame.pred(initials[b]));
    out.add(corner, std::popcount(mask) % 2 == 0 ? -1 : 1);
  }
  return out;
}

VertexVector cube_L(const VertexVector& v) {
  VertexVector out(v.k(), v.n());
  for (const auto& [J, c] : v.coords()) out += c * cube_L(v.k(), v.n(), J);
  return out;
}

VertexVector cube_R(const VertexVector& v) {
  VertexVector out(v.k(), v.n());
  const Rational scale(-1, v.n());
  for (const auto& [J, c] : v.coords()) out += (scale * c) * height_vector(v.k(), v.n(), J);
  return out;
}

bool is_kinematic(const VertexVector& v) {
  std::vector<Rational> sums(static_cast<std::size_t>(v.n()));
  for (const auto& [J, c] : v.coords())
    for (int a : J.elements()) sums[static_cast<std::size_t>(a - 1)] += c;
  return std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 0; });
}

KinematicVector::KinematicVector(VertexVector v) : v_(std::move(v)) {
  if (!is_kinematic(v_)) throw DomainError("vector is not in the kinematic space");
}

Rational eta(const KinematicVector& s, Subset J) {
  const VertexVector& v = s.vector();
  if (J.size() != v.k() || !J.is_subset_of(Subset::range(v.n())))
    throw DomainError(to_string(J) + " is not a " + std::to_string(v.k()) + "-subset");
  Rational total = 0;
  for (const auto& [I, c] : v.coords()) total += c * rho(v.k(), v.n(), J, I);
  return total * Rational(-1, v.n());
}

std::vector<VertexVector> kinematic_basis(int k, int n) {
  const SubsetIndex index(n, k);
  Matrix constraints(static_cast<std::size_t>(n), index.size());
  for (std::size_t col = 0; col < index.size(); ++col)
    for (int a : index.at(col).elements()) constraints(static_cast<std::size_t>(a - 1), col) = 1;

  std::vector<VertexVector> basis;
  for (const auto& null_vector : nullspace(constraints)) {
    VertexVector v(k, n);
    for (std::size_t col = 0; col < index.size(); ++col) v.set(index.at(col), null_vector[col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::map<Subset, Rational, CanonicalLess> express_in_planar(const VertexVector& functional) {
  const int k = functional.k();
  const int n = functional.n();
  const GroundFrame frame(n);
  std::vector<Subset> planar;
  for (Subset J : k_subsets(Subset::range(n), k))
    if (!is_frozen(frame, J)) planar.push_back(J);

  const auto basis = kinematic_basis(k, n);
  // Row b: sum_J x_J eta_J(basis_b) = f(basis_b).
  Matrix system(basis.size(), planar.size());
  std::vector<Rational> rhs(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const KinematicVector s(basis[b]);
    for (std::size_t col = 0; col < planar.size(); ++col) system(b, col) = eta(s, planar[col]);
    for (const auto& [I, c] : functional.coords()) rhs[b] += c * basis[b][I];
  }
  const auto solution = solve(system, rhs);
  if (!solution) throw std::logic_error("planar basis change of coordinates is singular");

  std::map<Subset, Rational, CanonicalLess> out;
  for (std::size_t col = 0; col < planar.size(); ++col)
    if ((*solution)[col] != 0) out.emplace(planar[col], (*solution)[col]);
  return out;
}

std::vector<VertexVector> lineality_basis(int k, int n) {
  std::vector<VertexVector> out;
  const auto all = k_subsets(Subset::range(n), k);
  for (int a = 1; a <= n; ++a) {
    VertexVector v(k, n);
    for (Subset J : all)
      if (J.contains(a)) v.set(J, 1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace blades
