#include "blades/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "blades/building_blocks.hpp"
#include "blades/linalg.hpp"

namespace blades {

namespace {

void dosp_rec(Subset remaining, int weight_left, bool anchored, DecoratedOsp& current,
              const std::function<void(const DecoratedOsp&)>& visit) {
  if (remaining.empty()) {
    if (weight_left == 0) visit(current);
    return;
  }
  const std::uint64_t rest = remaining.bits();
  for (std::uint64_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
    const Subset block = Subset::from_bits(sub);
    if (block.size() < 2) continue;
    if (anchored && current.blocks.empty() && !block.contains(remaining.min())) continue;
    const Subset after = remaining - block;
    for (int s = 1; s <= std::min(weight_left, block.size() - 1); ++s) {
      const int w = weight_left - s;
      if (after.empty() ? w != 0 : (w < 1 || w > after.size() - 1)) continue;
      current.blocks.push_back(block);
      current.weights.push_back(s);
      dosp_rec(after, w, anchored, current, visit);
      current.blocks.pop_back();
      current.weights.pop_back();
    }
  }
}

}  // namespace

void for_each_dosp(int k, int n, bool anchored, const std::function<void(const DecoratedOsp&)>& visit) {
  if (n < 2 || n > kMaxGroundSize || k < 1 || k > n - 1)
    throw DomainError("need 1 <= k <= n-1, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  DecoratedOsp current;
  dosp_rec(Subset::range(n), k, anchored, current, visit);
}

std::vector<DecoratedOsp> enumerate_dosps(int k, int n, bool anchored) {
  std::vector<DecoratedOsp> out;
  for_each_dosp(k, n, anchored, [&](const DecoratedOsp& d) { out.push_back(d); });
  return out;
}

long eulerian(int m, int d) {
  if (m < 0) throw DomainError("eulerian needs m >= 0");
  if (m == 0) return d == 0 ? 1 : 0;
  if (d < 0 || d >= m) return 0;
  // A(m,d) = (d+1) A(m-1,d) + (m-d) A(m-1,d-1)
  std::vector<long> row{1};
  for (int size = 2; size <= m; ++size) {
    std::vector<long> next(size, 0);
    for (int e = 0; e < size; ++e) {
      const long keep = e < size - 1 ? row[e] : 0;
      const long grow = e > 0 ? row[e - 1] : 0;
      next[e] = (e + 1) * keep + (size - e) * grow;
    }
    row = std::move(next);
  }
  return row[d];
}

std::vector<DecoratedOsp> enumerate_multisplits(int k, int n) {
  if (k < 2 || k > n - 2) throw DomainError("multi-splits need 2 <= k <= n-2");
  const GroundFrame frame(n);
  using Key = std::vector<std::pair<std::uint64_t, int>>;
  std::map<Key, DecoratedOsp> classes;
  for_each_dosp(k, n, false, [&](const DecoratedOsp& d) {
    if (d.block_count() < 2) return;
    DecoratedOsp norm = normalized(d, frame);
    Key key;
    for (int j = 0; j < norm.block_count(); ++j) key.emplace_back(norm.blocks[j].bits(), norm.weights[j]);
    classes.emplace(std::move(key), std::move(norm));
  });
  std::vector<DecoratedOsp> out;
  for (auto& [key, d] : classes) out.push_back(std::move(d));
  return out;
}

namespace {

using Dense = std::vector<long>;

// Face-weight functionals of Delta_{k,n} on grade 0, in the basis of
// nonfrozen blades.
class FaceSystem {
 public:
  struct Row {
    int face;  // index into faces
    Subset pair;
    std::vector<std::pair<int, long>> entries;
  };

  FaceSystem(int k, int n) : k_(k), n_(n) {
    const GroundFrame frame(n);
    for (Subset J : k_subsets(Subset::range(n), k))
      if (!is_frozen(frame, J)) {
        column_.emplace(J, static_cast<int>(basis_.size()));
        basis_.push_back(J);
      }
    faces_ = k_subsets(Subset::range(n), k - 2);
    for (std::size_t f = 0; f < faces_.size(); ++f)
      for (Subset pair : nonfrozen_pairs(n, faces_[f])) rows_.push_back(Row{static_cast<int>(f), pair, {}});
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      std::map<Subset, std::size_t, CanonicalLess> local;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].face == static_cast<int>(f)) local.emplace(rows_[r].pair, r);
      for (std::size_t c = 0; c < basis_.size(); ++c) {
        const Arrangement face = boundary_L(blade(k, n, {}, basis_[c]), faces_[f]);
        for (const auto& [key, coeff] : face.terms())
          rows_[local.at(key.support)].entries.emplace_back(static_cast<int>(c), coeff.get_num().get_si());
      }
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Subset>& basis() const { return basis_; }

  Dense dense(const Arrangement& a) const {
    Dense x(basis_.size(), 0);
    for (const auto& [key, c] : a.terms()) {
      if (!key.face.empty() || c.get_den() != 1) throw DomainError("expected an integral grade-0 arrangement");
      x[column_.at(key.support)] = c.get_num().get_si();
    }
    return x;
  }

  Arrangement sparse(const Dense& x) const {
    Arrangement a(k_, n_);
    for (std::size_t c = 0; c < x.size(); ++c)
      if (x[c] != 0) a.add({}, basis_[c], x[c]);
    return a;
  }

  // Z membership; collects indices of vanishing rows when `tight` is given.
  bool in_Z(const Dense& x, std::vector<std::size_t>* tight = nullptr) const {
    std::size_t r = 0;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const GroundFrame frame(n_, faces_[f]);
      std::vector<Subset> support;
      for (; r < rows_.size() && rows_[r].face == static_cast<int>(f); ++r) {
        long w = 0;
        for (const auto& [c, v] : rows_[r].entries) w += v * x[c];
        if (w < 0) return false;
        if (w != 0) {
          for (Subset s : support)
            if (!weakly_separated(frame, s, rows_[r].pair)) return false;
          support.push_back(rows_[r].pair);
        } else if (tight != nullptr) {
          tight->push_back(r);
        }
      }
    }
    return true;
  }

  bool is_ray(const Dense& x) const {
    if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return false;
    std::vector<std::size_t> tight;
    if (!in_Z(x, &tight)) return false;
    Matrix m(tight.size(), basis_.size());
    for (std::size_t i = 0; i < tight.size(); ++i)
      for (const auto& [c, v] : rows_[tight[i]].entries) m(i, c) = v;
    return rank(m) + 1 == basis_.size();
  }

 private:
  int k_;
  int n_;
  std::vector<Subset> basis_;
  std::map<Subset, int, CanonicalLess> column_;
  std::vector<Subset> faces_;
  std::vector<Row> rows_;
};

Dense primitive_dense(Dense x) {
  long g = 0;
  for (long v : x) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (long& v : x) v /= g;
  return x;
}

int negatives(const Dense& x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](long v) { return v < 0; }));
}

// Linear action of every dihedral element on grade-0 coordinates.
std::vector<std::vector<Dense>> dihedral_images(const FaceSystem& sys, int k, int n) {
  std::vector<std::vector<Dense>> images;
  for (const Dihedral& g : Dihedral::all(n)) {
    std::vector<Dense> cols;
    for (Subset J : sys.basis()) {
      const Arrangement img = act(g, blade(k, n, {}, J));
      Dense v(sys.dim(), 0);
      for (const auto& [key, c] : img.terms()) {
        if (c.get_den() != 1) throw std::logic_error("non-integral dihedral image");
        const auto& b = sys.basis();
        v[std::find(b.begin(), b.end(), key.support) - b.begin()] = c.get_num().get_si();
      }
      cols.push_back(std::move(v));
    }
    images.push_back(std::move(cols));
  }
  return images;
}

Dense apply_image(const std::vector<Dense>& cols, const Dense& x) {
  Dense y(x.size(), 0);
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x[c] != 0)
      for (std::size_t r = 0; r < y.size(); ++r) y[r] += x[c] * cols[c][r];
  return y;
}

}  // namespace

bool is_ray(const Arrangement& a) {
  if (!a.is_grade_zero()) return false;
  if (!is_in_Z(a).member || a.is_zero()) return false;
  const FaceSystem sys(a.k(), a.n());
  Dense x(sys.dim(), 0);
  // Rational coefficients: clear denominators first.
  mpz_class den = 1;
  for (const auto& [key, c] : a.terms()) den = lcm(den, mpz_class(c.get_den()));
  Arrangement scaled = a;
  scaled *= Rational(den);
  return sys.is_ray(sys.dense(primitive(scaled)));
}

Arrangement primitive(const Arrangement& a) {
  if (a.is_zero()) return a;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [key, c] : a.terms()) {
    den = lcm(den, mpz_class(c.get_den()));
    num = gcd(num, mpz_class(c.get_num()));
  }
  Arrangement out = a;
  out *= Rational(den) / Rational(num);
  // Clearing denominators can leave a common factor.
  mpz_class g = 0;
  for (const auto& [key, c] : out.terms()) g = gcd(g, mpz_class(c.get_num()));
  out *= Rational(1) / Rational(g);
  return out;
}

long RayCatalog::total_rays() const {
  long total = 0;
  for (const RayEntry& e : entries) total += e.orbit_size;
  return total;
}

RayCatalog catalog_rays(int n) {
  constexpr int k = 3;
  if (n < 6 || n > 9) throw DomainError("ray catalog is available for 6 <= n <= 9");
  const FaceSystem sys(k, n);

  std::vector<Dense> taus;
  for (Subset J : sys.basis())
    for (const TauSpec& spec : dj_vertices(k, n, J)) taus.push_back(sys.dense(tau(spec)));

  std::set<Dense> rays;
  std::set<Dense> seen;
  const auto consider = [&](Dense x) {
    x = primitive_dense(std::move(x));
    if (!seen.insert(x).second) return;
    if (sys.is_ray(x)) rays.insert(std::move(x));
  };
  for (std::size_t c = 0; c < sys.dim(); ++c) {
    Dense x(sys.dim(), 0);
    x[c] = 1;
    consider(std::move(x));
  }
  for (const Dense& t : taus) consider(t);

  // Fuse rays carrying a negative term with tau's, and close under the
  // dihedral group (images of rays are rays), until nothing new appears.
  const auto images = dihedral_images(sys, k, n);
  std::set<Dense> fused;
  while (true) {
    std::vector<Dense> frontier;
    for (const Dense& x : rays)
      if (negatives(x) > 0 && fused.insert(x).second) frontier.push_back(x);
    for (const Dense& x : frontier)
      for (const Dense& t : taus) {
        Dense sum(x.size());
        std::vector<std::size_t> shared;
        for (std::size_t i = 0; i < x.size(); ++i) {
          sum[i] = x[i] + t[i];
          if (x[i] > 0 && t[i] > 0) shared.push_back(i);
        }
        consider(sum);
        for (std::size_t p = 0; p < shared.size(); ++p) {
          Dense one = sum;
          one[shared[p]] -= 1;
          consider(one);
          for (std::size_t q = p + 1; q < shared.size(); ++q) {
            Dense two = one;
            two[shared[q]] -= 1;
            consider(two);
          }
        }
      }
    const std::size_t before = rays.size();
    const std::vector<Dense> current(rays.begin(), rays.end());
    for (const Dense& x : current)
      for (const auto& cols : images) {
        Dense y = primitive_dense(apply_image(cols, x));
        if (rays.count(y)) continue;
        if (!sys.is_ray(y)) throw std::logic_error("dihedral image of a ray is not a ray");
        seen.insert(y);
        rays.insert(std::move(y));
      }
    if (frontier.empty() && rays.size() == before) break;
  }

  RayCatalog catalog{n, {}};
  std::set<Dense> placed;
  for (const Dense& x : rays) {
    if (placed.count(x)) continue;
    std::set<Dense> orbit;
    for (const auto& cols : images) orbit.insert(primitive_dense(apply_image(cols, x)));
    placed.insert(orbit.begin(), orbit.end());
    const Dense& rep = *orbit.begin();
    const int neg = negatives(rep);
    catalog.entries.push_back(RayEntry{sys.sparse(rep), static_cast<int>(orbit.size()), neg,
                                       neg == 0 ? "blade" : "negatives=" + std::to_string(neg)});
  }
  std::stable_sort(catalog.entries.begin(), catalog.entries.end(), [](const RayEntry& a, const RayEntry& b) {
    if (a.negative_terms != b.negative_terms) return a.negative_terms < b.negative_terms;
    return a.ray.terms().size() < b.ray.terms().size();
  });
  return catalog;
}

std::vector<Arrangement> expand_orbits(const RayCatalog& catalog) {
  std::vector<Arrangement> out;
  if (catalog.entries.empty()) return out;
  const int k = catalog.entries.front().ray.k();
  const FaceSystem sys(k, catalog.n);
  const auto images = dihedral_images(sys, k, catalog.n);
  std::set<Dense> all;
  for (const RayEntry& e : catalog.entries)
    for (const auto& cols : images) all.insert(primitive_dense(apply_image(cols, sys.dense(e.ray))));
  for (const Dense& x : all) out.push_back(sys.sparse(x));
  return out;
}

bool passes_decomposition_filter(const RayCatalog& catalog) {
  const std::vector<Arrangement> rays = expand_orbits(catalog);
  if (rays.empty()) return true;
  const FaceSystem sys(rays.front().k(), catalog.n);
  std::vector<Dense> dense;
  for (const Arrangement& a : rays) dense.push_back(sys.dense(a));
  const std::set<Dense> members(dense.begin(), dense.end());
  for (std::size_t a = 0; a < dense.size(); ++a)
    for (std::size_t b = a + 1; b < dense.size(); ++b) {
      Dense sum(dense[a].size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = dense[a][i] + dense[b][i];
      // Distinct primitive rays are never proportional.
      if (members.count(primitive_dense(sum))) return false;
    }
  return true;
}

bool entry_boundaries_closed(const Arrangement& a) {
  for (int j = 1; j <= a.n(); ++j) {
    const Arrangement d = boundary_j(a, j);
    const GroundFrame frame(a.n(), Subset{j});
    std::vector<Subset> support;
    for (const auto& [key, c] : d.terms()) {
      if (c < 0) return false;
      support.push_back(key.support);
    }
    if (!is_ws_collection(frame, support)) return false;
  }

  // tau-shaped entries: a single negative source blade.
  std::vector<Subset> sources;
  for (const auto& [key, c] : a.terms())
    if (c < 0) sources.push_back(key.support);
  const GroundFrame frame(a.n());
  if (sources.size() == 1 && is_totally_nonfrozen(frame, sources.front())) {
    for (const TauSpec& spec : dj_vertices(a.k(), a.n(), sources.front()))
      if (tau(spec) == a) return check_tau_closure(spec).closed();
  }
  return true;
}

}  // namespace blades
