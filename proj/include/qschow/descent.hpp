#pragma once

#include <stdexcept>
#include <vector>

#include "fp.hpp"
#include "schubert.hpp"

namespace qschow {

struct GradedSubspace {
  int degree = 0;
  Echelon basis;
  std::size_t dim() const { return basis.rank(); }
  bool contains(const Vec& v) const { return basis.contains(v); }
};

// Orbits of the diagram group on the Schubert basis of one degree.
struct DegreeOrbits {
  std::vector<int> orbit_of;                 // element -> orbit id
  std::vector<std::vector<int>> members;     // orbit id -> sorted element indices
};

inline DegreeOrbits schubert_orbits(const GaloisOnSchubert& gal, std::size_t count, int d) {
  DegreeOrbits o;
  o.orbit_of.assign(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    if (o.orbit_of[i] >= 0) continue;
    int id = static_cast<int>(o.members.size());
    std::vector<int> mem;
    for (std::size_t g = 0; g < gal.order(); ++g) {
      int j = gal.image(g, d, static_cast<int>(i));
      if (o.orbit_of[j] < 0) {
        o.orbit_of[j] = id;
        mem.push_back(j);
      }
    }
    std::sort(mem.begin(), mem.end());
    o.members.push_back(mem);
  }
  return o;
}

// Fixed space of a permutation action is spanned by orbit sums.
inline GradedSubspace invariants(const SchubertRing& ring, const GaloisOnSchubert& gal, int d) {
  std::size_t n = ring.graded_dim(d);
  GradedSubspace s{d, Echelon(n, ring.prime())};
  auto o = schubert_orbits(gal, n, d);
  for (const auto& mem : o.members) {
    Vec v(n, 0);
    for (int j : mem) v[j] = 1;
    s.basis.insert(v);
  }
  return s;
}

// Same space computed as the kernel of the stacked maps (sigma - id).
inline GradedSubspace invariants_nullspace(const SchubertRing& ring, const GaloisOnSchubert& gal, int d) {
  std::size_t n = ring.graded_dim(d);
  unsigned p = ring.prime();
  std::size_t k = gal.num_generators();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) {
    Vec img(n * k, 0);
    for (std::size_t g = 0; g < k; ++g) {
      int j = gal.gen_image(g, d, static_cast<int>(i));
      img[g * n + j] = static_cast<Coef>((img[g * n + j] + 1) % p);
      img[g * n + i] = static_cast<Coef>((img[g * n + i] + p - 1) % p);
    }
    images.push_back(img);
  }
  GradedSubspace s{d, Echelon(n, p)};
  for (auto& v : kernel_of(images, n * k, p)) s.basis.insert(v);
  return s;
}

inline void require_cyclic_prime(const GaloisAction& G, unsigned p) {
  if (!G.cyclic_prime() || G.order() != p)
    throw std::invalid_argument("conormed rings need a cyclic Galois group of order p");
}

// Image of sum_{i<p} sigma^i on the degree-d space.
inline GradedSubspace norm_image(const SchubertRing& ring, const GaloisOnSchubert& gal, const GaloisAction& G, int d) {
  require_cyclic_prime(G, ring.prime());
  std::size_t n = ring.graded_dim(d);
  unsigned p = ring.prime();
  GradedSubspace s{d, Echelon(n, p)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n, 0);
    for (std::size_t g = 0; g < gal.order(); ++g) {
      int j = gal.image(g, d, static_cast<int>(i));
      v[j] = static_cast<Coef>((v[j] + 1) % p);
    }
    s.basis.insert(v);
  }
  return s;
}

// CH*_K(G/B) = invariants / norms for Gal(K/k) = Z/p.  Orbits have size 1 or p; the
// free orbit sums are exactly the norms, so the fixed Schubert classes give the
// canonical quotient basis.
class ConormedRing {
 public:
  ConormedRing(const SchubertRing& ring, const GaloisOnSchubert& gal, const GaloisAction& G)
      : ring_(&ring), gal_(&gal) {
    require_cyclic_prime(G, ring.prime());
    int cap = ring.cap();
    fixed_.resize(cap + 1);
    pos_.resize(cap + 1);
    inv_dim_.resize(cap + 1);
    for (int d = 0; d <= cap; ++d) {
      std::size_t n = ring.graded_dim(d);
      auto o = schubert_orbits(gal, n, d);
      inv_dim_[d] = o.members.size();
      pos_[d].assign(n, -1);
      for (const auto& mem : o.members) {
        if (mem.size() == 1) {
          pos_[d][mem[0]] = static_cast<int>(fixed_[d].size());
          fixed_[d].push_back(mem[0]);
        } else if (mem.size() != ring.prime()) {
          throw std::logic_error("orbit size is neither 1 nor p");
        }
      }
    }
  }

  const SchubertRing& ring() const { return *ring_; }
  const GaloisOnSchubert& galois() const { return *gal_; }
  int cap() const { return ring_->cap(); }
  std::size_t dim(int d) const { return fixed_[d].size(); }
  std::size_t invariant_dim(int d) const { return inv_dim_[d]; }
  std::size_t norm_dim(int d) const { return inv_dim_[d] - fixed_[d].size(); }
  const std::vector<int>& fixed(int d) const { return fixed_[d]; }
  int position(int d, int element) const { return pos_[d][element]; }

  bool is_invariant(const Vec& v, int d) const {
    for (std::size_t g = 0; g < gal_->order(); ++g)
      if (gal_->act(g, v, d) != v) return false;
    return true;
  }

  // Quotient coordinates of an invariant Schubert vector.
  Vec project(const Vec& v, int d) const {
    Vec out(dim(d), 0);
    for (std::size_t k = 0; k < fixed_[d].size(); ++k) out[k] = v[fixed_[d][k]];
    return out;
  }
  Vec lift(const Vec& coords, int d) const {
    Vec v = ring_->zero(d);
    for (std::size_t k = 0; k < coords.size(); ++k) v[fixed_[d][k]] = coords[k];
    return v;
  }
  // Product with a Galois-invariant weight polynomial, computed on the lift.
  Vec mult(const WeightPolynomial& q, const Vec& coords, int d) const {
    return project(ring_->eval(q, lift(coords, d), d), d + q.degree());
  }

 private:
  const SchubertRing* ring_;
  const GaloisOnSchubert* gal_;
  std::vector<std::vector<int>> fixed_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::size_t> inv_dim_;
};

}  // namespace qschow
