#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent.hpp"
#include "schubert.hpp"

namespace qschow {

enum class RingMode { split_schubert, conormed };

struct AdjoinedX {
  WeightPolynomial square;  // relation x^2 + square; empty polynomial means x^2
  std::string label;
};

struct IdealSpec {
  std::vector<WeightPolynomial> generators;
  std::vector<std::string> labels;
  std::optional<AdjoinedX> x;
  RingMode mode = RingMode::split_schubert;

  void add(WeightPolynomial g, std::string label) {
    generators.push_back(std::move(g));
    labels.push_back(std::move(label));
  }
  IdealSpec without_x() const {
    IdealSpec s = *this;
    s.x.reset();
    return s;
  }
};

// ------------------------------------------------------------------ generator tables

inline WeightPolynomial c1w(int rank, int i) { return WeightPolynomial::fundamental(rank, {i - 1}); }
inline WeightPolynomial c2w(int rank, int i, int j) { return WeightPolynomial::fundamental(rank, {i - 1, j - 1}); }

inline std::string weight_label(const IVec& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i]) continue;
    if (!s.empty() && w[i] > 0) s += "+";
    if (w[i] == -1) s += "-";
    else if (w[i] != 1) s += std::to_string(w[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

inline IdealSpec split_characteristic_generators(const RootDatum& R, const Pi1Datum& P) {
  IdealSpec s;
  s.mode = RingMode::split_schubert;
  for (const auto& lam : character_lattice_basis(R, P))
    s.add(WeightPolynomial::monomial({lam}), "c1(" + weight_label(lam) + ")");
  return s;
}

// Conormed characteristic generators of a torus whose character lattice has a
// Galois-permuted basis: c_1 of fixed members and top Chern classes of orbits.
inline IdealSpec permutation_torus_generators(const RootDatum& R, const GaloisAction& G, const std::vector<IVec>& basis) {
  IdealSpec s;
  s.mode = RingMode::conormed;
  std::vector<int> done(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (done[i]) continue;
    std::vector<IVec> orbit;
    std::string lab = "c(";
    for (const auto& g : G.elements) {
      IVec img = act_weight(g, basis[i]);
      std::size_t k = 0;
      while (k < basis.size() && basis[k] != img) ++k;
      if (k == basis.size()) throw std::invalid_argument("basis is not permuted by the diagram group");
      if (!done[k]) {
        done[k] = 1;
        orbit.push_back(img);
        lab += (orbit.size() > 1 ? "," : "") + weight_label(img);
      }
    }
    s.add(WeightPolynomial::monomial(orbit), lab + ")");
  }
  (void)R;
  return s;
}

inline IdealSpec quasi_split_generators(const RootDatum& R, const GaloisAction& G, const Pi1Datum& P, unsigned p) {
  if (G.twist == 6)
    throw std::invalid_argument("the conormed ring of a 6D4 group vanishes; use the invariants route");
  if (G.split() || static_cast<unsigned>(G.twist) != p)
    throw std::invalid_argument("quasi_split_generators needs p equal to the splitting degree");
  int n = R.rank;
  IdealSpec s;
  s.mode = RingMode::conormed;
  auto c1 = [&](int i) { return c1w(n, i); };
  auto c2 = [&](int i, int j) { return c2w(n, i, j); };
  auto l1 = [](int i) { return "c1(L" + std::to_string(i) + ")"; };
  auto l2 = [](int i, int j) { return "c2(V" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  if (R.type == Dynkin::A) {
    long long l = P.trivial() ? 1 : P.mods[0];
    if (n % 2 == 0) {
      int r = n / 2;
      for (int i = 1; i <= r; ++i) s.add(c2(i, n + 1 - i), l2(i, n + 1 - i));
      return s;
    }
    int r = (n + 1) / 2;
    auto add_S = [&]() {
      for (int i = 1; i <= (r - 1) / 2; ++i) s.add(c2(2 * i, 2 * r - 2 * i), l2(2 * i, 2 * r - 2 * i));
      for (int i = 1; i <= r / 2 - 1; ++i)
        s.add(c2(2 * i + 1, 2 * r - 2 * i - 1) + c2(1, 2 * r - 1),
              l2(2 * i + 1, 2 * r - 2 * i - 1) + "+" + l2(1, 2 * r - 1));
    };
    if (l % 2 == 1) {
      s.add(c1(r), l1(r));
      for (int i = 1; i < r; ++i) s.add(c2(i, 2 * r - i), l2(i, 2 * r - i));
      return s;
    }
    long long m = l / 2;
    bool m_even = m % 2 == 0;
    bool q_even = (r / m) % 2 == 0;
    if (!q_even && m_even) {
      add_S();
    } else if (!q_even) {
      for (int i = 1; i < r; ++i) s.add(c2(i, 2 * r - i), l2(i, 2 * r - i));
    } else {
      s.add(c1(r), l1(r));
      add_S();
      AdjoinedX x;
      x.label = "x=c1(L(w" + std::to_string(m) + "bar))";
      if (!m_even) x.square = c2(1, 2 * r - 1);
      s.x = x;
    }
    return s;
  }
  if (R.type == Dynkin::D && G.twist == 2) {
    const std::string& nm = P.name;
    if (nm == "sc" || nm == "mu2") {
      for (int i = 1; i <= n - 2; ++i) s.add(c1(i), l1(i));
      if (nm == "sc") {
        s.add(c2(n - 1, n), l2(n - 1, n));
      } else {
        AdjoinedX x;
        x.label = "x=c1(L(w" + std::to_string(n - 1) + "bar))";
        x.square = c2(n - 1, n);
        s.x = x;
      }
      return s;
    }
    if (nm == "mu2x2") {
      for (int i = 1; i <= n - 2; ++i) s.add(c1(i), l1(i));
      return s;
    }
    if (nm == "mu4") {
      int r = (n - 1) / 2;
      s.add(c1(1) * c1(1), "c1(L1)^2");
      for (int i = 1; i <= r - 1; ++i) s.add(c1(2 * i), l1(2 * i));
      for (int i = 1; i <= r - 1; ++i) s.add(c1(2 * i + 1) + c1(1), l1(2 * i + 1) + "+" + l1(1));
      return s;
    }
  }
  if (R.type == Dynkin::D && n == 4 && G.twist == 3) {
    s.add(c1(2), l1(2));
    s.add(WeightPolynomial::fundamental(n, {0, 2, 3}), "c3(V1,3,4)");
    return s;
  }
  if (R.type == Dynkin::E && n == 6 && G.twist == 2) {
    s.add(c1(2), l1(2));
    s.add(c1(4), l1(4));
    s.add(c2(1, 6), l2(1, 6));
    s.add(c2(3, 5), l2(3, 5));
    return s;
  }
  throw std::invalid_argument("no generator table for this group");
}

// ------------------------------------------------------------------ quotients

struct QuotientReport {
  std::vector<std::size_t> hilbert;
  std::vector<std::pair<std::string, bool>> witnesses;
};

// Graded pieces of the ideal generated by spec inside either the split Schubert ring
// or the conormed ring.  Built generator by generator: the new contributions of g_k
// in degree d only come from a complement of the previous ideal in degree d - deg g_k.
class IdealQuotient {
 public:
  IdealQuotient(const SchubertRing& ring, const ConormedRing* conormed, IdealSpec spec, int cap)
      : ring_(&ring), con_(conormed), spec_(std::move(spec)), cap_(cap) {
    if (spec_.mode == RingMode::conormed && !con_) throw std::invalid_argument("conormed mode needs a conormed ring");
    if (spec_.mode == RingMode::split_schubert) con_ = nullptr;
    if (cap_ > ring.cap()) throw std::out_of_range("quotient cap exceeds the Weyl table cap");
    for (const auto& g : spec_.generators) {
      if (g.empty()) throw std::invalid_argument("empty generator");
      if (g.degree() > cap_) throw std::out_of_range("generator degree exceeds cap");
    }
    if (spec_.x && !spec_.x->square.empty() && spec_.x->square.degree() != 2)
      throw std::invalid_argument("square relation of x must have degree 2");
    if (con_) check_invariant_generators();
    build();
  }

  int cap() const { return cap_; }
  const IdealSpec& spec() const { return spec_; }
  std::size_t base_dim(int d) const { return con_ ? con_->dim(d) : ring_->graded_dim(d); }
  const Echelon& ideal(int d) const { return J_[d]; }
  std::size_t quotient_dim(int d) const { return d < 0 ? 0 : base_dim(d) - J_[d].rank(); }

  // Hilbert vector; with an adjoined x the quotient is (R/J) + (R/J) x.
  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (int d = 0; d <= cap_; ++d) {
      std::size_t total = base_dim(d), ideal = J_[d].rank();
      if (spec_.x && d >= 1) {
        total += base_dim(d - 1);
        ideal += J_[d - 1].rank();
      }
      h.push_back(total - ideal);
    }
    return h;
  }
  std::vector<std::size_t> hilbert_without_x() const {
    std::vector<std::size_t> h;
    for (int d = 0; d <= cap_; ++d) h.push_back(quotient_dim(d));
    return h;
  }

  // Base coordinates of a Schubert vector (restricted to fixed classes when conormed).
  Vec to_base(const Vec& v, int d) const { return con_ ? con_->project(v, d) : v; }
  Vec from_base(const Vec& c, int d) const { return con_ ? con_->lift(c, d) : c; }

  std::vector<unsigned> class_image(const Vec& schubert_vec, int d) const { return J_[d].coords(to_base(schubert_vec, d)); }
  bool in_ideal(const Vec& schubert_vec, int d) const { return J_[d].contains(to_base(schubert_vec, d)); }
  std::vector<unsigned> class_image(const SchubertClass& z) const { return class_image(ring_->to_vec(z), z.degree); }
  bool nonzero_image(const SchubertClass& z) const {
    for (unsigned c : class_image(z))
      if (c) return true;
    return false;
  }

  QuotientReport report() const { return {hilbert(), {}}; }

 private:
  void check_invariant_generators() {
    for (const auto& g : spec_.generators)
      if (!con_->is_invariant(ring_->eval(g, ring_->unit(), 0), g.degree()))
        throw std::invalid_argument("generator is not Galois invariant");
  }

  void build() {
    unsigned p = ring_->prime();
    std::size_t K = spec_.generators.size();
    J_.clear();
    stage_.assign(cap_ + 1, std::vector<std::size_t>(K + 1, 0));
    for (int d = 0; d <= cap_; ++d) {
      J_.emplace_back(base_dim(d), p);
      Echelon& J = J_[d];
      for (std::size_t k = 0; k < K; ++k) {
        const auto& g = spec_.generators[k];
        int e = g.degree();
        int src = d - e;
        if (src >= 0 && !J.full()) {
          std::size_t prefix = (src == d) ? J.rank() : stage_[src][k];
          for (std::size_t b : J_[src].non_pivots_prefix(prefix)) {
            if (J.full()) break;
            Vec unit_b(base_dim(src), 0);
            unit_b[b] = 1;
            Vec prod = ring_->eval(g, from_base(unit_b, src), src);
            J.insert(to_base(prod, d));
          }
        }
        stage_[d][k + 1] = J.rank();
      }
    }
  }

  const SchubertRing* ring_;
  const ConormedRing* con_;
  IdealSpec spec_;
  int cap_;
  std::vector<Echelon> J_;
  std::vector<std::vector<std::size_t>> stage_;  // rank of J_d after the first k generators
};

}  // namespace qschow
