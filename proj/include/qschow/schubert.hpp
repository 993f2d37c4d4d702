#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "weyl.hpp"

namespace qschow {

struct SchubertClass {
  int degree = 0;
  std::map<int, unsigned> coeffs;  // element index at length `degree` -> nonzero coefficient

  bool zero() const { return coeffs.empty(); }
  bool operator==(const SchubertClass& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

// Monomials are multisets of weights; coefficients are integers reduced mod p at use.
struct WeightPolynomial {
  struct Term {
    std::vector<IVec> weights;
    long long coef = 1;
  };
  std::vector<Term> terms;
  int deg = 0;

  int degree() const { return deg; }
  bool empty() const { return terms.empty(); }

  static WeightPolynomial one() {
    WeightPolynomial q;
    q.terms.push_back({{}, 1});
    return q;
  }
  static WeightPolynomial monomial(std::vector<IVec> ws, long long c = 1) {
    WeightPolynomial q;
    q.deg = static_cast<int>(ws.size());
    q.terms.push_back({std::move(ws), c});
    return q;
  }
  // c_1(varpi_{i1}) ... c_1(varpi_{ik}), 0-based node indices
  static WeightPolynomial fundamental(int rank, const std::vector<int>& nodes, long long c = 1) {
    std::vector<IVec> ws;
    for (int i : nodes) {
      IVec w(rank, 0);
      w[i] = 1;
      ws.push_back(w);
    }
    return monomial(std::move(ws), c);
  }
  WeightPolynomial operator+(const WeightPolynomial& o) const {
    if (!empty() && !o.empty() && deg != o.deg) throw std::invalid_argument("inhomogeneous weight polynomial");
    WeightPolynomial q = *this;
    if (q.empty()) q.deg = o.deg;
    for (const auto& t : o.terms) q.terms.push_back(t);
    return q;
  }
  WeightPolynomial operator*(const WeightPolynomial& o) const {
    WeightPolynomial q;
    q.deg = deg + o.deg;
    for (const auto& a : terms)
      for (const auto& b : o.terms) {
        Term t{a.weights, a.coef * b.coef};
        t.weights.insert(t.weights.end(), b.weights.begin(), b.weights.end());
        q.terms.push_back(std::move(t));
      }
    return q;
  }
  WeightPolynomial permuted(const Perm& s) const {
    WeightPolynomial q = *this;
    for (auto& t : q.terms)
      for (auto& w : t.weights) w = act_weight(s, w);
    return q;
  }
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k) out += " + ";
      const auto& t = terms[k];
      if (t.coef != 1 || t.weights.empty()) out += std::to_string(t.coef);
      for (const auto& w : t.weights) {
        out += "c1(";
        bool first = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (!w[i]) continue;
          if (!first) out += "+";
          first = false;
          if (w[i] != 1) out += std::to_string(w[i]) + "*";
          out += "w" + std::to_string(i + 1);
        }
        if (first) out += "0";
        out += ")";
      }
    }
    return out;
  }
};

// Ch*((G/B)_K; F_p) in the Schubert basis up to the table cap.
class SchubertRing {
 public:
  SchubertRing(const WeylTable& T, unsigned p) : T_(&T), p_(p) { check_prime(p); }

  const WeylTable& table() const { return *T_; }
  unsigned prime() const { return p_; }
  int cap() const { return T_->cap; }
  std::size_t graded_dim(int d) const { return T_->count(d); }

  Vec zero(int d) const { return Vec(graded_dim(d), 0); }
  Vec unit() const { return Vec(1, 1); }
  Vec basis_vector(int d, int i) const {
    Vec v = zero(d);
    v[i] = 1;
    return v;
  }

  // c_1(L(lambda)) * x for x of degree d.
  Vec mult(const IVec& lambda, const Vec& x, int d) const {
    if (d + 1 > cap()) throw std::out_of_range("Chevalley product exceeds the degree cap");
    const auto& R = T_->R;
    std::vector<unsigned> pr(R.num_pos());
    bool any = false;
    for (std::size_t a = 0; a < R.num_pos(); ++a) {
      pr[a] = mod_int(R.pairing(lambda, a), p_);
      if (pr[a]) any = true;
    }
    Vec y = zero(d + 1);
    if (!any) return y;
    const auto& up = T_->up[d];
    for (std::size_t i = 0; i < x.size(); ++i) {
      unsigned c = x[i];
      if (!c) continue;
      for (const auto& [j, a] : up[i]) {
        unsigned k = pr[a];
        if (k) y[j] = static_cast<Coef>((y[j] + c * k) % p_);
      }
    }
    return y;
  }

  Vec eval(const WeightPolynomial& q, const Vec& x, int d) const {
    if (d + q.degree() > cap()) throw std::out_of_range("weight polynomial exceeds the degree cap");
    Vec acc = zero(d + q.degree());
    for (const auto& t : q.terms) {
      unsigned c = mod_int(t.coef, p_);
      if (!c) continue;
      Vec v = x;
      int dd = d;
      bool zero = false;
      for (const auto& w : t.weights) {
        v = mult(w, v, dd);
        ++dd;
        if (is_zero(v)) {
          zero = true;
          break;
        }
      }
      if (!zero) axpy(acc, v, c, p_);
    }
    return acc;
  }

  SchubertClass to_class(const Vec& v, int d) const {
    SchubertClass c;
    c.degree = d;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) c.coeffs[static_cast<int>(i)] = v[i];
    return c;
  }
  Vec to_vec(const SchubertClass& c) const {
    Vec v = zero(c.degree);
    for (auto [i, k] : c.coeffs) v[i] = static_cast<Coef>(k % p_);
    return v;
  }

  SchubertClass chevalley_mult(const IVec& lambda, const SchubertClass& x) const {
    return to_class(mult(lambda, to_vec(x), x.degree), x.degree + 1);
  }
  SchubertClass eval_weight_polynomial(const WeightPolynomial& q, const SchubertClass& x) const {
    return to_class(eval(q, to_vec(x), x.degree), x.degree + q.degree());
  }

  // Z_w for a word of 1-based simple reflection labels.
  SchubertClass schubert(const std::vector<int>& word) const {
    WeylElement w = from_word(T_->R, word);
    if (w.length != static_cast<int>(word.size())) throw std::invalid_argument("word is not reduced");
    int i = T_->find(w);
    if (i < 0) throw std::out_of_range("element beyond the degree cap");
    SchubertClass c;
    c.degree = w.length;
    c.coeffs[i] = 1;
    return c;
  }
  SchubertClass schubert(const std::string& word) const { return schubert(parse_word(word)); }

 private:
  const WeylTable* T_;
  unsigned p_;
};

// Z_w -> Z_{sigma(w)}, with the index maps precomputed per group element.
class GaloisOnSchubert {
 public:
  GaloisOnSchubert(const WeylTable& T, const GaloisAction& G) {
    for (const auto& s : G.elements) maps_.push_back(galois_index(T, s));
    for (const auto& s : G.generators) gen_maps_.push_back(galois_index(T, s));
  }
  std::size_t order() const { return maps_.size(); }
  int image(std::size_t g, int d, int i) const { return maps_[g][d][i]; }
  int gen_image(std::size_t g, int d, int i) const { return gen_maps_[g][d][i]; }
  std::size_t num_generators() const { return gen_maps_.size(); }

  Vec act(std::size_t g, const Vec& x, int d) const {
    Vec y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) y[maps_[g][d][i]] = x[i];
    return y;
  }
  Vec act_gen(std::size_t g, const Vec& x, int d) const {
    Vec y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) y[gen_maps_[g][d][i]] = x[i];
    return y;
  }
  SchubertClass galois_act(std::size_t g, const SchubertClass& x) const {
    SchubertClass y;
    y.degree = x.degree;
    for (auto [i, k] : x.coeffs) y.coeffs[maps_[g][x.degree][i]] = k;
    return y;
  }

 private:
  std::vector<std::vector<std::vector<int>>> maps_;
  std::vector<std::vector<std::vector<int>>> gen_maps_;
};

}  // namespace qschow
