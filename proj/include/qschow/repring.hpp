#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace qschow {

// Z^r + Z/m_1 + ... + Z/m_t with a finite group acting by integer matrices.
// Coordinates: free part first, then residues.
class CharacterModule {
 public:
  CharacterModule(int free_rank, IVec mods, std::vector<IMat> action = {})
      : r_(free_rank), mods_(std::move(mods)), action_(std::move(action)) {
    for (long long m : mods_)
      if (m < 2) throw std::invalid_argument("torsion invariant factors must be at least 2");
    std::size_t n = size();
    if (action_.empty()) action_.push_back(identity());
    for (const auto& M : action_) {
      if (M.size() != n) throw std::invalid_argument("action matrix has the wrong size");
      for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("action matrix has the wrong size");
      // columns of torsion generators must be killed by their order
      for (std::size_t j = r_; j < n; ++j) {
        IVec col(n, 0);
        for (std::size_t i = 0; i < n; ++i) col[i] = M[i][j] * mods_[j - r_];
        if (!is_zero_elem(normalize(col))) throw std::invalid_argument("action is not well defined on torsion");
      }
    }
    if (!same_map(action_[0], identity())) throw std::invalid_argument("first action matrix must be the identity");
    // closure under composition makes the matrices a finite group of automorphisms
    for (const auto& A : action_)
      for (const auto& B : action_) {
        bool found = false;
        for (const auto& C : action_)
          if (same_map(compose(A, B), C)) found = true;
        if (!found) throw std::invalid_argument("action matrices are not closed under composition");
      }
  }

  std::size_t size() const { return r_ + mods_.size(); }
  int free_rank() const { return r_; }
  const IVec& mods() const { return mods_; }
  std::size_t group_order() const { return action_.size(); }
  const IMat& action(std::size_t g) const { return action_[g]; }

  IVec normalize(IVec v) const {
    if (v.size() != size()) throw std::invalid_argument("element has the wrong length");
    for (std::size_t j = 0; j < mods_.size(); ++j) v[r_ + j] = pmod(v[r_ + j], mods_[j]);
    return v;
  }
  IVec zero() const { return IVec(size(), 0); }
  IVec unit(std::size_t i) const {
    IVec v = zero();
    v[i] = 1;
    return v;
  }
  IVec add(const IVec& a, const IVec& b) const {
    IVec c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = a[i] + b[i];
    return normalize(c);
  }
  IVec scale(long long k, const IVec& a) const {
    IVec c(size());
    for (std::size_t i = 0; i < size(); ++i) c[i] = k * a[i];
    return normalize(c);
  }
  IVec act(std::size_t g, const IVec& v) const { return normalize(apply(action_[g], v)); }
  bool is_zero_elem(const IVec& v) const {
    for (auto x : v)
      if (x) return false;
    return true;
  }

  static IVec apply(const IMat& M, const IVec& v) {
    IVec out(M.size(), 0);
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) out[i] += M[i][j] * v[j];
    return out;
  }

 private:
  IMat identity() const {
    IMat M(size(), IVec(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) M[i][i] = 1;
    return M;
  }
  IMat compose(const IMat& A, const IMat& B) const {
    std::size_t n = size();
    IMat C(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
  }
  bool same_map(const IMat& A, const IMat& B) const {
    for (std::size_t j = 0; j < size(); ++j) {
      IVec a = normalize(apply(A, unit(j))), b = normalize(apply(B, unit(j)));
      if (a != b) return false;
    }
    return true;
  }
  int r_;
  IVec mods_;
  std::vector<IMat> action_;
};

// Z-combination of characters x^lambda.
class RepElement {
 public:
  explicit RepElement(const CharacterModule& M) : M_(&M) {}
  RepElement(const CharacterModule& M, const std::vector<std::pair<IVec, long long>>& terms) : M_(&M) {
    for (const auto& [l, c] : terms) add_term(l, c);
  }
  static RepElement character(const CharacterModule& M, const IVec& lambda) { return RepElement(M, {{lambda, 1}}); }
  static RepElement one(const CharacterModule& M) { return character(M, M.zero()); }

  const CharacterModule& module() const { return *M_; }
  const std::map<IVec, long long>& terms() const { return terms_; }
  long long coefficient(const IVec& l) const {
    auto it = terms_.find(M_->normalize(l));
    return it == terms_.end() ? 0 : it->second;
  }
  void add_term(const IVec& l, long long c) {
    IVec k = M_->normalize(l);
    terms_[k] += c;
    if (terms_[k] == 0) terms_.erase(k);
  }
  long long dimension() const {
    long long d = 0;
    for (const auto& [l, c] : terms_) d += c;
    return d;
  }

  bool galois_invariant() const {
    for (std::size_t g = 0; g < M_->group_order(); ++g)
      for (const auto& [l, c] : terms_)
        if (coefficient(M_->act(g, l)) != c) return false;
    return true;
  }

  RepElement operator+(const RepElement& o) const {
    same_module(o);
    RepElement r = *this;
    for (const auto& [l, c] : o.terms_) r.add_term(l, c);
    return r;
  }
  RepElement operator-(const RepElement& o) const {
    same_module(o);
    RepElement r = *this;
    for (const auto& [l, c] : o.terms_) r.add_term(l, -c);
    return r;
  }
  RepElement operator*(const RepElement& o) const {
    same_module(o);
    RepElement r(*M_);
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) r.add_term(M_->add(a, b), ca * cb);
    return r;
  }
  bool operator==(const RepElement& o) const { return M_ == o.M_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += "x^(";
      for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
      s += ")";
    }
    return s;
  }

 private:
  void same_module(const RepElement& o) const {
    if (M_ != o.M_) throw std::invalid_argument("representation elements live in different modules");
  }
  const CharacterModule* M_;
  std::map<IVec, long long> terms_;
};

// Homomorphism of character modules, matrix of size target.size() x source.size().
struct ModuleMap {
  const CharacterModule* source;
  const CharacterModule* target;
  IMat matrix;

  IVec operator()(const IVec& v) const { return target->normalize(CharacterModule::apply(matrix, v)); }
};

inline void check_module_map(const ModuleMap& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (f.matrix.size() != T.size()) throw std::invalid_argument("map matrix has the wrong number of rows");
  for (const auto& row : f.matrix)
    if (row.size() != S.size()) throw std::invalid_argument("map matrix has the wrong number of columns");
  for (std::size_t j = S.free_rank(); j < S.size(); ++j) {
    IVec v(S.size(), 0);
    v[j] = S.mods()[j - S.free_rank()];
    if (!T.is_zero_elem(f(v))) throw std::invalid_argument("map is not well defined on torsion");
  }
  if (S.group_order() != T.group_order()) throw std::invalid_argument("modules carry actions of different groups");
  for (std::size_t g = 0; g < S.group_order(); ++g)
    for (std::size_t j = 0; j < S.size(); ++j)
      if (f(S.act(g, S.unit(j))) != T.act(g, f(S.unit(j))))
        throw std::invalid_argument("map is not Galois equivariant");
}

// Res along the torus map whose character map is f.
inline RepElement restrict(const ModuleMap& f, const RepElement& v) {
  if (&v.module() != f.source) throw std::invalid_argument("element does not live in the source module");
  check_module_map(f);
  RepElement out(*f.target);
  for (const auto& [l, c] : v.terms()) out.add_term(f(l), c);
  return out;
}

inline RepElement adams(long long m, const RepElement& v) {
  const auto& M = v.module();
  RepElement out(M);
  for (const auto& [l, c] : v.terms()) out.add_term(M.scale(m, l), c);
  return out;
}

struct IdentityCheck {
  bool equal = false;
  RepElement diff;
};

inline IdentityCheck verify_identity(const RepElement& lhs, const RepElement& rhs) {
  RepElement d = lhs - rhs;
  return {d.terms().empty(), d};
}

// ------------------------------------------------------------------ modules used by the ideal tables

// Permutation matrix for a node permutation, extended by a matrix on the torsion part.
inline IMat block_action(const std::vector<int>& perm, const IMat& torsion) {
  std::size_t r = perm.size(), t = torsion.size(), n = r + t;
  IMat M(n, IVec(n, 0));
  for (std::size_t i = 0; i < r; ++i) M[perm[i]][i] = 1;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) M[r + i][r + j] = torsion[i][j];
  return M;
}

inline std::vector<int> identity_perm(int r) {
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = i;
  return p;
}

// X*(T~) of a quasi-split simply connected group with its diagram involution.
inline CharacterModule weight_module(const std::vector<int>& tau) {
  int r = static_cast<int>(tau.size());
  return CharacterModule(r, {}, {block_action(identity_perm(r), {}), block_action(tau, {})});
}

// X*(T~) + X*(pi_1) with pi_1 of invariant factors mods and involution tors on it.
inline CharacterModule weight_plus_torsion(const std::vector<int>& tau, const IVec& mods, const IMat& tors) {
  int r = static_cast<int>(tau.size());
  IMat id(mods.size(), IVec(mods.size(), 0));
  for (std::size_t i = 0; i < mods.size(); ++i) id[i][i] = 1;
  return CharacterModule(r, mods, {block_action(identity_perm(r), id), block_action(tau, tors)});
}

// Projection of X*(T~) + X*(pi_1) onto the pi_1 summand.
inline ModuleMap torsion_projection(const CharacterModule& S, const CharacterModule& N) {
  IMat M(N.size(), IVec(S.size(), 0));
  for (std::size_t i = 0; i < N.size(); ++i) M[i][S.free_rank() + i] = 1;
  return {&S, &N, M};
}

}  // namespace qschow
