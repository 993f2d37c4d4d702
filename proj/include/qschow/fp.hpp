#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschow {

using Coef = std::uint8_t;
using Vec = std::vector<Coef>;

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficient storage is one byte.
inline void check_prime(unsigned p) {
  if (!is_prime(p) || p > 251)
    throw std::invalid_argument("prime must be a prime below 256, got " + std::to_string(p));
}

inline unsigned mod_int(long long a, unsigned p) {
  long long r = a % static_cast<long long>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

inline unsigned inv_mod(unsigned a, unsigned p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  return mod_int(t, p);
}

inline unsigned pow_mod(unsigned a, unsigned long long e, unsigned p) {
  unsigned long long r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

namespace detail {

template <unsigned P>
inline void axpy_fixed(Coef* a, const Coef* b, std::size_t n, unsigned k) {
  if constexpr (P == 2) {
    for (std::size_t i = 0; i < n; ++i) a[i] ^= b[i];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      a[i] = static_cast<Coef>((static_cast<unsigned>(a[i]) + k * static_cast<unsigned>(b[i])) % P);
  }
}

inline void axpy_generic(Coef* a, const Coef* b, std::size_t n, unsigned k, unsigned p) {
  for (std::size_t i = 0; i < n; ++i)
    a[i] = static_cast<Coef>((static_cast<unsigned>(a[i]) + k * static_cast<unsigned>(b[i])) % p);
}

}  // namespace detail

// a[from..] += k * b[from..]  (mod p)
inline void axpy(Vec& a, const Vec& b, unsigned k, unsigned p, std::size_t from = 0) {
  if (a.size() != b.size()) throw std::logic_error("axpy: length mismatch");
  k %= p;
  if (k == 0) return;
  std::size_t n = a.size() - from;
  Coef* pa = a.data() + from;
  const Coef* pb = b.data() + from;
  switch (p) {
    case 2: detail::axpy_fixed<2>(pa, pb, n, k); break;
    case 3: detail::axpy_fixed<3>(pa, pb, n, k); break;
    case 5: detail::axpy_fixed<5>(pa, pb, n, k); break;
    case 7: detail::axpy_fixed<7>(pa, pb, n, k); break;
    default: detail::axpy_generic(pa, pb, n, k, p);
  }
}

inline void scale(Vec& a, unsigned k, unsigned p) {
  for (auto& x : a) x = static_cast<Coef>(static_cast<unsigned>(x) * k % p);
}

inline bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

// Semi-echelon basis of a subspace of F_p^n. Rows have pivot entry 1 and are
// zero at the pivots of all rows inserted before them.  The standard vectors at
// non-pivot columns span a complement, so reduced vectors give quotient coordinates.
class Echelon {
 public:
  Echelon() = default;
  Echelon(std::size_t ncols, unsigned p) : n_(ncols), p_(p), pivot_row_(ncols, -1) {}

  std::size_t ncols() const { return n_; }
  unsigned prime() const { return p_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  int pivot_row(std::size_t col) const { return pivot_row_[col]; }

  // Reduces v against the first `upto` rows (all rows by default).
  void reduce(Vec& v, std::size_t upto = SIZE_MAX) const {
    std::size_t m = upto < rows_.size() ? upto : rows_.size();
    for (std::size_t i = 0; i < m; ++i) {
      unsigned c = v[piv_[i]];
      if (c) axpy(v, rows_[i], p_ - c, p_, piv_[i]);
    }
  }

  bool insert(Vec v) {
    if (full()) return false;
    reduce(v);
    std::size_t j = 0;
    while (j < n_ && v[j] == 0) ++j;
    if (j == n_) return false;
    if (v[j] != 1) scale(v, inv_mod(v[j], p_), p_);
    pivot_row_[j] = static_cast<int>(rows_.size());
    piv_.push_back(j);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return is_zero(v);
  }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (pivot_row_[j] < 0) out.push_back(j);
    return out;
  }

  // Non-pivot columns among the pivots of the first `prefix` rows.
  std::vector<std::size_t> non_pivots_prefix(std::size_t prefix) const {
    std::vector<char> used(n_, 0);
    for (std::size_t i = 0; i < prefix && i < piv_.size(); ++i) used[piv_[i]] = 1;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!used[j]) out.push_back(j);
    return out;
  }

  // Quotient coordinates of v, indexed like non_pivots().
  std::vector<unsigned> coords(Vec v) const {
    reduce(v);
    std::vector<unsigned> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (pivot_row_[j] < 0) out.push_back(v[j]);
    return out;
  }

 private:
  std::size_t n_ = 0;
  unsigned p_ = 2;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
  std::vector<int> pivot_row_;
};

inline std::size_t rank_of(const std::vector<Vec>& vs, std::size_t ncols, unsigned p) {
  Echelon e(ncols, p);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

// Kernel of the linear map sending e_j to images[j] (each of length m).
inline std::vector<Vec> kernel_of(const std::vector<Vec>& images, std::size_t m, unsigned p) {
  std::size_t n = images.size();
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  std::vector<Vec> out;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(m + n, 0);
    for (std::size_t i = 0; i < m; ++i) v[i] = images[j][i];
    v[m + j] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      unsigned c = v[piv[r]];
      if (c) axpy(v, rows[r], p - c, p, piv[r]);
    }
    std::size_t k = 0;
    while (k < m && v[k] == 0) ++k;
    if (k == m) {
      out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
    } else {
      if (v[k] != 1) scale(v, inv_mod(v[k], p), p);
      piv.push_back(k);
      rows.push_back(std::move(v));
    }
  }
  return out;
}

// dim(U + W) for subspaces given by spanning sets.
inline std::size_t sum_dim(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t n, unsigned p) {
  Echelon e(n, p);
  for (const auto& v : u) e.insert(v);
  for (const auto& v : w) e.insert(v);
  return e.rank();
}

// Echelon basis rows of a spanning set.
inline std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t n, unsigned p) {
  Echelon e(n, p);
  for (const auto& v : vs) e.insert(v);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(e.row(i));
  return out;
}

}  // namespace qschow
