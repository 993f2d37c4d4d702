#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qschow {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major

inline long long pmod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Basis of the lattice { c in Z^n : sum_i c_i * proj[i][j] = 0 mod mods[j] for all j }.
// proj is n x k, one row per coordinate of Z^n.
inline std::vector<IVec> kernel_lattice(const IMat& proj, const IVec& mods) {
  std::size_t n = proj.size();
  std::vector<IVec> basis(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  for (std::size_t j = 0; j < mods.size(); ++j) {
    long long m = mods[j];
    if (m <= 0) throw std::invalid_argument("kernel_lattice: modulus must be positive");
    IVec v(n);
    for (std::size_t b = 0; b < n; ++b) {
      long long s = 0;
      for (std::size_t t = 0; t < n; ++t) s += basis[b][t] * proj[t][j];
      v[b] = pmod(s, m);
    }
    // Euclid on the values by unimodular basis changes.
    for (;;) {
      std::size_t best = n;
      for (std::size_t b = 0; b < n; ++b)
        if (v[b] != 0 && (best == n || v[b] < v[best])) best = b;
      if (best == n) break;
      bool other = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == best || v[b] == 0) continue;
        long long q = v[b] / v[best];
        v[b] -= q * v[best];
        for (std::size_t t = 0; t < n; ++t) basis[b][t] -= q * basis[best][t];
        if (v[b] != 0) other = true;
      }
      if (!other) {
        long long g = v[best];
        long long mult = m / std::gcd(g, m);
        for (std::size_t t = 0; t < n; ++t) basis[best][t] *= mult;
        v[best] = 0;
        break;
      }
    }
  }
  return basis;
}

// |det| of a square integer matrix via fraction-free elimination.
inline long long abs_det(IMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  long long det = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  det = a[n - 1][n - 1];
  return std::llabs(det);
}

}  // namespace qschow
