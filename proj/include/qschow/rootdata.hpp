#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace qschow {

enum class Dynkin { A, B, C, D, E, F, G };

inline std::string type_letter(Dynkin t) {
  switch (t) {
    case Dynkin::A: return "A";
    case Dynkin::B: return "B";
    case Dynkin::C: return "C";
    case Dynkin::D: return "D";
    case Dynkin::E: return "E";
    case Dynkin::F: return "F";
    case Dynkin::G: return "G";
  }
  return "?";
}

// Accepts "A".."G" optionally followed by the rank ("E6", "G2").
inline Dynkin parse_type(const std::string& s, int* rank_out = nullptr) {
  if (s.empty()) throw std::invalid_argument("empty Dynkin type");
  Dynkin t;
  switch (s[0]) {
    case 'A': case 'a': t = Dynkin::A; break;
    case 'B': case 'b': t = Dynkin::B; break;
    case 'C': case 'c': t = Dynkin::C; break;
    case 'D': case 'd': t = Dynkin::D; break;
    case 'E': case 'e': t = Dynkin::E; break;
    case 'F': case 'f': t = Dynkin::F; break;
    case 'G': case 'g': t = Dynkin::G; break;
    default: throw std::invalid_argument("unknown Dynkin type '" + s + "'");
  }
  if (s.size() > 1) {
    int r = std::stoi(s.substr(1));
    if (rank_out) *rank_out = r;
  }
  return t;
}

inline bool valid_type_rank(Dynkin t, int n) {
  switch (t) {
    case Dynkin::A: return n >= 1 && n <= 8;
    case Dynkin::B: return n >= 2 && n <= 8;
    case Dynkin::C: return n >= 2 && n <= 8;
    case Dynkin::D: return n >= 3 && n <= 8;
    case Dynkin::E: return n >= 6 && n <= 8;
    case Dynkin::F: return n == 4;
    case Dynkin::G: return n == 2;
  }
  return false;
}

inline std::size_t classical_positive_root_count(Dynkin t, int n) {
  switch (t) {
    case Dynkin::A: return n * (n + 1) / 2;
    case Dynkin::B: case Dynkin::C: return n * n;
    case Dynkin::D: return n * (n - 1);
    case Dynkin::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Dynkin::F: return 24;
    case Dynkin::G: return 6;
  }
  return 0;
}

// Degrees of basic invariants; the Weyl group Poincare polynomial is prod [d_i]_t.
inline std::vector<int> weyl_degrees(Dynkin t, int n) {
  std::vector<int> d;
  switch (t) {
    case Dynkin::A: for (int i = 2; i <= n + 1; ++i) d.push_back(i); break;
    case Dynkin::B: case Dynkin::C: for (int i = 1; i <= n; ++i) d.push_back(2 * i); break;
    case Dynkin::D: for (int i = 1; i < n; ++i) d.push_back(2 * i); d.push_back(n); break;
    case Dynkin::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Dynkin::F: d = {2, 6, 8, 12}; break;
    case Dynkin::G: d = {2, 6}; break;
  }
  return d;
}

// Coefficients of the Poincare polynomial truncated at `cap`, as doubles to survive E8.
inline std::vector<double> poincare_series(Dynkin t, int n, int cap) {
  std::vector<double> c(cap + 1, 0.0);
  c[0] = 1.0;
  for (int d : weyl_degrees(t, n)) {
    // multiply by 1 + t + ... + t^{d-1}
    std::vector<double> out(cap + 1, 0.0);
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; j < d && i + j <= cap; ++j) out[i + j] += c[i];
    c = out;
  }
  return c;
}

struct RootDatum {
  Dynkin type = Dynkin::A;
  int rank = 0;
  IMat cartan;                 // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<IVec> simple;    // simple roots in fundamental-weight coordinates
  std::vector<IVec> roots;     // positive roots, weight coordinates
  std::vector<IVec> roots_s;   // positive roots, simple-root coordinates
  std::vector<IVec> coroots;   // coroots in simple-coroot coordinates
  IVec rho2;                   // sum of positive coroots, simple-coroot coordinates
  std::map<IVec, int> root_index_w;

  std::string name() const { return type_letter(type) + std::to_string(rank); }
  std::size_t num_pos() const { return roots.size(); }

  // <lambda, alpha^vee> for the positive root with index a.
  long long pairing(const IVec& lambda, std::size_t a) const {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += lambda[j] * coroots[a][j];
    return s;
  }

  // Sign of a root given in weight coordinates (+1 positive, -1 negative).
  int root_sign(const IVec& w) const {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += rho2[j] * w[j];
    return s > 0 ? 1 : -1;
  }

  int root_index(const IVec& w) const {
    auto it = root_index_w.find(w);
    return it == root_index_w.end() ? -1 : it->second;
  }

  IVec fundamental_weight(int i) const {
    IVec v(rank, 0);
    v[i] = 1;
    return v;
  }

  // simple-root coordinates -> weight coordinates
  IVec to_weight(const IVec& s) const {
    IVec w(rank, 0);
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < rank; ++j) w[k] += s[j] * cartan[k][j];
    return w;
  }
};

inline IMat cartan_matrix(Dynkin t, int n) {
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t) {
    case Dynkin::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Dynkin::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Dynkin::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Dynkin::D:
      for (int i = 0; i + 4 <= n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case Dynkin::E:
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case Dynkin::F:
      edge(0, 1); edge(1, 2); edge(2, 3);
      a[2][1] = -2;
      break;
    case Dynkin::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

inline RootDatum build_root_datum(Dynkin t, int n) {
  if (!valid_type_rank(t, n))
    throw std::invalid_argument("invalid type/rank pair " + type_letter(t) + std::to_string(n));
  RootDatum R;
  R.type = t;
  R.rank = n;
  R.cartan = cartan_matrix(t, n);
  const IMat& A = R.cartan;
  for (int j = 0; j < n; ++j) {
    IVec w(n);
    for (int k = 0; k < n; ++k) w[k] = A[k][j];
    R.simple.push_back(w);
  }
  // closure under simple reflections, simple-root coordinates
  std::vector<IVec> rs, cs;
  std::set<IVec> seen;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    rs.push_back(e);
    cs.push_back(e);
    seen.insert(e);
  }
  for (std::size_t q = 0; q < rs.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      IVec b = rs[q];
      long long c = 0;
      for (int j = 0; j < n; ++j) c += b[j] * A[i][j];
      if (c == 0) continue;
      b[i] -= c;
      bool pos = true, nz = false;
      for (auto x : b) {
        if (x < 0) pos = false;
        if (x) nz = true;
      }
      if (!pos || !nz || seen.count(b)) continue;
      IVec bc = cs[q];
      long long d = 0;
      for (int j = 0; j < n; ++j) d += bc[j] * A[j][i];
      bc[i] -= d;
      seen.insert(b);
      rs.push_back(b);
      cs.push_back(bc);
    }
  }
  // order: by height, then lexicographic, for determinism
  std::vector<std::size_t> ord(rs.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  auto height = [&](const IVec& v) { long long h = 0; for (auto x : v) h += x; return h; };
  std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) {
    long long hx = height(rs[x]), hy = height(rs[y]);
    if (hx != hy) return hx < hy;
    return rs[x] > rs[y];
  });
  R.rho2.assign(n, 0);
  for (std::size_t k : ord) {
    R.roots_s.push_back(rs[k]);
    R.coroots.push_back(cs[k]);
    R.roots.push_back(R.to_weight(rs[k]));
    for (int j = 0; j < n; ++j) R.rho2[j] += cs[k][j];
  }
  for (std::size_t a = 0; a < R.roots.size(); ++a) R.root_index_w[R.roots[a]] = static_cast<int>(a);
  if (R.roots.size() != classical_positive_root_count(t, n))
    throw std::logic_error("root closure produced wrong count for " + R.name());
  return R;
}

inline RootDatum build_root_datum(const std::string& type, int rank) {
  int r = rank;
  Dynkin t = parse_type(type, &r);
  if (rank > 0 && r != rank && type.size() > 1)
    throw std::invalid_argument("rank mismatch in type " + type);
  return build_root_datum(t, r);
}

// ---------------------------------------------------------------- Galois action

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // (a o b)(i) = a(b(i))
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

struct GaloisAction {
  int twist = 1;                 // 1 split, 2, 3, 6
  std::vector<Perm> elements;    // elements[0] is the identity
  std::vector<Perm> generators;  // empty when split

  std::size_t order() const { return elements.size(); }
  bool split() const { return twist == 1; }
  bool cyclic_prime() const { return twist == 2 || twist == 3; }
  // generator sigma for the cyclic case
  const Perm& sigma() const { return generators.at(0); }
};

inline std::string twist_prefix(int twist) { return twist == 1 ? "" : std::to_string(twist); }

inline GaloisAction diagram_automorphism(const RootDatum& R, int twist) {
  int n = R.rank;
  GaloisAction g;
  g.twist = twist;
  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  if (twist == 1) {
    g.elements = {id};
    return g;
  }
  auto bad = [&]() {
    return std::invalid_argument("twist " + std::to_string(twist) + " incompatible with " + R.name());
  };
  if (twist == 2) {
    Perm s = id;
    if (R.type == Dynkin::A && n >= 2) {
      for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
    } else if (R.type == Dynkin::D) {
      std::swap(s[n - 2], s[n - 1]);
    } else if (R.type == Dynkin::E && n == 6) {
      s[0] = 5; s[5] = 0; s[2] = 4; s[4] = 2;
    } else {
      throw bad();
    }
    g.generators = {s};
  } else if (twist == 3 || twist == 6) {
    if (R.type != Dynkin::D || n != 4) throw bad();
    // 1 -> 3 -> 4 -> 1 (Bourbaki labels)
    Perm s = id;
    s[0] = 2; s[2] = 3; s[3] = 0;
    g.generators = {s};
    if (twist == 6) {
      Perm t = id;
      std::swap(t[2], t[3]);
      g.generators.push_back(t);
    }
  } else {
    throw bad();
  }
  for (const auto& s : g.generators)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (R.cartan[s[i]][s[j]] != R.cartan[i][j]) throw std::logic_error("not a diagram automorphism");
  // closure
  g.elements = {id};
  for (std::size_t q = 0; q < g.elements.size(); ++q)
    for (const auto& s : g.generators) {
      Perm c = compose(s, g.elements[q]);
      if (std::find(g.elements.begin(), g.elements.end(), c) == g.elements.end()) g.elements.push_back(c);
    }
  if (static_cast<int>(g.elements.size()) != twist) throw std::logic_error("diagram group has wrong order");
  return g;
}

// Weight coordinates permute with the nodes: sigma(varpi_i) = varpi_{sigma(i)}.
inline IVec act_weight(const Perm& s, const IVec& w) {
  IVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[s[i]] = w[i];
  return out;
}

// ---------------------------------------------------------------- fundamental groups

struct Pi1Datum {
  std::string name;             // canonical name, see canonical_pi1
  IVec mods;                    // invariant factors of the character module
  IMat proj;                    // rank x k : image of varpi_i
  std::vector<IMat> action;     // per Galois element, k x k matrix on residues

  bool trivial() const { return mods.empty(); }
  long long order() const {
    long long o = 1;
    for (auto m : mods) o *= m;
    return o;
  }
  IVec project(const IVec& w) const {
    IVec out(mods.size(), 0);
    for (std::size_t j = 0; j < mods.size(); ++j) {
      long long s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * proj[i][j];
      out[j] = pmod(s, mods[j]);
    }
    return out;
  }
  IVec act(std::size_t g, const IVec& x) const {
    IVec out(mods.size(), 0);
    for (std::size_t r = 0; r < mods.size(); ++r) {
      long long s = 0;
      for (std::size_t c = 0; c < mods.size(); ++c) s += action[g][r][c] * x[c];
      out[r] = pmod(s, mods[r]);
    }
    return out;
  }
};

// Names: sc, ad, mu<l>, so, hs, hs3, mu2xmu2, mu2x2 (the twisted form of mu2 x mu2).
inline std::vector<std::string> listed_pi1(const RootDatum& R, int twist) {
  int n = R.rank;
  std::vector<std::string> out;
  switch (R.type) {
    case Dynkin::A:
      for (int l = 1; l <= n + 1; ++l)
        if ((n + 1) % l == 0) out.push_back(l == 1 ? "sc" : "mu" + std::to_string(l));
      break;
    case Dynkin::B: case Dynkin::C: out = {"sc", "mu2"}; break;
    case Dynkin::D:
      if (twist == 1) {
        if (n % 2) out = {"sc", "mu2", "mu4"};
        else out = {"sc", "so", "hs", "hs3", "mu2xmu2"};
      } else if (twist == 2) {
        if (n % 2) out = {"sc", "mu2", "mu4"};
        else out = {"sc", "mu2", "mu2x2"};
      } else {
        out = {"sc", "mu2x2"};
      }
      break;
    case Dynkin::E:
      if (n == 6) out = {"sc", "mu3"};
      else if (n == 7) out = {"sc", "mu2"};
      else out = {"sc"};
      break;
    case Dynkin::F: case Dynkin::G: out = {"sc"}; break;
  }
  return out;
}

inline std::string canonical_pi1(const RootDatum& R, int twist, std::string name) {
  if (name == "1" || name == "mu1") name = "sc";
  if (name == "ad") {
    int n = R.rank;
    switch (R.type) {
      case Dynkin::A: name = "mu" + std::to_string(n + 1); break;
      case Dynkin::B: case Dynkin::C: name = "mu2"; break;
      case Dynkin::D: name = (n % 2) ? "mu4" : (twist == 1 ? "mu2xmu2" : "mu2x2"); break;
      case Dynkin::E: name = n == 6 ? "mu3" : n == 7 ? "mu2" : "sc"; break;
      default: name = "sc";
    }
  }
  if (R.type == Dynkin::D && twist == 1 && R.rank % 2 == 1 && name == "so") name = "mu2";
  auto l = listed_pi1(R, twist);
  if (std::find(l.begin(), l.end(), name) == l.end())
    throw std::invalid_argument("fundamental group '" + name + "' is not listed for " + twist_prefix(twist) + R.name());
  return name;
}

inline Pi1Datum pi1_quotient(const RootDatum& R, const GaloisAction& G, const std::string& requested) {
  int n = R.rank;
  Pi1Datum P;
  P.name = canonical_pi1(R, G.twist, requested);
  const std::string& nm = P.name;
  auto col = [&](long long m) {
    P.mods.push_back(m);
    for (auto& row : P.proj) row.push_back(0);
  };
  P.proj.assign(n, IVec());
  if (nm == "sc") {
    // zero module
  } else if (R.type == Dynkin::A) {
    long long l = std::stoll(nm.substr(2));
    col(l);
    for (int i = 0; i < n; ++i) P.proj[i][0] = (i + 1) % l;
  } else if (R.type == Dynkin::B) {
    col(2);
    P.proj[n - 1][0] = 1;
  } else if (R.type == Dynkin::C) {
    col(2);
    for (int i = 0; i < n; ++i) P.proj[i][0] = (i + 1) % 2;
  } else if (R.type == Dynkin::D) {
    if (nm == "mu4") {
      col(4);
      for (int i = 0; i < n - 2; ++i) P.proj[i][0] = (2 * (i + 1)) % 4;
      P.proj[n - 2][0] = 1;
      P.proj[n - 1][0] = 3;
    } else if (nm == "mu2" || nm == "so") {
      col(2);
      P.proj[n - 2][0] = 1;
      P.proj[n - 1][0] = 1;
    } else if (nm == "hs") {
      col(2);
      for (int i = 0; i < n; ++i) P.proj[i][0] = (i % 2 == 0 && i != n - 1) ? 1 : 0;
    } else if (nm == "hs3") {
      col(2);
      for (int i = 0; i < n - 2; ++i) P.proj[i][0] = (i % 2 == 0) ? 1 : 0;
      P.proj[n - 2][0] = 0;
      P.proj[n - 1][0] = 1;
    } else if (nm == "mu2xmu2" || nm == "mu2x2") {
      col(2);
      col(2);
      for (int i = 0; i < n - 2; ++i) P.proj[i][0] = P.proj[i][1] = (i + 1) % 2;
      P.proj[n - 2][0] = 1;
      P.proj[n - 1][1] = 1;
    }
  } else if (R.type == Dynkin::E && n == 6) {
    col(3);
    long long v[6] = {1, 0, 2, 0, 1, 2};
    for (int i = 0; i < 6; ++i) P.proj[i][0] = v[i];
  } else if (R.type == Dynkin::E && n == 7) {
    col(2);
    P.proj[1][0] = P.proj[4][0] = P.proj[6][0] = 1;
  }
  if (P.mods.empty()) P.proj.assign(n, IVec());
  for (int j = 0; j < n; ++j)
    for (long long x : P.project(R.simple[j]))
      if (x != 0) throw std::logic_error("projection of " + nm + " does not kill the root lattice");
  // Galois action on the module, found by search and then checked on all weights.
  std::size_t k = P.mods.size();
  for (const auto& s : G.elements) {
    IMat found;
    if (k == 0) {
      found = IMat();
    } else {
      long long m = *std::max_element(P.mods.begin(), P.mods.end());
      std::size_t entries = k * k;
      long long total = 1;
      for (std::size_t e = 0; e < entries; ++e) total *= m;
      for (long long code = 0; code < total && found.empty(); ++code) {
        IMat M(k, IVec(k));
        long long c = code;
        for (std::size_t e = 0; e < entries; ++e) { M[e / k][e % k] = c % m; c /= m; }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          IVec src = P.proj[i];
          IVec dst = P.proj[s[i]];
          for (std::size_t r = 0; r < k && ok; ++r) {
            long long v = 0;
            for (std::size_t cc = 0; cc < k; ++cc) v += M[r][cc] * src[cc];
            if (pmod(v - dst[r], P.mods[r]) != 0) ok = false;
          }
        }
        if (ok) found = M;
      }
      if (found.empty())
        throw std::invalid_argument("fundamental group '" + nm + "' is not stable under the diagram action");
    }
    P.action.push_back(found);
  }
  return P;
}

// Basis of X*(T): weights whose projection to X*(pi1) vanishes.
inline std::vector<IVec> character_lattice_basis(const RootDatum& R, const Pi1Datum& P) {
  if (P.trivial()) {
    std::vector<IVec> b;
    for (int i = 0; i < R.rank; ++i) b.push_back(R.fundamental_weight(i));
    return b;
  }
  return kernel_lattice(P.proj, P.mods);
}

}  // namespace qschow
