#pragma once

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fp.hpp"
#include "json.hpp"

namespace qschow {

constexpr int kMaxGens = 16;
using Mono = std::array<std::uint8_t, kMaxGens>;

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : m) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

// Polynomial with integer coefficients; reduced mod p when it enters an algebra.
using Poly = std::map<Mono, long long>;

inline Mono mono_one() { return Mono{}; }
inline Mono mono_gen(int i, int e = 1) {
  Mono m{};
  m[i] = static_cast<std::uint8_t>(e);
  return m;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono c{};
  for (int i = 0; i < kMaxGens; ++i) {
    int s = a[i] + b[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    c[i] = static_cast<std::uint8_t>(s);
  }
  return c;
}
inline Poly poly_mono(const Mono& m, long long c = 1) { return Poly{{m, c}}; }
inline Poly poly_gen(int i, int e = 1) { return poly_mono(mono_gen(i, e)); }
inline Poly poly_add(Poly a, const Poly& b, long long k = 1) {
  for (const auto& [m, c] : b) {
    a[m] += k * c;
    if (a[m] == 0) a.erase(m);
  }
  return a;
}
inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m = mono_mul(ma, mb);
      c[m] += ca * cb;
      if (c[m] == 0) c.erase(m);
    }
  return c;
}
inline Poly poly_pow(const Poly& a, int e) {
  Poly r = poly_mono(mono_one());
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

// "e1^4 + e2*e3 - 2*e1^2*e2"; no parentheses.
inline Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
  Poly out;
  std::size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& why) { throw std::invalid_argument("cannot parse polynomial '" + text + "': " + why); };
  skip();
  if (i == n) fail("empty");
  if (text.substr(i) == "0") return out;
  int sign = 1;
  bool first = true;
  while (i < n) {
    skip();
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    long long coef = sign;
    Mono m{};
    bool any = false;
    for (;;) {
      skip();
      if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        long long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        coef *= v;
        any = true;
      } else if (i < n && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        std::size_t s = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string nm = text.substr(s, i - s);
        int g = -1;
        for (std::size_t k = 0; k < names.size(); ++k)
          if (names[k] == nm) g = static_cast<int>(k);
        if (g < 0) fail("unknown generator " + nm);
        int e = 1;
        skip();
        if (i < n && text[i] == '^') {
          ++i;
          skip();
          if (i == n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("bad exponent");
          e = 0;
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) e = e * 10 + (text[i++] - '0');
        }
        m = mono_mul(m, mono_gen(g, e));
        any = true;
      } else {
        fail("unexpected character");
      }
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out = poly_add(out, poly_mono(m, coef));
  }
  return out;
}

struct GeneratorSpec {
  std::string name;
  int degree = 1;
  int bound = 2;               // gen^bound = rewrite (or 0)
  std::optional<Poly> rewrite;  // in earlier generators and lower powers of this one
};

// F_p[e_1..e_s] modulo e_i^{N_i} = g_i (a monic tower) and extra homogeneous relations.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(unsigned p, std::vector<GeneratorSpec> gens, std::vector<Poly> relations = {}, int cap = -1)
      : p_(p), gens_(std::move(gens)), rels_(std::move(relations)) {
    check_prime(p);
    if (gens_.size() > static_cast<std::size_t>(kMaxGens)) throw std::invalid_argument("too many generators");
    top_ = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const auto& g = gens_[i];
      if (g.degree < 1) throw std::invalid_argument("generator degrees must be positive");
      if (g.bound < 1 || g.bound > 120) throw std::invalid_argument("generator bounds must lie in 1..120");
      top_ += (g.bound - 1) * g.degree;
      if (g.rewrite) {
        int d = g.bound * g.degree;
        for (const auto& [m, c] : *g.rewrite) {
          if (mono_degree(m) != d) throw std::invalid_argument("inhomogeneous rewrite for " + g.name);
          for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (m[j]) throw std::invalid_argument("rewrite for " + g.name + " uses a later generator");
          if (m[i] >= g.bound) throw std::invalid_argument("rewrite for " + g.name + " is not of lower order");
        }
      }
    }
    cap_ = cap < 0 ? top_ : std::min(cap, top_);
    for (const auto& r : rels_) {
      if (r.empty()) continue;
      int d = mono_degree(r.begin()->first);
      for (const auto& [m, c] : r)
        if (mono_degree(m) != d) throw std::invalid_argument("inhomogeneous relation");
    }
    enumerate();
    build_ideal();
  }

  unsigned prime() const { return p_; }
  int cap() const { return cap_; }
  int top_degree() const { return top_; }
  std::size_t ngens() const { return gens_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  const std::vector<Poly>& relations() const { return rels_; }
  std::vector<std::string> names() const {
    std::vector<std::string> v;
    for (const auto& g : gens_) v.push_back(g.name);
    return v;
  }

  int mono_degree(const Mono& m) const {
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
  }
  std::size_t ambient_dim(int d) const { return d < 0 || d > cap_ ? 0 : monos_[d].size(); }
  const std::vector<Mono>& monomials(int d) const { return monos_.at(d); }
  const Echelon& ideal(int d) const { return ideal_.at(d); }
  std::size_t dim(int d) const { return d < 0 || d > cap_ ? 0 : ambient_dim(d) - ideal_[d].rank(); }
  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (int d = 0; d <= cap_; ++d) h.push_back(dim(d));
    return h;
  }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (int d = 0; d <= cap_; ++d) t += dim(d);
    return t;
  }
  // Non-pivot monomial positions: a basis of the quotient in degree d.
  std::vector<std::size_t> basis(int d) const { return ideal_.at(d).non_pivots(); }

  Vec zero(int d) const { return Vec(ambient_dim(d), 0); }
  Vec reduce(Vec v, int d) const {
    ideal_[d].reduce(v);
    return v;
  }
  Vec coords(const Vec& v, int d) const {
    Vec r = reduce(v, d), out;
    for (std::size_t j : basis(d)) out.push_back(r[j]);
    return out;
  }
  Vec lift(const Vec& c, int d) const {
    Vec v = zero(d);
    auto b = basis(d);
    for (std::size_t k = 0; k < b.size(); ++k) v[b[k]] = c[k];
    return v;
  }

  // Reduced vector of a homogeneous polynomial (zero vector beyond cap).
  Vec element(const Poly& f, int d) const {
    if (d > cap_ || d < 0) return {};
    Vec v = zero(d);
    for (const auto& [m, c] : f) {
      if (mono_degree(m) != d) throw std::invalid_argument("inhomogeneous element");
      unsigned k = mod_int(c, p_);
      if (k) add_nf(v, m, k);
    }
    return reduce(v, d);
  }
  Vec element(const Poly& f) const {
    if (f.empty()) throw std::invalid_argument("degree of the zero polynomial is undefined");
    return element(f, mono_degree(f.begin()->first));
  }
  Vec generator(int i) const { return element(poly_gen(i), gens_[i].degree); }
  Vec unit() const { return element(poly_mono(mono_one()), 0); }

  Vec mul(const Vec& a, int da, const Vec& b, int db) const {
    int d = da + db;
    if (d > cap_) return {};
    Vec out = zero(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j]) continue;
        add_nf(out, mono_mul(monos_[da][i], monos_[db][j]), (a[i] * b[j]) % p_);
      }
    }
    return reduce(out, d);
  }

  Poly to_poly(const Vec& v, int d) const {
    Poly f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) f[monos_[d][i]] = v[i];
    return f;
  }
  std::string mono_str(const Mono& m) const {
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += gens_[i].name;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }
  std::string poly_str(const Poly& f) const {
    if (f.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : f) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += std::to_string(c) + (mono_str(m) == "1" ? "" : "*");
      if (c == 1 || mono_str(m) != "1") s += mono_str(m);
    }
    return s;
  }

  // The full list of defining relations as polynomials (tower and extra).
  std::vector<Poly> defining_relations() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      Poly r = poly_gen(static_cast<int>(i), gens_[i].bound);
      if (gens_[i].rewrite) r = poly_add(r, *gens_[i].rewrite, -1);
      out.push_back(r);
    }
    for (const auto& r : rels_) out.push_back(r);
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["cap"] = cap_;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : gens_) {
      nlohmann::json gj{{"name", g.name}, {"degree", g.degree}, {"bound", g.bound}};
      if (g.rewrite) gj["rewrite"] = poly_str(*g.rewrite);
      j["generators"].push_back(gj);
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& r : rels_) j["relations"].push_back(poly_str(r));
    return j;
  }

 private:
  void enumerate() {
    monos_.assign(cap_ + 1, {});
    index_.clear();
    Mono m{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int d) {
      if (i == gens_.size()) {
        index_[m] = static_cast<int>(monos_[d].size());
        monos_[d].push_back(m);
        return;
      }
      for (int e = 0; e < gens_[i].bound && d + e * gens_[i].degree <= cap_; ++e) {
        m[i] = static_cast<std::uint8_t>(e);
        rec(i + 1, d + e * gens_[i].degree);
      }
      m[i] = 0;
    };
    rec(0, 0);
  }

  void build_ideal() {
    ideal_.clear();
    for (int d = 0; d <= cap_; ++d) {
      ideal_.emplace_back(monos_[d].size(), p_);
      for (const auto& r : rels_) {
        if (r.empty()) continue;
        int e = mono_degree(r.begin()->first);
        if (e > d) continue;
        for (const auto& mu : monos_[d - e]) {
          if (ideal_[d].full()) break;
          Vec v = zero(d);
          for (const auto& [m, c] : r) {
            unsigned k = mod_int(c, p_);
            if (k) add_nf(v, mono_mul(m, mu), k);
          }
          ideal_[d].insert(std::move(v));
        }
      }
    }
  }

  using Sparse = std::vector<std::pair<int, Coef>>;

  // Tower normal form of a monomial: the highest generator over its bound is rewritten first.
  const Sparse& nf(const Mono& m) const {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Sparse out;
    int hi = -1;
    for (int i = static_cast<int>(gens_.size()) - 1; i >= 0; --i)
      if (m[i] >= gens_[i].bound) {
        hi = i;
        break;
      }
    if (hi < 0) {
      out.push_back({index_.at(m), 1});
    } else if (gens_[hi].rewrite) {
      Mono rest = m;
      rest[hi] = static_cast<std::uint8_t>(rest[hi] - gens_[hi].bound);
      std::map<int, unsigned> acc;
      for (const auto& [t, c] : *gens_[hi].rewrite) {
        unsigned k = mod_int(c, p_);
        if (!k) continue;
        Mono mm = mono_mul(rest, t);
        if (mono_degree(mm) > cap_) continue;
        for (const auto& [j, v] : nf(mm)) acc[j] = (acc[j] + k * v) % p_;
      }
      for (auto [j, v] : acc)
        if (v) out.push_back({j, static_cast<Coef>(v)});
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

  void add_nf(Vec& v, const Mono& m, unsigned k) const {
    if (mono_degree(m) > cap_) return;
    for (const auto& [j, c] : nf(m)) v[j] = static_cast<Coef>((v[j] + k * c) % p_);
  }

  unsigned p_;
  std::vector<GeneratorSpec> gens_;
  std::vector<Poly> rels_;
  int cap_ = 0, top_ = 0;
  std::vector<std::vector<Mono>> monos_;
  std::unordered_map<Mono, int, MonoHash> index_;
  std::vector<Echelon> ideal_;
  mutable std::unordered_map<Mono, Sparse, MonoHash> memo_;
};

inline TruncatedAlgebra algebra_from_json(const nlohmann::json& j) {
  unsigned p = j.at("p").get<unsigned>();
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) names.push_back(g.at("name").get<std::string>());
  for (const auto& g : j.at("generators")) {
    GeneratorSpec s{g.at("name").get<std::string>(), g.at("degree").get<int>(), g.at("bound").get<int>(), std::nullopt};
    if (g.contains("rewrite")) s.rewrite = parse_poly(g.at("rewrite").get<std::string>(), names);
    gens.push_back(std::move(s));
  }
  std::vector<Poly> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) rels.push_back(parse_poly(r.get<std::string>(), names));
  int cap = j.contains("cap") ? j.at("cap").get<int>() : -1;
  return TruncatedAlgebra(p, std::move(gens), std::move(rels), cap);
}

// Product formula for the Hilbert series of a plain truncated algebra.
inline std::vector<std::size_t> truncated_hilbert(const std::vector<std::pair<int, int>>& degree_bound, int cap) {
  std::vector<std::size_t> h(cap + 1, 0);
  h[0] = 1;
  for (auto [d, N] : degree_bound) {
    std::vector<std::size_t> out(cap + 1, 0);
    for (int i = 0; i <= cap; ++i)
      for (int e = 0; e < N && i + e * d <= cap; ++e) out[i + e * d] += h[i];
    h = out;
  }
  return h;
}

// ------------------------------------------------------------------ maps

// Algebra homomorphism given by generator images (reduced vectors in the codomain).
class AlgebraMap {
 public:
  AlgebraMap(const TruncatedAlgebra& dom, const TruncatedAlgebra& cod, std::vector<Poly> images)
      : dom_(&dom), cod_(&cod), images_(std::move(images)) {
    if (images_.size() != dom.ngens()) throw std::invalid_argument("one image per generator expected");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      int d = dom.generators()[i].degree;
      if (!images_[i].empty() && cod.mono_degree(images_[i].begin()->first) != d)
        throw std::invalid_argument("image of " + dom.generators()[i].name + " has the wrong degree");
      gen_vec_.push_back(cod.element(images_[i], d));
    }
  }

  const TruncatedAlgebra& domain() const { return *dom_; }
  const TruncatedAlgebra& codomain() const { return *cod_; }

  // Image of an arbitrary domain monomial (exponents unrestricted).
  Vec apply_mono(const Mono& m) const {
    int d = dom_->mono_degree(m);
    if (d > cod_->cap()) return {};
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Vec out;
    int j = -1;
    for (int i = static_cast<int>(dom_->ngens()) - 1; i >= 0; --i)
      if (m[i]) {
        j = i;
        break;
      }
    if (j < 0) {
      out = cod_->unit();
    } else {
      Mono rest = m;
      --rest[j];
      int dr = dom_->mono_degree(rest);
      out = cod_->mul(apply_mono(rest), dr, gen_vec_[j], dom_->generators()[j].degree);
    }
    memo_.emplace(m, out);
    return out;
  }
  Vec apply(const Poly& f, int d) const {
    if (d > cod_->cap()) return {};
    Vec out = cod_->zero(d);
    for (const auto& [m, c] : f) {
      unsigned k = mod_int(c, cod_->prime());
      if (k) axpy(out, apply_mono(m), k, cod_->prime());
    }
    return out;
  }
  // Matrix on quotient coordinates: column k is the image of the k-th basis monomial.
  std::vector<Vec> matrix(int d) const {
    std::vector<Vec> cols;
    for (std::size_t b : dom_->basis(d)) {
      Vec v = apply_mono(dom_->monomials(d)[b]);
      cols.push_back(d > cod_->cap() ? Vec{} : cod_->coords(v, d));
    }
    return cols;
  }

 private:
  const TruncatedAlgebra* dom_;
  const TruncatedAlgebra* cod_;
  std::vector<Poly> images_;
  std::vector<Vec> gen_vec_;
  mutable std::map<Mono, Vec> memo_;
};

// Fixed subspace (ambient reduced vectors) of a group of endomorphisms in degree d.
inline Echelon invariants(const TruncatedAlgebra& A, const std::vector<const AlgebraMap*>& maps, int d) {
  auto basis = A.basis(d);
  std::size_t n = basis.size(), k = maps.size();
  unsigned p = A.prime();
  std::vector<std::vector<Vec>> mats;
  for (auto* f : maps) mats.push_back(f->matrix(d));
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) {
    Vec img(n * k, 0);
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t r = 0; r < n; ++r) img[g * n + r] = mats[g][i][r];
      img[g * n + i] = static_cast<Coef>((img[g * n + i] + p - 1) % p);
    }
    images.push_back(img);
  }
  Echelon out(A.ambient_dim(d), p);
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec c(n, 0);
      c[i] = 1;
      out.insert(A.lift(c, d));
    }
    return out;
  }
  for (const auto& v : kernel_of(images, n * k, p)) out.insert(A.lift(v, d));
  return out;
}

inline bool is_identity(const AlgebraMap& f, int d) {
  auto m = f.matrix(d);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Quotient of A by the ideal generated by homogeneous elements.
inline std::vector<std::size_t> mod_ideal_hilbert(const TruncatedAlgebra& A, const std::vector<Poly>& elements) {
  std::vector<std::size_t> h;
  for (int d = 0; d <= A.cap(); ++d) {
    Echelon I(A.ambient_dim(d), A.prime());
    for (const auto& f : elements) {
      if (f.empty()) continue;
      int e = A.mono_degree(f.begin()->first);
      if (e > d) continue;
      Vec fv = A.element(f, e);
      for (std::size_t b : A.basis(d - e)) {
        Vec u = A.zero(d - e);
        u[b] = 1;
        I.insert(A.mul(fv, e, u, d - e));
      }
    }
    Echelon Q = A.ideal(d);
    std::size_t base = Q.rank();
    for (std::size_t i = 0; i < I.rank(); ++i) Q.insert(I.row(i));
    h.push_back(A.dim(d) - (Q.rank() - base));
  }
  return h;
}

// Presentation check: dom -> cod lands in `target`, is well defined modulo `kill`, is
// onto target/kill, and dimensions agree degree by degree.
struct PresentationCheck {
  bool well_defined = true, lands = true, surjective = true, dims_match = true;
  int first_failure = -1;
  std::vector<std::size_t> domain_hilbert, target_hilbert;
  std::vector<std::string> relation_witnesses;  // relations whose image is not killed
  bool ok() const { return well_defined && lands && surjective && dims_match; }
};

inline PresentationCheck check_presentation(const AlgebraMap& f, const std::function<const Echelon*(int)>& target,
                                            const std::function<const Echelon*(int)>& kill) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  PresentationCheck r;
  auto note = [&](int d) {
    if (r.first_failure < 0) r.first_failure = d;
  };
  int D = std::max(dom.cap(), cod.cap());
  for (const auto& rel : dom.defining_relations()) {
    if (rel.empty()) continue;
    int e = dom.mono_degree(rel.begin()->first);
    if (e > cod.cap()) continue;
    Vec v = f.apply(rel, e);
    const Echelon* K = kill(e);
    bool zero = K ? K->contains(v) : is_zero(v);
    if (!zero) {
      r.well_defined = false;
      r.relation_witnesses.push_back(dom.poly_str(rel));
      note(e);
    }
  }
  for (int d = 0; d <= D; ++d) {
    std::size_t dd = d <= dom.cap() ? dom.dim(d) : 0;
    const Echelon* T = d <= cod.cap() ? target(d) : nullptr;
    const Echelon* K = d <= cod.cap() ? kill(d) : nullptr;
    std::size_t td = T ? T->rank() - (K ? K->rank() : 0) : 0;
    r.domain_hilbert.push_back(dd);
    r.target_hilbert.push_back(td);
    if (dd != td) {
      r.dims_match = false;
      note(d);
    }
    if (!T) continue;
    Echelon span(cod.ambient_dim(d), cod.prime());
    if (K)
      for (std::size_t i = 0; i < K->rank(); ++i) span.insert(K->row(i));
    if (d <= dom.cap())
      for (const auto& m : dom.monomials(d)) {
        Vec v = f.apply_mono(m);
        if (!T->contains(v)) {
          r.lands = false;
          note(d);
        }
        span.insert(v);
      }
    if (span.rank() != T->rank()) {
      r.surjective = false;
      note(d);
    }
  }
  return r;
}

// ------------------------------------------------------------------ orthogonal Grassmannian algebra

struct OGrParams {
  int n = 1, s = 1, k1 = 0;
  std::vector<int> k;  // k[i] for i = 2..s (index i), k[0], k[1] unused
};

inline int floor_log2(long long num, long long den) {  // [log2(num/den)] for num >= den > 0
  int e = 0;
  while (den * 2 <= num) {
    den *= 2;
    ++e;
  }
  return e;
}
inline int v2(long long x) {
  int e = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++e;
  }
  return e;
}

inline OGrParams ogr_params(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  OGrParams P;
  P.n = n;
  P.s = n / 2 + 1;
  P.k1 = v2(n);
  P.k.assign(P.s + 1, 0);
  for (int i = 2; i <= P.s; ++i) P.k[i] = floor_log2(2 * n - 1, 2 * i - 3);
  return P;
}

// P_n = F_2[eps_1..eps_s]/(eps_1^m, eps_i^{2^{k_i}}); m = n gives the algebra itself.
inline TruncatedAlgebra ogr_algebra(int n, int eps1_bound = -1) {
  auto P = ogr_params(n);
  std::vector<GeneratorSpec> g;
  g.push_back({"eps1", 1, eps1_bound < 0 ? n : eps1_bound, std::nullopt});
  for (int i = 2; i <= P.s; ++i) g.push_back({"eps" + std::to_string(i), 2 * i - 3, 1 << P.k[i], std::nullopt});
  return TruncatedAlgebra(2, std::move(g));
}

inline std::vector<Poly> ogr_tau_images(int n) {
  auto P = ogr_params(n);
  std::vector<Poly> im{poly_gen(0)};
  for (int i = 2; i <= P.s; ++i) im.push_back(poly_add(poly_gen(i - 1), poly_gen(0, 2 * i - 3)));
  return im;
}

struct OGrClaims {
  bool claim1 = true, claim2 = true, claim3 = true;
  bool claim3_defined = true;  // x = eps1^{n-1} eps2 needs s >= 2, i.e. n >= 2
  int first_failure = -1;
  PresentationCheck presentation;
};

// Per-degree data of P_n shared by all m.
class OGrInvariants {
 public:
  explicit OGrInvariants(int n) : n_(n), P_(ogr_algebra(n)), tau_(P_, P_, ogr_tau_images(n)) {
    for (int d = 0; d <= P_.cap(); ++d) {
      A_.push_back(invariants(P_, {&tau_}, d));
      Echelon img(P_.ambient_dim(d), 2);
      for (std::size_t b = 0; b < P_.ambient_dim(d); ++b) {
        Vec v = tau_.apply_mono(P_.monomials(d)[b]);
        v[b] ^= 1;
        img.insert(v);
      }
      norm_.push_back(std::move(img));
    }
  }
  int n() const { return n_; }
  const TruncatedAlgebra& algebra() const { return P_; }
  const AlgebraMap& tau() const { return tau_; }
  const Echelon& fixed(int d) const { return A_.at(d); }
  const Echelon& norm(int d) const { return norm_.at(d); }

  // eps_1^j * A_{d-j} inside P_d
  Echelon eps_multiple(int j, int d) const {
    Echelon out(P_.ambient_dim(d), 2);
    if (d - j < 0) return out;
    Vec e = P_.element(poly_gen(0, j), j);
    if (e.empty()) return out;
    const Echelon& src = A_[d - j];
    for (std::size_t i = 0; i < src.rank(); ++i) out.insert(P_.mul(e, j, src.row(i), d - j));
    return out;
  }

 private:
  int n_;
  TruncatedAlgebra P_;
  AlgebraMap tau_;
  std::vector<Echelon> A_, norm_;
};

inline Echelon span_of(const std::vector<const Echelon*>& parts, std::size_t n) {
  Echelon e(n, 2);
  for (auto* p : parts)
    for (std::size_t i = 0; i < p->rank(); ++i) e.insert(p->row(i));
  return e;
}

// The presentation of P^tau/(eps_1^m) by e_1, x, e_2..e_s with the relations h_i.
inline TruncatedAlgebra ogr_invariant_presentation(int n, int m) {
  auto P = ogr_params(n);
  std::vector<GeneratorSpec> g;
  g.push_back({"e1", 1, m, std::nullopt});
  g.push_back({"x", n, 2, std::nullopt});
  auto sum_part = [&](int K) {  // sum_{j<K} e1^{2^K - 2^{j+1}} e2^{2^j}, without the j = K-1 term
    Poly f;
    for (int j = 0; j + 1 < K; ++j) {
      Mono mm{};
      mm[0] = static_cast<std::uint8_t>((1 << K) - (1 << (j + 1)));
      mm[2] = static_cast<std::uint8_t>(1 << j);
      f = poly_add(f, poly_mono(mm));
    }
    return f;
  };
  if (P.s >= 2) {
    int K = P.k[2];
    Mono mx{};
    mx[0] = static_cast<std::uint8_t>((1 << K) - n);
    mx[1] = 1;
    Poly rw = poly_add(poly_mono(mx), sum_part(K));
    g.push_back({"e2", 1 * 2, 1 << (K - 1), rw});
  }
  for (int i = 3; i <= P.s; ++i) {
    int K = P.k[i];
    Mono mx{};
    mx[0] = static_cast<std::uint8_t>((2 * i - 3) * (1 << K) - n);
    mx[1] = 1;
    Poly full = sum_part(K);
    Mono top{};
    top[2] = static_cast<std::uint8_t>(1 << (K - 1));
    full = poly_add(full, poly_mono(top));
    Poly shifted = poly_mul(poly_gen(0, (2 * i - 4) * (1 << K)), full);
    Poly rw = poly_add(poly_mono(mx), shifted);
    g.push_back({"e" + std::to_string(i), 2 * i - 3, 1 << K, rw});
  }
  std::vector<Poly> rels{poly_mul(poly_gen(0), poly_gen(1))};
  return TruncatedAlgebra(2, std::move(g), std::move(rels));
}

inline std::vector<Poly> ogr_invariant_images(int n) {
  auto P = ogr_params(n);
  std::vector<Poly> im;
  im.push_back(poly_gen(0));                                             // e1 -> eps1
  im.push_back(poly_mul(poly_gen(0, n - 1), poly_gen(1)));               // x -> eps1^{n-1} eps2
  if (P.s >= 2) im.push_back(poly_add(poly_gen(1, 2), poly_mul(poly_gen(0), poly_gen(1))));
  for (int i = 3; i <= P.s; ++i) im.push_back(poly_add(poly_gen(i - 1), poly_mul(poly_gen(0, 2 * i - 4), poly_gen(1))));
  return im;
}

inline OGrClaims check_ogr_claims(const OGrInvariants& I, int m) {
  int n = I.n();
  if (m < 1 || m > n) throw std::invalid_argument("m must lie in 1..n");
  const auto& P = I.algebra();
  OGrClaims out;
  std::vector<Echelon> kill;
  for (int d = 0; d <= P.cap(); ++d) kill.push_back(I.eps_multiple(m, d));
  for (int d = 0; d <= P.cap(); ++d) {
    std::size_t N = P.ambient_dim(d);
    Echelon e1A = I.eps_multiple(1, d);
    Echelon lhs = span_of({&I.norm(d), &kill[d]}, N);
    Echelon rhs = span_of({&e1A, &kill[d]}, N);
    Echelon both = span_of({&lhs, &rhs}, N);
    if (!(lhs.rank() == rhs.rank() && both.rank() == lhs.rank())) {
      out.claim1 = false;
      if (out.first_failure < 0) out.first_failure = d;
    }
    // (lhs) intersect eps1^m P equals eps1^m A
    Echelon epsP(N, 2);
    if (d >= m) {
      Vec e = P.element(poly_gen(0, m), m);
      for (std::size_t b = 0; b < P.ambient_dim(d - m); ++b) {
        Vec u = P.zero(d - m);
        u[b] = 1;
        epsP.insert(P.mul(e, m, u, d - m));
      }
    }
    Echelon sum = span_of({&lhs, &epsP}, N);
    std::size_t inter = lhs.rank() + epsP.rank() - sum.rank();
    if (inter != kill[d].rank()) {
      out.claim2 = false;
      if (out.first_failure < 0) out.first_failure = d;
    }
  }
  if (ogr_params(n).s < 2) {
    out.claim3_defined = false;
    out.claim3 = false;
    return out;
  }
  TruncatedAlgebra dom = ogr_invariant_presentation(n, m);
  AlgebraMap f(dom, P, ogr_invariant_images(n));
  out.presentation = check_presentation(
      f, [&](int d) { return &I.fixed(d); }, [&](int d) { return &kill[d]; });
  out.claim3 = out.presentation.ok();
  if (!out.claim3 && out.first_failure < 0) out.first_failure = out.presentation.first_failure;
  return out;
}

// Lacunary presentation of the adjoint 2D_{2r} ring at p = 2.
inline TruncatedAlgebra d2r_adjoint_presentation(int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  int n = 2 * r, s = r + 1;
  int k1 = v2(n);
  int k2 = floor_log2(n, 1);
  std::vector<int> k(s + 1, 0);
  k[1] = k1;
  k[2] = k2;
  for (int i = 3; i <= s; ++i) k[i] = floor_log2(4 * r, 2 * i - 3);
  int odd = n >> k1;  // 2l - 3
  int l = (odd + 3) / 2;
  std::vector<GeneratorSpec> g;
  g.push_back({"e1", 1, 1 << k1, std::nullopt});
  g.push_back({"e2", 2, 1 << k2, std::nullopt});
  for (int i = 3; i <= s; ++i) g.push_back({"e" + std::to_string(i), 2 * i - 3, 1 << k[i], std::nullopt});
  Poly rel;
  if (l == 2) {
    for (int j = 0; j < k1; ++j) {
      Mono mm{};
      mm[0] = static_cast<std::uint8_t>((1 << k1) - (1 << (j + 1)) + 1);
      mm[1] = static_cast<std::uint8_t>(1 << j);
      rel = poly_add(rel, poly_mono(mm));
    }
  } else {
    Mono mm{};
    mm[0] = 1;
    mm[l - 1] = static_cast<std::uint8_t>(1 << (k[l] - 1));
    rel = poly_mono(mm);
  }
  return TruncatedAlgebra(2, std::move(g), {rel});
}

inline std::vector<Poly> d2r_adjoint_images(int r) {
  int n = 2 * r, s = r + 1;
  std::vector<Poly> im{poly_gen(0), poly_add(poly_gen(1, 2), poly_mul(poly_gen(0), poly_gen(1)))};
  for (int i = 3; i <= s; ++i) im.push_back(poly_add(poly_gen(i - 1), poly_mul(poly_gen(0, 2 * i - 4), poly_gen(1))));
  (void)n;
  return im;
}

// Checks the lacunary presentation against P^tau/(eps_1^{2^{v_2(2r)}}).
inline PresentationCheck check_d2r_adjoint(const OGrInvariants& I) {
  int n = I.n();
  if (n % 2) throw std::invalid_argument("needs even n");
  int m = 1 << v2(n);
  const auto& P = I.algebra();
  std::vector<Echelon> kill;
  for (int d = 0; d <= P.cap(); ++d) kill.push_back(I.eps_multiple(m, d));
  TruncatedAlgebra dom = d2r_adjoint_presentation(n / 2);
  AlgebraMap f(dom, P, d2r_adjoint_images(n / 2));
  return check_presentation(f, [&](int d) { return &I.fixed(d); }, [&](int d) { return &kill[d]; });
}

// ------------------------------------------------------------------ D4 triality rings at p = 2

// Ch(G_K) for split adjoint D4 at p = 2 with the Galois generators of the triality forms.
inline TruncatedAlgebra d4_adjoint_ring() {
  return TruncatedAlgebra(2, {{"e1", 1, 4, std::nullopt}, {"e2", 1, 4, std::nullopt}, {"e3", 3, 2, std::nullopt}});
}
inline std::vector<Poly> d4_sigma_images() {
  auto n = std::vector<std::string>{"e1", "e2", "e3"};
  return {parse_poly("e2", n), parse_poly("e1+e2", n), parse_poly("e3+e1^2*e2+e1*e2^2+e2^3", n)};
}
inline std::vector<Poly> d4_tau_images() {
  auto n = std::vector<std::string>{"e1", "e2", "e3"};
  return {parse_poly("e2", n), parse_poly("e1", n), parse_poly("e3+e1^2*e2+e1*e2^2", n)};
}

inline TruncatedAlgebra triality_3d4_presentation() {
  std::vector<std::string> n{"e1", "e2", "e3", "e4"};
  return TruncatedAlgebra(2, {{"e1", 2, 4, std::nullopt}, {"e2", 3, 2, std::nullopt}, {"e3", 3, 2, std::nullopt}, {"e4", 3, 2, std::nullopt}},
                          {parse_poly("e1*e2", n), parse_poly("e1*e3", n), parse_poly("e1^3+e2*e3", n)});
}
inline std::vector<Poly> triality_3d4_images() {
  auto n = std::vector<std::string>{"e1", "e2", "e3"};
  return {parse_poly("e1^2+e1*e2+e2^2", n), parse_poly("e1^2*e2+e1*e2^2", n), parse_poly("e1^3+e1^2*e2+e2^3", n),
          parse_poly("e3+e1*e2^2", n)};
}
inline TruncatedAlgebra triality_6d4_presentation() {
  std::vector<std::string> n{"e1", "e2", "e3"};
  return TruncatedAlgebra(2, {{"e1", 2, 4, std::nullopt}, {"e2", 3, 2, std::nullopt}, {"e3", 3, 2, std::nullopt}},
                          {parse_poly("e1*e2", n)});
}
inline std::vector<Poly> triality_6d4_images() {
  auto n = std::vector<std::string>{"e1", "e2", "e3"};
  return {parse_poly("e1^2+e1*e2+e2^2", n), parse_poly("e1^2*e2+e1*e2^2", n), parse_poly("e3+e1*e2^2", n)};
}

// Coinvariant algebra F_p[x_1..x_k]/(sigma_1..sigma_k); x_i^k = 0 holds there.
inline TruncatedAlgebra coinvariant_algebra(int k, unsigned p) {
  std::vector<GeneratorSpec> g;
  for (int i = 0; i < k; ++i) g.push_back({"x" + std::to_string(i + 1), 1, k, std::nullopt});
  std::vector<Poly> rels;
  for (int j = 1; j <= k; ++j) {
    Poly f;
    std::function<void(int, int, Mono)> rec = [&](int start, int left, Mono m) {
      if (!left) {
        f[m] += 1;
        return;
      }
      for (int i = start; i < k; ++i) {
        Mono mm = m;
        ++mm[i];
        rec(i + 1, left - 1, mm);
      }
    };
    rec(0, j, Mono{});
    rels.push_back(f);
  }
  return TruncatedAlgebra(p, std::move(g), std::move(rels));
}

}  // namespace qschow
