#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyalg.hpp"
#include "rootdata.hpp"

namespace qschow {

struct GroupDatum {
  Dynkin type = Dynkin::A;
  int rank = 1;
  int twist = 1;
  std::string pi1 = "sc";
  unsigned p = 2;

  std::string delta() const { return twist_prefix(twist) + type_letter(type) + std::to_string(rank); }
  // l for mu_l
  long long mu_order() const {
    if (pi1.rfind("mu", 0) == 0 && pi1.find('x') == std::string::npos) return std::stoll(pi1.substr(2));
    return 1;
  }
  nlohmann::json to_json() const {
    return {{"type", type_letter(type)}, {"rank", rank}, {"twist", twist}, {"pi1", pi1}, {"prime", p}};
  }
};

inline GroupDatum make_group(const std::string& type, int rank, int twist, const std::string& pi1, unsigned p) {
  int r = rank;
  Dynkin t = parse_type(type, &r);
  if (!valid_type_rank(t, r)) throw std::invalid_argument("unsupported type/rank " + type + std::to_string(r));
  if (twist != 1 && twist != 2 && twist != 3 && twist != 6) throw std::invalid_argument("twist must be 1, 2, 3 or 6");
  if (twist == 2 && !(t == Dynkin::A && r >= 2) && t != Dynkin::D && !(t == Dynkin::E && r == 6))
    throw std::invalid_argument("no quadratic twist for " + type_letter(t) + std::to_string(r));
  if ((twist == 3 || twist == 6) && !(t == Dynkin::D && r == 4)) throw std::invalid_argument("triality twists need D4");
  check_prime(p);
  RootDatum R = build_root_datum(t, r);
  return {t, r, twist, canonical_pi1(R, twist, pi1), p};
}

struct PresGen {
  std::string name;
  int degree = 1;
  long long exponent = 2;  // gen^exponent = 0
};

struct Presentation {
  unsigned p = 2;
  std::vector<PresGen> gens;
  std::vector<std::string> relations;
  bool zero_ring = false;
  std::string row;  // which table row produced it

  bool has_relations() const { return !relations.empty(); }
  int top_degree() const {
    if (zero_ring) return -1;
    if (has_relations()) return algebra().top_degree();
    int t = 0;
    for (const auto& g : gens) t += static_cast<int>(g.exponent - 1) * g.degree;
    return t;
  }
  TruncatedAlgebra algebra(int cap = -1) const {
    std::vector<GeneratorSpec> gs;
    std::vector<std::string> names;
    for (const auto& g : gens) {
      gs.push_back({g.name, g.degree, static_cast<int>(g.exponent), std::nullopt});
      names.push_back(g.name);
    }
    std::vector<Poly> rels;
    for (const auto& r : relations) rels.push_back(parse_poly(r, names));
    return TruncatedAlgebra(p, std::move(gs), std::move(rels), cap);
  }
  std::vector<std::size_t> hilbert(int cap) const {
    std::vector<std::size_t> h(cap + 1, 0);
    if (zero_ring) return h;
    if (has_relations()) {
      auto a = algebra(cap).hilbert();
      for (std::size_t d = 0; d < a.size() && d <= static_cast<std::size_t>(cap); ++d) h[d] = a[d];
      return h;
    }
    std::vector<std::pair<int, int>> db;
    for (const auto& g : gens) {
      // exponents beyond cap are irrelevant for the truncated series
      long long e = std::min<long long>(g.exponent, cap / g.degree + 1);
      db.push_back({g.degree, static_cast<int>(e)});
    }
    return truncated_hilbert(db, cap);
  }
  std::vector<std::size_t> hilbert() const { return hilbert(std::max(0, top_degree())); }

  std::string str() const {
    if (zero_ring) return "0";
    std::string fp = "F" + std::to_string(p);
    if (gens.empty()) return fp;
    std::string s = fp + "[";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i].name;
    s += "]/(";
    bool first = true;
    for (const auto& g : gens) {
      s += (first ? "" : ",") + g.name + "^" + std::to_string(g.exponent);
      first = false;
    }
    for (const auto& r : relations) s += "," + r;
    s += "), degrees (";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i].degree);
    return s + ")";
  }

  // polyalg spec format
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["row"] = row;
    j["zero_ring"] = zero_ring;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : gens) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"bound", g.exponent}});
    j["relations"] = relations;
    j["cap"] = top_degree();
    return j;
  }
};

namespace detail {

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
inline int vp(long long x, long long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

class Builder {
 public:
  Builder(unsigned p, std::string row) { P_.p = p; P_.row = std::move(row); }
  // generator e_i of degree d with exponent p^k; dropped when k = 0
  Builder& add(int i, int d, int k) {
    if (k > 0) P_.gens.push_back({"e" + std::to_string(i), d, ipow(P_.p, k)});
    return *this;
  }
  Builder& add_exp(int i, int d, long long exponent) {
    if (exponent > 1) P_.gens.push_back({"e" + std::to_string(i), d, exponent});
    return *this;
  }
  Builder& rel(std::string r) {
    P_.relations.push_back(std::move(r));
    return *this;
  }
  Presentation get() const { return P_; }

 private:
  Presentation P_;
};

inline Presentation from_algebra(const TruncatedAlgebra& A, std::string row) {
  Presentation P;
  P.p = A.prime();
  P.row = std::move(row);
  for (const auto& g : A.generators()) {
    if (g.rewrite) throw std::logic_error("presentation with rewrites cannot be tabulated");
    P.gens.push_back({g.name, g.degree, g.bound});
  }
  for (const auto& r : A.relations()) P.relations.push_back(A.poly_str(r));
  return P;
}

struct Rule {
  std::string label;
  std::function<bool(const GroupDatum&)> match;
  std::function<Presentation(const GroupDatum&, const std::string&)> build;
};

inline Presentation trivial(const GroupDatum& g, const std::string& row) { return Builder(g.p, row).get(); }

inline Presentation resolve(const std::vector<Rule>& rules, const GroupDatum& g, const std::string& fallback) {
  const Rule* hit = nullptr;
  for (const auto& r : rules)
    if (r.match(g)) {
      if (hit) throw std::logic_error(g.delta() + "/" + g.pi1 + " matches rows '" + hit->label + "' and '" + r.label + "'");
      hit = &r;
    }
  if (!hit) return trivial(g, fallback);
  return hit->build(g, hit->label);
}

inline bool is(const GroupDatum& g, Dynkin t, int twist) { return g.type == t && g.twist == twist; }

// ---- split groups (Kac)
inline const std::vector<Rule>& split_rules() {
  using D = Dynkin;
  static const std::vector<Rule> rules = {
      {"A_n mu_l, p|l", [](const GroupDatum& g) { return is(g, D::A, 1) && g.mu_order() % g.p == 0; },
       [](const GroupDatum& g, const std::string& l) { return Builder(g.p, l).add(1, 1, vp(g.rank + 1, g.p)).get(); }},
      {"B_n sc, p=2", [](const GroupDatum& g) { return is(g, D::B, 1) && g.pi1 == "sc" && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         for (int i = 1; i <= (n - 1) / 2; ++i) b.add(i, 2 * i + 1, floor_log2(2 * n, 2 * i + 1));
         return b.get();
       }},
      {"B_n mu2, p=2", [](const GroupDatum& g) { return is(g, D::B, 1) && g.pi1 == "mu2" && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         for (int i = 1; i <= (n + 1) / 2; ++i) b.add(i, 2 * i - 1, floor_log2(2 * n, 2 * i - 1));
         return b.get();
       }},
      {"C_n mu2, p=2", [](const GroupDatum& g) { return is(g, D::C, 1) && g.pi1 == "mu2" && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) { return Builder(2, l).add(1, 1, v2(g.rank) + 1).get(); }},
      {"D_n sc, p=2", [](const GroupDatum& g) { return is(g, D::D, 1) && g.pi1 == "sc" && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         for (int i = 1; i <= n / 2 - 1; ++i) b.add(i, 2 * i + 1, floor_log2(2 * n - 1, 2 * i + 1));
         return b.get();
       }},
      {"D_n so, p=2",
       [](const GroupDatum& g) { return is(g, D::D, 1) && (g.pi1 == "so" || (g.pi1 == "mu2" && g.rank % 2)) && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         for (int i = 1; i <= n / 2; ++i) b.add(i, 2 * i - 1, floor_log2(2 * n - 1, 2 * i - 1));
         return b.get();
       }},
      {"D_n mu4 or mu2xmu2, p=2",
       [](const GroupDatum& g) { return is(g, D::D, 1) && (g.pi1 == "mu4" || g.pi1 == "mu2xmu2") && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         b.add(1, 1, v2(n));
         for (int i = 2; i <= n / 2 + 1; ++i) b.add(i, 2 * i - 3, floor_log2(2 * n - 1, 2 * i - 3));
         return b.get();
       }},
      {"D_2r hs, p=2", [](const GroupDatum& g) { return is(g, D::D, 1) && (g.pi1 == "hs" || g.pi1 == "hs3") && g.p == 2; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int r = g.rank / 2;
         b.add(1, 1, v2(r) + 1);
         for (int i = 2; i <= r; ++i) b.add(i, 2 * i - 1, floor_log2(4 * r - 1, 2 * i - 1));
         return b.get();
       }},
      {"E6, p=2", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 6 && g.p == 2; },
       [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).get(); }},
      {"E6 sc, p=3", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 6 && g.p == 3 && g.pi1 == "sc"; },
       [](const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 4, 1).get(); }},
      {"E6 mu3, p=3", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 6 && g.p == 3 && g.pi1 == "mu3"; },
       [](const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 1, 2).add(2, 4, 1).get(); }},
      {"E7 sc, p=2", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 7 && g.p == 2 && g.pi1 == "sc"; },
       [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).add(2, 5, 1).add(3, 9, 1).get(); }},
      {"E7 mu2, p=2", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 7 && g.p == 2 && g.pi1 == "mu2"; },
       [](const GroupDatum&, const std::string& l) {
         return Builder(2, l).add(1, 1, 1).add(2, 3, 1).add(3, 5, 1).add(4, 9, 1).get();
       }},
      {"E7, p=3", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 7 && g.p == 3; },
       [](const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 4, 1).get(); }},
      {"E8, p=2", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 8 && g.p == 2; },
       [](const GroupDatum&, const std::string& l) {
         return Builder(2, l).add(1, 3, 3).add(2, 5, 2).add(3, 9, 1).add(4, 15, 1).get();
       }},
      {"E8, p=3", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 8 && g.p == 3; },
       [](const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 4, 1).add(2, 10, 1).get(); }},
      {"E8, p=5", [](const GroupDatum& g) { return is(g, D::E, 1) && g.rank == 8 && g.p == 5; },
       [](const GroupDatum&, const std::string& l) { return Builder(5, l).add(1, 6, 1).get(); }},
      {"F4, p=2", [](const GroupDatum& g) { return is(g, D::F, 1) && g.p == 2; },
       [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).get(); }},
      {"F4, p=3", [](const GroupDatum& g) { return is(g, D::F, 1) && g.p == 3; },
       [](const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 4, 1).get(); }},
      {"G2, p=2", [](const GroupDatum& g) { return is(g, D::G, 1) && g.p == 2; },
       [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).get(); }},
  };
  return rules;
}

// ---- quasi-split groups at p = [K:k], rows shared with the conormed rings
inline Presentation row_2A_odd(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  for (int i = 1; i <= g.rank / 2; ++i) b.add(i, 2 * i + 1, 1);
  return b.get();
}
inline Presentation row_2A_mu2m_m_odd(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int r = (g.rank + 1) / 2;
  for (int i = 1; i <= r; ++i) b.add(i, 2 * i - 1, i == 1 ? v2(r) + 1 : 1);
  return b.get();
}
inline Presentation row_2A_mu2m_m_even(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int r = (g.rank + 1) / 2;
  b.add(1, 2, v2(r));
  for (int i = 2; i <= r + 1; ++i) b.add(i, 2 * i - 3, 1);
  return b.get();
}
inline Presentation row_2D_sc(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int n = g.rank;
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) b.add(i, 2 * i + 1, floor_log2(2 * n, 2 * i + 1));
  return b.get();
}
inline Presentation row_2D_mu2(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int n = g.rank;
  b.add(1, 1, floor_log2(n, 1) + 1);
  for (int i = 2; i <= (n + 1) / 2; ++i) b.add(i, 2 * i - 1, floor_log2(2 * n, 2 * i - 1));
  return b.get();
}
inline Presentation row_2D_mu4(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int r = (g.rank - 1) / 2;
  b.add(1, 1, 1).add(2, 2, floor_log2(2 * r + 1, 1));
  for (int i = 3; i <= r + 2; ++i) b.add(i, 2 * i - 3, floor_log2(4 * r + 2, 2 * i - 3));
  return b.get();
}
inline Presentation row_2D_mu2x2_conormed(const GroupDatum& g, const std::string& l) {
  Builder b(2, l);
  int r = g.rank / 2;
  b.add(1, 2, floor_log2(2 * r, 1));
  for (int i = 2; i <= r; ++i) b.add(i, 2 * i - 1, floor_log2(4 * r, 2 * i - 1));
  return b.get();
}
inline Presentation row_E6_twisted_p2(const GroupDatum&, const std::string& l) {
  return Builder(2, l).add(1, 3, 1).add(2, 5, 1).add(3, 9, 1).get();
}
inline Presentation row_deg4(const GroupDatum&, const std::string& l) { return Builder(3, l).add(1, 4, 1).get(); }

inline bool twoA(const GroupDatum& g) { return is(g, Dynkin::A, 2) && g.p == 2; }
inline bool twoD(const GroupDatum& g) { return is(g, Dynkin::D, 2) && g.p == 2; }
inline bool mu2m(const GroupDatum& g) { return g.mu_order() % 2 == 0; }

inline std::vector<Rule> shared_quasi_split_rules() {
  using D = Dynkin;
  return {
      {"2A_n l odd", [](const GroupDatum& g) { return twoA(g) && !mu2m(g); }, row_2A_odd},
      {"2A_2r-1 mu_2m m odd", [](const GroupDatum& g) { return twoA(g) && mu2m(g) && (g.mu_order() / 2) % 2 == 1; },
       row_2A_mu2m_m_odd},
      {"2A_2r-1 mu_2m m even", [](const GroupDatum& g) { return twoA(g) && mu2m(g) && (g.mu_order() / 2) % 2 == 0; },
       row_2A_mu2m_m_even},
      {"2D_n sc", [](const GroupDatum& g) { return twoD(g) && g.pi1 == "sc"; }, row_2D_sc},
      {"2D_n mu2", [](const GroupDatum& g) { return twoD(g) && g.pi1 == "mu2"; }, row_2D_mu2},
      {"2D_2r+1 mu4", [](const GroupDatum& g) { return twoD(g) && g.pi1 == "mu4"; }, row_2D_mu4},
      {"3D4, p=3", [](const GroupDatum& g) { return is(g, D::D, 3) && g.p == 3; }, row_deg4},
      {"2E6, p=2", [](const GroupDatum& g) { return is(g, D::E, 2) && g.p == 2; }, row_E6_twisted_p2},
  };
}

inline const std::vector<Rule>& chow_twisted_rules() {
  using D = Dynkin;
  static const std::vector<Rule> rules = [] {
    auto r = shared_quasi_split_rules();
    r.push_back({"2D_2r mu2,2 (lacunary)", [](const GroupDatum& g) { return twoD(g) && g.pi1 == "mu2x2"; },
                 [](const GroupDatum& g, const std::string& l) {
                   return from_algebra(d2r_adjoint_presentation(g.rank / 2), l);
                 }});
    r.push_back({"6D4, p=3", [](const GroupDatum& g) { return is(g, D::D, 6) && g.p == 3; }, row_deg4});
    r.push_back({"6D4 sc, p=2", [](const GroupDatum& g) { return is(g, D::D, 6) && g.p == 2 && g.pi1 == "sc"; },
                 [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).get(); }});
    r.push_back({"6D4 mu2,2, p=2", [](const GroupDatum& g) { return is(g, D::D, 6) && g.p == 2 && g.pi1 == "mu2x2"; },
                 [](const GroupDatum&, const std::string& l) { return from_algebra(triality_6d4_presentation(), l); }});
    // away from the splitting primes
    r.push_back({"2A_n away, odd p|l",
                 [](const GroupDatum& g) { return is(g, D::A, 2) && g.p != 2 && g.mu_order() % g.p == 0; },
                 [](const GroupDatum& g, const std::string& l) {
                   long long m = (ipow(g.p, vp(g.rank + 1, g.p)) + 1) / 2;
                   return Builder(g.p, l).add_exp(1, 2, m).get();
                 }});
    r.push_back({"3D4 sc, p=2", [](const GroupDatum& g) { return is(g, D::D, 3) && g.p == 2 && g.pi1 == "sc"; },
                 [](const GroupDatum&, const std::string& l) { return Builder(2, l).add(1, 3, 1).get(); }});
    r.push_back({"3D4 mu2,2, p=2", [](const GroupDatum& g) { return is(g, D::D, 3) && g.p == 2 && g.pi1 == "mu2x2"; },
                 [](const GroupDatum&, const std::string& l) { return from_algebra(triality_3d4_presentation(), l); }});
    r.push_back({"2E6 sc, p=3", [](const GroupDatum& g) { return is(g, D::E, 2) && g.p == 3 && g.pi1 == "sc"; },
                 row_deg4});
    r.push_back({"2E6 mu3, p=3", [](const GroupDatum& g) { return is(g, D::E, 2) && g.p == 3 && g.pi1 == "mu3"; },
                 [](const GroupDatum&, const std::string& l) { return Builder(3, l).add_exp(1, 2, 5).add(2, 4, 1).get(); }});
    return r;
  }();
  return rules;
}

inline void require_conormed_datum(const GroupDatum& g) {
  if (g.twist == 1) throw std::invalid_argument("conormed tables need a non-split group");
  if (g.twist != 6 && static_cast<int>(g.p) != g.twist) throw std::invalid_argument("conormed tables need p = [K:k]");
  if (g.twist == 6 && g.p != 2 && g.p != 3) throw std::invalid_argument("conormed tables need p | [K:k]");
}

}  // namespace detail

// Ch*(G) with F_p coefficients.
inline Presentation expected_chow(const GroupDatum& g) {
  if (g.twist == 1) return detail::resolve(detail::split_rules(), g, "trivial (split)");
  return detail::resolve(detail::chow_twisted_rules(), g, "trivial (remaining cases)");
}

inline Presentation expected_conormed(const GroupDatum& g) {
  detail::require_conormed_datum(g);
  if (g.twist == 6) {
    Presentation z;
    z.p = g.p;
    z.zero_ring = true;
    z.row = "6D4 (zero ring)";
    return z;
  }
  static const std::vector<detail::Rule> rules = [] {
    auto r = detail::shared_quasi_split_rules();
    r.push_back({"2D_2r mu2,2", [](const GroupDatum& g) { return detail::twoD(g) && g.pi1 == "mu2x2"; },
                 detail::row_2D_mu2x2_conormed});
    return r;
  }();
  return detail::resolve(rules, g, "trivial");
}

inline Presentation expected_cokernel(const GroupDatum& g) {
  detail::require_conormed_datum(g);
  if (g.twist == 6) return expected_conormed(g);
  using detail::Builder;
  static const std::vector<detail::Rule> rules = {
      {"2A_n l odd", [](const GroupDatum& g) { return detail::twoA(g) && !detail::mu2m(g); }, detail::row_2A_odd},
      {"2A_2r-1 r odd", [](const GroupDatum& g) { return detail::twoA(g) && detail::mu2m(g) && ((g.rank + 1) / 2) % 2 == 1; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         for (int i = 1; i <= (g.rank + 1) / 2; ++i) b.add(i, 2 * i - 1, 1);
         return b.get();
       }},
      {"2A_2r-1 r even, r/m even",
       [](const GroupDatum& g) {
         int r = (g.rank + 1) / 2;
         long long m = g.mu_order() / 2;
         return detail::twoA(g) && detail::mu2m(g) && r % 2 == 0 && (r / m) % 2 == 0;
       },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int r = (g.rank + 1) / 2;
         b.add(1, 2, v2(r));
         for (int i = 2; i <= r; ++i) b.add(i, 2 * i - 1, 1);
         return b.get();
       }},
      {"2A_2r-1 r even, r/m odd",
       [](const GroupDatum& g) {
         int r = (g.rank + 1) / 2;
         long long m = g.mu_order() / 2;
         return detail::twoA(g) && detail::mu2m(g) && r % 2 == 0 && (r / m) % 2 == 1;
       },
       detail::row_2A_mu2m_m_even},
      {"2D_n sc", [](const GroupDatum& g) { return detail::twoD(g) && g.pi1 == "sc"; }, detail::row_2D_sc},
      {"2D_n mu2", [](const GroupDatum& g) { return detail::twoD(g) && g.pi1 == "mu2"; },
       [](const GroupDatum& g, const std::string& l) {
         Builder b(2, l);
         int n = g.rank;
         b.add(1, 2, floor_log2(n, 1));
         for (int i = 2; i <= (n + 1) / 2; ++i) b.add(i, 2 * i - 1, floor_log2(2 * n, 2 * i - 1));
         return b.get();
       }},
      {"2D_2r+1 mu4", [](const GroupDatum& g) { return detail::twoD(g) && g.pi1 == "mu4"; }, detail::row_2D_mu4},
      {"2D_2r mu2,2", [](const GroupDatum& g) { return detail::twoD(g) && g.pi1 == "mu2x2"; },
       detail::row_2D_mu2x2_conormed},
      {"3D4", [](const GroupDatum& g) { return detail::is(g, Dynkin::D, 3) && g.p == 3; }, detail::row_deg4},
      {"2E6", [](const GroupDatum& g) { return detail::is(g, Dynkin::E, 2) && g.p == 2; }, detail::row_E6_twisted_p2},
  };
  return detail::resolve(rules, g, "trivial");
}

// ------------------------------------------------------------------ Picard groups

struct PicardSummand {
  long long order;
  std::string label;  // generator [L(varpi_i bar)]
};

inline std::vector<PicardSummand> picard(const GroupDatum& g) {
  using D = Dynkin;
  int n = g.rank;
  auto w = [](int i) { return "L(w" + std::to_string(i) + "bar)"; };
  const std::string& pi = g.pi1;
  if (pi == "sc") return {};
  if (g.twist == 1) {
    switch (g.type) {
      case D::A: return {{g.mu_order(), w(1)}};
      case D::B: return {{2, w(n)}};
      case D::C: return {{2, w(1)}};
      case D::D:
        if (pi == "so") return {{2, w(n - 1)}};
        if (pi == "mu2") return {{2, w(n - 1)}};
        if (pi == "hs" || pi == "hs3") return {{2, w(1)}};
        if (pi == "mu4") return {{4, w(n - 1)}};
        if (pi == "mu2xmu2") return {{2, w(n - 1)}, {2, w(n)}};
        break;
      case D::E:
        if (n == 6) return {{3, w(1)}};
        if (n == 7) return {{2, w(2)}};
        break;
      default: break;
    }
    return {};
  }
  if (g.twist == 2 && g.type == D::A) {
    long long l = g.mu_order();
    if (l % 2 == 0) return {{2, w(static_cast<int>(l / 2))}};
    return {};
  }
  if (g.twist == 2 && g.type == D::D) {
    if (pi == "mu2") return {{2, w(n - 1)}};
    if (pi == "mu4" || pi == "mu2x2") return {{2, w(1)}};
  }
  return {};
}

// ------------------------------------------------------------------ totality sweep

struct SweepRow {
  GroupDatum group;
  std::string chow_row, conormed_row, cokernel_row;
  std::size_t chow_total_dim = 0;
};

inline std::vector<std::pair<Dynkin, int>> sweep_types(int max_rank, int twist) {
  using D = Dynkin;
  std::vector<std::pair<D, int>> out;
  if (twist == 1) {
    for (int n = 1; n <= max_rank; ++n) out.push_back({D::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({D::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({D::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({D::D, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({D::E, n});
    if (max_rank >= 4) out.push_back({D::F, 4});
    if (max_rank >= 2) out.push_back({D::G, 2});
  } else if (twist == 2) {
    for (int n = 2; n <= max_rank; ++n) out.push_back({D::A, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({D::D, n});
    if (max_rank >= 6) out.push_back({D::E, 6});
  } else if (max_rank >= 4) {
    out.push_back({D::D, 4});
  }
  return out;
}

// Every (Delta, pi_1, p) resolves to exactly one row of each applicable table.
inline std::vector<SweepRow> totality_sweep(int max_rank, const std::vector<unsigned>& primes) {
  std::vector<SweepRow> rows;
  for (int twist : {1, 2, 3, 6})
    for (auto [t, n] : sweep_types(max_rank, twist)) {
      RootDatum R = build_root_datum(t, n);
      for (const auto& pi : listed_pi1(R, twist))
        for (unsigned p : primes) {
          SweepRow row;
          row.group = {t, n, twist, pi, p};
          Presentation c = expected_chow(row.group);
          if (c.p != p) throw std::logic_error("presentation over the wrong field");
          auto h = c.hilbert();
          if (h.empty() || h[0] != 1) throw std::logic_error("Ch^0 must be F_p for " + row.group.delta());
          row.chow_row = c.row;
          for (auto x : h) row.chow_total_dim += x;
          bool conormed = twist != 1 && (static_cast<int>(p) == twist || (twist == 6 && (p == 2 || p == 3)));
          if (conormed) {
            row.conormed_row = expected_conormed(row.group).row;
            row.cokernel_row = expected_cokernel(row.group).row;
          }
          rows.push_back(row);
        }
    }
  return rows;
}

}  // namespace qschow
