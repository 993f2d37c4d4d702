#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace qschow {

struct SuiteResult {
  std::string suite;
  std::vector<Report> reports;
  std::vector<std::pair<std::string, bool>> checks;  // non-Hilbert assertions
  double wall_ms = 0;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    for (const auto& c : checks)
      if (!c.second) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& r : reports) f += !r.pass();
    for (const auto& c : checks) f += !c.second;
    return f;
  }
  std::size_t size() const { return reports.size() + checks.size(); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = pass();
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["checks"] = nlohmann::json::array();
    for (const auto& [n, ok] : checks) j["checks"].push_back({{"name", n}, {"pass", ok}});
    j["wall_time_ms"] = wall_ms;
    return j;
  }
};

struct SuiteOptions {
  int max_rank = 8;
  int cap = -1;  // -1: top degree of each group
  unsigned seed = 20240611;
  int samples = 1000;
  PipelineOptions pipeline;
};

inline int top_degree(Dynkin t, int n) { return static_cast<int>(build_root_datum(t, n).num_pos()); }

inline int suite_cap(const SuiteOptions& o, Dynkin t, int n) { return o.cap < 0 ? top_degree(t, n) : o.cap; }

// ------------------------------------------------------------------ Hilbert suites

inline SuiteResult suite_split_kac(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"split-kac", {}, {}, 0};
  using D = Dynkin;
  auto run = [&](D t, int n, std::vector<unsigned> primes) {
    RootDatum R = build_root_datum(t, n);
    for (const auto& pi : listed_pi1(R, 1))
      for (unsigned p : primes)
        s.reports.push_back(compute_group({t, n, 1, pi, p}, suite_cap(o, t, n), o.pipeline));
  };
  int m = std::min(o.max_rank, 4);
  for (int n = 1; n <= m; ++n) run(D::A, n, {2, 3, 5});
  for (int n = 2; n <= m; ++n) run(D::B, n, {2, 3});
  for (int n = 2; n <= m; ++n) run(D::C, n, {2, 3});
  if (o.max_rank >= 4) run(D::D, 4, {2, 3});
  if (o.max_rank >= 2) run(D::G, 2, {2, 3});
  if (o.max_rank >= 4) run(D::F, 4, {2, 3});
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

struct TwistedCase {
  Dynkin type;
  int rank;
  int twist;
  int cap;
};

inline std::vector<TwistedCase> conormed_cases(const SuiteOptions& o) {
  using D = Dynkin;
  std::vector<TwistedCase> c;
  for (int n = 2; n <= std::min(o.max_rank, 5); ++n) c.push_back({D::A, n, 2, suite_cap(o, D::A, n)});
  for (int n = 3; n <= std::min(o.max_rank, 5); ++n) c.push_back({D::D, n, 2, suite_cap(o, D::D, n)});
  if (o.max_rank >= 4) c.push_back({D::D, 4, 3, suite_cap(o, D::D, 4)});
  if (o.max_rank >= 6) c.push_back({D::E, 6, 2, suite_cap(o, D::E, 6)});
  return c;
}

inline SuiteResult suite_conormed(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"conormed", {}, {}, 0};
  for (const auto& c : conormed_cases(o)) {
    RootDatum R = build_root_datum(c.type, c.rank);
    for (const auto& pi : listed_pi1(R, c.twist)) {
      GroupDatum g{c.type, c.rank, c.twist, pi, static_cast<unsigned>(c.twist)};
      Report r = compute_conormed(g, c.cap, o.pipeline);
      if (c.type == Dynkin::E) {
        // the whole quotient vanishes in degrees 6, 10, 18, so the squares of e3, e5, e9 do
        for (auto [e, d] : {std::pair{3, 6}, {5, 10}, {9, 18}})
          if (c.cap >= d)
            s.checks.push_back({"2E6 " + pi + ": e" + std::to_string(e) + "^2 = 0 (conormed quotient vanishes in degree " +
                                    std::to_string(d) + ")",
                                r.computed[d] == 0});
      }
      s.reports.push_back(std::move(r));
    }
  }
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

inline SuiteResult suite_theorem_main(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"theorem-main", {}, {}, 0};
  for (const auto& c : conormed_cases(o)) {
    RootDatum R = build_root_datum(c.type, c.rank);
    for (const auto& pi : listed_pi1(R, c.twist))
      s.reports.push_back(compute_group({c.type, c.rank, c.twist, pi, static_cast<unsigned>(c.twist)}, c.cap, o.pipeline));
  }
  for (int r = 2; r <= 4 && 2 * r <= o.max_rank; ++r) {
    GroupDatum g{Dynkin::D, 2 * r, 2, "mu2x2", 2};
    if (r == 2) continue;  // 2D4 already ran above
    s.reports.push_back(compute_group(g, top_degree(Dynkin::D, 2 * r), o.pipeline));
  }
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

// Cap for type A quotients: the split quotient is generated in degree 1, so it is
// zero above the first degree where it vanishes.
inline int away_cap_A(int n, unsigned p) {
  long long q = 1;
  while ((n + 1) % (q * p) == 0) q *= p;
  return std::min<int>(top_degree(Dynkin::A, n), static_cast<int>(q));
}

inline SuiteResult suite_away(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"away", {}, {}, 0};
  for (int n = 2; n <= std::min(o.max_rank, 8); ++n) {
    RootDatum R = build_root_datum(Dynkin::A, n);
    for (unsigned p : {3u, 5u, 7u}) {
      if ((n + 1) % p) continue;
      int cap = o.cap < 0 ? away_cap_A(n, p) : o.cap;
      for (const auto& pi : listed_pi1(R, 2)) {
        Report r = compute_group({Dynkin::A, n, 2, pi, p}, cap, o.pipeline);
        if (cap < top_degree(Dynkin::A, n))
          s.checks.push_back({r.group.delta() + " " + pi + " p=" + std::to_string(p) + ": quotient vanishes at degree " +
                                  std::to_string(cap) + " (so in all higher degrees)",
                              r.computed[cap] == 0 && r.expected[cap] == 0});
        s.reports.push_back(std::move(r));
      }
    }
  }
  if (o.max_rank >= 4)
    for (const char* pi : {"sc", "mu2x2"}) {
      s.reports.push_back(compute_group({Dynkin::D, 4, 3, pi, 2}, suite_cap(o, Dynkin::D, 4), o.pipeline));
      for (unsigned p : {2u, 3u, 5u})
        s.reports.push_back(compute_group({Dynkin::D, 4, 6, pi, p}, suite_cap(o, Dynkin::D, 4), o.pipeline));
    }
  if (o.max_rank >= 6)
    for (const char* pi : {"sc", "mu3"})
      s.reports.push_back(compute_group({Dynkin::E, 6, 2, pi, 3}, suite_cap(o, Dynkin::E, 6), o.pipeline));
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

inline SuiteResult suite_named(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"named", {}, {}, 0};
  for (const auto& n : named_checks()) s.reports.push_back(named_check(n, o.pipeline));
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

inline SuiteResult suite_ogr(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"ogr", {}, {}, 0};
  for (int n = 1; n <= o.max_rank; ++n) {
    OGrInvariants I(n);
    for (int m = 1; m <= n; ++m) {
      auto c = check_ogr_claims(I, m);
      std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      s.checks.push_back({tag + " claim 1", c.claim1});
      s.checks.push_back({tag + " claim 2", c.claim2});
      if (c.claim3_defined) s.checks.push_back({tag + " claim 3", c.claim3});
    }
  }
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

inline SuiteResult suite_low_degree(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"low-degree", {}, {}, 0};
  std::vector<GroupDatum> gs;
  for (int r = 2; r <= 3; ++r)
    if (2 * r - 1 <= o.max_rank) gs.push_back({Dynkin::A, 2 * r - 1, 2, "sc", 2});
  for (int n = 3; n <= std::min(o.max_rank, 5); ++n) gs.push_back({Dynkin::D, n, 2, "sc", 2});
  for (const auto& g : gs) {
    auto c = low_degree_products(g, o.pipeline);
    for (const auto& [f, ok] : c.facts) s.checks.push_back({c.group + ": " + f, ok});
  }
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

// ------------------------------------------------------------------ property suites

struct PropertyType {
  Dynkin type;
  int rank;
  int twist;  // diagram action used for equivariance (1: none)
  int cap;
};

inline std::vector<PropertyType> property_types() {
  using D = Dynkin;
  return {{D::A, 1, 1, 1}, {D::A, 2, 2, 3}, {D::A, 3, 2, 6}, {D::A, 4, 2, 6}, {D::B, 2, 1, 4},
          {D::B, 3, 1, 6}, {D::C, 3, 1, 6}, {D::D, 4, 6, 6}, {D::D, 5, 2, 6}, {D::G, 2, 1, 6},
          {D::F, 4, 1, 6}, {D::E, 6, 2, 5}};
}

inline IVec random_weight(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-3, 3);
  IVec v(n);
  for (auto& x : v) x = c(rng);
  return v;
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, unsigned p) {
  std::uniform_int_distribution<unsigned> c(0, p - 1);
  Vec v(n);
  for (auto& x : v) x = static_cast<Coef>(c(rng));
  return v;
}

inline SuiteResult suite_properties(const SuiteOptions& o) {
  Stopwatch sw;
  SuiteResult s{"properties", {}, {}, 0};
  std::mt19937 rng(o.seed);
  for (const auto& pt : property_types()) {
    if (pt.rank > o.max_rank) continue;
    RootDatum R = build_root_datum(pt.type, pt.rank);
    WeylTable T = enumerate_up_to(R, pt.cap, WeylOptions{o.pipeline.budget, o.pipeline.cache_dir});
    GaloisAction G = diagram_automorphism(R, pt.twist);
    GaloisOnSchubert gal(T, G);
    std::string tag = twist_prefix(pt.twist) + R.name();
    for (unsigned p : {2u, 3u, 251u}) {
      SchubertRing S(T, p);
      bool add = true, comm = true, equi = true;
      int per_prime = o.samples / 3 + (p == 251 ? o.samples % 3 : 0);
      for (int k = 0; k < per_prime; ++k) {
        int d = std::uniform_int_distribution<int>(0, pt.cap - 2 < 0 ? 0 : pt.cap - 2)(rng);
        if (pt.cap < 2) d = 0;
        IVec l = random_weight(rng, R.rank), m = random_weight(rng, R.rank);
        Vec x = random_vec(rng, S.graded_dim(d), p);
        IVec lm(R.rank);
        for (int i = 0; i < R.rank; ++i) lm[i] = l[i] + m[i];
        Vec a = S.mult(lm, x, d), b = S.mult(l, x, d);
        axpy(b, S.mult(m, x, d), 1, p);
        add = add && a == b;
        if (pt.cap >= 2) {
          comm = comm && S.mult(l, S.mult(m, x, d), d + 1) == S.mult(m, S.mult(l, x, d), d + 1);
        }
        for (std::size_t g = 0; g < G.elements.size(); ++g) {
          Vec lhs = gal.act(g, S.mult(l, x, d), d + 1);
          Vec rhs = S.mult(act_weight(G.elements[g], l), gal.act(g, x, d), d);
          equi = equi && lhs == rhs;
        }
      }
      std::string t = tag + " p=" + std::to_string(p) + " (" + std::to_string(per_prime) + " triples)";
      s.checks.push_back({t + ": Chevalley additivity", add});
      s.checks.push_back({t + ": Chevalley commutativity", comm});
      s.checks.push_back({t + ": Galois equivariance", equi});
    }
  }

  // Weyl enumeration against the brute-force group
  for (auto [t, n] : sweep_types(8, 1)) {
    RootDatum R = build_root_datum(t, n);
    double order = 0;
    for (double x : poincare_series(t, n, static_cast<int>(R.num_pos()))) order += x;
    if (order > 2000.5) continue;
    auto all = brute_force_group(R, 2000);
    WeylTable T = enumerate_up_to(R, static_cast<int>(R.num_pos()));
    std::vector<std::size_t> by_len(R.num_pos() + 1, 0);
    bool same = all.size() == T.total();
    for (const auto& m : all) {
      int l = inversion_length(R, m);
      ++by_len[l];
      same = same && T.find(l, m) >= 0;
    }
    same = same && by_len == T.counts();
    s.checks.push_back({"Weyl table of " + R.name() + " (|W| = " + std::to_string(all.size()) + ") matches brute force", same});
  }

  // type-A Borel presentation
  for (int n = 1; n <= std::min(o.max_rank, 4); ++n) {
    RootDatum R = build_root_datum(Dynkin::A, n);
    int cap = std::min(6, static_cast<int>(R.num_pos()));
    WeylTable T = enumerate_up_to(R, cap);
    for (unsigned p : {2u, 3u, 5u, 251u}) {
      TruncatedAlgebra C = coinvariant_algebra(n + 1, p);
      bool ok = true;
      for (int d = 0; d <= 6; ++d) {
        std::size_t sd = d <= cap ? T.count(d) : 0;
        ok = ok && sd == (d <= C.top_degree() ? C.dim(d) : 0);
      }
      s.checks.push_back({"A" + std::to_string(n) + " p=" + std::to_string(p) + ": Schubert dims = coinvariant algebra dims",
                          ok});
    }
  }

  // tables totality
  bool total = true;
  std::string err;
  try {
    auto rows = totality_sweep(8, {2, 3, 5, 7});
    total = !rows.empty();
  } catch (const std::exception& e) {
    total = false;
    err = std::string(": ") + e.what();
  }
  s.checks.push_back({"tables resolve every listed group at p <= 7" + err, total});
  s.wall_ms = o.pipeline.timing ? sw.ms() : 0;
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"split-kac", "conormed", "theorem-main", "away",
                                             "named",     "ogr",      "low-degree",   "properties"};
  return n;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "split-kac") return suite_split_kac(o);
  if (name == "conormed") return suite_conormed(o);
  if (name == "theorem-main") return suite_theorem_main(o);
  if (name == "away") return suite_away(o);
  if (name == "named") return suite_named(o);
  if (name == "ogr") return suite_ogr(o);
  if (name == "low-degree") return suite_low_degree(o);
  if (name == "properties") return suite_properties(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qschow
