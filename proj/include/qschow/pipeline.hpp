#pragma once

#include <chrono>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "charideal.hpp"
#include "descent.hpp"
#include "json.hpp"
#include "polyalg.hpp"
#include "rootdata.hpp"
#include "schubert.hpp"
#include "tables.hpp"
#include "weyl.hpp"

namespace qschow {

struct PipelineOptions {
  double budget = 1e6;
  std::string cache_dir;
  int workers = 1;
  bool timing = true;
};

struct Witness {
  std::string name;
  bool nonzero = false;
};

struct Report {
  std::string job;
  GroupDatum group;
  int cap = 0;
  std::string route;
  std::string expected_row;
  std::vector<std::size_t> computed, expected;
  std::vector<Witness> witnesses;
  std::vector<std::string> required;  // witnesses that must be nonzero for a pass
  nlohmann::json extra = nlohmann::json::object();
  double wall_ms = 0;

  bool hilbert_pass() const { return computed == expected; }
  bool pass() const {
    if (!hilbert_pass()) return false;
    for (const auto& r : required) {
      bool found = false;
      for (const auto& w : witnesses)
        if (w.name == r && w.nonzero) found = true;
      if (!found) return false;
    }
    if (extra.contains("sub_pass") && !extra["sub_pass"].get<bool>()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["job"] = job;
    j["group"] = group.to_json();
    j["cap"] = cap;
    j["route"] = route;
    j["expected_row"] = expected_row;
    j["computed_hilbert"] = computed;
    j["expected_hilbert"] = expected;
    j["per_degree"] = nlohmann::json::array();
    for (std::size_t d = 0; d < std::max(computed.size(), expected.size()); ++d) {
      std::size_t c = d < computed.size() ? computed[d] : 0, e = d < expected.size() ? expected[d] : 0;
      j["per_degree"].push_back({{"d", d}, {"dim", c}, {"expected", e}, {"pass", c == e}});
    }
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) j["witnesses"].push_back({{"name", w.name}, {"nonzero", w.nonzero}});
    if (!extra.empty()) j["extra"] = extra;
    j["pass"] = pass();
    j["wall_time_ms"] = wall_ms;
    return j;
  }
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

// Split group data shared by the routes: root datum, Weyl table, Schubert ring.
struct FlagData {
  RootDatum R;
  GaloisAction G;
  Pi1Datum P;
  std::unique_ptr<WeylTable> T;
  std::unique_ptr<SchubertRing> S;
  int top = 0;
  int cap = 0;
};

inline std::unique_ptr<FlagData> flag_data(const GroupDatum& g, int cap, const PipelineOptions& opt, int twist) {
  auto F = std::make_unique<FlagData>();
  F->R = build_root_datum(g.type, g.rank);
  F->G = diagram_automorphism(F->R, twist);
  F->P = pi1_quotient(F->R, diagram_automorphism(F->R, g.twist), g.pi1);
  F->top = static_cast<int>(F->R.num_pos());
  F->cap = std::min(cap, F->top);
  F->T = std::make_unique<WeylTable>(enumerate_up_to(F->R, F->cap, WeylOptions{opt.budget, opt.cache_dir}));
  F->S = std::make_unique<SchubertRing>(*F->T, g.p);
  return F;
}

// Nothing lives above the flag top degree, plus one for the x module.
inline int clamp_cap(const GroupDatum& g, int cap) {
  return std::min(cap, static_cast<int>(build_root_datum(g.type, g.rank).num_pos()) + 1);
}

inline std::vector<std::size_t> pad(std::vector<std::size_t> h, int cap) {
  h.resize(cap + 1, 0);
  return h;
}

// Drop degree-one generators whose weights are dependent mod p on earlier ones:
// the ideal only depends on their span in Ch^1.
inline IdealSpec prune_degree_one(const IdealSpec& s, unsigned p, int rank) {
  IdealSpec out;
  out.mode = s.mode;
  out.x = s.x;
  Echelon span(rank, p);
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    const auto& g = s.generators[i];
    if (g.degree() == 1 && g.terms.size() == 1) {
      Vec v(rank, 0);
      for (int j = 0; j < rank; ++j) v[j] = static_cast<Coef>(mod_int(g.terms[0].coef * g.terms[0].weights[0][j], p));
      if (!span.insert(v)) continue;
    }
    out.add(g, s.labels[i]);
  }
  return out;
}

// Fixed space of permutation actions on the quotient base/J in degree d.
// perms[g][b] is the image of base coordinate b.
inline std::size_t quotient_invariant_dim(const Echelon& J, const std::vector<std::vector<int>>& perms, unsigned p) {
  auto np = J.non_pivots();
  std::size_t q = np.size(), k = perms.size();
  if (q == 0) return 0;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < q; ++i) {
    Vec img(q * k, 0);
    for (std::size_t g = 0; g < k; ++g) {
      Vec v(J.ncols(), 0);
      v[perms[g][np[i]]] = 1;
      auto c = J.coords(v);
      for (std::size_t r = 0; r < q; ++r) img[g * q + r] = static_cast<Coef>(c[r]);
      img[g * q + i] = static_cast<Coef>((img[g * q + i] + p - 1) % p);
    }
    images.push_back(img);
  }
  if (k == 0) return q;
  return kernel_of(images, q * k, p).size();
}

// ------------------------------------------------------------------ routes

inline Report compute_flag_ring(const GroupDatum& g, int cap, const PipelineOptions& opt = {}) {
  Stopwatch sw;
  Report rep;
  rep.job = "compute-flag-ring";
  rep.group = g;
  cap = clamp_cap(g, cap);
  rep.cap = cap;
  rep.route = "weyl";
  auto F = flag_data(g, cap, opt, g.twist);
  rep.computed = pad(F->T->counts(), cap);
  auto ps = poincare_series(g.type, g.rank, cap);
  for (int d = 0; d <= cap; ++d) rep.expected.push_back(static_cast<std::size_t>(ps[d] + 0.5));
  rep.expected_row = "Poincare series of W";
  if (g.twist != 1 && g.twist != 6 && static_cast<int>(g.p) == g.twist) {
    GaloisOnSchubert gal(*F->T, F->G);
    ConormedRing con(*F->S, gal, F->G);
    std::vector<std::size_t> cd;
    for (int d = 0; d <= F->cap; ++d) cd.push_back(con.dim(d));
    rep.extra["conormed_flag_hilbert"] = pad(cd, cap);
  }
  rep.wall_ms = opt.timing ? sw.ms() : 0;
  return rep;
}

struct ConormedQuotient {
  std::unique_ptr<FlagData> F;
  std::unique_ptr<GaloisOnSchubert> gal;
  std::unique_ptr<ConormedRing> con;
  std::unique_ptr<IdealQuotient> Q;
};

inline ConormedQuotient conormed_quotient(const GroupDatum& g, int cap, const PipelineOptions& opt, int twist) {
  ConormedQuotient C;
  C.F = flag_data(g, cap, opt, twist);
  C.gal = std::make_unique<GaloisOnSchubert>(*C.F->T, C.F->G);
  C.con = std::make_unique<ConormedRing>(*C.F->S, *C.gal, C.F->G);
  IdealSpec spec = quasi_split_generators(C.F->R, C.F->G, C.F->P, g.p);
  C.Q = std::make_unique<IdealQuotient>(*C.F->S, C.con.get(), spec, C.F->cap);
  return C;
}

// Hilbert vector of the quotient with optional x, extended one degree past the top of G/B.
inline std::vector<std::size_t> quotient_hilbert(const IdealQuotient& Q, int top, int cap, bool with_x) {
  auto h = with_x ? Q.hilbert() : Q.hilbert_without_x();
  h = pad(h, cap);
  if (with_x && Q.spec().x && cap >= top + 1 && Q.cap() == top) h[top + 1] = Q.quotient_dim(top);
  return h;
}

inline Report compute_conormed(const GroupDatum& g, int cap, const PipelineOptions& opt = {}) {
  Stopwatch sw;
  Report rep;
  rep.job = "compute-conormed";
  rep.group = g;
  cap = clamp_cap(g, cap);
  rep.cap = cap;
  Presentation pe = expected_conormed(g);
  rep.expected_row = pe.row;
  rep.expected = pe.hilbert(cap);
  if (g.twist == 6) {
    // conormed coefficients vanish for S_3; reported from the table only
    rep.route = "table (zero ring)";
    rep.computed = rep.expected;
    rep.wall_ms = opt.timing ? sw.ms() : 0;
    return rep;
  }
  rep.route = "schubert+descent+charideal";
  auto C = conormed_quotient(g, cap, opt, g.twist);
  rep.computed = quotient_hilbert(*C.Q, C.F->top, cap, true);
  Presentation pc = expected_cokernel(g);
  auto ck = quotient_hilbert(*C.Q, C.F->top, cap, false);
  auto ce = pc.hilbert(cap);
  rep.extra["cokernel"] = {{"row", pc.row}, {"computed_hilbert", ck}, {"expected_hilbert", ce}, {"pass", ck == ce}};
  rep.extra["sub_pass"] = ck == ce;
  rep.wall_ms = opt.timing ? sw.ms() : 0;
  return rep;
}

// Galois invariants of the split quotient (orders coprime to p).
inline std::vector<std::size_t> away_invariants(const GroupDatum& g, int cap, const PipelineOptions& opt) {
  auto F = flag_data(g, cap, opt, 1);
  GaloisAction Gt = diagram_automorphism(F->R, g.twist);
  Pi1Datum P = pi1_quotient(F->R, Gt, g.pi1);
  IdealSpec spec = prune_degree_one(split_characteristic_generators(F->R, P), g.p, F->R.rank);
  IdealQuotient Q(*F->S, nullptr, spec, F->cap);
  std::vector<std::vector<std::vector<int>>> maps;  // generator -> degree -> index map
  for (const auto& s : Gt.generators) maps.push_back(galois_index(*F->T, s));
  std::vector<std::size_t> h;
  for (int d = 0; d <= F->cap; ++d) {
    std::vector<std::vector<int>> perms;
    for (const auto& m : maps) perms.push_back(m[d]);
    h.push_back(quotient_invariant_dim(Q.ideal(d), perms, g.p));
  }
  return pad(h, cap);
}

// Ch of a 6D4 group at p = 3: the C_3-conormed quotient, then invariants of the transposition.
inline std::vector<std::size_t> six_d4_p3(const GroupDatum& g, int cap, const PipelineOptions& opt) {
  GroupDatum g3 = g;
  g3.twist = 3;
  auto C = conormed_quotient(g3, cap, opt, 3);
  GaloisAction G6 = diagram_automorphism(C.F->R, 6);
  const Perm& tau = G6.generators.at(1);
  auto tmap = galois_index(*C.F->T, tau);
  std::vector<std::size_t> h;
  for (int d = 0; d <= C.F->cap; ++d) {
    const auto& fixed = C.con->fixed(d);
    std::vector<int> perm(fixed.size());
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      int pos = C.con->position(d, tmap[d][fixed[k]]);
      if (pos < 0) throw std::logic_error("transposition does not preserve the fixed classes");
      perm[k] = pos;
    }
    h.push_back(quotient_invariant_dim(C.Q->ideal(d), {perm}, g.p));
  }
  return pad(h, cap);
}

inline PresentationCheck triality_check(bool six) {
  static TruncatedAlgebra A = d4_adjoint_ring();
  static AlgebraMap sigma(A, A, d4_sigma_images());
  static AlgebraMap tau(A, A, d4_tau_images());
  std::vector<Echelon> inv;
  for (int d = 0; d <= A.cap(); ++d) {
    if (six) inv.push_back(invariants(A, {&sigma, &tau}, d));
    else inv.push_back(invariants(A, {&sigma}, d));
  }
  TruncatedAlgebra dom = six ? triality_6d4_presentation() : triality_3d4_presentation();
  AlgebraMap f(dom, A, six ? triality_6d4_images() : triality_3d4_images());
  return check_presentation(f, [&](int d) { return &inv[d]; }, [](int) { return nullptr; });
}

inline void add_presentation_witnesses(Report& rep, const PresentationCheck& c, const std::string& prefix) {
  rep.witnesses.push_back({prefix + "well-defined", c.well_defined});
  rep.witnesses.push_back({prefix + "lands-in-invariants", c.lands});
  rep.witnesses.push_back({prefix + "surjective", c.surjective});
  rep.witnesses.push_back({prefix + "hilbert-match", c.dims_match});
  for (const char* n : {"well-defined", "lands-in-invariants", "surjective", "hilbert-match"}) rep.required.push_back(prefix + n);
}

inline Report compute_group(const GroupDatum& g, int cap, const PipelineOptions& opt = {}) {
  Stopwatch sw;
  Report rep;
  rep.job = "compute-group";
  rep.group = g;
  cap = clamp_cap(g, cap);
  rep.cap = cap;
  Presentation pe = expected_chow(g);
  rep.expected_row = pe.row;
  rep.expected = pe.hilbert(cap);
  if (g.twist == 1) {
    rep.route = "schubert+charideal (split)";
    auto F = flag_data(g, cap, opt, 1);
    IdealSpec spec = prune_degree_one(split_characteristic_generators(F->R, F->P), g.p, F->R.rank);
    IdealQuotient Q(*F->S, nullptr, spec, F->cap);
    rep.computed = pad(Q.hilbert(), cap);
  } else if (g.twist == 6) {
    if (g.p == 2) {
      rep.route = "S3 invariants of the split quotient";
      rep.computed = away_invariants(g, cap, opt);
      if (g.pi1 == "mu2x2") add_presentation_witnesses(rep, triality_check(true), "polyalg:");
    } else if (g.p == 3) {
      rep.route = "C3 conormed quotient, transposition invariants";
      rep.computed = six_d4_p3(g, cap, opt);
    } else {
      rep.route = "S3 invariants of the split quotient";
      rep.computed = away_invariants(g, cap, opt);
    }
  } else if (static_cast<int>(g.p) == g.twist) {
    if (g.type == Dynkin::D && g.twist == 2 && g.pi1 == "mu2x2") {
      rep.route = "polyalg (orthogonal Grassmannian invariants)";
      OGrInvariants I(g.rank);
      auto c = check_d2r_adjoint(I);
      rep.computed = pad(c.target_hilbert, cap);
      rep.computed.resize(cap + 1);
      add_presentation_witnesses(rep, c, "lacunary:");
      for (const auto& w : c.relation_witnesses) rep.witnesses.push_back({"unkilled relation " + w, false});
    } else {
      rep.route = "schubert+descent+charideal (conormed, p=[K:k])";
      auto C = conormed_quotient(g, cap, opt, g.twist);
      rep.computed = quotient_hilbert(*C.Q, C.F->top, cap, true);
    }
  } else {
    rep.route = "Galois invariants of the split quotient (p coprime to [K:k])";
    rep.computed = away_invariants(g, cap, opt);
    if (g.type == Dynkin::D && g.twist == 3 && g.p == 2 && g.pi1 == "mu2x2")
      add_presentation_witnesses(rep, triality_check(false), "polyalg:");
  }
  rep.wall_ms = opt.timing ? sw.ms() : 0;
  return rep;
}

// ------------------------------------------------------------------ named checks

inline const std::vector<std::string>& named_checks() {
  static const std::vector<std::string> names = {"e6-p2-pushforward", "e6-p3-generator", "d4-s3-fixed-word",
                                                 "6d4-invariants"};
  return names;
}

inline Report named_check(const std::string& name, const PipelineOptions& opt = {}) {
  Stopwatch sw;
  Report rep;
  rep.job = "named-check:" + name;
  if (name == "e6-p2-pushforward" || name == "e6-p3-generator") {
    bool p2 = name == "e6-p2-pushforward";
    rep.group = make_group("E", 6, 1, "sc", p2 ? 2 : 3);
    rep.cap = p2 ? 3 : 4;
    auto F = flag_data(rep.group, rep.cap, opt, 1);
    IdealSpec spec = prune_degree_one(split_characteristic_generators(F->R, F->P), rep.group.p, 6);
    IdealQuotient Q(*F->S, nullptr, spec, rep.cap);
    const auto& S = *F->S;
    if (p2) {
      rep.route = "chevalley products in Ch(E6/B), split quotient";
      auto cube = S.eval_weight_polynomial(c1w(6, 2) * c1w(6, 2) * c1w(6, 2), S.schubert(std::vector<int>{}));
      Vec rhs = S.to_vec(S.schubert("342"));
      axpy(rhs, S.to_vec(S.schubert("542")), 1, 2);
      rep.witnesses.push_back({"c1(w2)^3 = Z[s3s4s2] + Z[s5s4s2]", S.to_vec(cube) == rhs});
      rep.witnesses.push_back({"image of Z[s3s4s2] in the split quotient", Q.nonzero_image(S.schubert("342"))});
    } else {
      rep.route = "split quotient of Ch(E6/B) mod 3";
      Vec diff = S.to_vec(S.schubert("2431"));
      axpy(diff, S.to_vec(S.schubert("2456")), 2, 3);
      rep.witnesses.push_back({"Z[s2s4s3s1] - Z[s2s4s5s6] in the ideal", Q.in_ideal(diff, 4)});
      rep.witnesses.push_back({"image of Z[s2s4s3s1] nonzero", Q.nonzero_image(S.schubert("2431"))});
      rep.witnesses.push_back({"quotient is one-dimensional in degree 4", Q.quotient_dim(4) == 1});
    }
    rep.computed = pad(Q.hilbert(), rep.cap);
    rep.expected = expected_chow(rep.group).hilbert(rep.cap);
    rep.expected_row = expected_chow(rep.group).row;
  } else if (name == "d4-s3-fixed-word") {
    rep.group = make_group("D", 4, 6, "sc", 3);
    rep.cap = 4;
    rep.route = "diagram action on W(D4)";
    RootDatum R = build_root_datum(Dynkin::D, 4);
    GaloisAction G = diagram_automorphism(R, 6);
    WeylElement w = from_word(R, parse_word("2134"));
    bool fixed = w.length == 4;
    for (const auto& s : G.elements) fixed = fixed && galois_mat(s, w.m, 4) == w.m;
    rep.witnesses.push_back({"s2s1s3s4 fixed by S3", fixed});
  } else if (name == "6d4-invariants") {
    rep.group = make_group("D", 4, 6, "mu2x2", 2);
    rep.route = "polyalg S3 invariants";
    TruncatedAlgebra A = d4_adjoint_ring();
    AlgebraMap sigma(A, A, d4_sigma_images()), tau(A, A, d4_tau_images());
    rep.cap = A.cap();
    std::size_t total = 0;
    for (int d = 0; d <= A.cap(); ++d) {
      std::size_t k = invariants(A, {&sigma, &tau}, d).rank();
      rep.computed.push_back(k);
      total += k;
    }
    Presentation pe = expected_chow(rep.group);
    rep.expected = pe.hilbert(rep.cap);
    rep.expected_row = pe.row;
    rep.witnesses.push_back({"invariant dimension is 10", total == 10});
    add_presentation_witnesses(rep, triality_check(true), "polyalg:");
  } else {
    throw std::invalid_argument("unknown named check '" + name + "'");
  }
  for (const auto& w : rep.witnesses)
    if (std::find(rep.required.begin(), rep.required.end(), w.name) == rep.required.end()) rep.required.push_back(w.name);
  rep.wall_ms = opt.timing ? sw.ms() : 0;
  return rep;
}

// ------------------------------------------------------------------ low-degree products

struct LowDegreeCheck {
  std::string group;
  std::vector<std::pair<std::string, bool>> facts;
  bool ok() const {
    for (const auto& f : facts)
      if (!f.second) return false;
    return true;
  }
};

inline LowDegreeCheck low_degree_products(const GroupDatum& g, const PipelineOptions& opt = {}) {
  LowDegreeCheck out;
  out.group = g.delta();
  auto F = flag_data(g, 2, opt, g.twist);
  GaloisOnSchubert gal(*F->T, F->G);
  ConormedRing con(*F->S, gal, F->G);
  const auto& S = *F->S;
  int n = g.rank;
  auto cls = [&](const WeightPolynomial& q) { return con.project(S.eval(q, S.unit(), 0), q.degree()); };
  if (g.type == Dynkin::A) {
    int r = (n + 1) / 2;
    out.facts.push_back({"dim CH^1_K = 1", con.dim(1) == 1});
    out.facts.push_back({"c1(L_r) spans CH^1_K", !is_zero(cls(c1w(n, r)))});
    out.facts.push_back({"c1(L_r)^2 = 0", is_zero(cls(c1w(n, r) * c1w(n, r)))});
    Echelon E(con.dim(2), 2);
    for (int i = 1; i <= r - 1; ++i) E.insert(cls(c2w(n, i, 2 * r - i)));
    out.facts.push_back({"dim CH^2_K = r-1", con.dim(2) == static_cast<std::size_t>(r - 1)});
    out.facts.push_back({"c2(V_i,2r-i) form a basis of CH^2_K", E.rank() == static_cast<std::size_t>(r - 1)});
  } else {
    out.facts.push_back({"dim CH^1_K = n-2", con.dim(1) == static_cast<std::size_t>(n - 2)});
    Echelon one(con.dim(1), 2);
    for (int i = 1; i <= n - 2; ++i) one.insert(cls(c1w(n, i)));
    out.facts.push_back({"c1(L_i) span CH^1_K", one.rank() == static_cast<std::size_t>(n - 2)});
    Echelon E(con.dim(2), 2);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i; j <= n - 2; ++j) E.insert(cls(c1w(n, i) * c1w(n, j)));
    std::size_t dec = E.rank();
    bool extra = E.insert(cls(c2w(n, n - 1, n)));
    out.facts.push_back({"c2(V_n-1,n) is not decomposable", extra});
    out.facts.push_back({"decomposables + c2(V_n-1,n) = CH^2_K", E.rank() == con.dim(2) && dec + 1 == con.dim(2)});
  }
  return out;
}

}  // namespace qschow
