#include <gtest/gtest.h>

#include <set>

#include "qschow/rootdata.hpp"

using namespace qschow;

namespace {

// Positive roots in simple-root coordinates by closing the simple roots under
// simple reflections; uses only the Cartan matrix.
std::size_t closure_root_count(const IMat& A) {
  int n = static_cast<int>(A.size());
  std::set<IVec> all;
  std::vector<IVec> todo;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec v = todo.back();
    todo.pop_back();
    if (!all.insert(v).second) continue;
    for (int i = 0; i < n; ++i) {
      long long pair = 0;  // <alpha_i^vee, v>
      for (int j = 0; j < n; ++j) pair += A[i][j] * v[j];
      IVec w = v;
      w[i] -= pair;
      bool pos = false, neg = false;
      for (auto x : w) pos |= x > 0, neg |= x < 0;
      if (pos && !neg) todo.push_back(w);
    }
  }
  return all.size();
}

}  // namespace

TEST(RootData, PositiveRootCountsMatchReflectionClosure) {
  for (auto [t, lo, hi] : {std::tuple{Dynkin::A, 1, 8}, {Dynkin::B, 2, 8}, {Dynkin::C, 2, 8}, {Dynkin::D, 3, 8},
                           {Dynkin::E, 6, 8}, {Dynkin::F, 4, 4}, {Dynkin::G, 2, 2}})
    for (int n = lo; n <= hi; ++n) {
      RootDatum R = build_root_datum(t, n);
      EXPECT_EQ(R.num_pos(), closure_root_count(R.cartan)) << R.name();
    }
}

TEST(RootData, ExampleCounts) {
  EXPECT_EQ(build_root_datum(Dynkin::A, 2).num_pos(), 3u);
  EXPECT_EQ(build_root_datum(Dynkin::D, 4).num_pos(), 12u);
  EXPECT_EQ(build_root_datum(Dynkin::G, 2).num_pos(), 6u);
  EXPECT_EQ(build_root_datum(Dynkin::E, 6).num_pos(), 36u);
  EXPECT_EQ(build_root_datum(Dynkin::E, 8).num_pos(), 120u);
}

TEST(RootData, BourbakiCartanEntries) {
  // B2: alpha_2 short, <alpha_1^vee, alpha_2> = -1, <alpha_2^vee, alpha_1> = -2
  auto b2 = build_root_datum(Dynkin::B, 2).cartan;
  EXPECT_EQ(b2[0][1], -1);
  EXPECT_EQ(b2[1][0], -2);
  auto c2 = build_root_datum(Dynkin::C, 2).cartan;
  EXPECT_EQ(c2[0][1], -2);
  EXPECT_EQ(c2[1][0], -1);
  // E6: node 2 hangs off node 4
  auto e6 = build_root_datum(Dynkin::E, 6).cartan;
  EXPECT_EQ(e6[1][3], -1);
  EXPECT_EQ(e6[1][2], 0);
  EXPECT_EQ(e6[0][2], -1);
}

TEST(RootData, PairingWithFundamentalWeights) {
  for (auto [t, n] : {std::pair{Dynkin::A, 3}, {Dynkin::B, 3}, {Dynkin::G, 2}, {Dynkin::F, 4}}) {
    RootDatum R = build_root_datum(t, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IVec w = R.fundamental_weight(i);
        // simple root alpha_j is roots[a] for some a
        int a = R.root_index(R.simple[j]);
        ASSERT_GE(a, 0);
        EXPECT_EQ(R.pairing(w, a), i == j ? 1 : 0);
      }
  }
  RootDatum A2 = build_root_datum(Dynkin::A, 2);
  int hi = A2.root_index(IVec{1, 1});  // alpha_1 + alpha_2 = w1 + w2
  ASSERT_GE(hi, 0);
  EXPECT_EQ(A2.pairing(A2.fundamental_weight(0), hi), 1);
}

TEST(RootData, DiagramAutomorphisms) {
  RootDatum A3 = build_root_datum(Dynkin::A, 3);
  auto g = diagram_automorphism(A3, 2);
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.sigma(), (Perm{2, 1, 0}));
  RootDatum D5 = build_root_datum(Dynkin::D, 5);
  EXPECT_EQ(diagram_automorphism(D5, 2).sigma(), (Perm{0, 1, 2, 4, 3}));
  RootDatum B3 = build_root_datum(Dynkin::B, 3);
  auto s = diagram_automorphism(B3, 1);
  EXPECT_TRUE(s.split());
  EXPECT_EQ(s.order(), 1u);
  EXPECT_EQ(s.elements[0], (Perm{0, 1, 2}));
  RootDatum D4 = build_root_datum(Dynkin::D, 4);
  EXPECT_EQ(diagram_automorphism(D4, 3).order(), 3u);
  EXPECT_EQ(diagram_automorphism(D4, 6).order(), 6u);
  EXPECT_THROW(diagram_automorphism(B3, 2), std::invalid_argument);
}

TEST(RootData, AutomorphismsPreserveCartanAndFormAGroup) {
  for (auto [t, n, tw] : {std::tuple{Dynkin::A, 5, 2}, {Dynkin::D, 4, 6}, {Dynkin::D, 5, 2}, {Dynkin::E, 6, 2}}) {
    RootDatum R = build_root_datum(t, n);
    auto G = diagram_automorphism(R, tw);
    std::set<Perm> els(G.elements.begin(), G.elements.end());
    EXPECT_EQ(els.size(), G.order());
    for (const auto& s : G.elements) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(R.cartan[s[i]][s[j]], R.cartan[i][j]);
      for (const auto& u : G.elements) EXPECT_TRUE(els.count(compose(s, u)));
    }
  }
}

TEST(RootData, Pi1QuotientOrdersDivideCenter) {
  // |Z(G_sc)| = det of the Cartan matrix; every listed pi_1 has order dividing it
  for (auto [t, lo, hi] : {std::tuple{Dynkin::A, 1, 8}, {Dynkin::B, 2, 6}, {Dynkin::C, 2, 6}, {Dynkin::D, 3, 8},
                           {Dynkin::E, 6, 8}}) {
    for (int n = lo; n <= hi; ++n) {
      RootDatum R = build_root_datum(t, n);
      long long det = abs_det(R.cartan);
      for (const auto& pi : listed_pi1(R, 1)) {
        auto P = pi1_quotient(R, diagram_automorphism(R, 1), pi);
        EXPECT_EQ(det % P.order(), 0) << R.name() << " " << pi;
      }
    }
  }
  RootDatum A5 = build_root_datum(Dynkin::A, 5);
  EXPECT_EQ(pi1_quotient(A5, diagram_automorphism(A5, 1), "mu6").order(), 6);
  EXPECT_EQ(pi1_quotient(A5, diagram_automorphism(A5, 1), "ad").order(), 6);
  RootDatum D6 = build_root_datum(Dynkin::D, 6);
  EXPECT_EQ(pi1_quotient(D6, diagram_automorphism(D6, 1), "mu2xmu2").order(), 4);
}

TEST(RootData, CharacterLatticeIndex) {
  // the character lattice of G_sc / pi_1 has index |pi_1| in the weight lattice
  for (auto [t, n] : {std::pair{Dynkin::A, 3}, {Dynkin::B, 3}, {Dynkin::D, 4}, {Dynkin::D, 5}, {Dynkin::E, 6}}) {
    RootDatum R = build_root_datum(t, n);
    for (const auto& pi : listed_pi1(R, 1)) {
      auto P = pi1_quotient(R, diagram_automorphism(R, 1), pi);
      auto B = character_lattice_basis(R, P);
      ASSERT_EQ(B.size(), static_cast<std::size_t>(n));
      EXPECT_EQ(abs_det(B), P.order()) << R.name() << " " << pi;
    }
  }
}

TEST(RootData, Pi1ProjectionIsGaloisEquivariant) {
  RootDatum D4 = build_root_datum(Dynkin::D, 4);
  auto G = diagram_automorphism(D4, 6);
  auto P = pi1_quotient(D4, G, "mu2x2");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (int i = 0; i < 4; ++i) {
      IVec w = D4.fundamental_weight(i);
      EXPECT_EQ(P.project(act_weight(G.elements[g], w)), P.act(g, P.project(w)));
    }
}

TEST(RootData, InvalidInputs) {
  EXPECT_THROW(build_root_datum(Dynkin::E, 5), std::invalid_argument);
  EXPECT_THROW(parse_type("X3"), std::invalid_argument);
  RootDatum B3 = build_root_datum(Dynkin::B, 3);
  EXPECT_THROW(canonical_pi1(B3, 1, "mu3"), std::invalid_argument);
}
