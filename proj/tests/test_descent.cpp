#include <gtest/gtest.h>

#include "qschow/descent.hpp"

using namespace qschow;

namespace {

struct Ctx {
  RootDatum R;
  GaloisAction G;
  WeylTable T;
  SchubertRing S;
  GaloisOnSchubert gal;
  Ctx(Dynkin t, int n, int twist, unsigned p, int cap)
      : R(build_root_datum(t, n)),
        G(diagram_automorphism(R, twist)),
        T(enumerate_up_to(R, cap < 0 ? static_cast<int>(R.num_pos()) : cap)),
        S(T, p),
        gal(T, G) {}
  Vec z(const std::string& w) { return S.to_vec(S.schubert(w)); }
};

}  // namespace

TEST(Descent, TwoA3DegreeOne) {
  Ctx s(Dynkin::A, 3, 2, 2, 2);
  auto inv = invariants(s.S, s.gal, 1);
  EXPECT_EQ(inv.dim(), 2u);
  EXPECT_TRUE(inv.contains(s.z("s2")));
  Vec v = s.z("s1");
  axpy(v, s.z("s3"), 1, 2);
  EXPECT_TRUE(inv.contains(v));
  auto nm = norm_image(s.S, s.gal, s.G, 1);
  EXPECT_EQ(nm.dim(), 1u);
  EXPECT_TRUE(nm.contains(v));
}

TEST(Descent, TwoD4) {
  Ctx s(Dynkin::D, 4, 2, 2, 3);
  EXPECT_EQ(invariants(s.S, s.gal, 1).dim(), 3u);
  Vec v = s.z("s3s2");
  axpy(v, s.z("s4s2"), 1, 2);
  EXPECT_TRUE(norm_image(s.S, s.gal, s.G, 2).contains(v));
}

TEST(Descent, OrbitSumsEqualNullspace) {
  for (auto [t, n, tw, p] : {std::tuple{Dynkin::A, 4, 2, 2u}, {Dynkin::D, 4, 3, 3u}, {Dynkin::D, 4, 6, 5u},
                             {Dynkin::E, 6, 2, 2u}}) {
    Ctx s(t, n, tw, p, t == Dynkin::E ? 6 : -1);
    for (int d = 0; d <= s.S.cap(); ++d) {
      auto a = invariants(s.S, s.gal, d), b = invariants_nullspace(s.S, s.gal, d);
      ASSERT_EQ(a.dim(), b.dim());
      for (std::size_t i = 0; i < b.dim(); ++i) EXPECT_TRUE(a.contains(b.basis.row(i)));
    }
  }
}

TEST(Descent, NormsAreInvariant) {
  for (auto [t, n, tw] : {std::tuple{Dynkin::A, 5, 2}, {Dynkin::D, 4, 3}, {Dynkin::D, 5, 2}}) {
    Ctx s(t, n, tw, static_cast<unsigned>(tw), -1);
    for (int d = 0; d <= s.S.cap(); ++d) {
      auto nm = norm_image(s.S, s.gal, s.G, d);
      auto inv = invariants(s.S, s.gal, d);
      for (std::size_t i = 0; i < nm.dim(); ++i) EXPECT_TRUE(inv.contains(nm.basis.row(i)));
    }
  }
}

// The fixed elements of W under a diagram automorphism form the Weyl group of the folded system.
TEST(Descent, FixedClassesCountFoldedWeylGroup) {
  struct Case {
    Dynkin t;
    int n, twist;
    std::size_t folded;
  };
  for (auto c : {Case{Dynkin::A, 3, 2, 8}, Case{Dynkin::A, 4, 2, 8}, Case{Dynkin::A, 5, 2, 48},
                 Case{Dynkin::D, 4, 2, 48}, Case{Dynkin::D, 5, 2, 384}, Case{Dynkin::D, 4, 3, 12},
                 Case{Dynkin::E, 6, 2, 1152}}) {
    Ctx s(c.t, c.n, c.twist, static_cast<unsigned>(c.twist), -1);
    ConormedRing con(s.S, s.gal, s.G);
    std::size_t total = 0;
    for (int d = 0; d <= con.cap(); ++d) {
      total += con.dim(d);
      EXPECT_EQ(con.dim(d) + con.norm_dim(d), con.invariant_dim(d));
      EXPECT_EQ(norm_image(s.S, s.gal, s.G, d).dim(), con.norm_dim(d));
    }
    EXPECT_EQ(total, c.folded) << s.R.name();
  }
}

TEST(Descent, ProjectLiftRoundTrip) {
  Ctx s(Dynkin::A, 5, 2, 2, -1);
  ConormedRing con(s.S, s.gal, s.G);
  for (int d = 0; d <= con.cap(); ++d) {
    Vec c(con.dim(d), 0);
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 1;
    Vec v = con.lift(c, d);
    EXPECT_TRUE(con.is_invariant(v, d));
    EXPECT_EQ(con.project(v, d), c);
  }
}

TEST(Descent, TrivialActionHasZeroNorm) {
  RootDatum B3 = build_root_datum(Dynkin::B, 3);
  GaloisAction G;
  G.twist = 2;
  G.elements = {Perm{0, 1, 2}, Perm{0, 1, 2}};
  G.generators = {Perm{0, 1, 2}};
  auto T = enumerate_up_to(B3, 3);
  SchubertRing S(T, 2);
  GaloisOnSchubert gal(T, G);
  for (int d = 0; d <= 3; ++d) {
    EXPECT_EQ(norm_image(S, gal, G, d).dim(), 0u);
    EXPECT_EQ(invariants(S, gal, d).dim(), S.graded_dim(d));
  }
}

TEST(Descent, WrongPrimeRejected) {
  Ctx s(Dynkin::A, 3, 2, 3, 2);
  EXPECT_THROW(ConormedRing(s.S, s.gal, s.G), std::invalid_argument);
  Ctx split(Dynkin::A, 3, 1, 2, 2);
  EXPECT_THROW(norm_image(split.S, split.gal, split.G, 1), std::invalid_argument);
  EXPECT_EQ(invariants(split.S, split.gal, 2).dim(), split.S.graded_dim(2));
}
