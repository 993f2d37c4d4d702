#include <gtest/gtest.h>

#include "qschow/schubert.hpp"

using namespace qschow;

namespace {

unsigned pw(unsigned a, unsigned e, unsigned p) {
  unsigned long long r = 1, b = a % p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<unsigned>(r);
}

// deg c_1(L(lambda))^N = N! prod_{alpha > 0} <lambda, alpha^vee> / <rho, alpha^vee>, reduced mod p
unsigned degree_formula(const RootDatum& R, const IVec& lambda, unsigned p) {
  long long N = static_cast<long long>(R.num_pos());
  unsigned long long num = 1, den = 1;
  for (long long k = 2; k <= N; ++k) num = num * k % p;
  for (const auto& c : R.coroots) {
    long long l = 0, r = 0;
    for (int i = 0; i < R.rank; ++i) l += lambda[i] * c[i], r += c[i];
    num = num * mod_int(l, p) % p;
    den = den * mod_int(r, p) % p;
  }
  return static_cast<unsigned>(num * pw(static_cast<unsigned>(den), p - 2, p) % p);
}

}  // namespace

TEST(Schubert, GradedDims) {
  auto A3 = enumerate_up_to(build_root_datum(Dynkin::A, 3), 6);
  SchubertRing S(A3, 2);
  EXPECT_EQ(S.graded_dim(2), 5u);
  EXPECT_EQ(S.graded_dim(0), 1u);
  auto G2 = enumerate_up_to(build_root_datum(Dynkin::G, 2), 6);
  EXPECT_EQ(SchubertRing(G2, 3).graded_dim(3), 2u);
}

TEST(Schubert, TopDegreeMatchesDegreeFormula) {
  const unsigned p = 251;
  for (auto [t, n] : {std::pair{Dynkin::A, 2}, {Dynkin::A, 3}, {Dynkin::B, 2}, {Dynkin::B, 3}, {Dynkin::C, 3},
                      {Dynkin::D, 4}, {Dynkin::G, 2}}) {
    RootDatum R = build_root_datum(t, n);
    int N = static_cast<int>(R.num_pos());
    auto T = enumerate_up_to(R, N);
    SchubertRing S(T, p);
    for (const IVec& lambda : {IVec(n, 1), R.fundamental_weight(0), [&] {
                                 IVec v(n, 0);
                                 for (int i = 0; i < n; ++i) v[i] = i + 2;
                                 return v;
                               }()}) {
      Vec x = S.unit();
      for (int d = 0; d < N; ++d) x = S.mult(lambda, x, d);
      ASSERT_EQ(x.size(), 1u);
      EXPECT_EQ(x[0], degree_formula(R, lambda, p)) << R.name();
    }
  }
}

TEST(Schubert, DegreeOneChevalley) {
  RootDatum B3 = build_root_datum(Dynkin::B, 3);
  auto T = enumerate_up_to(B3, 3);
  SchubertRing S(T, 251);
  IVec lambda{2, -1, 5};
  auto z = S.chevalley_mult(lambda, S.schubert(std::vector<int>{}));
  for (int i = 1; i <= 3; ++i) {
    int idx = T.find(from_word(B3, {i}));
    EXPECT_EQ(z.coeffs[idx], static_cast<long long>(mod_int(lambda[i - 1], 251)));
  }
}

TEST(Schubert, NonAdjacentProductsInD) {
  for (int n : {4, 5}) {
    RootDatum R = build_root_datum(Dynkin::D, n);
    auto T = enumerate_up_to(R, 2);
    SchubertRing S(T, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (R.cartan[i - 1][j - 1] != 0) continue;
        auto q = WeightPolynomial::fundamental(n, {i - 1, j - 1});
        auto z = S.eval_weight_polynomial(q, S.schubert(std::vector<int>{}));
        EXPECT_EQ(S.to_vec(z), S.to_vec(S.schubert(std::vector<int>{i, j}))) << i << "," << j;
      }
  }
}

TEST(Schubert, EmptyProductIsIdentity) {
  auto T = enumerate_up_to(build_root_datum(Dynkin::C, 3), 4);
  SchubertRing S(T, 3);
  Vec x = S.basis_vector(2, 3);
  EXPECT_EQ(S.eval(WeightPolynomial::one(), x, 2), x);
}

TEST(Schubert, E6CubeOfOmega2) {
  RootDatum E6 = build_root_datum(Dynkin::E, 6);
  auto T = enumerate_up_to(E6, 3);
  SchubertRing S(T, 2);
  auto w2 = WeightPolynomial::fundamental(6, {1});
  auto z = S.eval_weight_polynomial(w2 * w2 * w2, S.schubert(std::vector<int>{}));
  Vec rhs = S.to_vec(S.schubert("s3s4s2"));
  axpy(rhs, S.to_vec(S.schubert("s5s4s2")), 1, 2);
  EXPECT_EQ(S.to_vec(z), rhs);
}

TEST(Schubert, ProductRulesAndEquivariance) {
  RootDatum D4 = build_root_datum(Dynkin::D, 4);
  auto T = enumerate_up_to(D4, 6);
  auto G = diagram_automorphism(D4, 6);
  GaloisOnSchubert gal(T, G);
  SchubertRing S(T, 5);
  IVec l{1, -2, 0, 3}, m{0, 1, 1, -1};
  for (int d = 0; d + 2 <= 6; ++d)
    for (std::size_t i = 0; i < S.graded_dim(d); ++i) {
      Vec x = S.basis_vector(d, static_cast<int>(i));
      EXPECT_EQ(S.mult(l, S.mult(m, x, d), d + 1), S.mult(m, S.mult(l, x, d), d + 1));
      for (std::size_t g = 0; g < G.order(); ++g)
        EXPECT_EQ(gal.act(g, S.mult(l, x, d), d + 1), S.mult(act_weight(G.elements[g], l), gal.act(g, x, d), d));
    }
}

TEST(Schubert, Errors) {
  auto T = enumerate_up_to(build_root_datum(Dynkin::A, 2), 2);
  SchubertRing S(T, 2);
  EXPECT_THROW(S.schubert("s1s1"), std::invalid_argument);
  EXPECT_THROW(S.mult(IVec{1, 0}, S.zero(2), 2), std::out_of_range);
  EXPECT_THROW(SchubertRing(T, 4), std::invalid_argument);
}
