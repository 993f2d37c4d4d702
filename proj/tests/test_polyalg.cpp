#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qschow/polyalg.hpp"

using namespace qschow;

namespace {

std::vector<std::size_t> mahonian(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::size_t> c(k * (k - 1) / 2 + 1, 0);
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inv += p[i] > p[j];
    ++c[inv];
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

std::vector<std::size_t> invariant_hilbert(const TruncatedAlgebra& A, const std::vector<const AlgebraMap*>& maps) {
  std::vector<std::size_t> h;
  for (int d = 0; d <= A.cap(); ++d) h.push_back(invariants(A, maps, d).rank());
  return h;
}

std::vector<std::size_t> trim(std::vector<std::size_t> h) {
  while (!h.empty() && !h.back()) h.pop_back();
  return h;
}

std::size_t total(const std::vector<std::size_t>& h) { return std::accumulate(h.begin(), h.end(), std::size_t{0}); }

}  // namespace

TEST(PolyAlg, ParsePoly) {
  std::vector<std::string> n{"a", "b"};
  Poly f = parse_poly("a^2*b + 3*b - a*a", n);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.at(mono_gen(0, 2)), -1);
  Mono ab{};
  ab[0] = 2;
  ab[1] = 1;
  EXPECT_EQ(f.at(ab), 1);
  EXPECT_TRUE(parse_poly("0", n).empty());
  EXPECT_THROW(parse_poly("", n), std::invalid_argument);
  EXPECT_THROW(parse_poly("c", n), std::invalid_argument);
  EXPECT_THROW(parse_poly("a b", n), std::invalid_argument);
  EXPECT_THROW(parse_poly("a^", n), std::invalid_argument);
}

TEST(PolyAlg, TruncatedHilbertMatchesEnumeration) {
  TruncatedAlgebra A(3, {{"u", 1, 3, std::nullopt}, {"v", 2, 2, std::nullopt}, {"w", 3, 4, std::nullopt}});
  EXPECT_EQ(A.top_degree(), 2 + 2 + 9);
  EXPECT_EQ(A.hilbert(), truncated_hilbert({{1, 3}, {2, 2}, {3, 4}}, A.top_degree()));
  EXPECT_EQ(total(A.hilbert()), 24u);
}

TEST(PolyAlg, OGrAlgebraSize) {
  for (int n = 1; n <= 8; ++n) {
    auto P = ogr_params(n);
    std::size_t expect = n;
    for (int i = 2; i <= P.s; ++i) expect *= std::size_t{1} << P.k[i];
    EXPECT_EQ(ogr_algebra(n).total_dim(), expect) << n;
  }
  EXPECT_EQ(ogr_algebra(4).total_dim(), 32u);
}

TEST(PolyAlg, CoinvariantAlgebraIsMahonian) {
  for (unsigned p : {2u, 3u, 5u})
    for (int k = 2; k <= 4; ++k) EXPECT_EQ(trim(coinvariant_algebra(k, p).hilbert()), mahonian(k)) << k << " " << p;
  EXPECT_EQ(trim(coinvariant_algebra(4, 2).hilbert()), (std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1}));
}

TEST(PolyAlg, MultiplicationAndReduction) {
  std::vector<std::string> n{"x", "y"};
  TruncatedAlgebra A(2, {{"x", 1, 4, std::nullopt}, {"y", 1, 4, std::nullopt}}, {parse_poly("x^2+x*y+y^2", n)});
  Vec x = A.generator(0), y = A.generator(1);
  Vec xx = A.mul(x, 1, x, 1);
  Vec rest = A.element(parse_poly("x*y+y^2", n), 2);
  EXPECT_EQ(A.reduce(xx, 2), A.reduce(rest, 2));
  // x^3 = x(xy + y^2) = y^3 in characteristic 2
  EXPECT_TRUE(is_zero(A.reduce(A.element(parse_poly("x^3+y^3", n), 3), 3)));
  EXPECT_FALSE(is_zero(A.reduce(A.element(parse_poly("x^3", n), 3), 3)));
  EXPECT_EQ(mod_ideal_hilbert(A, {poly_gen(0)}), truncated_hilbert({{1, 2}}, A.cap()));
}

TEST(PolyAlg, JsonRoundTrip) {
  auto A = triality_3d4_presentation();
  auto B = algebra_from_json(A.to_json());
  EXPECT_EQ(A.hilbert(), B.hilbert());
  EXPECT_EQ(B.names(), A.names());
}

TEST(PolyAlg, TrialityInvariants) {
  auto A = d4_adjoint_ring();
  AlgebraMap sigma(A, A, d4_sigma_images()), tau(A, A, d4_tau_images());
  auto h3 = invariant_hilbert(A, {&sigma});
  auto h6 = invariant_hilbert(A, {&sigma, &tau});
  EXPECT_EQ(total(h6), 10u);

  auto P3 = triality_3d4_presentation();
  AlgebraMap f3(P3, A, triality_3d4_images());
  std::vector<Echelon> fix3, fix6;
  for (int d = 0; d <= A.cap(); ++d) {
    fix3.push_back(invariants(A, {&sigma}, d));
    fix6.push_back(invariants(A, {&sigma, &tau}, d));
  }
  auto c3 = check_presentation(f3, [&](int d) { return &fix3[d]; }, [](int) { return nullptr; });
  EXPECT_TRUE(c3.ok());
  EXPECT_EQ(trim(c3.target_hilbert), trim(h3));

  auto P6 = triality_6d4_presentation();
  AlgebraMap f6(P6, A, triality_6d4_images());
  auto c6 = check_presentation(f6, [&](int d) { return &fix6[d]; }, [](int) { return nullptr; });
  EXPECT_TRUE(c6.ok());

  // dropping the relation e1 e2 must be detected
  TruncatedAlgebra loose(2, {{"e1", 2, 4, std::nullopt}, {"e2", 3, 2, std::nullopt}, {"e3", 3, 2, std::nullopt}});
  AlgebraMap fl(loose, A, triality_6d4_images());
  auto bad = check_presentation(fl, [&](int d) { return &fix6[d]; }, [](int) { return nullptr; });
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.dims_match);
  EXPECT_EQ(bad.first_failure, 5);
}

TEST(PolyAlg, OGrClaims) {
  for (int n = 2; n <= 7; ++n) {
    OGrInvariants I(n);
    for (int m = 1; m <= n; ++m) {
      auto c = check_ogr_claims(I, m);
      EXPECT_TRUE(c.claim1 && c.claim2 && c.claim3 && c.claim3_defined) << "n=" << n << " m=" << m;
    }
  }
  OGrInvariants one(1);
  auto c = check_ogr_claims(one, 1);
  EXPECT_TRUE(c.claim1 && c.claim2);
  EXPECT_FALSE(c.claim3_defined);
  EXPECT_THROW(check_ogr_claims(one, 2), std::invalid_argument);
}

TEST(PolyAlg, AdjointD2rPresentation) {
  for (int r = 2; r <= 4; ++r) {
    OGrInvariants I(2 * r);
    auto c = check_d2r_adjoint(I);
    EXPECT_TRUE(c.ok()) << "r=" << r << " first failure " << c.first_failure;
  }
  EXPECT_THROW(check_d2r_adjoint(OGrInvariants(3)), std::invalid_argument);
  EXPECT_THROW(d2r_adjoint_presentation(1), std::invalid_argument);
}

TEST(PolyAlg, TauIsAnInvolution) {
  OGrInvariants I(5);
  const auto& P = I.algebra();
  std::vector<Poly> twice;
  for (const auto& im : ogr_tau_images(5)) {
    Poly out;
    for (const auto& [m, c] : im) {
      Poly t = poly_mono(mono_one(), c);
      for (int g = 0; g < kMaxGens; ++g)
        if (m[g]) t = poly_mul(t, poly_pow(ogr_tau_images(5)[g], m[g]));
      out = poly_add(out, t);
    }
    twice.push_back(out);
  }
  AlgebraMap tt(P, P, twice);
  for (int d = 0; d <= P.cap(); ++d) EXPECT_TRUE(is_identity(tt, d));
}

TEST(PolyAlg, RejectsBadInput) {
  EXPECT_THROW(TruncatedAlgebra(4, {{"x", 1, 2, std::nullopt}}), std::invalid_argument);
  EXPECT_THROW(TruncatedAlgebra(2, {{"x", 0, 2, std::nullopt}}), std::invalid_argument);
  std::vector<std::string> n{"x", "y"};
  EXPECT_THROW(TruncatedAlgebra(2, {{"x", 1, 2, std::nullopt}, {"y", 2, 2, std::nullopt}}, {parse_poly("x+y", n)}),
               std::invalid_argument);
  EXPECT_THROW(TruncatedAlgebra(2, {{"x", 1, 2, parse_poly("y^2", n)}, {"y", 1, 2, std::nullopt}}),
               std::invalid_argument);
  auto A = d4_adjoint_ring();
  EXPECT_THROW(AlgebraMap(A, A, {poly_gen(0)}), std::invalid_argument);
}
