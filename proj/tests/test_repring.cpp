#include <gtest/gtest.h>

#include "qschow/repring.hpp"

using namespace qschow;

namespace {

std::vector<int> reversal(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = n - 1 - i;
  return t;
}

std::vector<int> swap_last_two(int n) {
  auto t = identity_perm(n);
  std::swap(t[n - 2], t[n - 1]);
  return t;
}

// matrix with the identity on the free part and the given torsion rows below
IMat nu_matrix(int n, const std::vector<IVec>& torsion_rows) {
  IMat M(n + torsion_rows.size(), IVec(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) M[n + k] = torsion_rows[k];
  return M;
}

IVec weight(const CharacterModule& M, int i, const IVec& tors = {}) {
  IVec v = M.zero();
  if (i >= 0) v[i] = 1;
  for (std::size_t k = 0; k < tors.size(); ++k) v[M.free_rank() + k] = tors[k];
  return v;
}

RepElement chr(const CharacterModule& M, const IVec& v) { return RepElement::character(M, v); }

}  // namespace

// 2A_{2r-1} with pi_1 = mu^(2)_{2m}, m | r:  w_i -> w_i - i wbar
TEST(RepRing, TwoAOddNu) {
  for (auto [r, m] : {std::pair{2, 1}, {2, 2}, {3, 3}, {4, 2}, {6, 3}}) {
    int n = 2 * r - 1;
    auto tau = reversal(n);
    CharacterModule S = weight_module(tau);
    CharacterModule T = weight_plus_torsion(tau, {2 * m}, {{-1}});
    IVec row(n);
    for (int i = 1; i <= n; ++i) row[i - 1] = -i;
    ModuleMap nu{&S, &T, nu_matrix(n, {row})};
    ASSERT_NO_THROW(check_module_map(nu)) << r << " " << m;

    RepElement lam = chr(T, weight(T, -1, {m}));  // 2Lambda^{+-}: character m wbar
    RepElement power = RepElement::one(T);
    for (int k = 0; k < r / m; ++k) power = power * lam;
    auto res = restrict(nu, chr(S, weight(S, r - 1)));
    EXPECT_TRUE(verify_identity(res, chr(T, weight(T, r - 1)) * power).equal);

    CharacterModule N(0, {2 * m}, {{{1}}, {{-1}}});
    ModuleMap proj = torsion_projection(T, N);
    RepElement V2 = chr(N, IVec{1}) + chr(N, IVec{-1});
    for (int i = 1; i < r; ++i) {
      RepElement Vi = chr(S, weight(S, i - 1)) + chr(S, weight(S, 2 * r - i - 1));
      EXPECT_TRUE(Vi.galois_invariant());
      auto tors = restrict(proj, restrict(nu, Vi));
      EXPECT_EQ(tors, adams(i, V2)) << tors.str();
    }
  }
}

TEST(RepRing, TwoANeedsMDividingR) {
  int r = 3, m = 2, n = 5;
  auto tau = reversal(n);
  CharacterModule S = weight_module(tau);
  CharacterModule T = weight_plus_torsion(tau, {2 * m}, {{-1}});
  IVec row(n);
  for (int i = 1; i <= n; ++i) row[i - 1] = -i;
  EXPECT_THROW(check_module_map(ModuleMap{&S, &T, nu_matrix(n, {row})}), std::invalid_argument);
}

// 2D_n with pi_1 = mu_2: w_{n-1}, w_n -> + wbar
TEST(RepRing, TwoDMu2) {
  for (int n : {4, 5, 6}) {
    auto tau = swap_last_two(n);
    CharacterModule S = weight_module(tau);
    CharacterModule T = weight_plus_torsion(tau, {2}, {{1}});
    IVec row(n, 0);
    row[n - 2] = row[n - 1] = 1;
    ModuleMap nu{&S, &T, nu_matrix(n, {row})};
    RepElement V = chr(S, weight(S, n - 2)) + chr(S, weight(S, n - 1));
    RepElement VT = chr(T, weight(T, n - 2)) + chr(T, weight(T, n - 1));
    EXPECT_EQ(restrict(nu, V), VT * chr(T, weight(T, -1, {1})));
    for (int i = 0; i < n - 2; ++i) EXPECT_EQ(restrict(nu, chr(S, weight(S, i))), chr(T, weight(T, i)));
  }
}

// 2D_{2r} with pi_1 = mu^(2)_{2,2}: tau swaps the two Z/2 summands
TEST(RepRing, TwoDEvenMu22) {
  for (int r : {2, 3, 4}) {
    int n = 2 * r;
    auto tau = swap_last_two(n);
    CharacterModule S = weight_module(tau);
    CharacterModule T = weight_plus_torsion(tau, {2, 2}, {{0, 1}, {1, 0}});
    IVec a(n, 0), b(n, 0);
    for (int i = 1; i <= n - 2; ++i) a[i - 1] = b[i - 1] = i;
    a[n - 2] = 1;
    b[n - 1] = 1;
    ModuleMap nu{&S, &T, nu_matrix(n, {a, b})};
    ASSERT_NO_THROW(check_module_map(nu));
    RepElement det = chr(T, weight(T, -1, {1, 1}));
    for (int i = 1; i <= n - 2; ++i) {
      RepElement L = chr(T, weight(T, i - 1));
      EXPECT_EQ(restrict(nu, chr(S, weight(S, i - 1))), i % 2 ? L * det : L) << i;
    }
    RepElement V = chr(S, weight(S, n - 2)) + chr(S, weight(S, n - 1));
    RepElement W = chr(T, weight(T, n - 2, {1, 0})) + chr(T, weight(T, n - 1, {0, 1}));
    EXPECT_EQ(restrict(nu, V), W);
    EXPECT_TRUE(W.galois_invariant());
  }
}

// 2D_{2r+1} with pi_1 = mu^(2)_4
TEST(RepRing, TwoDOddMu4) {
  for (int r : {1, 2, 3}) {
    int n = 2 * r + 1;
    auto tau = swap_last_two(n);
    CharacterModule S = weight_module(tau);
    CharacterModule T = weight_plus_torsion(tau, {4}, {{-1}});
    IVec row(n, 0);
    for (int i = 1; i <= n - 2; ++i) row[i - 1] = 2 * i;
    row[n - 2] = -1;
    row[n - 1] = 1;
    ModuleMap nu{&S, &T, nu_matrix(n, {row})};
    ASSERT_NO_THROW(check_module_map(nu));
    RepElement lam = chr(T, weight(T, -1, {2}));
    for (int i = 1; i <= n - 2; ++i) {
      RepElement L = chr(T, weight(T, i - 1));
      EXPECT_EQ(restrict(nu, chr(S, weight(S, i - 1))), i % 2 ? L * lam : L);
    }
    RepElement V = chr(S, weight(S, n - 2)) + chr(S, weight(S, n - 1));
    RepElement W = chr(T, weight(T, n - 2, {3})) + chr(T, weight(T, n - 1, {1}));
    EXPECT_EQ(restrict(nu, V), W);

    // with a trivial action on the torsion the same lattice map is not equivariant
    CharacterModule bad = weight_plus_torsion(tau, {4}, {{1}});
    EXPECT_THROW(restrict(ModuleMap{&S, &bad, nu_matrix(n, {row})}, V), std::invalid_argument);
  }
}

// squaring on R = R_{L/k} G_m: Res_g [V_R] = psi^2 [V_R]
TEST(RepRing, SquaringMap) {
  CharacterModule R(2, {}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  ModuleMap g{&R, &R, {{2, 0}, {0, 2}}};
  RepElement V = chr(R, IVec{1, 0}) + chr(R, IVec{0, 1});
  EXPECT_EQ(restrict(g, V), adams(2, V));
  EXPECT_EQ(restrict(g, V), chr(R, IVec{2, 0}) + chr(R, IVec{0, 2}));
}

// 1 -> mu^(2)_{2m} -> R -> 2G_m x G_m:  (1,0) -> (m,1), (0,1) -> (-m,1)
TEST(RepRing, NormOneTorusMap) {
  CharacterModule R(2, {}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  CharacterModule T(2, {}, {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}});
  for (long long m : {1, 2, 3, 5}) {
    ModuleMap g{&R, &T, {{m, -m}, {1, 1}}};
    RepElement V = chr(R, IVec{1, 0}) + chr(R, IVec{0, 1});
    RepElement V2 = chr(T, IVec{1, 0}) + chr(T, IVec{-1, 0});
    RepElement res = restrict(g, V);
    EXPECT_EQ(res, adams(m, V2) * chr(T, IVec{0, 1}));
    EXPECT_EQ(res, chr(T, IVec{m, 1}) + chr(T, IVec{-m, 1}));
  }
}

TEST(RepRing, AlgebraicProperties) {
  CharacterModule M(1, {6}, {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}});
  RepElement a = chr(M, IVec{1, 2}) + chr(M, IVec{1, -2}) * RepElement(M, {{IVec{0, 0}, 3}});
  RepElement b = chr(M, IVec{-1, 3}) - RepElement::one(M);
  EXPECT_EQ(adams(2, adams(3, a)), adams(6, a));
  EXPECT_EQ(adams(5, a * b), adams(5, a) * adams(5, b));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a.dimension(), 4);
  EXPECT_EQ(chr(M, IVec{0, 7}), chr(M, IVec{0, 1}));
  EXPECT_EQ(adams(6, chr(M, IVec{0, 1})), RepElement::one(M));

  CharacterModule N(1, {}, {{{1}}});
  ModuleMap f{&M, &N, {{2, 0}}};
  EXPECT_THROW(check_module_map(f), std::invalid_argument);  // different groups
  EXPECT_THROW(a + RepElement::one(N), std::invalid_argument);
}

TEST(RepRing, RejectsBadModules) {
  EXPECT_THROW(CharacterModule(1, {1}), std::invalid_argument);
  // torsion generator sent to a free vector
  EXPECT_THROW(CharacterModule(1, {2}, {{{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}}), std::invalid_argument);
  // -1 alone is not closed under composition without the identity
  EXPECT_THROW(CharacterModule(1, {}, {{{-1}}}), std::invalid_argument);
  EXPECT_THROW(CharacterModule(1, {}, {{{1}}, {{2}}}), std::invalid_argument);
}
