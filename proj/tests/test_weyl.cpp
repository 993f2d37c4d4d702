#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>

#include "qschow/weyl.hpp"

using namespace qschow;

namespace {

// number of permutations of {0..k-1} with each inversion count
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

// prod_i (1 + q + ... + q^{d_i - 1})
std::vector<std::size_t> q_product(const std::vector<int>& degrees) {
  std::vector<std::size_t> c{1};
  for (int d : degrees) {
    std::vector<std::size_t> n(c.size() + d - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int j = 0; j < d; ++j) n[i + j] += c[i];
    c = n;
  }
  return c;
}

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Weyl, ExampleCounts) {
  auto A3 = enumerate_up_to(build_root_datum(Dynkin::A, 3), 2);
  EXPECT_EQ(A3.counts(), (std::vector<std::size_t>{1, 3, 5}));
  auto G2 = enumerate_up_to(build_root_datum(Dynkin::G, 2), 6);
  EXPECT_EQ(G2.counts(), (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 1}));
  for (auto t : {Dynkin::A, Dynkin::B, Dynkin::E})
    EXPECT_EQ(enumerate_up_to(build_root_datum(t, t == Dynkin::E ? 6 : 3), 0).counts(), (std::vector<std::size_t>{1}));
}

TEST(Weyl, TypeAMatchesInversionCounts) {
  for (int n = 1; n <= 5; ++n) {
    RootDatum R = build_root_datum(Dynkin::A, n);
    EXPECT_EQ(enumerate_up_to(R, static_cast<int>(R.num_pos())).counts(), mahonian(n + 1)) << "A" << n;
  }
}

TEST(Weyl, CountsMatchDegreeProducts) {
  struct Case {
    Dynkin t;
    int n;
    std::vector<int> degrees;
    std::size_t order;
  };
  std::vector<Case> cases = {{Dynkin::B, 3, {2, 4, 6}, 48},     {Dynkin::C, 4, {2, 4, 6, 8}, 384},
                             {Dynkin::D, 4, {2, 4, 4, 6}, 192}, {Dynkin::D, 5, {2, 4, 5, 6, 8}, 1920},
                             {Dynkin::G, 2, {2, 6}, 12},        {Dynkin::F, 4, {2, 6, 8, 12}, 1152},
                             {Dynkin::E, 6, {2, 5, 6, 8, 9, 12}, 51840}};
  for (const auto& c : cases) {
    RootDatum R = build_root_datum(c.t, c.n);
    auto T = enumerate_up_to(R, static_cast<int>(R.num_pos()));
    EXPECT_EQ(T.counts(), q_product(c.degrees)) << R.name();
    EXPECT_EQ(T.total(), c.order) << R.name();
  }
  EXPECT_EQ(factorial(6), 720u);
  EXPECT_EQ(enumerate_up_to(build_root_datum(Dynkin::A, 5), 15).total(), factorial(6));
}

TEST(Weyl, BruteForceAgreesOnSmallGroups) {
  for (auto [t, n] : {std::pair{Dynkin::A, 4}, {Dynkin::B, 3}, {Dynkin::C, 3}, {Dynkin::D, 4}, {Dynkin::G, 2}}) {
    RootDatum R = build_root_datum(t, n);
    auto all = brute_force_group(R, 5000);
    auto T = enumerate_up_to(R, static_cast<int>(R.num_pos()));
    EXPECT_EQ(all.size(), T.total());
    for (const auto& m : all) EXPECT_GE(T.find(inversion_length(R, m), m), 0);
  }
}

TEST(Weyl, ReflectionsAndWords) {
  RootDatum A2 = build_root_datum(Dynkin::A, 2);
  for (int i = 0; i < 2; ++i) {
    WeylElement s = reflect(A2, weyl_identity(A2), A2.root_index(A2.simple[i]));
    EXPECT_EQ(s.length, 1);
    EXPECT_EQ(s.m, from_word(A2, {i + 1}).m);
  }
  int hi = A2.root_index(IVec{1, 1});
  WeylElement w = reflect(A2, from_word(A2, {1}), hi);
  EXPECT_EQ(w.length, 2);
  EXPECT_EQ(w.m, from_word(A2, {2, 1}).m);
  WeylElement back = reflect(A2, w, hi);
  EXPECT_EQ(back.m, from_word(A2, {1}).m);

  RootDatum E6 = build_root_datum(Dynkin::E, 6);
  auto word = parse_word("s3s4s2");
  EXPECT_EQ(word, (std::vector<int>{3, 4, 2}));
  WeylElement e = from_word(E6, word);
  EXPECT_EQ(e.length, 3);
  EXPECT_EQ(from_word(E6, reduced_word(E6, e.m)).m, e.m);
  EXPECT_EQ(word_string({}), "e");
  EXPECT_EQ(word_string({2, 1}), "s2s1");
  EXPECT_THROW(from_word(A2, {3}), std::invalid_argument);
}

TEST(Weyl, GaloisOnElements) {
  RootDatum D4 = build_root_datum(Dynkin::D, 4);
  auto tau = diagram_automorphism(D4, 2).sigma();
  EXPECT_EQ(apply_galois(tau, from_word(D4, {3}), 4).m, from_word(D4, {4}).m);
  EXPECT_EQ(apply_galois(tau, weyl_identity(D4), 4).m, weyl_identity(D4).m);
  RootDatum E6 = build_root_datum(Dynkin::E, 6);
  auto t6 = diagram_automorphism(E6, 2).sigma();
  EXPECT_EQ(apply_galois(t6, from_word(E6, {3, 4, 2}), 6).m, from_word(E6, {5, 4, 2}).m);
}

TEST(Weyl, GaloisIndexIsAPermutation) {
  RootDatum D4 = build_root_datum(Dynkin::D, 4);
  auto T = enumerate_up_to(D4, 12);
  for (const auto& s : diagram_automorphism(D4, 6).elements) {
    auto idx = galois_index(T, s);
    for (int d = 0; d <= 12; ++d) {
      std::vector<int> v = idx[d];
      std::sort(v.begin(), v.end());
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i));
    }
  }
}

TEST(Weyl, CacheRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "qschow_weyl_cache_test";
  std::filesystem::remove_all(dir);
  RootDatum F4 = build_root_datum(Dynkin::F, 4);
  WeylOptions opt;
  opt.cache_dir = dir.string();
  auto cold = enumerate_up_to(F4, 8, opt);
  EXPECT_FALSE(cold.loaded_from_cache);
  auto warm = enumerate_up_to(F4, 8, opt);
  EXPECT_TRUE(warm.loaded_from_cache);
  EXPECT_EQ(cold.counts(), warm.counts());
  for (int d = 0; d <= 8; ++d) {
    EXPECT_EQ(cold.by_length[d], warm.by_length[d]);
    EXPECT_EQ(cold.up[d], warm.up[d]);
  }
  std::filesystem::remove_all(dir);
}

TEST(Weyl, MemoryGuardRefuses) {
  RootDatum E8 = build_root_datum(Dynkin::E, 8);
  WeylOptions opt;
  opt.budget = 1000;
  EXPECT_THROW(enumerate_up_to(E8, 20, opt), GuardError);
}
