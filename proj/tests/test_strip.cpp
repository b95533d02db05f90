#include "hlpk/strip.hpp"

#include <gtest/gtest.h>

using namespace hlpk;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

// vs by its raw column formula, without the strip predicate
IntPoly vs_raw(const SkewShape& s) {
  IntPoly out(1);
  const Partition& lc = s.outer_conj();
  const Partition& mc = s.inner_conj();
  for (int j = 1; j <= s.outer().part(1); ++j)
    out *= qbinom(lc.part(j) - lc.part(j + 1), lc.part(j) - mc.part(j));
  return out;
}

}  // namespace

TEST(Strip, HsKnownValues) {
  EXPECT_EQ(hs_coeff(SkewShape({1}, {})), poly({1, -1}));
  EXPECT_EQ(hs_coeff(SkewShape({2}, {1})), poly({1, -1}));
  EXPECT_EQ(hs_coeff(SkewShape({1, 1}, {1})), poly({1, 0, -1}));
  EXPECT_EQ(hs_coeff(SkewShape({2}, {})), poly({1, -1}));
  EXPECT_EQ(hs_coeff(SkewShape({2, 2}, {1})), IntPoly());  // not horizontal
  EXPECT_EQ(hs_coeff(SkewShape({3, 1}, {3, 1})), IntPoly(1));
  EXPECT_EQ(hs_coeff(SkewShape({}, {})), IntPoly(1));
}

TEST(Strip, HsAtZeroIsHorizontalIndicator) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          if (!lam.contains(mu)) continue;
          SkewShape s(lam, mu);
          mpz_class v = hs_coeff(s).eval(0);
          EXPECT_EQ(v, is_horizontal_strip(s) ? 1 : 0)
              << to_string(lam) << "/" << to_string(mu);
        }
}

TEST(Strip, VsKnownValues) {
  EXPECT_EQ(vs_coeff(SkewShape({1}, {})), IntPoly(1));
  EXPECT_EQ(vs_coeff(SkewShape({1, 1}, {})), IntPoly(1));
  EXPECT_EQ(vs_coeff(SkewShape({2}, {1})), IntPoly(1));
  EXPECT_EQ(vs_coeff(SkewShape({1, 1}, {1})), poly({1, 1}));
  EXPECT_EQ(vs_coeff(SkewShape({2, 1}, {1})), IntPoly(1));
  EXPECT_EQ(vs_coeff(SkewShape({2, 2}, {1, 1})), IntPoly(1));
  EXPECT_EQ(vs_coeff(SkewShape({2}, {})), IntPoly());  // not vertical
  EXPECT_EQ(vs_coeff(SkewShape({2, 2, 1}, {2, 2, 1})), IntPoly(1));
}

TEST(Strip, VsFormulaVanishesExactlyOffVerticalStrips) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          if (!lam.contains(mu)) continue;
          SkewShape s(lam, mu);
          IntPoly raw = vs_raw(s);
          EXPECT_EQ(raw, vs_coeff(s));
          EXPECT_EQ(raw.is_zero(), !is_vertical_strip(s))
              << to_string(lam) << "/" << to_string(mu);
        }
}

TEST(Strip, SkKnownValues) {
  EXPECT_EQ(sk_coeff(SkewShape({1}, {})), IntPoly(1));
  EXPECT_EQ(sk_coeff(SkewShape({2}, {})), IntPoly(1));
  EXPECT_EQ(sk_coeff(SkewShape({1, 1}, {})), poly({0, 1}));
  EXPECT_EQ(sk_coeff(SkewShape({2}, {1})), IntPoly(1));
  EXPECT_EQ(sk_coeff(SkewShape({1, 1}, {1})), poly({1, 1}));
  EXPECT_EQ(sk_coeff(SkewShape({2, 1}, {1})), poly({1, 1}));
  EXPECT_EQ(sk_coeff(SkewShape({2, 2}, {1})), poly({0, 1, 1}));
  EXPECT_EQ(sk_coeff(SkewShape({3, 1}, {3, 1})), IntPoly(1));
}

TEST(Strip, SkNeverZeroAndSchurSpecialization) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          if (!lam.contains(mu)) continue;
          SkewShape s(lam, mu);
          IntPoly sk = sk_coeff(s);
          EXPECT_FALSE(sk.is_zero()) << to_string(lam) << "/" << to_string(mu);
          // at t=0 only horizontal strips survive, with coefficient 1
          EXPECT_EQ(sk.eval(0), is_horizontal_strip(s) ? 1 : 0)
              << to_string(lam) << "/" << to_string(mu);
        }
}

TEST(Strip, BrKnownValues) {
  EXPECT_EQ(br_coeff(SkewShape({3, 2}, {1})), poly({0, -1, 1}));  // -t(1-t)
  EXPECT_EQ(br_coeff(SkewShape({3, 1}, {1})), poly({1, -2, 1}));  // (1-t)^2
  EXPECT_EQ(br_coeff(SkewShape({2, 2}, {})), IntPoly());
  EXPECT_EQ(br_coeff(SkewShape({2, 1}, {2, 1})), IntPoly(1));
  EXPECT_EQ(br_coeff(SkewShape({1}, {})), poly({1, -1}));
  EXPECT_EQ(br_coeff(SkewShape({1, 1}, {})), poly({0, -1, 1}));
  EXPECT_EQ(br_coeff(SkewShape({2}, {})), poly({1, -1}));
}

TEST(Strip, BAndCAndZ) {
  EXPECT_EQ(b_poly(Partition()), IntPoly(1));
  EXPECT_EQ(b_poly(Partition{1}), poly({1, -1}));
  EXPECT_EQ(b_poly(Partition{2, 1}), poly({1, -1}) * poly({1, -1}));
  EXPECT_EQ(b_poly(Partition{2, 2}), poly({1, -1}) * poly({1, 0, -1}));
  EXPECT_EQ(b_poly(Partition{1, 1, 1}),
            poly({1, -1}) * poly({1, 0, -1}) * poly({1, 0, 0, -1}));

  EXPECT_EQ(c_poly(Partition{1}), poly({-1, 1}));
  EXPECT_EQ(c_poly(Partition{2}), poly({0, -1, 1}));
  EXPECT_EQ(c_poly(Partition{1, 1}), poly({-1, 1}) * poly({-1, 0, 1}));
  EXPECT_THROW(c_poly(Partition()), std::invalid_argument);

  EXPECT_EQ(z_num(Partition()), 1);
  EXPECT_EQ(z_num(Partition{2, 1}), 2);
  EXPECT_EQ(z_num(Partition{2, 2}), 8);
  EXPECT_EQ(z_num(Partition{1, 1, 1}), 6);
  EXPECT_EQ(z_num(Partition{3, 2, 2, 1}), 3 * 2 * 2 * 2 * 1);

  RatFunc z = z_t(Partition{2, 1});
  EXPECT_EQ(z, RatFunc(IntPoly(2), poly({1, -1}) * poly({1, 0, -1})));
  EXPECT_EQ(z_t(Partition()), RatFunc(1));
}

TEST(Strip, MultiplicityFactorsInHs) {
  // (2,2,1)/(2,1): columns lc=(3,2), mc=(2,1); column 1 grows but column 2
  // does not match, so only column 2 contributes, with multiplicity
  // m_2 = lc_2 - lc_3 = 2
  SkewShape s({2, 2, 1}, {2, 1});
  ASSERT_TRUE(is_horizontal_strip(s));
  EXPECT_EQ(hs_coeff(s), poly({1, 0, -1}));
}

TEST(Strip, LemmaHsIdentitySmall) {
  auto res = lemma_hs_check(Partition{1, 1}, Partition{1});
  EXPECT_EQ(res.rhs, poly({1, 0, -1}));
  EXPECT_TRUE(res.equal);
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          if (!lam.contains(mu)) continue;
          EXPECT_TRUE(lemma_hs_check(lam, mu).equal)
              << to_string(lam) << "/" << to_string(mu);
        }
}

TEST(Strip, LemmaHsLargeShape) {
  Partition lam{9, 8, 8, 8, 6, 6, 6, 6, 4, 4, 4};
  Partition mu{7, 7, 6, 6, 6, 6, 3, 3, 3, 3, 1};
  EXPECT_TRUE(lemma_hs_check(lam, mu).equal);
}
