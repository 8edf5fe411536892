#include <gtest/gtest.h>

#include "qsd/error.hpp"
#include "qsd/params.hpp"
#include "support/reference.hpp"

namespace qsd {
namespace {

using testing::Frac;

TEST(QsdParams, ValidatesStandingAssumptions) {
  EXPECT_THROW(QsdParams::make(7, 1, 1, 0, 0), InvalidParameters);   // k <= 1
  EXPECT_THROW(QsdParams::make(7, 7, 1, 1, 0), InvalidParameters);   // k >= v
  EXPECT_THROW(QsdParams::make(7, 3, 0, 1, 0), InvalidParameters);   // lambda < 1
  EXPECT_THROW(QsdParams::make(7, 3, 1, 1, 1), InvalidParameters);   // x == y
  EXPECT_THROW(QsdParams::make(7, 3, 1, 3, 1), InvalidParameters);   // x >= k
  EXPECT_THROW(QsdParams::make(7, 3, 1, 1, -1), InvalidParameters);  // y < 0
}

TEST(QsdParams, SwapsIntersectionNumbersIntoCanonicalOrder) {
  const QsdParams p = QsdParams::make(23, 7, 21, 1, 3);
  EXPECT_EQ(p.x(), 3);
  EXPECT_EQ(p.y(), 1);
  EXPECT_EQ(p, QsdParams::make(23, 7, 21, 3, 1));
}

TEST(DeriveParams, Examples) {
  auto d = derive_params(QsdParams::make(23, 7, 21, 3, 1));
  EXPECT_EQ(d.r, 77);
  EXPECT_EQ(d.b, 253);
  EXPECT_TRUE(d.integral);

  d = derive_params(QsdParams::make(77, 33, 24, 15, 12));
  EXPECT_EQ(d.r, 57);
  EXPECT_EQ(d.b, 133);

  d = derive_params(QsdParams::make(5292, 378, 29, 27, 0));
  EXPECT_EQ(d.r, 407);
  EXPECT_EQ(d.b, 5698);
}

TEST(DeriveParams, PairDesignMatchesEdgeCountOfK8) {
  // Oracle: count edges of K8 through vertex 0 and in total.
  const auto edges = testing::all_subsets(8, 2);
  int through0 = 0;
  for (const auto& e : edges) through0 += e.count(0) ? 1 : 0;
  const auto d = derive_params(QsdParams::make(8, 2, 1, 1, 0));
  EXPECT_EQ(d.r, through0);
  EXPECT_EQ(d.b, static_cast<long>(edges.size()));
  EXPECT_EQ(through0, 7);
  EXPECT_EQ(edges.size(), 28u);
}

TEST(DeriveParams, FlagsNonIntegralValues) {
  const auto d = derive_params(QsdParams::make(10, 4, 1, 1, 0));
  EXPECT_EQ(d.r, make_rational(3));
  EXPECT_EQ(d.b, make_rational(15, 2));
  EXPECT_FALSE(d.integral);
}

TEST(Complement, WittDesign) {
  const auto [c, cd] = complement(QsdParams::make(23, 7, 21, 3, 1));
  EXPECT_EQ(c, QsdParams::make(23, 16, 120, 12, 10));
  EXPECT_EQ(cd.b, 253);
  EXPECT_EQ(cd.r, 176);
  EXPECT_EQ(derive_params(c).r, cd.r);
  EXPECT_EQ(derive_params(c).b, cd.b);
}

TEST(Complement, PairDesignMatchesBruteForceComplements) {
  // Complements of the 28 edges of K8 are 6-sets; count pair occurrences directly.
  const auto edges = testing::all_subsets(8, 2);
  std::vector<testing::Block> comps;
  for (const auto& e : edges) {
    testing::Block c;
    for (int p = 0; p < 8; ++p)
      if (!e.count(p)) c.insert(p);
    comps.push_back(c);
  }
  int pair01 = 0;
  std::set<int> meets;
  for (const auto& c : comps) pair01 += c.count(0) && c.count(1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) meets.insert(testing::meet(comps[i], comps[j]));

  const auto [c, cd] = complement(QsdParams::make(8, 2, 1, 1, 0));
  EXPECT_EQ(c.lambda(), pair01);
  EXPECT_EQ(c, QsdParams::make(8, 6, 15, 5, 4));
  EXPECT_EQ(meets, (std::set<int>{4, 5}));
  EXPECT_EQ(cd.b, 28);
  EXPECT_EQ(cd.r, 21);
}

TEST(Complement, RejectsNonDesigns) {
  // r = 9, b = 15, complement intersection v-2k+y = -1.
  EXPECT_THROW(complement(QsdParams::make(10, 6, 5, 4, 1)), NotADesign);
  EXPECT_THROW(complement(QsdParams::make(10, 4, 1, 1, 0)), InvalidParameters);  // b = 15/2
}

TEST(Complement, IsAnInvolutionProperty) {
  // Every integral (v,k,lambda,x,y) in a small box whose complement exists.
  int checked = 0;
  for (std::int64_t v = 4; v <= 24; ++v)
    for (std::int64_t k = 2; k < v; ++k)
      for (std::int64_t lambda = 1; lambda <= 12; ++lambda)
        for (std::int64_t x = 1; x < k; ++x)
          for (std::int64_t y = 0; y < x; y += 2) {
            const QsdParams p = QsdParams::make(v, k, lambda, x, y);
            const DerivedParams d = derive_params(p);
            if (!d.integral) continue;
            try {
              const auto [c, cd] = complement(p, d);
              EXPECT_EQ(derive_params(c).b, d.b);
              const auto [cc, ccd] = complement(c, cd);
              EXPECT_EQ(cc, p);
              EXPECT_EQ(ccd.r, d.r);
              ++checked;
            } catch (const NotADesign&) {
            }
          }
  EXPECT_GT(checked, 1000);
}

TEST(BhFamily, Examples) {
  EXPECT_EQ(bh_family(2), QsdParams::make(8, 2, 1, 1, 0));
  EXPECT_EQ(bh_family(4), QsdParams::make(64, 24, 46, 12, 8));
  EXPECT_EQ(bh_family(8), QsdParams::make(512, 224, 892, 112, 96));
  auto d = derive_params(bh_family(4));
  EXPECT_EQ(d.r, 126);
  EXPECT_EQ(d.b, 336);
  d = derive_params(bh_family(8));
  EXPECT_EQ(d.r, 2044);
  EXPECT_EQ(d.b, 4672);
}

TEST(BhFamily, FormulasAgainstReference) {
  for (std::int64_t q : {2, 4, 8, 16, 32}) {
    const QsdParams p = bh_family(q);
    EXPECT_EQ(p.v(), q * q * q);
    EXPECT_EQ(2 * p.k(), q * q * (q - 1));
    EXPECT_EQ(4 * p.lambda(), q * (q * q * q - q * q - 2));
    EXPECT_EQ(2 * p.x(), p.k());
    EXPECT_EQ(4 * p.y(), 4 * p.x() - q * q);
    const Frac r = testing::ref_r(p.v(), p.k(), p.lambda());
    const Frac b = testing::ref_b(p.v(), p.k(), p.lambda());
    EXPECT_EQ(r.den, 1) << "q=" << q;
    EXPECT_EQ(b.den, 1) << "q=" << q;
    EXPECT_TRUE(derive_params(p).integral);
  }
}

TEST(BhFamily, RejectsNonPowersOfTwo) {
  EXPECT_THROW(bh_family(1), InvalidParameters);
  EXPECT_THROW(bh_family(6), InvalidParameters);
  EXPECT_THROW(bh_family(0), InvalidParameters);
  EXPECT_THROW(bh_family(-4), InvalidParameters);
}

TEST(Ard, Examples) {
  EXPECT_EQ(ard_params({14, 2}), QsdParams::make(5292, 378, 29, 27, 0));
  const QsdParams p = ard_params({2, 1});
  EXPECT_EQ(p, QsdParams::make(8, 4, 3, 2, 0));
  const auto d = derive_params(p);
  EXPECT_EQ(d.b, 14);
  EXPECT_EQ(d.r, 7);
  for (std::int64_t n = 2; n <= 9; ++n) {
    const QsdParams a = ard_params({n, 0});
    EXPECT_EQ(a.x(), 1);
    EXPECT_EQ(a.lambda(), 1);
  }
  EXPECT_THROW(ard_params({1, 0}), InvalidParameters);
  EXPECT_THROW(ard_params({3, -1}), InvalidParameters);
}

TEST(Ard, DerivedCountsMatchClosedForms) {
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t t = 0; t <= 6; ++t) {
      const QsdParams p = ard_params({n, t});
      const auto d = derive_params(p);
      EXPECT_EQ(d.r, n * n * t + n + 1);
      EXPECT_EQ(d.b, n * (n * n * t + n + 1));
      EXPECT_EQ(p.x() * p.v(), p.k() * p.k());
    }
}

TEST(Ard, Detection) {
  const auto a = detect_ard(QsdParams::make(5292, 378, 29, 27, 0));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (ArdParams{14, 2}));
  EXPECT_FALSE(detect_ard(QsdParams::make(23, 7, 21, 3, 1)));
  EXPECT_EQ(detect_ard(QsdParams::make(8, 4, 3, 2, 0)), (ArdParams{2, 1}));
  EXPECT_FALSE(detect_ard(QsdParams::make(8, 2, 1, 1, 0)));  // v/k = 4 but x != k/4
}

TEST(Ard, DetectInvertsConstructionProperty) {
  for (std::int64_t n = 2; n <= 20; ++n)
    for (std::int64_t t = 0; t <= 20; ++t) {
      const auto a = detect_ard(ard_params({n, t}));
      ASSERT_TRUE(a) << n << "," << t;
      EXPECT_EQ(*a, (ArdParams{n, t}));
    }
}

}  // namespace
}  // namespace qsd
