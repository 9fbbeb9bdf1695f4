#include <gtest/gtest.h>

#include "loewy/ext.hpp"
#include "loewy/loewy.hpp"
#include "loewy/verify.hpp"

using namespace loewy;

TEST(Ext, G1Kinds) {
  const auto ctx = make_context(3, 5);
  EXPECT_EQ(ext1_g1(ctx, 1, 0).kind, ExtKind::StandardV);
  EXPECT_EQ(ext1_g1(ctx, 0, 1).kind, ExtKind::DualV);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      const auto kind = ext1_g1(ctx, i, j).kind;
      if (i == j + 1) {
        EXPECT_EQ(kind, ExtKind::StandardV);
      } else if (i + 1 == j) {
        EXPECT_EQ(kind, ExtKind::DualV);
      } else {
        EXPECT_EQ(kind, ExtKind::Zero);
      }
    }
  }
  EXPECT_STREQ(to_string(ExtKind::StandardV), "V");
  EXPECT_STREQ(to_string(ExtKind::DualV), "V*");
  EXPECT_STREQ(to_string(ExtKind::Zero), "0");
  EXPECT_THROW(ext1_g1(ctx, 4, 3), std::out_of_range);
}

TEST(Ext, DescriptorWeights) {
  const auto ctx = make_context(2, 5);
  const auto v = ext1_g1(ctx, 1, 0).weights();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], Weight({1, 0}));
  EXPECT_EQ(v[1], Weight({-1, 1}));
  EXPECT_EQ(v[2], Weight({0, -1}));
  EXPECT_TRUE(ext1_g1(ctx, 0, 0).weights().empty());
}

TEST(Ext, G1tDimensions) {
  const auto ctx = make_context(2, 5);
  EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(1), ctx.label(0, Weight({-1, 0}))), 1);
  EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(0), ctx.label(0)), 0);
  EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(1), ctx.label(0, Weight({1, -1}))), 1);
  EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(1), ctx.label(0, Weight({-1, 1}))), 0);
  EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(1), ctx.label(0, Weight({1, 0}))), 0);
}

TEST(Ext, SymmetryAndVanishingOnRadiusThreeBall) {
  for (int n = 1; n <= 4; ++n) {
    const BlockContext ctx(n, (n + 1) % 7 == 0 ? 11 : 7);
    const auto ball = eps_ball(Weight::zero(n), 3);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        for (const auto& d : ball) {
          const auto a = ctx.label(i);
          const auto b = ctx.label(j, d);
          const int ab = ext1_g1t_dim(ctx, a, b);
          EXPECT_EQ(ab, ext1_g1t_dim(ctx, b, a));
          EXPECT_TRUE(ab == 0 || ab == 1);
          if (std::abs(i - j) != 1) EXPECT_EQ(ab, 0);
        }
      }
    }
  }
}

TEST(Ext, Rad1QhatSmallCases) {
  const auto c2 = make_context(2, 5);
  EXPECT_EQ(rad1_Qhat(c2, 0, Weight::zero(2)),
            (LabelMultiset{{c2.label(1, Weight({-1, 1})), 1},
                           {c2.label(1, Weight({0, -1})), 1},
                           {c2.label(1, Weight({1, 0})), 1}}));
  EXPECT_EQ(rad1_Qhat(c2, 1, Weight::zero(2)),
            (LabelMultiset{{c2.label(0, Weight({-1, 0})), 1},
                           {c2.label(0, Weight({0, 1})), 1},
                           {c2.label(0, Weight({1, -1})), 1},
                           {c2.label(2, Weight({-1, 1})), 1},
                           {c2.label(2, Weight({0, -1})), 1},
                           {c2.label(2, Weight({1, 0})), 1}}));
  const auto c1 = make_context(1, 5);
  EXPECT_EQ(rad1_Qhat(c1, 0, Weight::zero(1)),
            (LabelMultiset{{c1.label(1, Weight({-1})), 1}, {c1.label(1, Weight({1})), 1}}));
}

// The closed-form listing with k = 1..n is contained in rad_1 Q^; the
// remaining term is k = n+1 (w_0 = w_{n+1} = 0 makes it -p w_{n+1} + p w_n on
// one side and -p w_0 + p w_1 on the other).
TEST(Ext, Rad1QhatContainsTheNTermListing) {
  for (int n = 1; n <= 6; ++n) {
    const BlockContext ctx(n, (n + 1) % 7 == 0 ? 11 : 7);
    auto w = [n](int k) { return Weight::fundamental(n, k); };
    for (int i = 0; i <= n; ++i) {
      const auto full = rad1_Qhat(ctx, i, Weight::zero(n));
      LabelMultiset listed;
      for (int k = 1; k <= n; ++k) {
        if (i > 0) listed[ctx.label(i - 1, w(k - 1) - w(k))] += 1;
        if (i < n) listed[ctx.label(i + 1, w(n + 2 - k) - w(n + 1 - k))] += 1;
      }
      for (const auto& [label, mult] : listed) EXPECT_EQ(full.count(label), 1u) << label.to_string();
      Multiplicity total = 0;
      for (const auto& [label, mult] : full) total += mult;
      EXPECT_EQ(total, (i > 0 ? n + 1 : 0) + (i < n ? n + 1 : 0));
      if (i > 0) EXPECT_EQ(full.count(ctx.label(i - 1, w(n) - w(n + 1))), 1u);
      if (i < n) EXPECT_EQ(full.count(ctx.label(i + 1, w(1) - w(0))), 1u);
    }
  }
}

TEST(Ext, Rad1QhatIsTheExtSupport) {
  for (int n = 1; n <= 6; ++n) {
    const BlockContext ctx(n, (n + 1) % 7 == 0 ? 11 : 7);
    const auto step = eps_ball(Weight::zero(n), 2);
    for (int i = 0; i <= n; ++i) {
      for (const Weight& nu : {Weight::zero(n), Weight::fundamental(n, 1), -Weight::fundamental(n, n)}) {
        LabelMultiset expected;
        for (int j = 0; j <= n; ++j) {
          for (const auto& d : step) {
            const auto b = ctx.label(j, nu + d);
            if (int e = ext1_g1t_dim(ctx, ctx.label(i, nu), b)) expected[b] += e;
          }
        }
        EXPECT_EQ(rad1_Qhat(ctx, i, nu), expected);
      }
    }
  }
}

TEST(Ext, VermaFirstLayerHasExt) {
  for (int n = 1; n <= 8; ++n) {
    const BlockContext ctx(n, n == 4 ? 7 : 5);
    for (int i = 0; i <= n; ++i) {
      for (const auto& [label, mult] : rad_layer_Z_g1t(ctx, i, Weight::zero(n), 1)) {
        EXPECT_EQ(ext1_g1t_dim(ctx, ctx.label(i), label), 1);
      }
    }
  }
}
