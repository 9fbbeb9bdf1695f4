#include <gtest/gtest.h>

#include <random>

#include "loewy/lattice.hpp"

using namespace loewy;

namespace {

// Cartan matrix of A_n applied to root coordinates; inverts root_coords
// without using the inverse Cartan formula.
std::vector<Rational> cartan_times(const std::vector<Rational>& d) {
  const std::size_t n = d.size();
  std::vector<Rational> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[r] = 2 * d[r];
    if (r > 0) out[r] -= d[r - 1];
    if (r + 1 < n) out[r] -= d[r + 1];
  }
  return out;
}

std::vector<Weight> random_weights(int n, std::size_t count, unsigned seed, int bound = 7) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Weight> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Integer> c;
    for (int k = 0; k < n; ++k) c.emplace_back(d(rng));
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST(Lattice, FromEps) {
  EXPECT_EQ(from_eps(2, {1, 0, 0}), Weight({1, 0}));
  EXPECT_EQ(from_eps(2, {0, 0, 1}), Weight({0, -1}));
  EXPECT_EQ(from_eps(2, {1, 1, 1}), Weight({0, 0}));
  EXPECT_EQ(from_eps(3, {5, 2, 2, -1}), from_eps(3, {6, 3, 3, 0}));
  EXPECT_THROW(from_eps(2, {1, 0}), std::invalid_argument);
}

TEST(Lattice, Rho) {
  EXPECT_EQ(rho(1), Weight({1}));
  EXPECT_EQ(rho(2), Weight({1, 1}));
  EXPECT_EQ(rho(4), Weight({1, 1, 1, 1}));
}

TEST(Lattice, Pair) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      for (int j = k + 1; j <= n + 1; ++j) {
        EXPECT_EQ(pair(rho(n), k, j), j - k);
        EXPECT_EQ(pair(Weight::zero(n), k, j), 0);
      }
    }
  }
  // nu_0 = lambda_0 + rho for n=2, p=5.
  EXPECT_EQ(pair(Weight({1, 5}), 1, 3), 6);
  const Weight w({4, -2, 9});
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(pair(w, i, i + 1), w[static_cast<std::size_t>(i - 1)]);
  EXPECT_THROW(pair(w, 2, 2), std::invalid_argument);
  EXPECT_THROW(pair(w, 0, 2), std::invalid_argument);
  EXPECT_THROW(pair(w, 1, 5), std::invalid_argument);
}

TEST(Lattice, PairAgreesWithEpsRepresentative) {
  for (const auto& w : random_weights(4, 40, 3)) {
    const auto e = to_eps(w);
    for (int k = 1; k <= 5; ++k) {
      for (int j = k + 1; j <= 5; ++j) EXPECT_EQ(pair(w, k, j), e[k - 1] - e[j - 1]);
    }
  }
}

TEST(Lattice, RootCoords) {
  EXPECT_EQ(root_coords(Weight::simple_root(2, 1)).coeffs, (std::vector<Rational>{1, 0}));
  EXPECT_EQ(root_coords(Weight({1, 0})).coeffs, (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(root_coords(Weight({0, 0})).coeffs, (std::vector<Rational>{0, 0}));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : random_weights(n, 25, 11 + n)) {
      const auto d = root_coords(w).coeffs;
      const auto back = cartan_times(d);
      for (int k = 0; k < n; ++k) EXPECT_EQ(back[k], Rational(w[k]));
      for (const auto& c : d) EXPECT_EQ((Integer(n + 1) % denominator(c)), 0);
    }
  }
}

TEST(Lattice, Leq) {
  const Weight l({3, -1});
  EXPECT_TRUE(leq(l, l));
  EXPECT_TRUE(leq(Weight::zero(2), Weight::simple_root(2, 1)));
  EXPECT_FALSE(leq(Weight::zero(2), Weight({1, 0})));
  EXPECT_FALSE(leq(Weight::simple_root(2, 1), Weight::zero(2)));
  EXPECT_THROW(leq(Weight({1}), Weight({1, 0})), std::invalid_argument);
}

TEST(Lattice, LeqIsPartialOrder) {
  for (int n = 1; n <= 4; ++n) {
    auto ws = random_weights(n, 20, 100 + n, 3);
    const std::size_t base = ws.size();
    for (std::size_t s = 0; s < base; ++s) {
      ws.push_back(ws[s] + Weight::simple_root(n, 1));
      ws.push_back(ws[s] + Weight::simple_root(n, n) + Weight::simple_root(n, 1));
    }
    for (const auto& a : ws) {
      EXPECT_TRUE(leq(a, a));
      for (const auto& b : ws) {
        if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
        if (!leq(a, b)) continue;
        for (const auto& c : ws) {
          if (leq(b, c)) EXPECT_TRUE(leq(a, c));
        }
      }
    }
  }
}

TEST(Lattice, ScalingPreservesOrder) {
  for (int n = 1; n <= 4; ++n) {
    for (long p : {3L, 5L, 7L}) {
      if ((n + 1) % p == 0) continue;
      const auto ws = random_weights(n, 15, 7 * n + p, 3);
      for (const auto& a : ws) {
        for (const auto& b : ws) EXPECT_EQ(leq(p * a, p * b), leq(a, b));
      }
      for (const auto& a : ws) {
        const auto r = root_coords(a).coeffs;
        const auto rp = root_coords(Integer(p) * a).coeffs;
        for (std::size_t k = 0; k < r.size(); ++k) EXPECT_EQ(rp[k], Rational(p) * r[k]);
      }
    }
  }
}

TEST(Lattice, Varpi1IsMinimalInItsCoset) {
  for (int n = 1; n <= 3; ++n) {
    const Weight w1 = Weight::fundamental(n, 1);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
      Weight nu(std::vector<Integer>(a.begin(), a.end()));
      if (root_coords(nu - w1).integral()) EXPECT_TRUE(leq(w1, nu)) << nu;
      int k = 0;
      while (k < n && a[k] == 8) a[k++] = 0;
      if (k == n) break;
      ++a[k];
    }
  }
}

TEST(Lattice, IsDominant) {
  EXPECT_TRUE(is_dominant(rho(3)));
  EXPECT_FALSE(is_dominant(-Weight::fundamental(3, 1)));
  EXPECT_TRUE(is_dominant(Weight::zero(3)));
}

TEST(Lattice, RestrictedDecompose) {
  const auto z = restricted_decompose(Weight::zero(2), 5);
  EXPECT_EQ(z.restricted, Weight::zero(2));
  EXPECT_EQ(z.translation, Weight::zero(2));
  const auto d = restricted_decompose(Weight({3}), 5);
  EXPECT_EQ(d.restricted, Weight({3}));
  EXPECT_EQ(d.translation, Weight({0}));
  const auto m = restricted_decompose(Weight({-1, 0}), 5);
  EXPECT_EQ(m.restricted, Weight({4, 0}));
  EXPECT_EQ(m.translation, Weight({-1, 0}));
  for (const auto& w : random_weights(3, 50, 5, 40)) {
    const auto r = restricted_decompose(w, 7);
    EXPECT_TRUE(is_restricted(r.restricted, 7));
    EXPECT_EQ(r.restricted + Integer(7) * r.translation, w);
  }
}

TEST(Lattice, EpsSubset) {
  EXPECT_EQ(eps_subset(2, {}), Weight::zero(2));
  EXPECT_EQ(eps_subset(2, {1}), Weight({1, 0}));
  EXPECT_EQ(eps_subset(2, {3}), Weight({0, -1}));
  EXPECT_EQ(eps_subset(2, {1, 2, 3}), Weight::zero(2));
  EXPECT_THROW(eps_subset(2, {4}), std::invalid_argument);
}

TEST(Lattice, LambdaZeroDual) {
  EXPECT_EQ(lambda_zero_dual(Weight::zero(3), 5), Integer(8) * rho(3));
  EXPECT_EQ(lambda_zero_dual(rho(1), 5), Weight({7}));
  EXPECT_EQ(lambda_zero_dual(Weight({1, 0}), 5), Integer(8) * rho(2) - Weight({0, 1}));
}

TEST(Lattice, EpsRoundTrip) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : random_weights(n, 20, 50 + n, 1000)) {
      const auto e = to_eps(w);
      ASSERT_EQ(e.size(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(e.back(), 0);
      EXPECT_EQ(from_eps(n, std::span<const Integer>(e)), w);
    }
  }
}

TEST(Lattice, BigCoordinates) {
  const Integer big("123456789012345678901234567890");
  const Weight w(std::vector<Integer>{big, -big});
  EXPECT_EQ((w + w)[0], 2 * big);
  EXPECT_EQ(pair(w, 1, 3), 0);
  EXPECT_EQ(pair(w, 1, 2), big);
}

TEST(Lattice, FloorHelpers) {
  EXPECT_EQ(floor_div(-1, 5), -1);
  EXPECT_EQ(floor_mod(-1, 5), 4);
  EXPECT_EQ(floor_div(10, 5), 2);
  EXPECT_EQ(floor_mod(-10, 5), 0);
}
