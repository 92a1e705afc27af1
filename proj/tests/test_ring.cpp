#include <gtest/gtest.h>

#include <random>

#include "quillen/error.hpp"
#include "quillen/ring.hpp"
#include "support.hpp"

using namespace quillen;
using quillen::testing::brute_gcd;

TEST(Ring, ExtGcdMatchesBruteForce) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-10000, 10000);
  for (int i = 0; i < 1000; ++i) {
    const long a = d(rng), b = d(rng);
    auto [g, s, t] = ext_gcd(mpz_class(a), mpz_class(b));
    EXPECT_EQ(g, brute_gcd(a, b)) << a << " " << b;
    EXPECT_EQ(g, s * a + t * b);
    if (g != 0) {
      EXPECT_EQ(mpz_class(a) % g, 0);
      EXPECT_EQ(mpz_class(b) % g, 0);
    }
  }
}

TEST(Ring, ExtGcdEdgeCases) {
  auto [g0, s0, t0] = ext_gcd(0, 0);
  EXPECT_EQ(g0, 0);
  auto [g1, s1, t1] = ext_gcd(0, -7);
  EXPECT_EQ(g1, 7);
  EXPECT_EQ(s1 * 0 + t1 * -7, 7);
}

TEST(Ring, CoeffInvertRoundTrip) {
  std::mt19937 rng(2);
  const RingPtr q = make_ring(CoeffKind::Q, {"x"});
  const RingPtr z = make_ring(CoeffKind::Z, {"x"});
  const RingPtr zp = make_ring(CoeffKind::Zp, {"x"}, 101);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    long num = d(rng), den = d(rng);
    if (num == 0) num = 1;
    if (den == 0) den = 3;
    Coeff c(num, den);
    c.canonicalize();
    EXPECT_EQ(coeff_invert(c, *q) * c, 1);

    const Coeff r = zp->from_int(num);
    if (r != 0) EXPECT_EQ(zp->normalize(coeff_invert(r, *zp) * r), 1);

    const Coeff u(i % 2 ? 1 : -1);
    EXPECT_EQ(coeff_invert(u, *z) * u, 1);
  }
}

TEST(Ring, NonUnitsThrow) {
  const RingPtr z = make_ring(CoeffKind::Z, {"x"});
  const RingPtr zp = make_ring(CoeffKind::Zp, {"x"}, 7);
  const RingPtr q = make_ring(CoeffKind::Q, {"x"});
  for (const auto& [c, ring] : std::vector<std::pair<Coeff, RingPtr>>{{2, z}, {0, z}, {7, zp}, {0, q}}) {
    try {
      coeff_invert(c, *ring);
      FAIL() << c << " inverted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotAUnit);
    }
  }
}

TEST(Ring, ZpNormalizesIntoRange) {
  const RingPtr zp = make_ring(CoeffKind::Zp, {"x"}, 101);
  EXPECT_EQ(zp->from_int(-1), 100);
  EXPECT_EQ(zp->from_int(202), 0);
  EXPECT_EQ(zp->normalize(Coeff(1, 2)), 51);
}

TEST(Ring, RejectsBadDescriptions) {
  EXPECT_THROW(make_ring(CoeffKind::Zp, {"x"}, 100), Error);
  EXPECT_THROW(make_ring(CoeffKind::Q, {"x", "x"}), Error);
  EXPECT_THROW(make_ring(CoeffKind::Q, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}), Error);
}

TEST(Ring, PrimalityByTrialDivision) {
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 97, 101, 2147483647};
  for (long p : primes) EXPECT_TRUE(is_prime(p)) << p;
  for (long n : {0L, 1L, 4L, 9L, 91L, 2147483646L}) EXPECT_FALSE(is_prime(n)) << n;
}
