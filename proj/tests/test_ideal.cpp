#include <gtest/gtest.h>

#include <random>

#include "quillen/error.hpp"
#include "quillen/ideal.hpp"
#include "support.hpp"

using namespace quillen;
using quillen::testing::parse_matrix;
using quillen::testing::parse_row;
using quillen::testing::expand;
using quillen::testing::brute_member_qq;
using quillen::testing::random_poly;

TEST(Groebner, CertificatesExpandToOne) {
  std::mt19937 rng(11);
  for (auto kind : {CoeffKind::Q, CoeffKind::Z, CoeffKind::Zp}) {
    const RingPtr R = make_ring(kind, {"x", "y"}, kind == CoeffKind::Zp ? 101 : 0);
    int certified = 0;
    for (int t = 0; t < 100; ++t) {
      std::vector<Poly> gens;
      for (int k = 0; k < 2 + t % 2; ++k) gens.push_back(random_poly(R, rng, 2, 3));
      if (t % 4 == 0) gens.push_back(Poly::constant(R, 1) + Poly::variable(R, 0) * gens[0]);
      auto cert = one_certificate({R, gens});
      if (!cert) continue;
      ++certified;
      ASSERT_TRUE(expand(*cert, gens).is_one());
    }
    EXPECT_GT(certified, 20);
  }
}

TEST(Groebner, MembershipAgreesWithLinearAlgebraOracle) {
  std::mt19937 rng(12);
  const RingPtr R = make_ring(CoeffKind::Q, {"x", "y"});
  int members = 0, disagreements = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Poly> gens{random_poly(R, rng, 2, 3), random_poly(R, rng, 2, 3)};
    const GroebnerBasis gb = groebner({R, gens});
    for (int k = 0; k < 5; ++k) {
      // Half the probes are built inside the ideal.
      Poly f = k % 2 ? random_poly(R, rng, 1, 3) * gens[0] + random_poly(R, rng, 1, 3) * gens[1]
                     : random_poly(R, rng, 2, 3);
      const bool by_gb = ideal_contains(gb, f);
      if (by_gb) ++members;
      const bool by_oracle = brute_member_qq(f, gens, 3);
      if (by_oracle != by_gb) ++disagreements;
      ASSERT_TRUE(!by_oracle || by_gb) << to_string(f);
      if (k % 2) ASSERT_TRUE(by_gb);
    }
  }
  EXPECT_GT(members, 100);
  EXPECT_EQ(disagreements, 0);
}

TEST(Groebner, ReductionCofactorsReconstruct) {
  std::mt19937 rng(13);
  for (auto kind : {CoeffKind::Q, CoeffKind::Z}) {
    const RingPtr R = make_ring(kind, {"x", "y"});
    for (int t = 0; t < 50; ++t) {
      std::vector<Poly> gens{random_poly(R, rng, 2, 3), random_poly(R, rng, 2, 3)};
      const GroebnerBasis gb = groebner({R, gens});
      for (std::size_t i = 0; i < gb.gens.size(); ++i) ASSERT_EQ(expand(gb.cofactors[i], gens), gb.gens[i]);
      const Poly f = random_poly(R, rng, 3, 5, 4);
      const Reduction red = reduce(f, gb);
      ASSERT_EQ(expand(red.cofactors, gb.gens) + red.remainder, f);
      for (const auto& g : gens) ASSERT_TRUE(ideal_contains(gb, g));
    }
  }
}

TEST(Groebner, Idempotent) {
  std::mt19937 rng(14);
  for (auto kind : {CoeffKind::Q, CoeffKind::Z}) {
    const RingPtr R = make_ring(kind, {"x", "y"});
    for (int t = 0; t < 50; ++t) {
      std::vector<Poly> gens{random_poly(R, rng, 2, 3), random_poly(R, rng, 2, 3), random_poly(R, rng, 2, 3)};
      const GroebnerBasis a = groebner({R, gens});
      const GroebnerBasis b = groebner({R, a.gens});
      for (const auto& g : b.gens) ASSERT_TRUE(ideal_contains(a, g));
      for (const auto& g : a.gens) ASSERT_TRUE(ideal_contains(b, g));
    }
  }
}

TEST(Groebner, StrongBasisOverIntegers) {
  const RingPtr R = make_ring(CoeffKind::Z, {"x"});
  // (2, x) is proper over ZZ, while (2x + 1, x) is the unit ideal.
  EXPECT_FALSE(one_certificate({R, parse_row({"2", "x"}, R)}));
  auto cert = one_certificate({R, parse_row({"2*x + 1", "x"}, R)});
  ASSERT_TRUE(cert);
  EXPECT_TRUE(expand(*cert, parse_row({"2*x + 1", "x"}, R)).is_one());
  const GroebnerBasis gb = groebner({R, parse_row({"6", "4*x"}, R)});
  EXPECT_TRUE(ideal_contains(gb, parse_poly("2*x", R)));
  EXPECT_FALSE(ideal_contains(gb, parse_poly("x", R)));
  EXPECT_FALSE(ideal_contains(gb, parse_poly("2", R)));
}

TEST(Groebner, PairCapRaises) {
  const RingPtr R = make_ring(CoeffKind::Q, {"x", "y", "z"});
  GroebnerOptions opts;
  opts.max_pairs = 1;
  try {
    groebner({R, parse_row({"x^2*y - z^3 + 1", "x*y^2 - z", "x*y*z - y^3 - x"}, R)}, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceExceeded);
  }
}

TEST(Groebner, LexOrder) {
  const RingPtr R = make_ring(CoeffKind::Q, {"x", "y"});
  GroebnerOptions opts;
  opts.order = MonomialOrder::Lex;
  const GroebnerBasis gb = groebner({R, parse_row({"x^2 + y^2 - 1", "x - y"}, R)}, opts);
  bool eliminant = false;
  for (const auto& g : gb.gens)
    if (!g.uses_var(0) && g.uses_var(1)) eliminant = true;
  EXPECT_TRUE(eliminant);
  EXPECT_TRUE(ideal_contains(gb, parse_poly("2*y^2 - 1", R)));
}

TEST(Unimodular, WorkedRowAndSimpleCases) {
  const RingPtr R = make_ring(CoeffKind::Z, {"x", "y"});
  EXPECT_TRUE(is_unimodular(parse_matrix({{"x^2", "2*y + 1", "x^5*y^2 + y"}}, R)));
  EXPECT_FALSE(is_unimodular(parse_matrix({{"2", "x"}}, R)));
  EXPECT_FALSE(is_unimodular(parse_matrix({{"0", "0", "0"}}, R)));
  EXPECT_THROW(is_unimodular(parse_matrix({{"1"}, {"0"}}, R)), Error);
  std::mt19937 rng(15);
  for (int t = 0; t < 50; ++t) {
    std::vector<Poly> row{Poly::constant(R, t % 2 ? 1 : -1)};
    for (int k = 0; k < 3; ++k) row.push_back(random_poly(R, rng, 3, 5));
    std::shuffle(row.begin(), row.end(), rng);
    EXPECT_TRUE(is_unimodular(PolyMatrix::from_rows(R, {row})));
  }
}

TEST(Unimodular, RightInverse) {
  std::mt19937 rng(16);
  const RingPtr R = make_ring(CoeffKind::Q, {"x", "y"});
  for (int t = 0; t < 20; ++t) {
    const PolyMatrix E = quillen::testing::random_elementary(R, 3, rng, 4);
    const PolyMatrix M = PolyMatrix::unit_block(R, 2, 3) * E;
    const PolyMatrix X = right_inverse(M);
    EXPECT_EQ(M * X, PolyMatrix::identity(R, 2));
  }
  try {
    right_inverse(parse_matrix({{"x", "y"}}, R));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
}

TEST(Fitting, WorkedPresentation) {
  const RingPtr R = make_ring(CoeffKind::Z, {"x", "y"});
  // Column of the worked row as a 3 x 1 presentation.
  const PolyMatrix P = parse_matrix({{"x^2"}, {"2*y + 1"}, {"x^5*y^2 + y"}}, R);
  EXPECT_TRUE(is_zero_ideal(fitting_ideal(P, 1)));
  EXPECT_TRUE(is_unit_ideal(fitting_ideal(P, 2)));
  EXPECT_TRUE(is_unit_ideal(fitting_ideal(P, 3)));
  EXPECT_FALSE(is_unit_ideal(fitting_ideal(P, 0)));
}
