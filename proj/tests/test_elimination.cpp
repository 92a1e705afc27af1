#include <gtest/gtest.h>

#include <random>

#include "quillen/elimination.hpp"
#include "quillen/error.hpp"
#include "support.hpp"

using namespace quillen;

namespace {

using quillen::testing::parse_row;
using quillen::testing::random_elementary;
using quillen::testing::strings;

RingPtr zz_xy() { return make_ring(CoeffKind::Z, {"x", "y"}); }

void expect_change_var_contract(const std::vector<Poly>& f, const ChangeVarResult& cv, std::size_t last) {
  EXPECT_TRUE(determinant(cv.U1).is_unit());
  const RingPtr& R = f.front().ring();
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    const Poly x = Poly::variable(R, i);
    EXPECT_EQ(substitute(substitute(x, cv.subs), cv.subs.inverted()), x);
  }
  std::vector<Poly> expected;
  for (const auto& p : row_times(f, cv.U1)) expected.push_back(substitute(p, cv.subs));
  EXPECT_EQ(cv.row, expected);
  EXPECT_TRUE(is_monic_in(cv.row.front(), last));
}

}  // namespace

TEST(ChangeVar, SwapsToMonicVariable) {
  const RingPtr S = zz_xy();
  ChangeVarResult cv = change_var(parse_row({"x^2", "2*y + 1", "x^5*y^2 + y"}, S), 2);
  EXPECT_EQ(cv.U1, PolyMatrix::identity(S, 3));
  EXPECT_EQ(strings(cv.row), (std::vector<std::string>{"y^2", "2*x + 1", "x^2*y^5 + x"}));
}

TEST(LocalLoop, WorkedRowDenominators) {
  const RingPtr S = zz_xy();
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  LocalLoopResult loop = local_loop(f, 1);
  ASSERT_EQ(loop.solutions.size(), 2u);
  EXPECT_EQ(loop.solutions[0].m.prime, 2);
  EXPECT_EQ(loop.solutions[1].m.prime, 3);
  EXPECT_EQ(strings(loop.denominators), (std::vector<std::string>{"2*x + 1", "x"}));
}

TEST(Patch, WorkedRowEvaluatesAtZero) {
  const RingPtr S = zz_xy();
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  LocalLoopResult loop = local_loop(f, 1);
  PatchResult pr = patch(loop.solutions, 1);
  EXPECT_EQ(strings(row_times(f, pr.U)), (std::vector<std::string>{"0", "2*x + 1", "x"}));
  EXPECT_TRUE(determinant(pr.U).is_one());
}

TEST(Patch, WorkedRowMatrix) {
  const RingPtr S = zz_xy();
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  PatchResult pr = patch(local_loop(f, 1).solutions, 1);
  const PolyMatrix expected = PolyMatrix::from_rows(
      S, {parse_row({"-32*x^6*y^5 + 1", "0", "8*x^5*y^3"}, S),
          parse_row({"16*x^5*y^7 - 8*x^4*y^7 + 4*x^3*y^7 + 2*x*y^2 - y^2", "1", "-4*x^4*y^5 + 2*x^3*y^5 - x^2*y^5"}, S),
          parse_row({"-4*x*y^2", "0", "1"}, S)});
  EXPECT_EQ(pr.U, expected);
  EXPECT_EQ(pr.exponent, 1u);
}

TEST(ChangeVar, IntegerRowNeedsColumnOperation) {
  const RingPtr A = make_ring(CoeffKind::Z, {"x"});
  const auto f = parse_row({"2*x + 1", "x", "5"}, A);
  const ChangeVarResult cv = change_var(f, 1);
  expect_change_var_contract(f, cv, 0);
}

TEST(ChangeVar, RowTooShort) {
  const RingPtr S = zz_xy();
  try {
    change_var(parse_row({"2*x + 1", "x"}, S), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RowTooShort);
  }
}

TEST(ChangeVar, RandomRowsOverEveryRing) {
  std::mt19937 rng(24);
  for (auto kind : {CoeffKind::Q, CoeffKind::Z, CoeffKind::Zp}) {
    const RingPtr S = make_ring(kind, {"x", "y"}, kind == CoeffKind::Zp ? 101 : 0);
    for (int t = 0; t < 60; ++t) {
      const auto f = random_elementary(S, 3, rng, 6).row(0);
      expect_change_var_contract(f, change_var(f, 2), 1);
    }
  }
}

TEST(ChangeVar, FieldShiftMakesMonic) {
  const RingPtr S = make_ring(CoeffKind::Q, {"x", "y"});
  const auto f = parse_row({"x*y + 1", "x*y"}, S);
  const ChangeVarResult cv = change_var(f, 2);
  expect_change_var_contract(f, cv, 1);
  EXPECT_FALSE(cv.subs.is_identity());
}

TEST(LocalLoop, DenominatorsAreComaximalAndGrow) {
  std::mt19937 rng(25);
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  for (int t = 0; t < 40; ++t) {
    const auto f = change_var(random_elementary(S, 3, rng, 6).row(0), 2).row;
    const LocalLoopResult loop = local_loop(f, 1);
    Poly one(base.base());
    for (std::size_t i = 0; i < loop.denominators.size(); ++i) {
      one += loop.cofactors[i] * loop.denominators[i];
      EXPECT_FALSE(in_max_ideal(loop.denominators[i], loop.solutions[i].m));
      if (i > 0) {
        const std::vector<Poly> prev(loop.denominators.begin(), loop.denominators.begin() + i);
        EXPECT_FALSE(ideal_contains(groebner({base.base(), prev}), loop.denominators[i]));
      }
    }
    EXPECT_TRUE(one.is_one());
  }
}

TEST(LocalLoop, UnivariateFallback) {
  // The first denominator 1 - 2x^3 has no rational root.
  const RingPtr S = make_ring(CoeffKind::Q, {"x", "y"});
  const auto f = parse_row({"2*x^5 + y^2 + y", "-2*x^3 + 1", "-2*x"}, S);
  const LocalLoopResult loop = local_loop(f, 1);
  ASSERT_EQ(loop.solutions.size(), 2u);
  EXPECT_TRUE(loop.solutions[0].m.is_point());
  ASSERT_FALSE(loop.solutions[1].m.is_point());
  EXPECT_EQ(to_string(*loop.solutions[1].m.modulus), "x^3 - 1/2");
  EXPECT_EQ(strings(loop.denominators), (std::vector<std::string>{"-2*x^3 + 1", "-2*x"}));
  const PatchResult pr = patch(loop.solutions, 1);
  std::vector<Poly> at_zero;
  for (const auto& p : f) at_zero.push_back(eval_at_zero(p, 1));
  EXPECT_EQ(row_times(f, pr.U), at_zero);
}

TEST(Patch, RandomRoundsEvaluateAtZero) {
  std::mt19937 rng(26);
  for (auto kind : {CoeffKind::Q, CoeffKind::Z, CoeffKind::Zp}) {
    const RingPtr S = make_ring(kind, {"x", "y"}, kind == CoeffKind::Zp ? 101 : 0);
    for (int t = 0; t < 25; ++t) {
      const auto f = random_elementary(S, 3, rng, 6).row(0);
      const EliminationRound round = eliminate_last_var(f, 2, {});
      EXPECT_TRUE(determinant(round.U2).is_unit());
      EXPECT_TRUE(determinant(round.transform()).is_unit());
      const Substitution back = round.subs.inverted();
      std::vector<Poly> expected;
      for (const auto& p : round.output) {
        EXPECT_FALSE(p.uses_var(1));
        expected.push_back(substitute(p, back));
      }
      EXPECT_EQ(row_times(f, round.transform()), expected);
    }
  }
}

TEST(Patch, NeedsComaximalDenominators) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  const LocalSolution L1 = horrocks(f, 1, make_point_ideal(base.base(), 2, {Coeff(0)}));
  try {
    patch({L1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DenominatorsNotComaximal);
  }
}
