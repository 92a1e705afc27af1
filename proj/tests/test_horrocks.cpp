#include <gtest/gtest.h>

#include <random>

#include "quillen/elimination.hpp"
#include "quillen/error.hpp"
#include "quillen/horrocks.hpp"
#include "support.hpp"

using namespace quillen;
using quillen::testing::parse_row;
using quillen::testing::random_elementary;

namespace {

RingPtr zz_xy() { return make_ring(CoeffKind::Z, {"x", "y"}); }

std::vector<std::string> row_strings(const LocalSolution& L, std::size_t i) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < L.numerator.cols(); ++j) out.push_back(to_string(L.entry(i, j)));
  return out;
}

Poly in_total(const Poly& p, const BaseRing& base) {
  return same_ring(p.ring(), base.total()) ? p : base.to_total(p);
}

// f * numerator = entry_den * e1, with both scalars outside m.
void expect_contract(const std::vector<Poly>& f, const LocalSolution& L, const BaseRing& base) {
  std::vector<Poly> e1(f.size(), Poly(base.total()));
  e1[0] = in_total(L.entry_den, base);
  ASSERT_EQ(row_times(f, L.numerator), e1);
  ASSERT_EQ(determinant(L.numerator), in_total(L.det_numerator, base));
  ASSERT_FALSE(in_total(L.det_numerator, base).uses_var(base.y()));
  const Poly d = same_ring(L.denominator.ring(), base.base()) ? L.denominator : base.to_base(L.denominator);
  const Poly u = same_ring(L.entry_den.ring(), base.base()) ? L.entry_den : base.to_base(L.entry_den);
  const Poly det = same_ring(L.det_numerator.ring(), base.base()) ? L.det_numerator : base.to_base(L.det_numerator);
  ASSERT_FALSE(in_max_ideal(d, L.m));
  ASSERT_FALSE(in_max_ideal(u, L.m));
  ASSERT_FALSE(in_max_ideal(det, L.m));
}

}  // namespace

TEST(Horrocks, WorkedFirstLocalSolution) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  const LocalSolution L = horrocks(f, 1, make_point_ideal(base.base(), 2, {Coeff(0)}));
  EXPECT_EQ(row_strings(L, 0), (std::vector<std::string>{"0", "1", "0"}));
  EXPECT_EQ(row_strings(L, 1), (std::vector<std::string>{"1/(2*x + 1)", "-y^2/(2*x + 1)", "(-x^2*y^5 - x)/(2*x + 1)"}));
  EXPECT_EQ(row_strings(L, 2), (std::vector<std::string>{"0", "0", "1"}));
  EXPECT_EQ(to_string(L.denominator), "2*x + 1");
  expect_contract(f, L, base);
}

TEST(Horrocks, WorkedSecondLocalSolution) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  const LocalSolution L = horrocks(f, 1, make_point_ideal(base.base(), 3, {Coeff(1)}));
  EXPECT_EQ(to_string(L.denominator), "x");
  expect_contract(f, L, base);
  EXPECT_EQ(row_strings(L, 0), (std::vector<std::string>{"-x*y^3", "2*x^2*y^3 + x*y^3", "x*y^5 + 1"}));
  EXPECT_EQ(row_strings(L, 1), (std::vector<std::string>{"0", "1", "0"}));
  EXPECT_EQ(row_strings(L, 2), (std::vector<std::string>{"1/x", "(-2*x - 1)/x", "-y^2/x"}));
}

TEST(Horrocks, UnitRowGivesIdentity) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  const LocalSolution L = horrocks(parse_row({"1", "0"}, S), 1, make_point_ideal(base.base(), 2, {Coeff(0)}));
  EXPECT_EQ(L.numerator, PolyMatrix::identity(S, 2));
  EXPECT_TRUE(L.entry_den.is_one());
}

TEST(Horrocks, NoMonicEntry) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  try {
    horrocks(parse_row({"2*y + 1", "x*y", "3"}, S), 1, make_point_ideal(base.base(), 2, {Coeff(0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoMonicEntry);
  }
}

TEST(Horrocks, NotUnimodularLocally) {
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  try {
    horrocks(parse_row({"y", "x", "2"}, S), 1, make_point_ideal(base.base(), 2, {Coeff(0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodularLocally);
  }
}

TEST(Horrocks, RandomRowsSatisfyContractAndDecreaseDegree) {
  std::mt19937 rng(22);
  const RingPtr S = zz_xy();
  const BaseRing base(S, 1);
  const std::vector<MaxIdeal> ideals{make_point_ideal(base.base(), 2, {Coeff(0)}),
                                     make_point_ideal(base.base(), 3, {Coeff(1)}),
                                     make_point_ideal(base.base(), 5, {Coeff(4)})};
  int solved = 0;
  for (int t = 0; t < 60; ++t) {
    const PolyMatrix E = random_elementary(S, 3, rng, 6);
    const std::vector<Poly> f0 = E.row(0);
    std::vector<Poly> f;
    try {
      f = change_var(f0, 2).row;
    } catch (const Error&) {
      continue;
    }
    for (const auto& m : ideals) {
      HorrocksTrace trace;
      const LocalSolution L = horrocks(f, 1, m, &trace);
      expect_contract(f, L, base);
      for (std::size_t i = 1; i < trace.pivot_degrees.size(); ++i)
        ASSERT_LT(trace.pivot_degrees[i], trace.pivot_degrees[i - 1]);
      ++solved;
    }
  }
  EXPECT_GT(solved, 100);
}

TEST(Horrocks, FieldCoefficients) {
  std::mt19937 rng(23);
  const RingPtr S = make_ring(CoeffKind::Q, {"x", "y"});
  const BaseRing base(S, 1);
  const MaxIdeal m = make_point_ideal(base.base(), 0, {Coeff(1)});
  for (int t = 0; t < 30; ++t) {
    const std::vector<Poly> f = change_var(random_elementary(S, 3, rng, 6).row(0), 2).row;
    expect_contract(f, horrocks(f, 1, m), base);
  }
}
