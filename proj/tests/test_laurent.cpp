#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "printers.hpp"
#include "a2kl/laurent.hpp"

using namespace a2kl;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> low(-6, 3), size(0, 6), coeff(-4, 4);
  std::vector<std::int64_t> c(size(rng));
  for (auto& x : c) x = coeff(rng);
  return LaurentPoly(low(rng), c);
}

}  // namespace

TEST(Laurent, RingAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ(a.bar().bar(), a);
    if (!b.is_zero()) EXPECT_EQ((a * b).divided_by(b), a);
  }
}

TEST(Laurent, QuantumTwo) {
  const LaurentPoly q = LaurentPoly::xi();
  EXPECT_EQ(q.str(), "v + v^-1");
  EXPECT_EQ((q * q * q - q).str(), "v^3 + 2v + 2v^-1 + v^-3");
  EXPECT_EQ(q.bar(), q);
}

TEST(Laurent, Accessors) {
  const LaurentPoly p = LaurentPoly::from_terms({{-3, 2}, {1, -1}, {-3, 1}});
  EXPECT_EQ(p.coeff(-3), 3);
  EXPECT_EQ(p.coeff(1), -1);
  EXPECT_EQ(p.low_degree(), -3);
  EXPECT_EQ(p.high_degree(), 1);
  EXPECT_EQ(p.negative_part(), LaurentPoly::monomial(3, -3));
  EXPECT_EQ(p.shifted(3), LaurentPoly::from_terms({{0, 3}, {4, -1}}));
  EXPECT_TRUE(LaurentPoly::from_terms({{2, 1}, {2, -1}}).is_zero());
}

TEST(Laurent, InexactDivisionThrows) {
  EXPECT_THROW(LaurentPoly::xi().divided_by(LaurentPoly(2)), ArithmeticError);
  EXPECT_THROW(LaurentPoly(1).divided_by(LaurentPoly()), ArithmeticError);
}

TEST(Laurent, OverflowIsDetected) {
  const LaurentPoly big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, ArithmeticError);
  EXPECT_THROW(big * LaurentPoly(2), ArithmeticError);
}

TEST(Laurent, SerializeRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng);
    EXPECT_EQ(LaurentPoly::deserialize(a.serialize()), a);
  }
  EXPECT_EQ(LaurentPoly().serialize(), "0");
}

TEST(KLPoly, InVAndAddScaled) {
  KLPoly p = KLPoly::one();
  p.add_scaled(KLPoly({1, 2}), 3, 2);  // 1 + 3 q^2 + 6 q^3
  EXPECT_EQ(p.coeffs(), (std::vector<std::int64_t>{1, 0, 3, 6}));
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.in_v(), LaurentPoly::from_terms({{0, 1}, {4, 3}, {6, 6}}));
  EXPECT_EQ(p.str(), "1 + 3q^2 + 6q^3");
  p.add_scaled(KLPoly({0, 0, 1, 2}), -3, 0);
  EXPECT_EQ(p, KLPoly::one());
}
