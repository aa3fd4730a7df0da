#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "printers.hpp"
#include "a2kl/hecke.hpp"
#include "a2kl/weights.hpp"

using namespace a2kl;

namespace {

LaurentPoly vm(int e, std::int64_t c = 1) { return LaurentPoly::monomial(c, e); }

// The six elements of W0 as linear maps on (m, n), generated by the two simple
// reflections m -> -m and n -> -n in the fundamental-weight basis.
std::vector<std::pair<int, Weight (*)(Weight)>> weyl_group() {
  return {
      {0, [](Weight w) { return w; }},
      {1, [](Weight w) { return Weight{-w.m, w.m + w.n}; }},
      {1, [](Weight w) { return Weight{w.m + w.n, -w.n}; }},
      {2, [](Weight w) { return Weight{w.n, -w.m - w.n}; }},
      {2, [](Weight w) { return Weight{-w.m - w.n, w.m}; }},
      {3, [](Weight w) { return Weight{-w.n, -w.m}; }},
  };
}

// Kostant's partition function for the positive roots alpha, beta, alpha + beta.
std::int64_t kostant(Weight w) {
  const auto c = w.root_coords();
  if (!c || c->first < 0 || c->second < 0) return 0;
  return std::min(c->first, c->second) + 1;
}

std::int64_t mult_oracle(Weight lambda, Weight mu) {
  std::int64_t total = 0;
  for (const auto& [len, act] : weyl_group())
    total += (len % 2 ? -1 : 1) * kostant(act(lambda + kRho) - (mu + kRho));
  return total;
}

std::map<Weight, std::int64_t> character(Weight lambda) {
  std::map<Weight, std::int64_t> ch;
  const std::int64_t span = lambda.m + lambda.n;
  for (std::int64_t i = 0; i <= 2 * span; ++i)
    for (std::int64_t j = 0; j <= 2 * span; ++j) {
      const Weight mu = lambda - Weight::from_roots(i, j);
      if (const std::int64_t k = mult_oracle(lambda, mu)) ch[mu] = k;
    }
  return ch;
}

// Decomposes V(lambda) (x) V(lambda') by peeling off highest weights.
std::map<Weight, std::int64_t> tensor_oracle(Weight a, Weight b) {
  std::map<Weight, std::int64_t> ch;
  for (const auto& [p, x] : character(a))
    for (const auto& [q, y] : character(b)) ch[p + q] += x * y;
  std::map<Weight, std::int64_t> out;
  for (;;) {
    std::erase_if(ch, [](const auto& kv) { return kv.second == 0; });
    if (ch.empty()) break;
    const Weight top = std::max_element(ch.begin(), ch.end(), [](const auto& l, const auto& r) {
                         return l.first.m + l.first.n < r.first.m + r.first.n;
                       })->first;
    const std::int64_t c = ch[top];
    out[top] = c;
    for (const auto& [mu, k] : character(top)) ch[mu] -= c * k;
  }
  return out;
}

LaurentPoly phi_oracle(Weight lambda) {
  const Weight roots[3] = {kAlpha, kBeta, kAlpha + kBeta};
  LaurentPoly out;
  for (int mask = 0; mask < 8; ++mask) {
    Weight sum{0, 0};
    int size = 0;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) {
        sum = sum + roots[i];
        ++size;
      }
    if (sum == lambda) out = out + vm(-2 * size, size % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace

TEST(Weights, DominanceOrder) {
  EXPECT_TRUE(dom_leq({2, 3}, {2, 3}));
  EXPECT_FALSE(dom_leq({0, 3}, {0, 4}));
  EXPECT_TRUE(dom_leq({1, 1}, {2, 2}));
  EXPECT_FALSE(dom_leq({2, 2}, {1, 1}));
}

TEST(Weights, FiniteWeylAction) {
  EXPECT_EQ(w0_act(Element::parse("s"), kWeightX), (Weight{-1, 1}));
  EXPECT_EQ(w0_act(Element::parse("t"), kWeightY), (Weight{1, -1}));
  EXPECT_EQ(w0_act(Element::parse("sts"), {3, 5}), (Weight{-5, -3}));
  EXPECT_EQ(w0_act(Element(), {3, 5}), (Weight{3, 5}));
  EXPECT_THROW(w0_act(Element::parse("r"), kWeightX), std::invalid_argument);
  const auto d = to_dominant({-2, 1});
  EXPECT_EQ(d.weight, kRho);
  EXPECT_EQ(d.sign, 1);
  EXPECT_EQ(to_dominant({-1, 2}).sign, -1);
}

TEST(Weights, PhiTable) {
  EXPECT_EQ(phi({0, 0}), LaurentPoly(1));
  EXPECT_EQ(phi(kAlpha), vm(-2, -1));
  EXPECT_EQ(phi(kAlpha + kBeta), vm(-4) - vm(-2));
  EXPECT_EQ(phi(2 * kAlpha + 2 * kBeta), vm(-6, -1));
  EXPECT_TRUE(phi(3 * kAlpha).is_zero());
  for (std::int64_t m = -6; m <= 6; ++m)
    for (std::int64_t n = -6; n <= 6; ++n) EXPECT_EQ(phi({m, n}), phi_oracle({m, n})) << m << "," << n;
}

TEST(Weights, StabilizerData) {
  const auto x4 = stab_data({4, 0});
  EXPECT_EQ(x4.nu, 1);
  EXPECT_EQ(x4.pi, LaurentPoly::xi());
  EXPECT_EQ(x4.region, RegionTag::X1);
  const auto rho = stab_data(kRho);
  EXPECT_EQ(rho.nu, 0);
  EXPECT_EQ(rho.pi, LaurentPoly(1));
  EXPECT_EQ(rho.region, RegionTag::Y1);
  const auto zero = stab_data({0, 0});
  EXPECT_EQ(zero.nu, 3);
  EXPECT_EQ(zero.pi, LaurentPoly::from_terms({{-3, 1}, {-1, 2}, {1, 2}, {3, 1}}));
  EXPECT_EQ(zero.stabilizer.size(), 6u);
}

TEST(Weights, Regions) {
  EXPECT_EQ(region_of({3, 0}), RegionTag::X1);
  EXPECT_EQ(region_of({0, 3}), RegionTag::X2);
  EXPECT_EQ(region_of({4, 1}), RegionTag::Y1);
  EXPECT_EQ(region_of({1, 4}), RegionTag::Y2);
  EXPECT_EQ(region_of({2, 5}), RegionTag::Z1);
  EXPECT_EQ(region_of({5, 2}), RegionTag::Z2);
  EXPECT_EQ(region_of({0, 0}), RegionTag::other);
  EXPECT_EQ(to_string(RegionTag::Z2), "Z2");
}

TEST(Weights, MultiplicitiesAgainstKostant) {
  EXPECT_EQ(weight_mult(kWeightX, kWeightX), 1);
  EXPECT_EQ(weight_mult(kWeightX, -kWeightY), 1);
  EXPECT_EQ(weight_mult(kRho, {0, 0}), 2);
  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t n = 0; n <= 4; ++n) {
      std::int64_t dim = 0;
      for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t b = -12; b <= 12; ++b) {
          const std::int64_t k = weight_mult({m, n}, {a, b});
          EXPECT_EQ(k, mult_oracle({m, n}, {a, b})) << m << "," << n << " at " << a << "," << b;
          dim += k;
        }
      EXPECT_EQ(dim, weyl_dim({m, n}));
    }
  EXPECT_EQ(weyl_dim({1, 1}), 8);
}

TEST(Weights, TensorProductsAgainstPeeling) {
  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t n = 0; n <= 3; ++n)
      for (std::int64_t p = 0; p <= 2; ++p)
        for (std::int64_t q = 0; q <= 2; ++q) {
          const auto expected = tensor_oracle({m, n}, {p, q});
          for (const Weight nu : dominant_below({m + p + 2, n + q + 2})) {
            const auto it = expected.find(nu);
            EXPECT_EQ(tensor_mult({m, n}, {p, q}, nu), it == expected.end() ? 0 : it->second)
                << m << "," << n << " x " << p << "," << q << " -> " << nu.str();
          }
        }
  EXPECT_EQ(tensor_mult(kWeightX, kWeightY, {0, 0}), 1);
}

TEST(Weights, MinusculeShortcut) {
  for (const Weight z : {Weight{0, 0}, kWeightX, kWeightY})
    for (std::int64_t m = 0; m <= 4; ++m)
      for (std::int64_t n = 0; n <= 4; ++n)
        for (std::int64_t a = 0; a <= 5; ++a)
          for (std::int64_t b = 0; b <= 5; ++b)
            EXPECT_EQ(minuscule_mult(z, {m, n}, {a, b}), tensor_mult(z, {m, n}, {a, b}));
  EXPECT_EQ(minuscule_mult(kWeightX, kWeightY, {0, 0}), 1);
  EXPECT_ANY_THROW(minuscule_mult(kRho, kWeightX, kWeightX));
}

TEST(Weights, ACoefficients) {
  EXPECT_EQ(a_coeff({2, 3}, {2, 3}), LaurentPoly(1));
  EXPECT_EQ(a_coeff({2, 3}, Weight{2, 3} + kAlpha), vm(-2, -1));
  EXPECT_EQ(a_coeff({2, 3}, Weight{2, 3} + 2 * kAlpha + 2 * kBeta), vm(-6, -1));
  EXPECT_TRUE(a_coeff({2, 3}, {1, 1}).is_zero());
}

TEST(Weights, BTables) {
  const auto t4y = b_table({0, 4});
  for (const auto& [lambda, b] : t4y) {
    if (lambda == Weight{0, 4}) EXPECT_EQ(b, LaurentPoly(1));
    else if (lambda == Weight{0, 4} - kBeta) EXPECT_EQ(b, vm(-1) + vm(-3));
    else if (lambda == Weight{0, 4} - kAlpha - 2 * kBeta) EXPECT_EQ(b, vm(-4));
    else EXPECT_TRUE(b.is_zero()) << lambda.str();
  }
  const Weight top41{4, 1};
  for (const auto& [lambda, b] : b_table(top41)) {
    if (lambda == top41) EXPECT_EQ(b, LaurentPoly(1));
    else if (lambda == top41 - kAlpha) EXPECT_EQ(b, vm(-2, -1));
    else if (lambda == top41 - kAlpha - kBeta) EXPECT_EQ(b, vm(-1));
    else if (lambda == top41 - 2 * kAlpha - kBeta) EXPECT_EQ(b, vm(-4));
    else EXPECT_TRUE(b.is_zero()) << lambda.str();
  }
  const Weight top14{1, 4};
  for (const auto& [lambda, b] : b_table(top14)) {
    if (lambda == top14) EXPECT_EQ(b, LaurentPoly(1));
    else if (lambda == top14 - kBeta) EXPECT_EQ(b, vm(-2, -1));
    else if (lambda == top14 - kAlpha - kBeta) EXPECT_EQ(b, vm(-1));
    else if (lambda == top14 - kAlpha - 2 * kBeta) EXPECT_EQ(b, vm(-4));
    else EXPECT_TRUE(b.is_zero()) << lambda.str();
  }
  EXPECT_EQ(res0(vm(-1) + vm(-3)), 1);
  EXPECT_EQ(res0(vm(-2, -1)), 0);
  EXPECT_EQ(res0(LaurentPoly()), 0);
}

TEST(Weights, DirectSumsMatchTheSemilinearSolution) {
  EXPECT_EQ(b_direct(Weight{0, 4} - kBeta, {0, 4}), vm(-1) + vm(-3));
  EXPECT_TRUE(b_direct({0, 3}, {0, 4}).is_zero());  // y is not in the root lattice
  EXPECT_EQ(b_direct({2, 1}, {2, 1}), LaurentPoly(1));
  EXPECT_TRUE(b_direct({0, 3}, {2, 1}).is_zero());
  for (const Weight top : {Weight{2, 2}, Weight{3, 1}, Weight{0, 3}})
    for (const auto& [lambda, b] : b_table(top)) EXPECT_EQ(b_direct(lambda, top), b) << lambda.str();
}
