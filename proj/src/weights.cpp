#include "a2kl/weights.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "a2kl/hecke.hpp"

namespace a2kl {

bool dom_leq(Weight lambda, Weight lambda_prime) {
  const auto coords = (lambda_prime - lambda).root_coords();
  return coords && coords->first >= 0 && coords->second >= 0;
}

namespace {

Weight act_s(Weight w) { return {-w.m, w.m + w.n}; }
Weight act_t(Weight w) { return {w.m + w.n, -w.n}; }

// 3 (a, b) for the invariant form with (alpha, alpha) = 2.
std::int64_t form3(Weight a, Weight b) {
  return 2 * a.m * b.m + a.m * b.n + a.n * b.m + 2 * a.n * b.n;
}

LaurentPoly sign_power(int sign, int exponent) { return LaurentPoly::monomial(sign, exponent); }

}  // namespace

Weight w0_act(const Element& w, Weight lambda) {
  if (!in_finite_weyl_group(w)) throw std::invalid_argument(w.str() + " is not in W0");
  const Word word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    lambda = *it == Generator::s ? act_s(lambda) : act_t(lambda);
  return lambda;
}

Dominated to_dominant(Weight lambda) {
  int sign = 1;
  while (lambda.m < 0 || lambda.n < 0) {
    lambda = lambda.m < 0 ? act_s(lambda) : act_t(lambda);
    sign = -sign;
  }
  return {lambda, sign};
}

LaurentPoly phi(Weight lambda) {
  static const Weight positive[] = {kAlpha, kBeta, kAlpha + kBeta};
  LaurentPoly out;
  for (int mask = 0; mask < 8; ++mask) {
    Weight sum;
    int size = 0;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) {
        sum = sum + positive[i];
        ++size;
      }
    if (sum == lambda) out += sign_power(size % 2 ? -1 : 1, -2 * size);
  }
  return out;
}

std::string to_string(RegionTag tag) {
  static const char* const names[] = {"X1", "X2", "Y1", "Y2", "Z1", "Z2", "other"};
  return names[static_cast<int>(tag)];
}

RegionTag region_of(Weight lambda) {
  const auto [m, n] = lambda;
  if (m < 0 || n < 0 || (m == 0 && n == 0)) return RegionTag::other;
  if (n == 0) return RegionTag::X1;
  if (m == 0) return RegionTag::X2;
  if (n == 1) return RegionTag::Y1;
  if (m == 1) return RegionTag::Y2;
  return n >= m ? RegionTag::Z1 : RegionTag::Z2;
}

StabData stab_data(Weight lambda) {
  StabData out;
  out.region = region_of(lambda);
  for (const Element& w : finite_weyl_group()) {
    if (w0_act(w, lambda) != lambda) continue;
    out.stabilizer.push_back(w);
    if (w.length() % 2 == 1) ++out.nu;  // the reflections of W0 are s, t, sts
    out.pi += LaurentPoly::monomial(1, 2 * static_cast<int>(w.length()));
  }
  out.pi = out.pi.shifted(-out.nu);
  return out;
}

LaurentPoly a_coeff(Weight lambda, Weight lambda_prime) {
  LaurentPoly sum;
  for (const Element& w : finite_weyl_group()) {
    const LaurentPoly term = phi(lambda_prime + kRho - w0_act(w, lambda + kRho));
    if (w.length() % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  const StabData st = stab_data(lambda_prime);
  return sum.shifted(st.nu).divided_by(st.pi);
}

std::vector<ExtElement> double_coset(Weight lambda) {
  const ExtElement t = weight_elem(lambda);
  std::set<ExtElement> seen;
  for (const Element& u : finite_weyl_group())
    for (const Element& v : finite_weyl_group()) seen.insert(ExtElement(u) * t * ExtElement(v));
  return {seen.begin(), seen.end()};
}

LaurentPoly b_direct(Weight lambda, Weight lambda_pp) {
  const ExtElement top = min_rep(lambda_pp);
  const int base = static_cast<int>(min_rep(lambda).length());
  LaurentPoly out;
  for (const ExtElement& z : double_coset(lambda)) {
    if (z.length() > top.length()) continue;
    const LaurentPoly p = normalized_p(z, top);
    if (p.is_zero()) continue;
    const int k = base - static_cast<int>(z.length());
    out += p * sign_power(k % 2 == 0 ? 1 : -1, k);
  }
  return out;
}

std::vector<Weight> dominant_below(Weight top) {
  std::vector<Weight> out;
  const std::int64_t bound = top.m + top.n;
  for (std::int64_t m = 0; m <= bound; ++m)
    for (std::int64_t n = 0; m + n <= bound; ++n)
      if (dom_leq({m, n}, top)) out.push_back({m, n});
  return out;
}

std::map<Weight, LaurentPoly> b_table(Weight lambda_pp) {
  if (!lambda_pp.is_dominant()) throw std::invalid_argument("b_table: weight must be dominant");
  std::vector<Weight> order;
  for (Weight w : dominant_below(lambda_pp))
    if (w != Weight{0, 0}) order.push_back(w);
  auto gap = [&](Weight w) {
    const auto c = (lambda_pp - w).root_coords();
    return c->first + c->second;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Weight a, Weight b) { return gap(a) < gap(b); });

  struct Data {
    int eps;
    LaurentPoly pi;
  };
  std::map<Weight, Data> data;
  for (Weight w : order) data[w] = {eps(w), stab_data(w).pi};

  std::map<Weight, LaurentPoly> b;
  for (Weight lambda : order) {
    if (lambda == lambda_pp) {
      b[lambda] = LaurentPoly(1);
      continue;
    }
    LaurentPoly rhs;
    for (const auto& [lp, blp] : b) {
      if (!dom_leq(lambda, lp) || lp == lambda) continue;
      const LaurentPoly a = a_coeff(lambda, lp);
      if (a.is_zero()) continue;
      const LaurentPoly weight = data[lp].pi * LaurentPoly(data[lp].eps);
      rhs += a.bar() * weight * blp - a * weight * blp.bar();
    }
    const LaurentPoly g =
        rhs.divided_by(data[lambda].pi * LaurentPoly(data[lambda].eps));
    if (g.coeff(0) != 0 || !(g.bar() == -g))
      throw ConsistencyError("b_table: b-bar minus b is not anti-invariant at " + lambda.str() +
                             ": " + g.str());
    b[lambda] = -g.negative_part();
  }
  return b;
}

std::int64_t res0(const LaurentPoly& f) { return f.coeff(-1); }

namespace {

// Multiplicities of the dominant weights of V(lambda), by Freudenthal's formula.
std::map<Weight, std::int64_t> compute_dominant_character(Weight lambda) {
  std::vector<Weight> order = dominant_below(lambda);
  auto height = [&](Weight w) {
    const auto c = (lambda - w).root_coords();
    return c->first + c->second;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Weight a, Weight b) { return height(a) < height(b); });
  std::map<Weight, std::int64_t> mult;
  auto lookup = [&](Weight mu) -> std::int64_t {
    const auto it = mult.find(to_dominant(mu).weight);
    return it == mult.end() ? 0 : it->second;
  };
  static const Weight positive[] = {kAlpha, kBeta, kAlpha + kBeta};
  const std::int64_t top = form3(lambda + kRho, lambda + kRho);
  for (Weight mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (Weight a : positive)
      for (std::int64_t k = 1;; ++k) {
        const Weight shifted = mu + k * a;
        const std::int64_t m = lookup(shifted);
        if (m == 0 && !dom_leq(to_dominant(shifted).weight, lambda)) break;
        num += form3(shifted, a) / 3 * m;  // (mu + k a, a) is an integer
      }
    const std::int64_t den = top - form3(mu + kRho, mu + kRho);
    if (den <= 0 || (6 * num) % den != 0)
      throw ArithmeticError("Freudenthal recursion is not integral at " + mu.str());
    mult[mu] = 6 * num / den;
  }
  return mult;
}

const std::map<Weight, std::int64_t>& dominant_character(Weight lambda) {
  static std::mutex mutex;
  static std::map<Weight, std::map<Weight, std::int64_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, compute_dominant_character(lambda)).first;
  return it->second;
}

}  // namespace

std::int64_t weight_mult(Weight lambda, Weight mu) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weight_mult: lambda must be dominant");
  const auto& chr = dominant_character(lambda);
  const auto it = chr.find(to_dominant(mu).weight);
  return it == chr.end() ? 0 : it->second;
}

// Racah-Speiser: sum over weights mu of V(lambda) of K(mu) * sign, reflecting
// mu + lambda' + rho into the dominant chamber.
std::int64_t tensor_mult(Weight lambda, Weight lambda_prime, Weight nu) {
  const std::int64_t span = lambda.m + lambda.n;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i <= span; ++i)
    for (std::int64_t j = 0; j <= span; ++j) {
      const Weight mu = lambda - Weight::from_roots(i, j);
      const std::int64_t k = weight_mult(lambda, mu);
      if (k == 0) continue;
      const Dominated d = to_dominant(mu + lambda_prime + kRho);
      if (d.weight.m == 0 || d.weight.n == 0) continue;
      if (d.weight - kRho == nu) total += d.sign * k;
    }
  return total;
}

std::int64_t minuscule_mult(Weight z1, Weight lambda_prime, Weight lambda) {
  std::vector<Weight> weights;
  if (z1 == Weight{0, 0})
    weights = {{0, 0}};
  else if (z1 == kWeightX)
    weights = {kWeightX, kWeightY - kWeightX, -kWeightY};
  else if (z1 == kWeightY)
    weights = {kWeightY, kWeightX - kWeightY, -kWeightX};
  else
    throw std::invalid_argument("minuscule_mult: z1 must be 0, x or y");
  if (!lambda.is_dominant()) return 0;
  return std::count(weights.begin(), weights.end(), lambda - lambda_prime) > 0 ? 1 : 0;
}

std::int64_t weyl_dim(Weight lambda) {
  return (lambda.m + 1) * (lambda.n + 1) * (lambda.m + lambda.n + 2) / 2;
}

}  // namespace a2kl
