#pragma once

// Weight-lattice machinery for sl3: the finite Weyl group action, Lusztig's
// a- and b-coefficients attached to W0-W0 double cosets, and tensor-product
// multiplicities.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "a2kl/coxeter.hpp"
#include "a2kl/extended.hpp"
#include "a2kl/laurent.hpp"
#include "a2kl/weight.hpp"

namespace a2kl {

/// lambda <= lambda' iff lambda' - lambda is a nonnegative combination of alpha, beta.
bool dom_leq(Weight lambda, Weight lambda_prime);

/// Action of w in W0 = <s, t>; throws std::invalid_argument outside W0.
Weight w0_act(const Element& w, Weight lambda);

/// The dominant W0-conjugate of lambda, and the parity of the reflections used.
struct Dominated {
  Weight weight;
  int sign;
};
Dominated to_dominant(Weight lambda);

/// Sum over subsets i of {alpha, beta, alpha+beta} with sum lambda of (-v^2)^-|i|.
LaurentPoly phi(Weight lambda);

enum class RegionTag { X1, X2, Y1, Y2, Z1, Z2, other };
std::string to_string(RegionTag tag);
/// x + y lies in both one-parameter families of Y; it is tagged Y1.  Zero is `other`.
RegionTag region_of(Weight lambda);

struct StabData {
  int nu = 0;         ///< number of reflections fixing lambda
  LaurentPoly pi;     ///< v^-nu * sum over the stabilizer of v^(2 l(w))
  RegionTag region = RegionTag::other;
  std::vector<Element> stabilizer;
};
StabData stab_data(Weight lambda);

/// (v^nu' / pi') * sum_{w in W0} (-1)^l(w) Phi(lambda' + rho - w(lambda + rho)).
LaurentPoly a_coeff(Weight lambda, Weight lambda_prime);

/// Elements of the double coset W0 * lambda * W0.
std::vector<ExtElement> double_coset(Weight lambda);

/// sum_{z in W0 lambda W0} (-v)^(l(m_lambda) - l(z)) p_{z, m_lambda''}.
LaurentPoly b_direct(Weight lambda, Weight lambda_pp);

/// All b_{lambda, lambda''} for 0 < lambda <= lambda'' (dominant), from the
/// semilinear equations.  Throws ArithmeticError or ConsistencyError on failure.
std::map<Weight, LaurentPoly> b_table(Weight lambda_pp);

/// Coefficient of v^-1.
std::int64_t res0(const LaurentPoly& f);

/// Multiplicity of the weight mu in the irreducible module of highest weight lambda.
std::int64_t weight_mult(Weight lambda, Weight mu);
/// Multiplicity of V(nu) in V(lambda) (x) V(lambda').
std::int64_t tensor_mult(Weight lambda, Weight lambda_prime, Weight nu);
/// tensor_mult(z1, lambda', lambda) for z1 in {0, x, y}, via the weights of V(z1).
std::int64_t minuscule_mult(Weight z1, Weight lambda_prime, Weight lambda);
/// dim V(lambda) = (m+1)(n+1)(m+n+2)/2.
std::int64_t weyl_dim(Weight lambda);

/// Dominant weights lambda with 0 <= lambda <= top, ordered by (m, n).
std::vector<Weight> dominant_below(Weight top);

}  // namespace a2kl
