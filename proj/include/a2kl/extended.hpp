#pragma once

// The extended affine Weyl group Omega x| W with Omega = {e, w, w^2} cyclic of
// order three.  Conjugation by the generator of Omega rotates the simple
// reflections r -> s -> t -> r, i.e. r*w = w*s, s*w = w*t, t*w = w*r.
// Elements are kept in the normal form w^k * body.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2kl/coxeter.hpp"
#include "a2kl/weight.hpp"

namespace a2kl {

class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(int omega, Element body);
  explicit ExtElement(Element body) : body_(std::move(body)) {}

  static ExtElement omega_power(int k) { return ExtElement(k, Element()); }
  /// Accepts "oK:word" (K in 0..2) or a free product over the letters
  /// r, s, t (simple reflections), o (the rotation), x, y (fundamental translations).
  static ExtElement parse(std::string_view text);

  int omega() const { return omega_; }
  const Element& body() const { return body_; }
  std::size_t length() const { return body_.length(); }
  bool is_identity() const { return omega_ == 0 && body_.is_identity(); }

  GenSet descents(Side side) const;
  ExtElement left_mul(Generator g) const;
  ExtElement right_mul(Generator g) const;
  ExtElement inverse() const;

  /// "oK:word", e.g. "o1:tr".
  std::string str() const;

  friend bool operator==(const ExtElement& a, const ExtElement& b) = default;
  friend bool operator<(const ExtElement& a, const ExtElement& b) {
    if (a.body_.length() != b.body_.length()) return a.body_.length() < b.body_.length();
    if (a.omega_ != b.omega_) return a.omega_ < b.omega_;
    return a.body_ < b.body_;
  }

 private:
  int omega_ = 0;
  Element body_;
};

struct ExtElementHash {
  std::size_t operator()(const ExtElement& w) const noexcept {
    return ElementHash{}(w.body()) * 3u + static_cast<std::size_t>(w.omega());
  }
};

ExtElement operator*(const ExtElement& a, const ExtElement& b);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);
ExtElement ext_pow(const ExtElement& a, std::int64_t k);
/// Same Omega-component and bodies comparable.
bool ext_bruhat_leq(const ExtElement& u, const ExtElement& w);

/// The finite Weyl group W0 = <s, t> = {e, s, t, st, ts, sts}.
const std::vector<Element>& finite_weyl_group();
bool in_finite_weyl_group(const Element& w);
/// The longest element sts of W0.
const Element& longest_finite();

/// Translation x^m y^n in the extended group (x = w t r, y = w^2 s r).
ExtElement weight_elem(Weight lambda);
/// Recovers lambda when `z` is the translation by a dominant weight.
std::optional<Weight> dominant_translation_weight(const ExtElement& z);

/// The distinguished elements d_u, u in W0, of the lowest two-sided cell.
ExtElement d_elem(const Element& u);

/// Minimal- and maximal-length elements of the double coset W0 * lambda * W0.
ExtElement min_rep(Weight lambda);
ExtElement max_rep(Weight lambda);
/// (-1)^(l(min_rep) - l(max_rep)).
int eps(Weight lambda);

/// z = d_u * lambda * w0 * d_v^-1 with lambda dominant.
struct C0Factor {
  Element u;
  Weight lambda;
  Element v;
  friend bool operator==(const C0Factor&, const C0Factor&) = default;
};

/// Factorization of an element of the lowest two-sided cell; empty outside it.
std::optional<C0Factor> factor_c0(const ExtElement& z);
ExtElement assemble_c0(const C0Factor& f);

/// A triple (d, d', z) of the distinguished set governing mu on the lowest cell.
struct UTriple {
  ExtElement d;
  ExtElement d_prime;
  Weight z;
};

/// The eighteen triples as tabulated in the literature.
const std::vector<UTriple>& u_set_listed();

}  // namespace a2kl
