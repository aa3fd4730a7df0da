#include "a2kl/extended.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace a2kl {

namespace {

int mod3(std::int64_t k) { return static_cast<int>(((k % 3) + 3) % 3); }

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> Weight::root_coords() const {
  if (!in_root_lattice()) return std::nullopt;
  return std::make_pair((2 * m + n) / 3, (m + 2 * n) / 3);
}

std::string Weight::str() const { return std::to_string(m) + "," + std::to_string(n); }

Weight Weight::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("weight must be \"m,n\"");
  auto parse_int = [](std::string_view part) {
    std::int64_t value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc() || ptr != end)
      throw std::invalid_argument("bad weight coordinate: " + std::string(part));
    return value;
  };
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

ExtElement::ExtElement(int omega, Element body) : omega_(mod3(omega)), body_(std::move(body)) {}

ExtElement ExtElement::parse(std::string_view text) {
  if (text.size() >= 3 && text[0] == 'o' && text[2] == ':') {
    if (text[1] < '0' || text[1] > '2') throw std::invalid_argument("omega power must be 0..2");
    return ExtElement(text[1] - '0', Element::parse(text.substr(3)));
  }
  ExtElement acc;
  if (text == "e") return acc;
  for (char c : text) {
    switch (c) {
      case 'o':
        acc = acc * omega_power(1);
        break;
      case 'x':
        acc = acc * weight_elem(kWeightX);
        break;
      case 'y':
        acc = acc * weight_elem(kWeightY);
        break;
      default:
        acc = acc.right_mul(generator_from_char(c));
    }
  }
  return acc;
}

// g * w^k = w^k * twist^k(g)
GenSet ExtElement::descents(Side side) const {
  if (side == Side::Right) return body_.descents(Side::Right);
  GenSet out;
  for (Generator g : kGenerators)
    if (body_.has_descent(twist(g, omega_), Side::Left)) out.insert(g);
  return out;
}

ExtElement ExtElement::left_mul(Generator g) const {
  return ExtElement(omega_, body_.left_mul(twist(g, omega_)));
}

ExtElement ExtElement::right_mul(Generator g) const {
  return ExtElement(omega_, body_.right_mul(g));
}

ExtElement ExtElement::inverse() const {
  const int k = mod3(-omega_);
  return ExtElement(k, body_.inverse().twisted(k));
}

std::string ExtElement::str() const { return "o" + std::to_string(omega_) + ":" + body_.str(); }

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  return ExtElement(a.omega() + b.omega(), a.body().twisted(b.omega()) * b.body());
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) { return a * b; }

ExtElement ext_pow(const ExtElement& a, std::int64_t k) {
  const ExtElement base = k < 0 ? a.inverse() : a;
  ExtElement acc;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) acc = acc * base;
  return acc;
}

bool ext_bruhat_leq(const ExtElement& u, const ExtElement& w) {
  return u.omega() == w.omega() && bruhat_leq(u.body(), w.body());
}

const std::vector<Element>& finite_weyl_group() {
  static const std::vector<Element> group = {Element::parse("e"),  Element::parse("s"),
                                             Element::parse("t"),  Element::parse("st"),
                                             Element::parse("ts"), Element::parse("sts")};
  return group;
}

bool in_finite_weyl_group(const Element& w) {
  return w.letters().find('r') == std::string::npos;
}

const Element& longest_finite() {
  static const Element w0 = Element::parse("sts");
  return w0;
}

ExtElement weight_elem(Weight lambda) {
  static const ExtElement x = ExtElement(1, Element::parse("tr"));
  static const ExtElement y = ExtElement(2, Element::parse("sr"));
  return ext_pow(x, lambda.m) * ext_pow(y, lambda.n);
}

std::optional<Weight> dominant_translation_weight(const ExtElement& z) {
  // A dominant translation mx + ny has length 2(m + n).
  if (z.length() % 2 != 0) return std::nullopt;
  const auto half = static_cast<std::int64_t>(z.length() / 2);
  for (std::int64_t m = 0; m <= half; ++m) {
    const Weight lambda{m, half - m};
    if (weight_elem(lambda) == z) return lambda;
  }
  return std::nullopt;
}

ExtElement d_elem(const Element& u) {
  if (!in_finite_weyl_group(u))
    throw std::invalid_argument("d_elem: " + u.str() + " is not in W0");
  const std::string& w = u.letters();
  if (w.empty()) return ExtElement();
  if (w == "s") return ExtElement(1, Element::parse("r"));
  if (w == "t") return ExtElement(2, Element::parse("r"));
  if (w == "st") return ExtElement::omega_power(2);
  if (w == "ts") return ExtElement::omega_power(1);
  return ExtElement(0, Element::parse("r"));  // sts
}

namespace {

// Strip (or add) s/t on either side while that shortens (lengthens) the element.
ExtElement extremal_rep(Weight lambda, bool minimal) {
  ExtElement z = weight_elem(lambda);
  for (bool changed = true; changed;) {
    changed = false;
    for (Side side : {Side::Left, Side::Right})
      for (Generator g : {Generator::s, Generator::t}) {
        if (z.descents(side).contains(g) != minimal) continue;
        z = side == Side::Left ? z.left_mul(g) : z.right_mul(g);
        changed = true;
      }
  }
  return z;
}

}  // namespace

ExtElement min_rep(Weight lambda) { return extremal_rep(lambda, true); }

ExtElement max_rep(Weight lambda) { return extremal_rep(lambda, false); }

int eps(Weight lambda) {
  const auto diff = max_rep(lambda).length() - min_rep(lambda).length();
  return diff % 2 == 0 ? 1 : -1;
}

std::optional<C0Factor> factor_c0(const ExtElement& z) {
  const ExtElement w0(longest_finite());
  std::optional<C0Factor> found;
  for (const Element& u : finite_weyl_group())
    for (const Element& v : finite_weyl_group()) {
      const ExtElement middle = d_elem(u).inverse() * z * d_elem(v) * w0;
      if (auto lambda = dominant_translation_weight(middle)) {
        if (found) throw std::logic_error("factor_c0: two factorizations of " + z.str());
        found = C0Factor{u, *lambda, v};
      }
    }
  return found;
}

ExtElement assemble_c0(const C0Factor& f) {
  return d_elem(f.u) * weight_elem(f.lambda) * ExtElement(longest_finite()) *
         d_elem(f.v).inverse();
}

const std::vector<UTriple>& u_set_listed() {
  static const std::vector<UTriple> listed = [] {
    const auto E = [](const char* text) { return ExtElement::parse(text); };
    const Weight zero{0, 0};
    return std::vector<UTriple>{
        {E("e"), E("r"), zero},          {E("e"), E("or"), kWeightX},
        {E("e"), E("oor"), kWeightY},    {E("r"), E("e"), zero},
        {E("r"), E("o"), kWeightX},      {E("r"), E("oo"), kWeightY},
        {E("o"), E("r"), kWeightX},      {E("o"), E("or"), kWeightY},
        {E("o"), E("oor"), zero},        {E("oo"), E("r"), kWeightY},
        {E("oo"), E("or"), zero},        {E("oo"), E("oor"), kWeightX},
        {E("or"), E("e"), kWeightX},     {E("or"), E("o"), kWeightY},
        {E("or"), E("oo"), zero},        {E("oor"), E("e"), kWeightY},
        {E("oor"), E("o"), zero},        {E("oor"), E("oo"), kWeightX},
    };
  }();
  return listed;
}

}  // namespace a2kl
