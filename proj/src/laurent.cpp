#include "a2kl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace a2kl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("coefficient overflow");
  return r;
}

// Appends "c*v^e" style term with sign handling to `out`.
void append_term(std::string& out, std::int64_t c, int e, char var) {
  const bool first = out.empty();
  if (c < 0) {
    out += first ? "-" : " - ";
    c = -c;
  } else if (!first) {
    out += " + ";
  }
  if (e == 0) {
    out += std::to_string(c);
    return;
  }
  if (c != 1) out += std::to_string(c);
  out.push_back(var);
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low, std::vector<std::int64_t> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  return LaurentPoly(exponent, {coeff});
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::xi() { return from_terms({{1, 1}, {-1, 1}}); }

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t end = coeffs_.size();
  while (coeffs_[end - 1] == 0) --end;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                      coeffs_.begin() + static_cast<std::ptrdiff_t>(end));
  low_ += static_cast<int>(lead);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high_degree(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  LaurentPoly out = *this;
  out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::negative_part() const {
  if (is_zero() || low_ >= 0) return {};
  const int top = std::min(high_degree(), -1);
  return LaurentPoly(low_, std::vector<std::int64_t>(
                               coeffs_.begin(), coeffs_.begin() + (top - low_ + 1)));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  std::vector<std::int64_t> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[low_ - lo + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = sum[other.low_ - lo + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly();
  std::vector<std::int64_t> prod(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  low_ += other.low_;
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("division by zero Laurent polynomial");
  if (is_zero()) return {};
  const int min_exp = low_ - divisor.low_;
  const std::int64_t lead = divisor.coeffs_.back();
  LaurentPoly rem = *this;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const int e = rem.high_degree() - divisor.high_degree();
    const std::int64_t top = rem.coeffs_.back();
    if (e < min_exp || top % lead != 0)
      throw ArithmeticError("inexact division: " + str() + " by " + divisor.str());
    const LaurentPoly term = monomial(top / lead, e);
    quotient += term;
    rem -= term * divisor;
  }
  return quotient;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high_degree(); e >= low_; --e)
    if (const auto c = coeff(e); c != 0) append_term(out, c, e, 'v');
  return out;
}

std::string LaurentPoly::serialize() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto [e, c] : terms()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(e) + ":" + std::to_string(c);
  }
  return out;
}

LaurentPoly LaurentPoly::deserialize(const std::string& text) {
  if (text == "0") return {};
  std::istringstream in(text);
  std::string tok;
  LaurentPoly p;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad Laurent term: " + tok);
    p += monomial(std::stoll(tok.substr(colon + 1)), std::stoi(tok.substr(0, colon)));
  }
  return p;
}

KLPoly::KLPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void KLPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t KLPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void KLPoly::add_scaled(const KLPoly& other, std::int64_t c, int k) {
  if (other.is_zero() || c == 0) return;
  const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(k);
  if (coeffs_.size() < need) coeffs_.resize(need, 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = coeffs_[i + static_cast<std::size_t>(k)];
    slot = checked_add(slot, checked_mul(c, other.coeffs_[i]));
  }
  normalize();
}

LaurentPoly KLPoly::in_v() const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> spread(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[2 * i] = coeffs_[i];
  return LaurentPoly(0, std::move(spread));
}

std::string KLPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) append_term(out, coeffs_[k], static_cast<int>(k), 'q');
  return out;
}

}  // namespace a2kl
