#pragma once

// Integer Laurent polynomials in v (v^2 = q) and ordinary polynomials in q.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace a2kl {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Z[v, v^-1].  Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers embed as constants
  /// `coeffs[i]` is the coefficient of v^(low + i).
  LaurentPoly(int low, std::vector<std::int64_t> coeffs);

  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms);
  /// v + v^-1, written [2] in the literature.
  static LaurentPoly xi();

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponents; undefined on zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  std::map<int, std::int64_t> terms() const;

  /// v -> v^-1.
  LaurentPoly bar() const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Terms with exponent < 0 (strictly negative part).
  LaurentPoly negative_part() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  /// Exact quotient; throws ArithmeticError when `divisor` does not divide.
  LaurentPoly divided_by(const LaurentPoly& divisor) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable, highest power first, e.g. "v^3 + 2v + 2v^-1 + v^-3".
  std::string str() const;
  /// "exp:coeff" pairs sorted by exponent, separated by spaces; "0" for zero.
  std::string serialize() const;
  static LaurentPoly deserialize(const std::string& text);

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Polynomial in q with integer coefficients, constant term first.
class KLPoly {
 public:
  KLPoly() = default;
  explicit KLPoly(std::vector<std::int64_t> coeffs);
  static KLPoly one() { return KLPoly({1}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// this += c * q^k * other
  void add_scaled(const KLPoly& other, std::int64_t c, int k);

  /// Substitute q = v^2.
  LaurentPoly in_v() const;

  friend bool operator==(const KLPoly& a, const KLPoly& b) = default;
  std::string str() const;

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace a2kl
