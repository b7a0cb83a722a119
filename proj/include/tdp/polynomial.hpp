#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace tdp {

// Exact integer polynomial, dense ascending: coeffs()[i] multiplies x^i.
// Normalized: no trailing zero coefficients; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> cs);
  explicit Polynomial(std::vector<mpz_class> cs);

  static Polynomial zero() { return {}; }
  static Polynomial one() { return {1}; }
  static Polynomial x() { return {0, 1}; }
  static Polynomial monomial(const mpz_class& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int low_degree() const;  // smallest index with nonzero coefficient, -1 if zero
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int i) const;  // 0 outside the stored range

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  // This polynomial times x^k.
  Polynomial shifted(int k) const;

  mpq_class evaluate(const mpq_class& at) const;

  // Sparse descending human form: "x^4+3x^3+3x^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace tdp
