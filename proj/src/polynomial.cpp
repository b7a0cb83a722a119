#include "tdp/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace tdp {

Polynomial::Polynomial(std::initializer_list<long> cs) {
  coeffs_.reserve(cs.size());
  for (long c : cs) coeffs_.emplace_back(c);
  trim();
}

Polynomial::Polynomial(std::vector<mpz_class> cs) : coeffs_(std::move(cs)) {
  trim();
}

Polynomial Polynomial::monomial(const mpz_class& c, int k) {
  if (k < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (c == 0) return {};
  Polynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
  p.coeffs_.back() = c;
  return p;
}

int Polynomial::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

mpz_class Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  if (is_zero()) return {};
  Polynomial r;
  r.coeffs_.assign(static_cast<std::size_t>(k), mpz_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

mpq_class Polynomial::evaluate(const mpq_class& at) const {
  mpq_class acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * at + coeffs_[i];
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) {
      out << 'x';
      if (i >= 2) out << '^' << i;
    }
  }
  return out.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::one();
  Polynomial sq = base;
  while (exponent) {
    if (exponent & 1) result *= sq;
    exponent >>= 1;
    if (exponent) sq *= sq;
  }
  return result;
}

}  // namespace tdp
