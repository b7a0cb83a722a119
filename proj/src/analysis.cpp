#include "tdp/analysis.hpp"

#include <stdexcept>
#include <vector>

namespace tdp {

SequenceVerdict analyze_sequence(const Polynomial& p) {
  SequenceVerdict v;
  if (p.is_zero()) {
    v.mode = 0;
    return v;
  }
  const auto& c = p.coeffs();
  const int lo = p.low_degree();
  const int hi = p.degree();

  // Unimodality ignores the leading zero block, but a prefix of zeros can
  // only extend the rising phase, so the full-range verdict is computed the
  // same way from index 0.
  auto scan_unimodal = [&c](int from, int to, std::optional<int>& violation) {
    bool fell = false;
    for (int k = from; k < to; ++k) {
      const auto& a = c[static_cast<std::size_t>(k)];
      const auto& b = c[static_cast<std::size_t>(k + 1)];
      if (b < a) {
        fell = true;
      } else if (b > a && fell) {
        violation = k + 1;
        return false;
      }
    }
    return true;
  };

  std::optional<int> violation;
  v.unimodal = scan_unimodal(lo, hi, violation);
  v.first_violation = violation;
  std::optional<int> full_violation;
  v.unimodal_full = scan_unimodal(0, hi, full_violation);
  if (v.unimodal) {
    int best = lo;
    for (int k = lo + 1; k <= hi; ++k) {
      if (c[static_cast<std::size_t>(k)] > c[static_cast<std::size_t>(best)]) {
        best = k;
      }
    }
    v.mode = best;
  }

  v.log_concave = true;
  for (int k = lo + 1; k < hi; ++k) {
    const auto& a = c[static_cast<std::size_t>(k - 1)];
    const auto& b = c[static_cast<std::size_t>(k)];
    const auto& d = c[static_cast<std::size_t>(k + 1)];
    if (b * b < a * d) {
      v.log_concave = false;
      break;
    }
  }

  v.symmetric = true;
  for (int i = 0, j = hi - lo; i < j; ++i, --j) {
    if (c[static_cast<std::size_t>(lo + i)] !=
        c[static_cast<std::size_t>(lo + j)]) {
      v.symmetric = false;
      break;
    }
  }
  return v;
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trimmed

void rtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_rational(const Polynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  rtrim(d);
  return d;
}

// Remainder of a by b under exact rational long division.
QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= factor * b[i];
    }
    a.pop_back();
    rtrim(a);
  }
  return a;
}

// Exact quotient; the division must leave no remainder.
QPoly quotient(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= factor * b[i];
    }
    a.pop_back();
    rtrim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  rtrim(q);
  return q;
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

QPoly monic_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

// Scale by the positive rational that makes coefficients integer and
// coprime; the sign pattern is preserved.
std::vector<mpz_class> primitive_integer(const QPoly& p) {
  mpz_class denom_lcm(1);
  for (const auto& c : p) {
    mpz_class d = c.get_den();
    denom_lcm = lcm(denom_lcm, d);
  }
  std::vector<mpz_class> out;
  out.reserve(p.size());
  mpz_class content(0);
  for (const auto& c : p) {
    mpq_class scaled = c * mpq_class(denom_lcm);
    out.push_back(scaled.get_num());
    content = gcd(content, out.back());
  }
  if (content > 1) {
    for (auto& c : out) c /= content;
  }
  return out;
}

mpq_class eval(const std::vector<mpz_class>& p, const mpq_class& at) {
  mpq_class acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * at + p[i];
  }
  return acc;
}

int sign_variations(const std::vector<std::vector<mpz_class>>& chain,
                    const mpq_class& at) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, at));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("squarefree part of the zero polynomial");
  }
  QPoly q = to_rational(p);
  if (q.size() == 1) return Polynomial::one();
  QPoly g = monic_gcd(q, derivative(q));
  QPoly sf = quotient(std::move(q), g);
  std::vector<mpz_class> c = primitive_integer(sf);
  if (!c.empty() && c.back() < 0) {
    for (auto& x : c) x = -x;
  }
  return Polynomial(std::move(c));
}

int count_distinct_real_roots(const Polynomial& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("root count of the zero polynomial");
  }
  Polynomial sf = squarefree_part(p);
  const int d = sf.degree();
  if (d == 0) return 0;

  std::vector<std::vector<mpz_class>> chain;
  chain.push_back(sf.coeffs());
  {
    QPoly d1 = derivative(to_rational(sf));
    chain.push_back(primitive_integer(d1));
  }
  while (chain.back().size() > 1) {
    QPoly a = to_rational(Polynomial(chain[chain.size() - 2]));
    QPoly b = to_rational(Polynomial(chain.back()));
    QPoly r = remainder(std::move(a), b);
    if (r.empty()) break;  // squarefree input: only at a constant tail
    for (auto& c : r) c = -c;
    chain.push_back(primitive_integer(r));
  }

  // Cauchy bound: every root has |r| < 1 + max |c_i| / |c_d|.
  mpq_class bound(1);
  {
    const auto& c = sf.coeffs();
    mpz_class lead = abs(c.back());
    mpz_class biggest(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      mpz_class a = abs(c[i]);
      if (a > biggest) biggest = a;
    }
    bound += mpq_class(biggest) / mpq_class(lead);
  }
  while (sf.evaluate(bound) == 0 || sf.evaluate(-bound) == 0) bound += 1;

  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

bool is_all_real_rooted(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0) return true;
  Polynomial sf = squarefree_part(p);
  return count_distinct_real_roots(p) == sf.degree();
}

}  // namespace tdp
