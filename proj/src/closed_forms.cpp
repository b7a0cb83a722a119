#include "tdp/closed_forms.hpp"

#include <stdexcept>

namespace tdp {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

const Polynomial kX = Polynomial::x();
const Polynomial kXp1{1, 1};
const Polynomial kXp2{2, 1};

Polynomial xp1_pow(int e) { return pow(kXp1, static_cast<unsigned>(e)); }

}  // namespace

Polynomial star_poly(int m) {
  require(m >= 1, "star_poly: m must be >= 1");
  return kX * xp1_pow(m) - kX;
}

Polynomial lollipop_poly(int m, int n) {
  require(m >= 3, "lollipop_poly: m must be >= 3");
  require(n >= 1, "lollipop_poly: n must be >= 1");
  switch (n) {
    case 1:
      return star_poly(m);
    case 2:
      return kX * kX * xp1_pow(m - 1) * kXp2 -
             Polynomial::monomial(m - 1, 3) - Polynomial::monomial(1, 2);
    case 3:
      return kX * kX * xp1_pow(m) * kXp2 - Polynomial::monomial(m - 1, 4) -
             Polynomial::monomial(2 * m, 3) - Polynomial::monomial(2, 2);
    case 4:
      // The x^3 coefficient is m+3; m+2 fails brute-force cross-checks by
      // exactly x^3 for every m.
      return kX * kX * xp1_pow(m) * Polynomial{1, 3, 1} -
             Polynomial::monomial(m - 1, 5) - Polynomial::monomial(2 * m, 4) -
             Polynomial::monomial(m + 3, 3) - Polynomial::monomial(1, 2);
    default:
      return kX * lollipop_poly(m, n - 1) +
             (lollipop_poly(m, n - 3) + lollipop_poly(m, n - 4)).shifted(2);
  }
}

Polynomial firecracker_poly(int n, int k) {
  require(n >= 1, "firecracker_poly: n must be >= 1");
  require(k >= 2, "firecracker_poly: k must be >= 2");
  // A two-vertex star's center loses support status once the chain runs
  // through its only leaf, so the chain edge becomes load-bearing and the
  // product form no longer holds.
  require(n == 1 || k >= 3, "firecracker_poly: chained stars need k >= 3");
  return pow(star_poly(k - 1), static_cast<unsigned>(n));
}

Polynomial generalized_firecracker_poly(const std::vector<int>& ks) {
  require(!ks.empty(), "generalized_firecracker_poly: at least one star");
  Polynomial r = Polynomial::one();
  for (int k : ks) {
    require(k >= 2, "generalized_firecracker_poly: each size must be >= 2");
    require(ks.size() == 1 || k >= 3,
            "generalized_firecracker_poly: chained stars need size >= 3");
    r *= star_poly(k - 1);
  }
  return r;
}

Polynomial book_poly(int n) {
  require(n >= 1, "book_poly: n must be >= 1");
  Polynomial base = kX * xp1_pow(n) + Polynomial::monomial(1, n);
  return base * base;
}

Polynomial generalized_friendship4_poly(int n) {
  require(n >= 1, "generalized_friendship4_poly: n must be >= 1");
  Polynomial bracket = xp1_pow(n) + Polynomial::monomial(1, n - 1);
  return (pow(kXp2, static_cast<unsigned>(n)) * bracket).shifted(n + 1);
}

Polynomial helm_poly(int n, int m) {
  require(n >= 3, "helm_poly: n must be >= 3");
  require(m >= 1, "helm_poly: m must be >= 1");
  return xp1_pow(m * n + 1).shifted(n);
}

Polynomial p3_attach_poly(int n) {
  require(n >= 1, "p3_attach_poly: n must be >= 1");
  return pow(kXp2, static_cast<unsigned>(n)).shifted(2 * n);
}

Polynomial corona_kbar_poly(int n, int r, int m) {
  require(n >= 1, "corona_kbar_poly: n must be >= 1");
  require(r >= 0 && r <= n, "corona_kbar_poly: r must be in 0..n");
  require(m >= 1, "corona_kbar_poly: m must be >= 1");
  // The bracket exponent is m, not n: the r isolated vertices each need one
  // of their own m pendants chosen, so each contributes (x+1)^m - 1.
  Polynomial bracket = xp1_pow(m) - Polynomial::one();
  return (xp1_pow(m * (n - r)) * pow(bracket, static_cast<unsigned>(r)))
      .shifted(n);
}

Polynomial sunlike_poly(const Graph& g, const std::vector<int>& ms) {
  require(static_cast<int>(ms.size()) == g.order(),
          "sunlike_poly: one pendant count per vertex");
  Polynomial r = Polynomial::one();
  for (int v = 0; v < g.order(); ++v) {
    require(ms[v] >= 1, "sunlike_poly: each vertex needs >= 1 pendant");
    Polynomial factor = xp1_pow(ms[v]);
    if (g.degree(v) == 0) factor -= Polynomial::one();
    r *= factor;
  }
  return r.shifted(g.order());
}

std::optional<Polynomial> closed_form_for(const FamilySpec& spec) {
  auto scalar = [&spec](const char* key) {
    return static_cast<int>(spec.params.at(key).front());
  };
  switch (spec.kind) {
    case FamilyKind::kStar:
      return star_poly(scalar("n") - 1);
    case FamilyKind::kLollipop:
      return lollipop_poly(scalar("m"), scalar("n"));
    case FamilyKind::kFirecracker:
      if (scalar("n") >= 2 && scalar("k") < 3) return std::nullopt;
      return firecracker_poly(scalar("n"), scalar("k"));
    case FamilyKind::kGeneralizedFirecracker: {
      std::vector<int> ks;
      for (long long v : spec.params.at("ks")) ks.push_back(static_cast<int>(v));
      for (int k : ks) {
        if (ks.size() >= 2 && k < 3) return std::nullopt;
      }
      return generalized_firecracker_poly(ks);
    }
    case FamilyKind::kBook:
      return book_poly(scalar("n"));
    case FamilyKind::kGeneralizedFriendship:
      if (scalar("q") == 4) return generalized_friendship4_poly(scalar("n"));
      return std::nullopt;
    case FamilyKind::kHelm:
      return helm_poly(scalar("n"), scalar("m"));
    default:
      return std::nullopt;
  }
}

}  // namespace tdp
