#pragma once

#include <optional>
#include <vector>

#include "tdp/families.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

// Closed-form total domination polynomials. Each function's precondition
// matches the corresponding builder in families.hpp; tests pin every formula
// against independent subset enumeration.

// D_t(K_{1,m}) = x(x+1)^m - x, m >= 1.
Polynomial star_poly(int m);

// Lollipop L(m,n), m >= 3, n >= 1: explicit forms for n <= 4, then
// L(m,n) = x L(m,n-1) + x^2 (L(m,n-3) + L(m,n-4)).
Polynomial lollipop_poly(int m, int n);

// Firecracker F(n,k): (x(x+1)^(k-1) - x)^n. Chained stars need k >= 3:
// with k = 2 a star center stops being a support vertex and the chain
// edges carry weight, so the product form fails.
Polynomial firecracker_poly(int n, int k);
// Per-star sizes: the product of the star factors. One star allows
// size 2; two or more require every size >= 3.
Polynomial generalized_firecracker_poly(const std::vector<int>& ks);

// Book B_n: (x(x+1)^n + x^n)^2.
Polynomial book_poly(int n);

// Generalized friendship F_{n,4}: x^(n+1) (x+2)^n ((x+1)^n + x^(n-1)).
Polynomial generalized_friendship4_poly(int n);

// Helm H_{n,m}: x^n (x+1)^(mn+1).
Polynomial helm_poly(int n, int m);

// Any n-vertex graph with a pendant P_2 hung on every vertex: the host's
// edges drop out and D_t = x^(2n) (x+2)^n.
Polynomial p3_attach_poly(int n);

// Corona G o K̄_m for an n-vertex G with r isolated vertices:
// x^n (x+1)^(m(n-r)) ((x+1)^m - 1)^r.
Polynomial corona_kbar_poly(int n, int r, int m);

// g with ms[i] >= 1 pendants on vertex i: x^n times (x+1)^(m_i) per
// non-isolated vertex and ((x+1)^(m_i) - 1) per isolated one.
Polynomial sunlike_poly(const Graph& g, const std::vector<int>& ms);

// The formula for a family spec, when this library carries one.
std::optional<Polynomial> closed_form_for(const FamilySpec& spec);

}  // namespace tdp
