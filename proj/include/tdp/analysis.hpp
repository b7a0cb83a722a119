#pragma once

#include <optional>

#include "tdp/polynomial.hpp"

namespace tdp {

// Shape report for a coefficient sequence. Unless noted, properties are
// judged on the stripped window [low_degree .. degree], which skips the
// leading zero block below the first nonzero coefficient. Indices in the
// report are absolute positions in the full sequence.
struct SequenceVerdict {
  bool unimodal = true;
  std::optional<int> mode;  // smallest peak index, set iff unimodal
  bool unimodal_full = true;  // judged on [0 .. degree] instead
  bool log_concave = true;    // a_k^2 >= a_{k-1} a_{k+1} inside the window
  bool symmetric = true;      // window reads the same reversed
  std::optional<int> first_violation;  // first rise after a fall, if any
};

// Zero polynomial convention: every property true, mode 0.
SequenceVerdict analyze_sequence(const Polynomial& p);

// Number of distinct real roots, exact, via a Sturm chain on the squarefree
// part over a Cauchy bound interval. Rejects the zero polynomial.
int count_distinct_real_roots(const Polynomial& p);

// True iff every complex root is real, i.e. the distinct real root count
// equals the squarefree degree. Degree <= 0 counts as real-rooted.
bool is_all_real_rooted(const Polynomial& p);

// Primitive integer squarefree part p / gcd(p, p'), positive leading
// coefficient. Rejects the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace tdp
