#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdp/graph.hpp"
#include "tdp/polynomial.hpp"

namespace tdp {

// Exact coefficient vector of D_t; fingerprints agree exactly when the
// polynomials do.
using Fingerprint = Polynomial;

Fingerprint fingerprint(const Graph& g, int threads = 1);

struct EquivalenceClass {
  Fingerprint key;
  std::optional<int> gamma_t;        // empty for the zero-polynomial class
  std::vector<std::string> members;  // catalog lines in input order
};

struct ClassReport {
  int order = -1;  // -1 when the catalog is empty or mixes orders
  long long total = 0;
  std::string scope;
  std::vector<EquivalenceClass> classes;  // ascending by coefficient vector
  std::vector<std::string> warnings;

  long long class_count() const {
    return static_cast<long long>(classes.size());
  }
  long long singleton_count() const;
};

// One graph6 line per row; blank lines are skipped, duplicates are kept as
// distinct members with a warning. Member order follows the input, classes
// sort by key, so the report is identical for every thread count.
ClassReport partition_catalog(std::istream& in, const std::string& scope,
                              int threads = 1);

// Header line {"order","total","classes","singletons","scope"}, then one
// {"key","gamma_t","size","members"} line per class. Warnings are not
// part of the stream.
void write_jsonl(const ClassReport& report, std::ostream& out);

struct UniquenessResult {
  bool unique = true;
  bool in_catalog = false;             // by labeled edge-set identity
  std::vector<std::string> witnesses;  // other lines sharing the fingerprint
};

// A graph absent from the catalog still gets a verdict; its isomorphic
// copies there count as witnesses, since identity is by labeled edge set.
UniquenessResult is_dt_unique(const Graph& g, std::istream& catalog,
                              int threads = 1);

// Labeled graphs sharing D_t = x(x+1)^n - x: the star K_{1,n}, the lollipop
// L(n,1), and the lollipop minus one clique edge (distinct for n >= 4; the
// last two collapse to the first at n = 3).
std::vector<Graph> star_class_witnesses(int n);

// corona(g, K̄_m) and sunlike(g, ms): a labeled pair sharing
// x^n (x+1)^(mn). Requires sum(ms) == m * g.order() and no isolated vertex.
std::pair<Graph, Graph> corona_class_witnesses(const Graph& g, int m,
                                               const std::vector<int>& ms);

}  // namespace tdp
