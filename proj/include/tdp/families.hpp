#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tdp/graph.hpp"

namespace tdp {

// Parametric graph constructors. Vertex numbering is part of each builder's
// contract; tests and the formula layer rely on it.

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);

// Star on n vertices total: center 0, leaves 1..n-1.
Graph make_star(int n);
// K_{1,leaves}: same labeling, parametrized by leaf count.
Graph make_star_k1(int leaves);

// Clique 0..m-1, path m..m+n-1, bridge {0, m}.
Graph make_lollipop(int m, int n);

// n triangles sharing center 0; triangle i adds vertices 1+2i, 2+2i.
Graph make_friendship(int n);
// n cycles C_q sharing center 0; cycle i adds the chain
// 1+i(q-1) .. (i+1)(q-1), both chain ends tied to 0.
Graph make_generalized_friendship(int n, int q);

// n stars on k vertices each; star i occupies [ik, ik+k) with center ik and
// linking leaf ik+1; consecutive linking leaves are joined in a chain.
Graph make_firecracker(int n, int k);
// Same layout with per-star sizes ks[i] (each >= 2) and cumulative offsets.
Graph make_generalized_firecracker(const std::vector<int>& ks);

// n quadrilateral pages sharing the edge {0,1}; page i adds 2+2i ~ 0,
// 3+2i ~ 1 and the outer edge {2+2i, 3+2i}.
Graph make_book(int n);

// Hub 0 joined to the rim cycle 1..n.
Graph make_wheel(int n);

// Wheel plus m pendants per rim vertex; pendant t of rim vertex j is
// n + (j-1)m + t + 1.
Graph make_helm(int n, int m);

// Corona g O h: one copy of h per vertex of g, copy i at g.order() + i*h.order(),
// vertex i joined to all of its copy.
Graph corona(const Graph& g, const Graph& h);

// ms[i] >= 1 pendants attached to vertex i, numbered sequentially from g.order().
Graph sunlike(const Graph& g, const std::vector<int>& ms);

// Each vertex i of h gains a pendant path i ~ (n+2i) ~ (n+2i+1).
Graph p3_attach(const Graph& h);

Graph disjoint_union(const Graph& a, const Graph& b);

enum class FamilyKind {
  kComplete,
  kPath,
  kCycle,
  kStar,
  kLollipop,
  kFriendship,
  kGeneralizedFriendship,
  kFirecracker,
  kGeneralizedFirecracker,
  kBook,
  kWheel,
  kHelm,
};

// Parsed form of "kind:key=value,...". Scalar parameters hold one value;
// the ks list of generalized_firecracker holds one or more (bare tokens
// after "ks=v" extend the list: "ks=5,9,7").
struct FamilySpec {
  FamilyKind kind = FamilyKind::kComplete;
  std::map<std::string, std::vector<long long>> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string family_name(FamilyKind kind);

Graph make_family(const FamilySpec& spec);

}  // namespace tdp
