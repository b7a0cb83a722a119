#include "tdp/engine.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace tdp {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex out of range");
  }
}

// State of a partially decided subset: vertices below `v` are decided,
// `chosen` of them are in, and their neighborhoods cover `covered`.
struct Prefix {
  int v = 0;
  std::uint64_t covered = 0;
  int chosen = 0;
};

struct Enumerator {
  const Graph& g;
  int n;
  std::uint64_t full;
  // suffix_cover[v] = union of N(u) over u >= v; what undecided vertices
  // can still contribute.
  std::vector<std::uint64_t> suffix_cover;
  // binom[a][b] = C(a, b) for the completed-cover shortcut.
  std::vector<std::vector<unsigned long long>> binom;

  explicit Enumerator(const Graph& graph)
      : g(graph), n(graph.order()), full(graph.full_mask()) {
    suffix_cover.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) {
      suffix_cover[v] = suffix_cover[v + 1] | g.neighbors(v);
    }
    binom.assign(static_cast<std::size_t>(n) + 1, {});
    for (int a = 0; a <= n; ++a) {
      binom[a].assign(static_cast<std::size_t>(a) + 1, 1);
      for (int b = 1; b < a; ++b) {
        binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
      }
    }
  }

  // Every extension dominates once covered == full: the remaining n - v
  // vertices are free, contributing C(n - v, j) sets of each extra size j.
  void settle_full(const Prefix& p, std::vector<unsigned long long>& counts) const {
    int rest = n - p.v;
    for (int j = 0; j <= rest; ++j) {
      counts[static_cast<std::size_t>(p.chosen + j)] += binom[rest][j];
    }
  }

  // True if the prefix was consumed (settled or pruned).
  bool shortcut(const Prefix& p, std::vector<unsigned long long>& counts) const {
    if (p.covered == full) {
      settle_full(p, counts);
      return true;
    }
    if (p.v == n) return true;  // undominated and no vertices left
    if ((p.covered | suffix_cover[p.v]) != full) return true;
    return false;
  }

  void descend(Prefix p, std::vector<unsigned long long>& counts) const {
    if (shortcut(p, counts)) return;
    descend({p.v + 1, p.covered | g.neighbors(p.v), p.chosen + 1}, counts);
    descend({p.v + 1, p.covered, p.chosen}, counts);
  }
};

}  // namespace

bool is_total_dominating(const Graph& g, std::uint64_t s) {
  std::uint64_t covered = 0;
  std::uint64_t m = s & g.full_mask();
  while (m) {
    covered |= g.neighbors(std::countr_zero(m));
    m &= m - 1;
  }
  return covered == g.full_mask();
}

Polynomial brute_force_tdp(const Graph& g, int threads) {
  const int n = g.order();
  if (n > kBruteForceCapacity) {
    throw CapacityError("graph order " + std::to_string(n) +
                        " exceeds brute-force capacity " +
                        std::to_string(kBruteForceCapacity));
  }
  if (n == 0) return Polynomial::one();

  Enumerator en(g);
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  const int workers = resolve_threads(threads);

  if (workers <= 1) {
    en.descend({0, 0, 0}, counts);
  } else {
    // Expand the decision tree breadth-first until there are enough
    // independent subtrees; prefixes that settle early are tallied here.
    std::vector<Prefix> tasks{{0, 0, 0}};
    while (static_cast<int>(tasks.size()) < 8 * workers) {
      bool grew = false;
      std::vector<Prefix> next;
      next.reserve(tasks.size() * 2);
      for (const Prefix& p : tasks) {
        if (en.shortcut(p, counts)) continue;
        next.push_back({p.v + 1, p.covered | g.neighbors(p.v), p.chosen + 1});
        next.push_back({p.v + 1, p.covered, p.chosen});
        grew = true;
      }
      tasks = std::move(next);
      if (!grew) break;
    }

    std::vector<std::vector<unsigned long long>> partial(
        static_cast<std::size_t>(workers),
        std::vector<unsigned long long>(static_cast<std::size_t>(n) + 1, 0));
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= tasks.size()) break;
          en.descend(tasks[i], partial[static_cast<std::size_t>(w)]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial) {
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    }
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(counts.size());
  for (unsigned long long c : counts) {
    coeffs.emplace_back(static_cast<unsigned long>(c));
  }
  return Polynomial(std::move(coeffs));
}

std::optional<int> total_domination_number(const Graph& g) {
  int lo = brute_force_tdp(g).low_degree();
  if (lo < 0) return std::nullopt;
  return lo;
}

namespace {

// G . v: drop every edge joining two neighbors of v.
Graph neighborhood_cleared(const Graph& g, int v) {
  Graph out = g;
  std::uint64_t nb = g.neighbors(v);
  std::uint64_t rest = nb;
  while (rest) {
    int a = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t others = nb & out.neighbors(a);
    while (others) {
      int b = std::countr_zero(others);
      others &= others - 1;
      out.remove_edge(a, b);
    }
  }
  return out;
}

}  // namespace

bool vertex_decomposition_check(const Graph& g, int v) {
  check_vertex(g, v);
  Graph dot = neighborhood_cleared(g, v);
  Polynomial lhs = brute_force_tdp(g);
  Polynomial rhs = brute_force_tdp(g.without_vertex(v)) + brute_force_tdp(dot) -
                   brute_force_tdp(dot.without_vertex(v));
  return lhs == rhs;
}

Polynomial twin_edge_reduction(const Graph& g, EdgeRef e, int threads) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("twin edge reduction: edge not present");
  }
  if (g.closed_neighborhood(e.u) != g.closed_neighborhood(e.v)) {
    throw std::invalid_argument(
        "twin edge reduction: endpoints are not true twins");
  }
  Polynomial without = brute_force_tdp(g.without_edge(e.u, e.v), threads);
  Polynomial collapsed =
      brute_force_tdp(g.without_vertices(g.closed_neighborhood(e.u)), threads);
  return without + collapsed.shifted(2);
}

Polynomial dominating_vertex_reduction(const Graph& g, int v, int threads) {
  check_vertex(g, v);
  const int n = g.order();
  if (n < 2 || g.degree(v) != n - 1) {
    throw std::invalid_argument(
        "dominating vertex reduction: vertex is not adjacent to all others");
  }
  Polynomial rest = brute_force_tdp(g.without_vertex(v), threads);
  Polynomial star_term =
      Polynomial::x() * pow(Polynomial{1, 1}, static_cast<unsigned>(n - 1)) -
      Polynomial::x();
  return rest + star_term;
}

std::vector<std::pair<EdgeRef, ReductionRule>> irrelevant_edge_candidates(
    const Graph& g) {
  std::vector<std::pair<EdgeRef, ReductionRule>> out;
  const std::uint64_t supports = support_vertices(g);
  for (EdgeRef e : g.edges()) {
    const std::uint64_t bu = std::uint64_t{1} << e.u;
    const std::uint64_t bv = std::uint64_t{1} << e.v;
    if ((g.neighbors(e.u) & supports & ~bv) &&
        (g.neighbors(e.v) & supports & ~bu)) {
      out.push_back({e, ReductionRule::kSupportAdjacent});
      continue;
    }
    if (g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)) {
      const std::uint64_t nu = g.neighbors(e.u);
      for (int w = 0; w < g.order(); ++w) {
        if (w == e.u || w == e.v) continue;
        if ((g.neighbors(w) & ~nu) == 0) {
          out.push_back({e, ReductionRule::kTwinDominated});
          break;
        }
      }
    }
  }
  return out;
}

bool certify_irrelevant(const Graph& g, EdgeRef e, int threads) {
  return brute_force_tdp(g, threads) ==
         brute_force_tdp(g.without_edge(e.u, e.v), threads);
}

std::pair<Graph, ReductionTrace> simplify(const Graph& g, bool certify_steps) {
  Graph cur = g;
  ReductionTrace trace;
  for (;;) {
    auto candidates = irrelevant_edge_candidates(cur);
    if (candidates.empty()) break;
    auto [e, rule] = candidates.front();
    ReductionStep step{rule, e, -1, std::nullopt};
    if (certify_steps && cur.order() <= kBruteForceCapacity) {
      step.certified = certify_irrelevant(cur, e);
    }
    cur.remove_edge(e.u, e.v);
    trace.steps.push_back(step);
  }
  return {cur, trace};
}

namespace {

std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = g.full_mask();
  while (left) {
    std::uint64_t comp = 0;
    std::uint64_t frontier = left & (~left + 1);  // lowest unvisited vertex
    while (frontier) {
      comp |= frontier;
      std::uint64_t next = 0;
      std::uint64_t m = frontier;
      while (m) {
        next |= g.neighbors(std::countr_zero(m));
        m &= m - 1;
      }
      frontier = next & ~comp;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

std::optional<int> find_dominating_vertex(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

std::optional<EdgeRef> find_true_twin_edge(const Graph& g) {
  for (EdgeRef e : g.edges()) {
    if (g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)) return e;
  }
  return std::nullopt;
}

// labels maps current vertex ids to the ids of the caller-facing graph.
// Side branches pass sink == nullptr and contribute no steps.
Polynomial reduce_rec(Graph g, std::vector<int> labels, ReductionTrace* sink,
                      int threads) {
  if (g.order() == 0) return Polynomial::one();
  if (g.has_isolated_vertex()) return Polynomial::zero();

  for (;;) {
    auto candidates = irrelevant_edge_candidates(g);
    if (candidates.empty()) break;
    auto [e, rule] = candidates.front();
    if (sink) {
      sink->steps.push_back(
          {rule, {labels[e.u], labels[e.v]}, -1, std::nullopt});
    }
    g.remove_edge(e.u, e.v);
  }

  auto comps = component_masks(g);
  if (comps.size() > 1) {
    Polynomial product = Polynomial::one();
    for (std::uint64_t comp : comps) {
      std::vector<int> sub_labels;
      std::uint64_t m = comp;
      while (m) {
        sub_labels.push_back(labels[std::countr_zero(m)]);
        m &= m - 1;
      }
      product = product * reduce_rec(g.without_vertices(~comp),
                                     std::move(sub_labels), sink, threads);
      if (product.is_zero()) return product;
    }
    return product;
  }

  if (auto v = find_dominating_vertex(g)) {
    const int n = g.order();
    if (sink) {
      sink->steps.push_back(
          {ReductionRule::kDominatingVertex, {}, labels[*v], std::nullopt});
    }
    std::vector<int> sub_labels = labels;
    sub_labels.erase(sub_labels.begin() + *v);
    Polynomial rest =
        reduce_rec(g.without_vertex(*v), std::move(sub_labels), sink, threads);
    Polynomial star_term =
        Polynomial::x() * pow(Polynomial{1, 1}, static_cast<unsigned>(n - 1)) -
        Polynomial::x();
    return rest + star_term;
  }

  if (auto e = find_true_twin_edge(g)) {
    if (sink) {
      sink->steps.push_back({ReductionRule::kTwinEdgeSplit,
                             {labels[e->u], labels[e->v]},
                             -1,
                             std::nullopt});
    }
    const std::uint64_t killed = g.closed_neighborhood(e->u);
    std::vector<int> side_labels;
    for (int v = 0; v < g.order(); ++v) {
      if (!((killed >> v) & 1)) side_labels.push_back(labels[v]);
    }
    Polynomial side = reduce_rec(g.without_vertices(killed),
                                 std::move(side_labels), nullptr, threads);
    g.remove_edge(e->u, e->v);
    Polynomial main = reduce_rec(std::move(g), std::move(labels), sink, threads);
    return main + side.shifted(2);
  }

  return brute_force_tdp(g, threads);
}

}  // namespace

std::pair<Polynomial, ReductionTrace> reduce_tdp(const Graph& g, int threads) {
  ReductionTrace trace;
  std::vector<int> labels(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels[static_cast<std::size_t>(v)] = v;
  Polynomial p = reduce_rec(g, std::move(labels), &trace, threads);
  return {std::move(p), std::move(trace)};
}

}  // namespace tdp
