// Acceptance gate: every release criterion runs here, one line per
// criterion, nonzero exit if any fails. Budgets are enforced where the
// criterion states one.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tdp/analysis.hpp"
#include "tdp/closed_forms.hpp"
#include "tdp/engine.hpp"
#include "tdp/equivalence.hpp"
#include "tdp/families.hpp"
#include "tdp/graph.hpp"
#include "test_util.hpp"

using namespace tdp;
using tdp_test::catalog_lines;
using tdp_test::load_catalog;

namespace {

struct Failure {
  std::string message;
};

void check(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

int passed = 0;
int failed = 0;

void criterion(int id, const std::string& label, double budget_ms,
               const std::function<void()>& body) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  std::string failure;
  try {
    body();
  } catch (const Failure& f) {
    failure = f.message;
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(clock::now() - start)
                  .count();
  if (failure.empty() && budget_ms > 0 && ms > budget_ms) {
    failure = "exceeded budget of " + str(budget_ms) + " ms";
  }
  if (failure.empty()) {
    ++passed;
    std::printf("[PASS] %d: %s (%.0f ms)\n", id, label.c_str(), ms);
  } else {
    ++failed;
    std::printf("[FAIL] %d: %s (%.0f ms): %s\n", id, label.c_str(), ms,
                failure.c_str());
  }
  std::fflush(stdout);
}

void check_poly(const Polynomial& got, const Polynomial& want,
                const std::string& what) {
  check(got == want, what + ": got " + got.to_string() + ", want " +
                         want.to_string());
}

}  // namespace

int main() {
  criterion(1, "star and one-tail lollipop polynomials match enumeration, m = 3..8",
            1000, [] {
    for (int m = 3; m <= 8; ++m) {
      Polynomial formula = star_poly(m);
      check_poly(brute_force_tdp(make_star_k1(m)), formula,
                 "star m=" + str(m));
      check_poly(brute_force_tdp(make_lollipop(m, 1)), formula,
                 "lollipop m=" + str(m) + ",n=1");
    }
  });

  criterion(2, "lollipop closed form matches enumeration, m in 3..5, n in 1..6",
            30000, [] {
    for (int m = 3; m <= 5; ++m) {
      for (int n = 1; n <= 6; ++n) {
        check_poly(lollipop_poly(m, n), brute_force_tdp(make_lollipop(m, n)),
                   "lollipop m=" + str(m) + ",n=" + str(n));
      }
    }
  });

  criterion(3, "family closed forms match enumeration, corona bracket exponent separated",
            120000, [] {
    for (auto [n, k] : std::vector<std::pair<int, int>>{
             {1, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}}) {
      check_poly(firecracker_poly(n, k), brute_force_tdp(make_firecracker(n, k)),
                 "firecracker n=" + str(n) + ",k=" + str(k));
    }
    for (const std::vector<int>& ks :
         {std::vector<int>{3, 4}, {4, 3}, {3, 3, 3}, {6}}) {
      check_poly(generalized_firecracker_poly(ks),
                 brute_force_tdp(make_generalized_firecracker(ks)),
                 "generalized firecracker");
    }
    // The product form is not valid for chained two-vertex stars; the
    // formula must refuse them, and enumeration confirms the mismatch.
    check(brute_force_tdp(make_generalized_firecracker({2, 5})) !=
              star_poly(1) * star_poly(4),
          "the {2,5} chain must genuinely break the product form");
    bool refused = false;
    try {
      generalized_firecracker_poly({2, 5});
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    check(refused, "the formula must refuse chained two-vertex stars");
    for (int n = 1; n <= 4; ++n) {
      check_poly(book_poly(n), brute_force_tdp(make_book(n)),
                 "book n=" + str(n));
    }
    for (int n = 1; n <= 3; ++n) {
      check_poly(generalized_friendship4_poly(n),
                 brute_force_tdp(make_generalized_friendship(n, 4)),
                 "generalized friendship n=" + str(n) + ",q=4");
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{
             {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}}) {
      check_poly(helm_poly(n, m), brute_force_tdp(make_helm(n, m)),
                 "helm n=" + str(n) + ",m=" + str(m));
    }
    {
      std::vector<Graph> hosts = {make_complete(1), make_complete(2), Graph(2),
                                  make_path(3),     make_complete(3), Graph(3),
                                  make_cycle(4),    make_complete(4)};
      for (const Graph& host : hosts) {
        check_poly(p3_attach_poly(host.order()),
                   brute_force_tdp(p3_attach(host)),
                   "pendant-P2 host order " + str(host.order()));
      }
    }
    {
      auto corona_case = [](const Graph& g, int m) {
        int r = 0;
        for (int v = 0; v < g.order(); ++v)
          if (g.degree(v) == 0) ++r;
        check_poly(corona_kbar_poly(g.order(), r, m),
                   brute_force_tdp(corona(g, Graph(m))),
                   "corona n=" + str(g.order()) + ",r=" + str(r) +
                       ",m=" + str(m));
      };
      corona_case(make_complete(1), 2);
      corona_case(make_complete(2), 1);
      corona_case(make_path(3), 1);
      corona_case(make_path(3), 2);
      corona_case(make_cycle(3), 2);
      corona_case(disjoint_union(make_complete(2), Graph(1)), 2);
      corona_case(Graph(2), 3);

      // The bracket exponent must be m: with (x+1)^n brackets the n=1, r=1,
      // m=2 case yields x^2, while the graph is a star with x^3 + 2x^2.
      Polynomial wrong_bracket =
          (pow(Polynomial{1, 1}, 1) - Polynomial::one()).shifted(1);
      Polynomial truth = brute_force_tdp(corona(make_complete(1), Graph(2)));
      check(corona_kbar_poly(1, 1, 2) == truth,
            "corona bracket with exponent m must match enumeration");
      check(wrong_bracket != truth,
            "the (x+1)^n bracket variant must disagree with enumeration");
    }
    for (auto& [g, ms] : std::vector<std::pair<Graph, std::vector<int>>>{
             {make_path(3), {1, 1, 1}},
             {make_path(3), {3, 2, 1}},
             {make_complete(2), {2, 1}},
             {make_cycle(3), {4, 1, 1}},
             {disjoint_union(make_complete(2), Graph(1)), {1, 1, 2}}}) {
      check_poly(sunlike_poly(g, ms), brute_force_tdp(sunlike(g, ms)),
                 "sunlike");
    }
  });

  criterion(4, "decomposition identities hold at every site across orders 1..7",
            300000, [] {
    const std::vector<std::size_t> expected_counts = {1, 1, 2, 6, 21, 112, 853};
    long long sites = 0;
    for (int order = 1; order <= 7; ++order) {
      auto name = "connected_" + str(order) + ".g6";
      std::vector<Graph> graphs = load_catalog(name);
      check(graphs.size() == expected_counts[static_cast<std::size_t>(order - 1)],
            name + ": expected " +
                str(expected_counts[static_cast<std::size_t>(order - 1)]) +
                " graphs, found " + str(graphs.size()));
      for (const Graph& g : graphs) {
        Polynomial reference = brute_force_tdp(g);
        for (int v = 0; v < g.order(); ++v) {
          check(vertex_decomposition_check(g, v),
                "vertex decomposition failed in " + write_graph6(g) +
                    " at vertex " + str(v));
          ++sites;
          if (g.order() >= 2 && g.degree(v) == g.order() - 1) {
            check_poly(dominating_vertex_reduction(g, v), reference,
                       "dominating-vertex recurrence in " + write_graph6(g));
            ++sites;
          }
        }
        for (EdgeRef e : g.edges()) {
          if (g.closed_neighborhood(e.u) == g.closed_neighborhood(e.v)) {
            check_poly(twin_edge_reduction(g, e), reference,
                       "twin recurrence in " + write_graph6(g));
            ++sites;
          }
        }
        for (auto [e, rule] : irrelevant_edge_candidates(g)) {
          check(certify_irrelevant(g, e),
                "candidate certification failed in " + write_graph6(g) +
                    " at (" + str(e.u) + "," + str(e.v) + ")");
          check_poly(brute_force_tdp(g.without_edge(e.u, e.v)), reference,
                     "candidate deletion changed the polynomial in " +
                         write_graph6(g));
          ++sites;
        }
      }
    }
    check(sites > 5000, "identity sweep visited too few sites: " + str(sites));
  });

  criterion(5, "equivalence partitions and their determinism across threads",
            300000, [] {
    auto partition = [](const std::string& name, int threads = 1) {
      std::ifstream in(tdp_test::catalog_path(name));
      check(static_cast<bool>(in), "missing catalog " + name);
      return partition_catalog(in, name, threads);
    };
    auto class_size = [](const ClassReport& report, const Polynomial& key) {
      for (const auto& cls : report.classes) {
        if (cls.key == key) return static_cast<long long>(cls.members.size());
      }
      return 0LL;
    };

    struct Expectation {
      int order;
      long long classes;
      long long singletons;
    };
    for (const Expectation& e : {Expectation{4, 5, 4}, Expectation{5, 14, 9},
                                 Expectation{6, 55, 32}}) {
      ClassReport report = partition("connected_" + str(e.order) + ".g6");
      check(report.class_count() == e.classes,
            "order " + str(e.order) + ": expected " + str(e.classes) +
                " classes, got " + str(report.class_count()));
      check(report.singleton_count() == e.singletons,
            "order " + str(e.order) + ": expected " + str(e.singletons) +
                " singletons, got " + str(report.singleton_count()));
      long long stars = class_size(report, star_poly(e.order - 1));
      long long want_stars = e.order == 4 ? 2 : (e.order == 5 ? 4 : 11);
      check(stars == want_stars, "order " + str(e.order) + ": star class has " +
                                     str(stars) + " members, want " +
                                     str(want_stars));
    }

    for (int n = 2; n <= 7; ++n) {
      ClassReport report = partition("connected_" + str(n) + ".g6");
      check(class_size(report, brute_force_tdp(make_complete(n))) == 1,
            "K_" + str(n) + " must sit in a singleton class");
    }
    {
      ClassReport report = partition("connected_7.g6");
      Polynomial f3 = brute_force_tdp(make_friendship(3));
      check_poly(f3, Polynomial{0, 0, 6, 15, 20, 15, 7, 1},
                 "friendship graph with three triangles");
      check(class_size(report, f3) == 1,
            "the three-triangle friendship graph must be a singleton");
    }

    auto jsonl = [&partition](int threads) {
      std::ostringstream out;
      write_jsonl(partition("connected_6.g6", threads), out);
      return out.str();
    };
    std::string a = jsonl(1);
    std::string b = jsonl(4);
    std::string c = jsonl(4);
    check(!a.empty() && a == b && b == c,
          "JSONL report differs across runs or thread counts");
  });

  criterion(6, "every nonzero polynomial through order 6 is unimodal", 60000,
            [] {
    long long checked = 0;
    for (int order = 1; order <= 6; ++order) {
      for (const Graph& g : load_catalog("all_" + str(order) + ".g6")) {
        Polynomial p = brute_force_tdp(g);
        if (p.is_zero()) continue;
        SequenceVerdict v = analyze_sequence(p);
        check(v.unimodal, "non-unimodal polynomial " + p.to_string() +
                              " for " + write_graph6(g));
        ++checked;
      }
    }
    check(checked > 150, "unimodality sweep saw too few graphs");
  });

  criterion(7, "real-rootedness verdicts and 200 log-concave product pairs",
            60000, [] {
    check(is_all_real_rooted(helm_poly(3, 1)), "helm(3,1) must be real-rooted");
    check(is_all_real_rooted(helm_poly(4, 2)), "helm(4,2) must be real-rooted");
    for (int n = 1; n <= 4; ++n) {
      check(is_all_real_rooted(p3_attach_poly(n)),
            "pendant-P2 polynomial must be real-rooted, n=" + str(n));
    }
    check(!is_all_real_rooted(star_poly(3)),
          "star_poly(3) must not be real-rooted");

    std::mt19937 rng(20260822);
    std::uniform_int_distribution<long> a(1, 9);
    std::uniform_int_distribution<int> nfac(1, 7);
    std::uniform_int_distribution<int> shift(0, 4);
    auto positive_rooted = [&] {
      Polynomial p = Polynomial::one();
      for (int i = nfac(rng); i-- > 0;) p *= Polynomial{a(rng), 1};
      return p.shifted(shift(rng));
    };
    for (int pair = 0; pair < 200; ++pair) {
      Polynomial p = positive_rooted();
      Polynomial q = positive_rooted();
      SequenceVerdict vp = analyze_sequence(p);
      SequenceVerdict vq = analyze_sequence(q);
      check(vp.log_concave && vq.log_concave,
            "generated factor is not log-concave");
      SequenceVerdict v = analyze_sequence(p * q);
      check(v.log_concave, "product lost log-concavity at pair " + str(pair));
      check(v.unimodal, "product lost unimodality at pair " + str(pair));
    }
  });

  criterion(8, "order-22 enumeration finishes in budget, bit-identical across threads",
            60000, [] {
    std::mt19937 rng(987654321);
    Graph g = tdp_test::random_connected_graph(rng, 22, 0.18);
    check(!g.has_isolated_vertex(), "generator must not leave isolated vertices");
    Polynomial sequential = brute_force_tdp(g, 1);
    Polynomial parallel = brute_force_tdp(g, 4);
    check(sequential == parallel,
          "parallel result differs from sequential on order 22");
    check(sequential.degree() == 22, "expected a degree-22 polynomial");
    check(sequential.coeff(22) == 1, "leading coefficient must be 1");
  });

  std::printf("acceptance: %d/%d criteria passed\n", passed, passed + failed);
  return failed == 0 ? 0 : 1;
}
