#include "tdp/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "tdp/engine.hpp"
#include "tdp/families.hpp"
#include "tdp/jsonio.hpp"

namespace tdp {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// fn(i) for i in [0, count), work-stealing over an atomic cursor. Results
// must land in pre-sized slots so the outcome is order-independent.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& fn) {
  const int workers = static_cast<int>(
      std::min(static_cast<std::size_t>(resolve_threads(threads)), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor.store(count);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct CatalogLines {
  std::vector<std::string> lines;
  std::vector<std::size_t> linenos;
};

CatalogLines read_lines(std::istream& in) {
  CatalogLines out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.lines.push_back(line);
    out.linenos.push_back(lineno);
  }
  return out;
}

Graph parse_catalog_line(const std::string& line, std::size_t lineno) {
  try {
    return parse_graph6(line);
  } catch (const ParseError& e) {
    throw ParseError("catalog line " + std::to_string(lineno) + ": " +
                         e.what(),
                     lineno);
  }
}

}  // namespace

Fingerprint fingerprint(const Graph& g, int threads) {
  return brute_force_tdp(g, threads);
}

long long ClassReport::singleton_count() const {
  long long n = 0;
  for (const auto& c : classes) {
    if (c.members.size() == 1) ++n;
  }
  return n;
}

ClassReport partition_catalog(std::istream& in, const std::string& scope,
                              int threads) {
  ClassReport report;
  report.scope = scope;

  CatalogLines cat = read_lines(in);
  const std::size_t count = cat.lines.size();
  report.total = static_cast<long long>(count);

  std::vector<Graph> graphs(count);
  parallel_for(count, threads, [&](std::size_t i) {
    graphs[i] = parse_catalog_line(cat.lines[i], cat.linenos[i]);
  });

  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) {
      report.order = graphs[i].order();
    } else if (graphs[i].order() != report.order) {
      report.order = -1;
    }
  }

  {
    std::map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < count; ++i) {
      auto [it, fresh] = first_seen.try_emplace(cat.lines[i], i);
      if (!fresh) {
        report.warnings.push_back(
            "duplicate graph6 line " + std::to_string(cat.linenos[i]) + " ('" +
            cat.lines[i] + "' first seen on line " +
            std::to_string(cat.linenos[it->second]) + ")");
      }
    }
  }

  std::vector<Fingerprint> prints(count);
  parallel_for(count, threads,
               [&](std::size_t i) { prints[i] = fingerprint(graphs[i]); });

  std::map<std::vector<mpz_class>, std::size_t> index_of;
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, fresh] =
        index_of.try_emplace(prints[i].coeffs(), report.classes.size());
    if (fresh) {
      EquivalenceClass cls;
      cls.key = prints[i];
      int lo = prints[i].low_degree();
      if (lo >= 0) cls.gamma_t = lo;
      report.classes.push_back(std::move(cls));
    }
    report.classes[it->second].members.push_back(cat.lines[i]);
  }

  // Map order is ascending by coefficient vector; rebuild the class list in
  // that order.
  std::vector<EquivalenceClass> sorted;
  sorted.reserve(report.classes.size());
  for (const auto& [key, idx] : index_of) {
    sorted.push_back(std::move(report.classes[idx]));
  }
  report.classes = std::move(sorted);
  return report;
}

void write_jsonl(const ClassReport& report, std::ostream& out) {
  Json header;
  header["order"] = report.order;
  header["total"] = report.total;
  header["classes"] = report.class_count();
  header["singletons"] = report.singleton_count();
  header["scope"] = report.scope;
  out << header.dump() << '\n';
  for (const auto& cls : report.classes) {
    Json line;
    line["key"] = coeffs_json(cls.key);
    if (cls.gamma_t) {
      line["gamma_t"] = *cls.gamma_t;
    } else {
      line["gamma_t"] = nullptr;
    }
    line["size"] = cls.members.size();
    line["members"] = cls.members;
    out << line.dump() << '\n';
  }
}

UniquenessResult is_dt_unique(const Graph& g, std::istream& catalog,
                              int threads) {
  UniquenessResult result;
  const Fingerprint target = fingerprint(g, threads);

  CatalogLines cat = read_lines(catalog);
  const std::size_t count = cat.lines.size();
  std::vector<Graph> graphs(count);
  parallel_for(count, threads, [&](std::size_t i) {
    graphs[i] = parse_catalog_line(cat.lines[i], cat.linenos[i]);
  });

  std::vector<char> matches(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    matches[i] = fingerprint(graphs[i]) == target ? 1 : 0;
  });

  for (std::size_t i = 0; i < count; ++i) {
    if (graphs[i] == g) {
      result.in_catalog = true;
    } else if (matches[i]) {
      result.witnesses.push_back(cat.lines[i]);
    }
  }
  result.unique = result.witnesses.empty();
  return result;
}

std::vector<Graph> star_class_witnesses(int n) {
  if (n < 3) {
    throw std::invalid_argument("star_class_witnesses: n must be >= 3");
  }
  std::vector<Graph> out;
  out.push_back(make_star_k1(n));
  Graph lolli = make_lollipop(n, 1);
  out.push_back(lolli);
  // First clique edge avoiding the support vertex 0; its deletion is the
  // first simplify step.
  Graph trimmed = lolli.without_edge(1, 2);
  if (trimmed != out.front()) out.push_back(std::move(trimmed));
  return out;
}

std::pair<Graph, Graph> corona_class_witnesses(const Graph& g, int m,
                                               const std::vector<int>& ms) {
  if (g.order() < 1 || g.has_isolated_vertex()) {
    throw std::invalid_argument(
        "corona_class_witnesses: base graph needs order >= 1 and no isolated "
        "vertex");
  }
  if (m < 1) {
    throw std::invalid_argument("corona_class_witnesses: m must be >= 1");
  }
  long long total = std::accumulate(ms.begin(), ms.end(), 0LL);
  if (total != static_cast<long long>(m) * g.order()) {
    throw std::invalid_argument(
        "corona_class_witnesses: pendant counts must sum to m * order");
  }
  return {corona(g, Graph(m)), sunlike(g, ms)};
}

}  // namespace tdp
