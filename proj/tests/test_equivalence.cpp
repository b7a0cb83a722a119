#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "tdp/closed_forms.hpp"
#include "tdp/engine.hpp"
#include "tdp/equivalence.hpp"
#include "tdp/errors.hpp"
#include "tdp/families.hpp"
#include "tdp/graph.hpp"
#include "test_util.hpp"

using namespace tdp;
using tdp_test::catalog_path;

namespace {

std::ifstream open_catalog(const std::string& name) {
  std::ifstream in(catalog_path(name));
  REQUIRE(in);
  return in;
}

const EquivalenceClass& class_with_key(const ClassReport& report,
                                       const Polynomial& key) {
  for (const auto& cls : report.classes) {
    if (cls.key == key) return cls;
  }
  REQUIRE(false);
  return report.classes.front();
}

}  // namespace

TEST_CASE("fingerprints are exact polynomials") {
  CHECK(fingerprint(make_star_k1(3)) == Polynomial{0, 0, 3, 3, 1});
  CHECK(fingerprint(make_lollipop(3, 1)) == Polynomial{0, 0, 3, 3, 1});
  CHECK(fingerprint(make_star_k1(3)) == star_poly(3));
  CHECK(fingerprint(make_cycle(4)) != fingerprint(make_complete(4)));
  CHECK(fingerprint(Graph(1)) == Polynomial::zero());
  CHECK(fingerprint(make_helm(3, 1), 4) == fingerprint(make_helm(3, 1), 1));
}

TEST_CASE("order-4 connected partition") {
  auto in = open_catalog("connected_4.g6");
  ClassReport report = partition_catalog(in, "connected_4");
  CHECK(report.order == 4);
  CHECK(report.total == 6);
  CHECK(report.class_count() == 5);
  CHECK(report.singleton_count() == 4);
  CHECK(report.scope == "connected_4");
  CHECK(report.warnings.empty());

  const auto& star = class_with_key(report, star_poly(3));
  CHECK(star.members == std::vector<std::string>{"CF", "CN"});
  CHECK(star.gamma_t == 2);
  for (const auto& member : star.members) {
    CHECK(brute_force_tdp(parse_graph6(member)) == star_poly(3));
  }

  CHECK(class_with_key(report, Polynomial{0, 0, 1, 2, 1}).members.size() == 1);
  CHECK(class_with_key(report, Polynomial{0, 0, 6, 4, 1}).members ==
        std::vector<std::string>{"C~"});

  // Classes are sorted by ascending coefficient vector.
  for (std::size_t i = 1; i < report.classes.size(); ++i) {
    CHECK(report.classes[i - 1].key.coeffs() < report.classes[i].key.coeffs());
  }
}

TEST_CASE("order-4 full partition includes the zero class") {
  auto in = open_catalog("all_4.g6");
  ClassReport report = partition_catalog(in, "all_4");
  CHECK(report.total == 11);
  CHECK(report.class_count() == 7);
  CHECK(report.singleton_count() == 5);

  const auto& zero = report.classes.front();  // empty key sorts first
  CHECK(zero.key == Polynomial::zero());
  CHECK_FALSE(zero.gamma_t.has_value());
  CHECK(zero.members.size() == 4);
  for (const auto& member : zero.members) {
    CHECK(parse_graph6(member).has_isolated_vertex());
  }

  const auto& pair_cover = class_with_key(report, Polynomial{0, 0, 0, 0, 1});
  CHECK(pair_cover.members.size() == 1);
  CHECK(pair_cover.gamma_t == 4);
}

TEST_CASE("order-5 partition counts") {
  auto in = open_catalog("connected_5.g6");
  ClassReport report = partition_catalog(in, "connected_5");
  CHECK(report.total == 21);
  CHECK(report.class_count() == 14);
  CHECK(report.singleton_count() == 9);

  std::vector<std::size_t> multi_sizes;
  for (const auto& cls : report.classes) {
    if (cls.members.size() > 1) multi_sizes.push_back(cls.members.size());
  }
  std::sort(multi_sizes.begin(), multi_sizes.end(), std::greater<>());
  CHECK(multi_sizes == std::vector<std::size_t>{4, 2, 2, 2, 2});
  CHECK(class_with_key(report, star_poly(4)).members.size() == 4);
}

TEST_CASE("partition is identical across thread counts") {
  std::string one, four;
  {
    auto in = open_catalog("connected_5.g6");
    std::ostringstream out;
    write_jsonl(partition_catalog(in, "connected_5", 1), out);
    one = out.str();
  }
  {
    auto in = open_catalog("connected_5.g6");
    std::ostringstream out;
    write_jsonl(partition_catalog(in, "connected_5", 4), out);
    four = out.str();
  }
  CHECK(one == four);
  CHECK_FALSE(one.empty());
}

TEST_CASE("duplicates, blank lines, and mixed orders") {
  std::istringstream dup("C~\n\nC~\n");
  ClassReport report = partition_catalog(dup, "dup");
  CHECK(report.total == 2);
  CHECK(report.class_count() == 1);
  CHECK(report.classes[0].members == std::vector<std::string>{"C~", "C~"});
  CHECK(report.warnings.size() == 1);

  std::istringstream mixed("C~\nA_\n");
  CHECK(partition_catalog(mixed, "mixed").order == -1);

  std::istringstream empty("");
  ClassReport none = partition_catalog(empty, "empty");
  CHECK(none.total == 0);
  CHECK(none.order == -1);
  CHECK(none.class_count() == 0);

  std::istringstream bad("C~\nC!\n");
  CHECK_THROWS_AS(partition_catalog(bad, "bad"), ParseError);
}

TEST_CASE("jsonl stream shape") {
  auto in = open_catalog("connected_4.g6");
  ClassReport report = partition_catalog(in, "connected_4");
  std::ostringstream out;
  write_jsonl(report, out);

  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  nlohmann::json header = nlohmann::json::parse(line);
  CHECK(header["order"] == 4);
  CHECK(header["total"] == 6);
  CHECK(header["classes"] == 5);
  CHECK(header["singletons"] == 4);
  CHECK(header["scope"] == "connected_4");

  int class_lines = 0;
  bool saw_star = false;
  while (std::getline(lines, line)) {
    nlohmann::json cls = nlohmann::json::parse(line);
    ++class_lines;
    CHECK(cls["size"] == cls["members"].size());
    if (cls["key"] == nlohmann::json::array({0, 0, 3, 3, 1})) {
      saw_star = true;
      CHECK(cls["gamma_t"] == 2);
      CHECK(cls["members"] == nlohmann::json::array({"CF", "CN"}));
    }
  }
  CHECK(class_lines == 5);
  CHECK(saw_star);
}

TEST_CASE("uniqueness within a catalog") {
  {
    auto in = open_catalog("connected_5.g6");
    UniquenessResult res = is_dt_unique(make_complete(5), in);
    CHECK(res.unique);
    CHECK(res.in_catalog);
    CHECK(res.witnesses.empty());
  }
  {
    auto in = open_catalog("connected_5.g6");
    UniquenessResult res = is_dt_unique(make_star_k1(4), in);
    CHECK_FALSE(res.unique);
    CHECK(res.witnesses.size() == (res.in_catalog ? 3u : 4u));
    for (const auto& w : res.witnesses) {
      CHECK(brute_force_tdp(parse_graph6(w)) == star_poly(4));
      CHECK(parse_graph6(w) != make_star_k1(4));
    }
  }
  {
    // A graph absent from the catalog still gets a verdict.
    auto in = open_catalog("connected_4.g6");
    UniquenessResult res = is_dt_unique(make_complete(5), in);
    CHECK_FALSE(res.in_catalog);
    CHECK(res.unique);
  }
}

TEST_CASE("star class witnesses") {
  auto w3 = star_class_witnesses(3);
  CHECK(w3.size() == 2);
  auto w5 = star_class_witnesses(5);
  CHECK(w5.size() == 3);
  for (int n : {3, 4, 5, 6}) {
    auto ws = star_class_witnesses(n);
    for (const auto& g : ws) {
      CHECK(fingerprint(g) == star_poly(n));
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        CHECK_FALSE(ws[i] == ws[j]);
      }
    }
  }
  CHECK_THROWS_AS(star_class_witnesses(2), std::invalid_argument);
}

TEST_CASE("corona class witnesses") {
  auto [a, b] = corona_class_witnesses(make_path(3), 2, {3, 2, 1});
  CHECK_FALSE(a == b);
  CHECK(fingerprint(a) == fingerprint(b));
  CHECK(fingerprint(a) == corona_kbar_poly(3, 0, 2));

  auto [c, d] = corona_class_witnesses(make_cycle(3), 2, {4, 1, 1});
  CHECK(fingerprint(c) == fingerprint(d));

  CHECK_THROWS_AS(corona_class_witnesses(make_path(3), 2, {3, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(corona_class_witnesses(Graph(2), 1, {1, 1}),
                  std::invalid_argument);
}
