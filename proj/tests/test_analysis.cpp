#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tdp/analysis.hpp"
#include "tdp/polynomial.hpp"

using namespace tdp;

namespace {

Polynomial linear_product(const std::vector<long>& roots) {
  Polynomial p = Polynomial::one();
  for (long r : roots) p *= Polynomial{-r, 1};  // (x - r)
  return p;
}

}  // namespace

TEST_CASE("sequence verdicts on known shapes") {
  SequenceVerdict v = analyze_sequence(Polynomial{0, 0, 3, 3, 1});
  CHECK(v.unimodal);
  CHECK(v.mode == 2);
  CHECK(v.unimodal_full);
  CHECK(v.log_concave);
  CHECK_FALSE(v.symmetric);
  CHECK_FALSE(v.first_violation.has_value());

  v = analyze_sequence(Polynomial{0, 0, 0, 1, 4, 6, 4, 1});
  CHECK(v.unimodal);
  CHECK(v.mode == 5);
  CHECK(v.log_concave);
  CHECK(v.symmetric);

  v = analyze_sequence(Polynomial{1, 2, 1});
  CHECK(v.symmetric);
  CHECK(v.mode == 1);

  v = analyze_sequence(Polynomial{0, 0, 4, 4, 1});
  CHECK(v.unimodal);
  CHECK(v.mode == 2);  // plateau resolves to the first peak
  CHECK_FALSE(v.symmetric);

  v = analyze_sequence(Polynomial{7});
  CHECK(v.unimodal);
  CHECK(v.mode == 0);
  CHECK(v.log_concave);
  CHECK(v.symmetric);
}

TEST_CASE("sequence verdicts flag violations") {
  SequenceVerdict v = analyze_sequence(Polynomial{1, 0, 1});
  CHECK_FALSE(v.unimodal);
  CHECK_FALSE(v.mode.has_value());
  CHECK_FALSE(v.unimodal_full);
  CHECK_FALSE(v.log_concave);
  CHECK(v.first_violation == 2);  // the rise after the fall

  v = analyze_sequence(Polynomial{0, 2, 1, 2});
  CHECK_FALSE(v.unimodal);
  CHECK(v.first_violation == 3);

  // Internal zero block: log-concavity holds vacuously, unimodality fails.
  v = analyze_sequence(Polynomial{1, 0, 0, 1});
  CHECK(v.log_concave);
  CHECK_FALSE(v.unimodal);
}

TEST_CASE("zero polynomial convention") {
  SequenceVerdict v = analyze_sequence(Polynomial::zero());
  CHECK(v.unimodal);
  CHECK(v.mode == 0);
  CHECK(v.unimodal_full);
  CHECK(v.log_concave);
  CHECK(v.symmetric);
  CHECK_FALSE(v.first_violation.has_value());
}

TEST_CASE("window skips the leading zero block") {
  // Full-sequence unimodality can fail while the window is fine only when
  // zeros sit above the low degree; leading zeros never count.
  SequenceVerdict v = analyze_sequence(Polynomial{0, 0, 5, 1});
  CHECK(v.unimodal);
  CHECK(v.unimodal_full);
  CHECK(v.mode == 2);
  CHECK(analyze_sequence(Polynomial{0, 0, 1, 1}).symmetric);
}

TEST_CASE("distinct real root counts") {
  CHECK(count_distinct_real_roots(Polynomial{-1, 0, 1}) == 2);
  CHECK(count_distinct_real_roots(Polynomial{3, 3, 1}) == 0);
  CHECK(count_distinct_real_roots(Polynomial{0, 1}) == 1);
  CHECK(count_distinct_real_roots(Polynomial{5}) == 0);
  CHECK(count_distinct_real_roots(Polynomial{1, 0, 1}) == 0);
  CHECK(count_distinct_real_roots(linear_product({1, 2, 3})) == 3);
  CHECK(count_distinct_real_roots(linear_product({1, 2, 3, 4, 5, 6})) == 6);
  CHECK(count_distinct_real_roots(linear_product({2, 2, 2, 2, 2})) == 1);
  CHECK(count_distinct_real_roots(linear_product({3}) * Polynomial{1, 0, 1}) ==
        1);

  Polynomial helm_shape = pow(Polynomial::x(), 3) * pow(Polynomial{1, 1}, 4);
  CHECK(count_distinct_real_roots(helm_shape) == 2);

  CHECK_THROWS_AS(count_distinct_real_roots(Polynomial::zero()),
                  std::invalid_argument);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Polynomial{4, 8, 4}) == Polynomial{1, 1});
  Polynomial p = pow(Polynomial::x(), 2) * pow(Polynomial{1, 1}, 3);
  CHECK(squarefree_part(p) == Polynomial{0, 1, 1});
  CHECK(squarefree_part(Polynomial{-3, 1}) == Polynomial{-3, 1});
  CHECK(squarefree_part(Polynomial{7}) == Polynomial{1});
  CHECK_THROWS_AS(squarefree_part(Polynomial::zero()), std::invalid_argument);

  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> root(-5, 5);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial q = Polynomial::one();
    for (int i = 0, nroots = 1 + trial % 4; i < nroots; ++i) {
      long r = root(rng);
      for (int e = mult(rng); e-- > 0;) q *= Polynomial{-r, 1};
    }
    CHECK(count_distinct_real_roots(q) ==
          count_distinct_real_roots(squarefree_part(q)));
  }
}

TEST_CASE("real-rootedness") {
  CHECK(is_all_real_rooted(Polynomial::zero()));
  CHECK(is_all_real_rooted(Polynomial{5}));
  CHECK(is_all_real_rooted(Polynomial{5, 1}));
  CHECK(is_all_real_rooted(linear_product({0, -1, -1, -1, 2})));
  CHECK_FALSE(is_all_real_rooted(Polynomial{1, 0, 1}));
  CHECK_FALSE(is_all_real_rooted(Polynomial{0, 0, 3, 3, 1}));
  CHECK(is_all_real_rooted(pow(Polynomial::x(), 3) * pow(Polynomial{1, 1}, 4)));
  CHECK(is_all_real_rooted(Polynomial{0, 0, 4, 4, 1}));  // x^2 (x+2)^2
}

TEST_CASE("real-rooted implies log-concave implies unimodal") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long> a(1, 9);
  std::uniform_int_distribution<int> nfac(1, 8);
  std::uniform_int_distribution<int> shift(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = Polynomial::one();
    for (int i = nfac(rng); i-- > 0;) p *= Polynomial{a(rng), 1};  // (x + a)
    p = p.shifted(shift(rng));
    CHECK(is_all_real_rooted(p));
    SequenceVerdict v = analyze_sequence(p);
    CHECK(v.log_concave);
    CHECK(v.unimodal);
  }
}
