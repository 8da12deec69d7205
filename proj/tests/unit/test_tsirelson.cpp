#include <doctest.h>

#include <cmath>
#include <future>
#include <random>
#include <vector>

#include "tsilab/errors.hpp"
#include "tsilab/norms.hpp"
#include "test_support.hpp"

using namespace tsilab;

TEST_CASE("base norms") {
  const auto x = SparseVector::ones(3, 5);
  CHECK(base_norm(x, SupNorm{}).rational() == Rational(1));

  const auto y = SparseVector{{1, Rational(2)}, {2, Rational(-1, 2)}};
  CHECK(base_norm(y, L1Norm{}).rational() == Rational(5, 2));

  const auto z = SparseVector::ones(1, 2);
  const double l2 = base_norm(z, LpNorm{Rational(2)}).approx();
  CHECK(std::fabs(l2 - std::sqrt(2.0)) < 1e-12);
  CHECK_THROWS_AS(base_norm(x, TsirelsonLimitNorm{}), Error);
}

TEST_CASE("singleton basis vectors have norm one at every level") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(tsirelson_iterate(SparseVector::unit(1), n) == Rational(1));
    CHECK(tsirelson_iterate(SparseVector::unit(7), n) == Rational(1));
  }
  CHECK(tsirelson_limit(SparseVector::unit(1)) == Rational(1));
}

TEST_CASE("frozen small values from the subset-family oracle") {
  const auto x345 = SparseVector::ones(3, 5);
  CHECK(tsirelson_iterate(x345, 1) == Rational(3, 2));
  CHECK(brute_force_iterate(x345, 1) == Rational(3, 2));
  CHECK(tsirelson_limit(x345) == Rational(3, 2));

  CHECK(tsirelson_limit(SparseVector::ones(1, 2)) == Rational(1));
  CHECK(brute_force_iterate(SparseVector::ones(2, 3), 1) == Rational(1));
  CHECK(tsirelson_limit(SparseVector{}) == Rational(0));
}

TEST_CASE("level zero is the sup norm") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = testing::random_vector(rng, 10, 7);
    CHECK(tsirelson_iterate(x, 0) == x.sup_norm());
    if (x.support_size() <= 6) CHECK(brute_force_iterate(x, 0) == x.sup_norm());
  }
}

TEST_CASE("monotone sandwich ||x||_n <= ||x||_n+1 <= ||x||_l1") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = testing::random_vector(rng, 10, 7);
    const Rational l1 = x.l1_norm();
    Rational prev = tsirelson_iterate(x, 0);
    for (int n = 1; n <= 6; ++n) {
      const Rational current = tsirelson_iterate(x, n);
      CHECK(prev <= current);
      CHECK(current <= l1);
      prev = current;
    }
  }
}

TEST_CASE("iterates stabilize at the support size") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::nonzero_random_vector(rng, 10, 7);
    const Rational limit = tsirelson_limit(x);
    CHECK(tsirelson_iterate(x, x.support_size()) == limit);
    CHECK(tsirelson_iterate(x, x.support_size() + 2) == limit);
  }
}

TEST_CASE("interval DP equals the literal subset recursion") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = testing::random_vector(rng, 6, 5);
    for (int n = 0; n <= 3; ++n) {
      CHECK(tsirelson_iterate(x, n) == brute_force_iterate(x, n));
    }
  }
  // spread supports exercise the k <= min E_1 cap away from {1..6}
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::random_vector(rng, 20, 5);
    for (int n = 0; n <= 3; ++n) {
      CHECK(tsirelson_iterate(x, n) == brute_force_iterate(x, n));
    }
    if (!x.zero() && x.support_size() <= 4) {
      CHECK(tsirelson_limit(x) == brute_force_limit(x));
    }
  }
}

TEST_CASE("norm axioms hold exactly for the iterates and the limit") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::random_vector(rng, 9, 6);
    const auto y = testing::random_vector(rng, 9, 6);
    int p = num(rng);
    if (p == 0) p = 2;
    const Rational alpha(p, den(rng));
    for (const NormSpec spec :
         {NormSpec(TsirelsonIterateNorm{1}), NormSpec(TsirelsonLimitNorm{})}) {
      const Rational nx = eval_exact(x, spec);
      CHECK(eval_exact(x.scaled(alpha), spec) == abs(alpha) * nx);
      CHECK(eval_exact(x.plus(y), spec) <= nx + eval_exact(y, spec));
      if (!x.zero()) CHECK(nx > 0);
    }
  }
  CHECK(eval_exact(SparseVector{}, TsirelsonLimitNorm{}) == Rational(0));
}

TEST_CASE("one-unconditionality: sign flips preserve, zeroing never increases") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = testing::nonzero_random_vector(rng, 9, 6);
    SparseVector flipped = x;
    for (const auto& [index, value] : x.terms()) {
      if (coin(rng)) flipped = flipped.with_sign_flipped(index);
    }
    const int victim = x.terms()[0].first;
    const SparseVector zeroed = x.without_index(victim);
    for (const NormSpec spec :
         {NormSpec(SupNorm{}), NormSpec(L1Norm{}),
          NormSpec(TsirelsonIterateNorm{2}), NormSpec(TsirelsonLimitNorm{})}) {
      CHECK(eval_exact(flipped, spec) == eval_exact(x, spec));
      CHECK(eval_exact(zeroed, spec) <= eval_exact(x, spec));
    }
  }
}

TEST_CASE("pointwise limit report") {
  const auto x = SparseVector::ones(3, 5);
  std::vector<NormSpec> iterates;
  for (int n = 0; n <= 6; ++n) iterates.push_back(TsirelsonIterateNorm{n});
  const auto report = pointwise_limit(x, iterates);
  REQUIRE(report.eventually_constant);
  CHECK(report.stabilized_value->rational() == Rational(3, 2));
  CHECK(report.stabilized_from <= x.support_size());

  const auto constant = pointwise_limit(
      x, {NormSpec(SupNorm{}), NormSpec(SupNorm{}), NormSpec(SupNorm{})});
  CHECK(constant.eventually_constant);
  CHECK(constant.stabilized_from == 0);

  CHECK_THROWS_AS(pointwise_limit(x, {}), Error);
}

TEST_CASE("pointwise limit ends at the limit norm once past the support size") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = testing::nonzero_random_vector(rng, 8, 6);
    std::vector<NormSpec> iterates;
    for (int n = 0; n <= x.support_size() + 1; ++n)
      iterates.push_back(TsirelsonIterateNorm{n});
    const auto report = pointwise_limit(x, iterates);
    REQUIRE(report.eventually_constant);
    CHECK(report.stabilized_value->rational() == tsirelson_limit(x));
  }
}

TEST_CASE("oracle bound and argument validation") {
  CHECK_THROWS_AS(brute_force_iterate(SparseVector::ones(1, 9), 1), Error);
  CHECK_THROWS_AS(tsirelson_iterate(SparseVector::unit(1), -1), Error);
  CHECK(brute_force_iterate(SparseVector::ones(1, 9), 1, 12) >= Rational(1));
}

TEST_CASE("concurrent evaluation matches serial results") {
  std::mt19937 rng(151);
  std::vector<SparseVector> inputs;
  for (int t = 0; t < 24; ++t)
    inputs.push_back(testing::random_vector(rng, 9, 6));
  std::vector<Rational> serial;
  for (const auto& x : inputs) serial.push_back(tsirelson_limit(x));

  std::vector<std::future<Rational>> futures;
  for (const auto& x : inputs) {
    futures.push_back(
        std::async(std::launch::async, [&x] { return tsirelson_limit(x); }));
  }
  for (std::size_t t = 0; t < inputs.size(); ++t)
    CHECK(futures[t].get() == serial[t]);
}
