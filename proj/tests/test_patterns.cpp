#include "doctest.h"
#include "support.hpp"

#include "distlat/patterns.hpp"

using namespace distlat;
using namespace testing_support;

namespace {

bool vanishes_above_zero(const PatternCohomologyResult& r) {
  for (const auto& [q, h] : r.by_degree)
    if (q > 0 && !h.is_trivial()) return false;
  return true;
}

}  // namespace

TEST_CASE("flavor names") {
  CHECK(std::string(to_string(PatternFlavor::quotient)) == "quotient");
  CHECK(parse_flavor("ideal") == PatternFlavor::ideal);
  CHECK_FALSE(parse_flavor("sheaf").has_value());
}

TEST_CASE("constant pattern is A in degree 0") {
  std::vector<GroupPtr> ambients{AbelianGroup::free(1), AbelianGroup::free(2),
                                 AbelianGroup::ambient(0, iv({2, 6})),
                                 AbelianGroup::ambient(1, iv({3}))};
  for (const auto& a : ambients)
    for (std::size_t n = 1; n <= 5; ++n) {
      PatternCohomologyResult r = pattern_cohomology(PatternAssignment::constant(a, n));
      CHECK(r.by_degree.at(0) == a->decomposition());
      CHECK(vanishes_above_zero(r));
      CHECK(r.by_degree.size() == n);
    }
}

TEST_CASE("ideal flavor") {
  auto z6 = AbelianGroup::ambient(0, iv({6}));
  PatternCohomologyResult r =
      pattern_cohomology(PatternAssignment::ideal({sub(z6, {iv({2})}), sub(z6, {iv({3})})}));
  CHECK(r.by_degree.at(0).is_trivial());
  CHECK(vanishes_above_zero(r));

  auto z = AbelianGroup::free(1);
  PatternCohomologyResult s = pattern_cohomology(
      PatternAssignment::ideal({multiples(z, 4), multiples(z, 6), multiples(z, 9)}));
  CHECK(s.by_degree.at(0).factors() == iv({0}));
  CHECK(vanishes_above_zero(s));

  auto k = AbelianGroup::ambient(0, iv({2, 2}));
  PatternCohomologyResult m3 = pattern_cohomology(
      PatternAssignment::ideal({sub(k, {iv({1, 0})}), sub(k, {iv({0, 1})}), sub(k, {iv({1, 1})})}));
  CHECK(m3.by_degree.at(0).is_trivial());
  CHECK(m3.by_degree.at(1).factors() == iv({2}));
}

TEST_CASE("quotient flavor over finite and infinite groups") {
  auto z = AbelianGroup::free(1);
  PatternCohomologyResult r = pattern_cohomology(
      PatternAssignment::quotient({multiples(z, 2), multiples(z, 3), multiples(z, 5)}));
  // Degree 0 is A / (2Z n 3Z n 5Z) by the generalized CRT.
  CHECK(r.by_degree.at(0).factors() == iv({30}));
  CHECK(vanishes_above_zero(r));

  auto z30 = AbelianGroup::ambient(0, iv({30}));
  PatternCohomologyResult f = pattern_cohomology(PatternAssignment::quotient(
      {sub(z30, {iv({2})}), sub(z30, {iv({3})}), sub(z30, {iv({5})})}));
  CHECK(f.by_degree.at(0) == z30->decomposition());
  CHECK(vanishes_above_zero(f));

  // With a zero intersection the quotient pattern recovers A itself.
  PatternCohomologyResult zero = pattern_cohomology(
      PatternAssignment::quotient({Subgroup::zero(z), multiples(z, 7)}));
  CHECK(zero.by_degree.at(0).factors() == iv({0}));
  CHECK(vanishes_above_zero(zero));
}

TEST_CASE("gluing") {
  auto z = AbelianGroup::free(1);
  std::vector<Subgroup> f{multiples(z, 4), multiples(z, 6)};
  GluingReport g = gluing_check(PatternAssignment::ideal(f), closure(f));
  CHECK(g.ok());

  std::vector<Subgroup> single{multiples(z, 10)};
  CHECK(gluing_check(PatternAssignment::ideal(single), closure(single)).ok());

  auto k = AbelianGroup::ambient(0, iv({2, 2}));
  std::vector<Subgroup> m3{sub(k, {iv({1, 0})}), sub(k, {iv({0, 1})}), sub(k, {iv({1, 1})})};
  GluingReport bad = gluing_check(PatternAssignment::ideal(m3), closure(m3));
  CHECK(bad.intersect_condition);
  CHECK(bad.union_condition);
  CHECK_FALSE(bad.equalizer);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.counterexample.has_value());
  CHECK(crt_solve(*bad.counterexample).status == CrtStatus::no_solution);

  CHECK_THROWS(gluing_check(PatternAssignment::quotient(f), closure(f)));
  std::vector<Subgroup> other{multiples(z, 5)};
  CHECK_THROWS(gluing_check(PatternAssignment::ideal(f), closure(other)));
}

TEST_CASE("euler characteristic") {
  auto z6 = AbelianGroup::ambient(0, iv({6}));
  CHECK(euler_consistency(z6, {sub(z6, {iv({2})}), sub(z6, {iv({3})})}).ok());
  auto k = AbelianGroup::ambient(0, iv({2, 2}));
  CHECK(euler_consistency(k, {sub(k, {iv({1, 0})}), sub(k, {iv({0, 1})}), sub(k, {iv({1, 1})})})
            .ok());
  auto z = AbelianGroup::free(1);
  CHECK_THROWS_AS(euler_consistency(z, {multiples(z, 2)}), InfiniteAmbient);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    GroupPtr g = random_finite_ambient(rng, 256);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    EulerReport e = euler_consistency(g, random_family(rng, g, size(rng), 10));
    CHECK(e.ok());
  }
}

TEST_CASE("ideal flavor vanishes on distributive families with zero intersection") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<long> n(2, 2000);
    const long order = n(rng);
    auto zn = AbelianGroup::ambient(0, iv({order}));
    std::vector<std::pair<long, int>> primes;
    long rest = order;
    for (long q = 2; q * q <= rest; ++q)
      if (rest % q == 0) {
        int e = 0;
        while (rest % q == 0) rest /= q, ++e;
        primes.emplace_back(q, e);
      }
    if (rest > 1) primes.emplace_back(rest, 1);
    // <d> over all members meets in <lcm d>, so some member carries each full prime power.
    std::uniform_int_distribution<std::size_t> size(2, 5);
    std::vector<long> gens(size(rng), 1);
    for (const auto& [q, e] : primes) {
      std::uniform_int_distribution<std::size_t> who(0, gens.size() - 1);
      std::uniform_int_distribution<int> exponent(0, e);
      const std::size_t full = who(rng);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int k = i == full ? e : exponent(rng);
        for (int j = 0; j < k; ++j) gens[i] *= q;
      }
    }
    std::vector<Subgroup> f;
    for (long d : gens) f.push_back(sub(zn, {iv({d})}));
    Subgroup meet = f.front();
    for (const auto& s : f) meet = meet.intersect(s);
    REQUIRE(meet.is_zero());
    PatternCohomologyResult r = pattern_cohomology(PatternAssignment::ideal(f));
    for (const auto& [q, h] : r.by_degree) CHECK(h.is_trivial());
  }
}
