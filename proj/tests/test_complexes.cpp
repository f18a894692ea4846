#include "doctest.h"
#include "support.hpp"

#include "distlat/complexes.hpp"
#include "distlat/lattice.hpp"

using namespace distlat;
using namespace testing_support;

namespace {

std::vector<Subgroup> klein_triple(const GroupPtr& k) {
  return {sub(k, {iv({1, 0})}), sub(k, {iv({0, 1})}), sub(k, {iv({1, 1})})};
}

std::vector<Subgroup> cyclic_family(std::mt19937_64& rng, const GroupPtr& zn, std::size_t size) {
  const long n = zn->torsion().front().get_si();
  std::uniform_int_distribution<long> d(0, n - 1);
  std::vector<Subgroup> f;
  for (std::size_t i = 0; i < size; ++i) f.push_back(sub(zn, {iv({d(rng)})}));
  return f;
}

bool concentrated_in_zero(const HomologyResult& h) {
  for (const auto& [deg, g] : h.by_degree)
    if (deg > 0 && !g.is_trivial()) return false;
  return true;
}

}  // namespace

TEST_CASE("increasing tuples") {
  auto t = increasing_tuples(4, 2);
  REQUIRE(t.size() == 6);
  CHECK(t.front() == Tuple{0, 1});
  CHECK(t[2] == Tuple{0, 3});
  CHECK(t.back() == Tuple{2, 3});
  CHECK(increasing_tuples(3, 3) == std::vector<Tuple>{{0, 1, 2}});
  CHECK(increasing_tuples(2, 3).empty());
}

TEST_CASE("chain (2Z, 3Z)") {
  auto z = AbelianGroup::free(1);
  std::vector<Subgroup> fam{multiples(z, 2), multiples(z, 3)};
  ChainComplex c = chain_complex(fam);
  CHECK(c.term(1)->cells.front().value == multiples(z, 6));
  CHECK(c.term(0)->cells.size() == 2);
  // x at (0,1) goes to x at (1) minus x at (0).
  auto values = c.cell_values(0, (*c.outgoing(1))(GroupElement::basis_vector(c.term(1)->group, 0)));
  CHECK(values[0] == el(z, {-6}));
  CHECK(values[1] == el(z, {6}));
  auto h = homology(c);
  CHECK(h.by_degree.at(0).factors() == iv({0}));
  CHECK(h.by_degree.at(1).is_trivial());
}

TEST_CASE("cochain (2Z, 3Z)") {
  auto z = AbelianGroup::free(1);
  std::vector<Subgroup> fam{multiples(z, 2), multiples(z, 3)};
  ChainComplex c = cochain_complex(fam);
  CHECK(c.term(1)->cells.front().value == Subgroup::whole(z));
  auto d = c.cell_values(
      1, (*c.outgoing(0))(*c.from_cell_values(0, std::vector{el(z, {2}), el(z, {9})})));
  CHECK(d[0] == el(z, {7}));
  auto h = homology(c, true);
  CHECK(h.by_degree.at(0).factors() == iv({0}));
  CHECK(h.by_degree.at(1).factors().empty());
  auto rep = c.cell_values(0, h.representatives->at(0).front());
  CHECK(sub(z, {rep[0].coords()}) == multiples(z, 6));
  CHECK(rep[0] == rep[1]);
}

TEST_CASE("single member complexes") {
  auto z = AbelianGroup::free(1);
  std::vector<Subgroup> fam{multiples(z, 4)};
  auto h = homology(chain_complex(fam));
  CHECK(h.by_degree.size() == 1);
  CHECK(h.by_degree.at(0).factors() == iv({0}));
  auto hc = homology(cochain_complex(fam));
  CHECK(hc.by_degree.size() == 1);
  CHECK(degree_zero(cochain_complex(fam, true)).matches());
  CHECK(degree_zero(chain_complex(fam, true)).matches());
}

TEST_CASE("Klein triple") {
  auto k = AbelianGroup::ambient(0, iv({2, 2}));
  auto fam = klein_triple(k);
  ChainComplex cc = cochain_complex(fam);
  CHECK(*cc.term(0)->group->order() == 8);
  CHECK(*cc.term(1)->group->order() == 64);
  CHECK(*cc.term(2)->group->order() == 4);
  auto h = homology(cc);
  CHECK(h.by_degree.at(0).is_trivial());
  CHECK(h.by_degree.at(1).factors() == iv({2}));
  CHECK(h.by_degree.at(2).is_trivial());

  ChainComplex ch = chain_complex(fam);
  CHECK(*ch.term(2)->group->order() == 1);
  CHECK(*ch.term(0)->group->order() == 8);
  // Non-distributive: H_0 is bigger than the sum.
  CHECK(homology(ch).by_degree.at(0).factors() == iv({2, 2, 2}));
  DegreeZeroComparison z0 = degree_zero(chain_complex(fam, true));
  CHECK(z0.image == Subgroup::whole(k));
  CHECK_FALSE(z0.injective);
  CHECK(degree_zero(cochain_complex(fam, true)).matches());
}

TEST_CASE("h1 witness") {
  auto k = AbelianGroup::ambient(0, iv({2, 2}));
  auto fam = klein_triple(k);
  auto w = h1_witness(fam[0], fam[1], fam[2]);
  REQUIRE(w.has_value());
  auto og = to_oracle(k);
  auto ofam = to_oracle(og, fam);
  std::vector<oracle::Code> cochain;
  for (const auto& e : *w) cochain.push_back(og.encode(to_oracle(e.coords())));
  CHECK(oracle::is_one_cocycle(og, ofam, cochain));
  CHECK_FALSE(oracle::is_one_coboundary(og, ofam, cochain));

  ChainComplex c = cochain_complex(fam);
  auto x = c.from_cell_values(1, *w);
  REQUIRE(x.has_value());
  CHECK(is_cycle(c, 1, *x));
  CHECK_FALSE(is_boundary(c, 1, *x));

  auto z = AbelianGroup::free(1);
  CHECK_FALSE(h1_witness(multiples(z, 2), multiples(z, 3), multiples(z, 5)).has_value());
  CHECK_FALSE(h1_witness(fam[0], fam[0], fam[0]).has_value());
  CHECK_THROWS_AS(h1_witness(fam[0], fam[1], multiples(z, 2)), ParentMismatch);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(chain_complex(std::vector<Subgroup>{}), EmptyFamily);
  CHECK_THROWS_AS(cochain_complex(std::vector<Subgroup>{}), EmptyFamily);
  auto z = AbelianGroup::free(1);
  auto z2 = AbelianGroup::free(2);
  std::vector<Subgroup> mixed{Subgroup::whole(z), Subgroup::whole(z2)};
  CHECK_THROWS_AS(cochain_complex(mixed), ParentMismatch);
  CHECK_THROWS_AS(degree_zero(cochain_complex(std::vector{Subgroup::whole(z)})),
                  std::invalid_argument);
}

TEST_CASE("a complex with d o d != 0 is rejected") {
  auto z = AbelianGroup::free(1);
  std::map<int, ComplexTerm> terms;
  for (int q = 0; q < 3; ++q) terms.emplace(q, ComplexTerm{q, z, {}});
  std::map<int, Homomorphism> diffs;
  diffs.emplace(0, Homomorphism::identity(z));
  diffs.emplace(1, Homomorphism::identity(z));
  const auto before = differential_law_tally();
  CHECK_THROWS_AS(ChainComplex(Direction::cohomological, terms, diffs), InvariantViolation);
  CHECK(differential_law_tally().violated == before.violated + 1);
}

TEST_CASE("structural identities on random families") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    GroupPtr g = trial % 2 ? random_finite_ambient(rng, 128) : AbelianGroup::free(1 + trial % 4 / 2);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    auto fam = random_family(rng, g, size(rng), 12);
    DegreeZeroComparison co = degree_zero(cochain_complex(fam, true));
    CHECK(co.matches());
    CHECK(co.image == intersection_of(fam));
    DegreeZeroComparison ch = degree_zero(chain_complex(fam, true));
    CHECK(ch.image == sum_of(fam));
    // Injectivity of the augmentation is the distributive case.
    try {
      if (is_distributive(closure(fam)).distributive) CHECK(ch.injective);
    } catch (const ClosureCapExceeded&) {
    }
  }
}

TEST_CASE("distributive vanishing in Z/N") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<long> n(2, 10000);
    auto zn = AbelianGroup::ambient(0, iv({n(rng)}));
    std::uniform_int_distribution<std::size_t> size(1, 5);
    auto fam = cyclic_family(rng, zn, size(rng));
    CHECK(concentrated_in_zero(homology(chain_complex(fam))));
    CHECK(concentrated_in_zero(homology(cochain_complex(fam))));
    // Augmented complexes are then exact.
    for (const auto& [deg, h] : homology(cochain_complex(fam, true)).by_degree)
      CHECK(h.is_trivial());
    for (const auto& [deg, h] : homology(chain_complex(fam, true)).by_degree)
      CHECK(h.is_trivial());
  }
}

TEST_CASE("homology agrees with enumeration") {
  std::mt19937_64 rng(33);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    GroupPtr g = random_finite_ambient(rng, 64);
    std::uniform_int_distribution<std::size_t> size(1, 3);
    auto fam = random_family(rng, g, size(rng), 10);
    auto og = to_oracle(g);
    auto ofam = to_oracle(og, fam);
    std::map<int, oracle::DegreeData> oc, oh;
    try {
      oc = oracle::cochain_cohomology(og, ofam, 1u << 16);
      oh = oracle::chain_homology(og, ofam, 1u << 16);
    } catch (const std::length_error&) {
      continue;
    }
    ++compared;
    auto hc = homology(cochain_complex(fam));
    auto hh = homology(chain_complex(fam));
    for (const auto& [deg, d] : oc) CHECK(to_int64(hc.by_degree.at(deg).factors()) == d.invariant_factors);
    for (const auto& [deg, d] : oh) CHECK(to_int64(hh.by_degree.at(deg).factors()) == d.invariant_factors);
    // |ker d_q| * |im d_q| = |C^q|
    for (std::size_t q = 0; q + 1 < fam.size(); ++q) {
      const int deg = static_cast<int>(q);
      CHECK(oc.at(deg).cycles * oc.at(deg + 1).boundaries == oc.at(deg).term_order);
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("representatives generate the homology") {
  auto k = AbelianGroup::ambient(0, iv({2, 4}));
  std::vector<Subgroup> fam{sub(k, {iv({1, 0})}), sub(k, {iv({0, 1})}), sub(k, {iv({1, 1})})};
  ChainComplex c = cochain_complex(fam);
  auto h = homology(c, true);
  for (const auto& [deg, reps] : *h.representatives) {
    CHECK(reps.size() == h.by_degree.at(deg).factors().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(is_cycle(c, deg, reps[i]));
      CHECK_FALSE(is_boundary(c, deg, reps[i]));
      const Integer& order = h.by_degree.at(deg).factors()[i];
      if (order != 0) CHECK(is_boundary(c, deg, reps[i] * order));
    }
  }
}

TEST_CASE("threaded homology is deterministic") {
  std::mt19937_64 rng(34);
  auto g = AbelianGroup::ambient(0, iv({2, 12}));
  auto fam = random_family(rng, g, 5, 12);
  ChainComplex c = cochain_complex(fam);
  auto a = homology(c, true, 1);
  auto b = homology(c, true, 4);
  CHECK(a.by_degree == b.by_degree);
  for (const auto& [deg, reps] : *a.representatives) {
    const auto& other = b.representatives->at(deg);
    REQUIRE(reps.size() == other.size());
    for (std::size_t i = 0; i < reps.size(); ++i) CHECK(reps[i] == other[i]);
  }
}

TEST_CASE("differential laws hold on everything built here") {
  CHECK(differential_law_tally().checked > 0);
  CHECK(differential_law_tally().violated == 1);  // the deliberate failure above
}
