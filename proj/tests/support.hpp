#pragma once

// Shared helpers for the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "distlat/group.hpp"
#include "distlat/oracle.hpp"

namespace testing_support {

using namespace distlat;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Subgroup sub(const GroupPtr& g, std::vector<IntVector> gens) {
  return Subgroup::from_vectors(g, gens);
}

inline Subgroup multiples(const GroupPtr& z, long m) { return sub(z, {iv({m})}); }

inline GroupElement el(const GroupPtr& g, std::initializer_list<long> xs) {
  return GroupElement(g, iv(xs));
}

// Every invariant-factor chain d_1 | d_2 | ... with product <= max_order.
inline std::vector<IntVector> finite_chains(long max_order) {
  std::vector<IntVector> out{{}};
  std::vector<IntVector> frontier{{}};
  std::vector<long> products{1};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    std::vector<long> next_products;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      const IntVector& c = frontier[k];
      // New factors are prepended, so each must divide the current head.
      const long head = c.empty() ? 0 : c.front().get_si();
      for (long d = 2; d * products[k] <= max_order; ++d) {
        if (head != 0 && head % d != 0) continue;
        IntVector ext{Integer(d)};
        ext.insert(ext.end(), c.begin(), c.end());
        out.push_back(ext);
        next.push_back(ext);
        next_products.push_back(d * products[k]);
      }
    }
    frontier = std::move(next);
    products = std::move(next_products);
  }
  return out;
}

inline GroupPtr random_finite_ambient(std::mt19937_64& rng, long max_order) {
  static thread_local std::vector<IntVector> chains;
  static thread_local long cached = 0;
  if (cached != max_order) {
    chains = finite_chains(max_order);
    cached = max_order;
  }
  std::uniform_int_distribution<std::size_t> pick(1, chains.size() - 1);
  return AbelianGroup::ambient(0, chains[pick(rng)]);
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline Subgroup random_subgroup(std::mt19937_64& rng, const GroupPtr& g, long bound,
                                std::size_t max_gens = 2) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<IntVector> gens;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, g->generators(), bound));
  return Subgroup::from_vectors(g, gens);
}

inline std::vector<Subgroup> random_family(std::mt19937_64& rng, const GroupPtr& g,
                                           std::size_t size, long bound,
                                           std::size_t max_gens = 2) {
  std::vector<Subgroup> f;
  for (std::size_t i = 0; i < size; ++i) f.push_back(random_subgroup(rng, g, bound, max_gens));
  return f;
}

// Oracle view of a finite ambient-form group and its subgroups.
inline oracle::FiniteGroup to_oracle(const GroupPtr& g) {
  std::vector<std::int64_t> m;
  for (const auto& d : g->torsion()) m.push_back(d.get_si());
  return oracle::FiniteGroup(m);
}

inline oracle::Element to_oracle(const IntVector& v) {
  oracle::Element e;
  for (const auto& x : v) e.push_back(x.get_si());
  return e;
}

inline oracle::ElementSet to_oracle(const oracle::FiniteGroup& og, const Subgroup& s) {
  std::vector<oracle::Element> gens;
  for (const auto& g : s.generators()) gens.push_back(to_oracle(g.coords()));
  return oracle::span(og, gens);
}

inline std::vector<oracle::ElementSet> to_oracle(const oracle::FiniteGroup& og,
                                                 const std::vector<Subgroup>& f) {
  std::vector<oracle::ElementSet> out;
  for (const auto& s : f) out.push_back(to_oracle(og, s));
  return out;
}

inline std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace testing_support
