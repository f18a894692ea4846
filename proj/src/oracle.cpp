#include "distlat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace distlat::oracle {

namespace {
constexpr Code kTableOrder = 256;
}

FiniteGroup::FiniteGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m < 1) throw std::invalid_argument("oracle: moduli must be positive");
    order_ *= static_cast<Code>(m);
  }
  if (order_ <= kTableOrder) {
    sum_table_.resize(order_ * order_);
    for (Code a = 0; a < order_; ++a)
      for (Code b = 0; b < order_; ++b) sum_table_[a * order_ + b] = static_cast<std::uint32_t>(add_slow(a, b));
    for (Code a = 0; a < order_; ++a) negation_table_.push_back(static_cast<std::uint32_t>(negate_slow(a)));
  }
}

Code FiniteGroup::encode(const Element& e) const {
  Code c = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t x = e[i] % moduli_[i];
    if (x < 0) x += moduli_[i];
    c = c * static_cast<Code>(moduli_[i]) + static_cast<Code>(x);
  }
  return c;
}

Element FiniteGroup::decode(Code c) const {
  Element e(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    e[i] = static_cast<std::int64_t>(c % static_cast<Code>(moduli_[i]));
    c /= static_cast<Code>(moduli_[i]);
  }
  return e;
}

Code FiniteGroup::add(Code a, Code b) const {
  if (!sum_table_.empty()) return sum_table_[a * order_ + b];
  return add_slow(a, b);
}

Code FiniteGroup::add_slow(Code a, Code b) const {
  Code out = 0, scale = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const Code m = static_cast<Code>(moduli_[i]);
    out += ((a % m + b % m) % m) * scale;
    a /= m;
    b /= m;
    scale *= m;
  }
  return out;
}

Code FiniteGroup::negate(Code a) const {
  if (!negation_table_.empty()) return negation_table_[a];
  return negate_slow(a);
}

Code FiniteGroup::negate_slow(Code a) const {
  Code out = 0, scale = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const Code m = static_cast<Code>(moduli_[i]);
    out += ((m - a % m) % m) * scale;
    a /= m;
    scale *= m;
  }
  return out;
}

Code FiniteGroup::multiply(Code a, std::int64_t k) const {
  Element e = decode(a);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] * (k % moduli_[i])) % moduli_[i];
  return encode(e);
}

ElementSet span(const FiniteGroup& g, const std::vector<Element>& generators) {
  ElementSet s;
  s.member.assign(g.order(), 0);
  std::vector<Code> gens;
  for (const auto& e : generators) gens.push_back(g.encode(e));
  std::deque<Code> queue{g.zero()};
  s.member[g.zero()] = 1;
  while (!queue.empty()) {
    Code x = queue.front();
    queue.pop_front();
    s.elements.push_back(x);
    for (Code y : gens) {
      Code z = g.add(x, y);
      if (!s.member[z]) {
        s.member[z] = 1;
        queue.push_back(z);
      }
    }
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

ElementSet set_sum(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet s;
  s.member.assign(g.order(), 0);
  for (Code x : a.elements)
    for (Code y : b.elements) s.member[g.add(x, y)] = 1;
  for (Code c = 0; c < g.order(); ++c)
    if (s.member[c]) s.elements.push_back(c);
  return s;
}

ElementSet set_intersection(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet s;
  s.member.assign(g.order(), 0);
  for (Code x : a.elements)
    if (b.member[x]) {
      s.member[x] = 1;
      s.elements.push_back(x);
    }
  return s;
}

ElementSet whole(const FiniteGroup& g) {
  ElementSet s;
  s.member.assign(g.order(), 1);
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), Code{0});
  return s;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<std::int64_t> invariant_factors_from_counts(
    std::int64_t order, const std::function<std::int64_t(std::int64_t)>& killed_by) {
  // Partition of each p-primary part: the number of cyclic factors of order
  // >= p^k equals log_p(|H[p^k]| / |H[p^(k-1)]|).
  std::vector<std::vector<int>> exponents;  // per prime, descending
  std::vector<std::int64_t> primes = prime_factors(order);
  for (std::int64_t p : primes) {
    std::int64_t part = 1;
    for (std::int64_t n = order; n % p == 0; n /= p) part *= p;
    std::vector<int> at_least;  // at_least[k-1] = #factors of order >= p^k
    std::int64_t previous = 1, pk = 1;
    while (previous < part) {
      pk *= p;
      std::int64_t c = killed_by(pk);
      std::int64_t ratio = c / previous;
      int count = 0;
      while (ratio > 1) {
        ratio /= p;
        ++count;
      }
      at_least.push_back(count);
      previous = c;
    }
    std::vector<int> partition;  // exponents of the cyclic p-factors
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (int i = 0; i < at_least[k] - next; ++i) partition.push_back(static_cast<int>(k + 1));
    }
    std::sort(partition.rbegin(), partition.rend());
    exponents.push_back(partition);
  }
  std::size_t width = 0;
  for (const auto& e : exponents) width = std::max(width, e.size());
  std::vector<std::int64_t> factors(width, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t i = 0; i < exponents[pi].size(); ++i)
      for (int k = 0; k < exponents[pi][i]; ++k) factors[i] *= primes[pi];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

using Tuple = std::vector<std::size_t>;

std::vector<Tuple> tuples_of_length(std::size_t members, std::size_t length) {
  std::vector<Tuple> out;
  if (length == 0 || length > members) return out;
  Tuple t(length);
  std::iota(t.begin(), t.end(), std::size_t{0});
  for (;;) {
    out.push_back(t);
    std::size_t i = length;
    while (i > 0 && t[i - 1] == i - 1 + members - length) --i;
    if (i == 0) return out;
    ++t[i - 1];
    for (std::size_t j = i; j < length; ++j) t[j] = t[j - 1] + 1;
  }
}

// One term of a tuple complex: product of element sets indexed by tuples.
struct Term {
  std::vector<Tuple> tuples;
  std::vector<const ElementSet*> sets;
  std::vector<std::vector<std::int64_t>> position;  // code -> index in set or -1
  // faces[t][p]: index in the next shorter term of tuples[t] without entry p
  std::vector<std::vector<std::size_t>> faces;
  std::uint64_t order = 1;

  std::vector<Code> decode(std::uint64_t code) const {
    std::vector<Code> out(sets.size());
    for (std::size_t i = sets.size(); i-- > 0;) {
      out[i] = sets[i]->elements[code % sets[i]->size()];
      code /= sets[i]->size();
    }
    return out;
  }
  std::uint64_t encode(const std::vector<Code>& values) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto p = position[i][values[i]];
      if (p < 0) throw std::logic_error("oracle: value outside its summand");
      code = code * sets[i]->size() + static_cast<std::uint64_t>(p);
    }
    return code;
  }
};

Term make_term(std::vector<Tuple> tuples, std::vector<ElementSet>& storage,
               std::uint64_t limit) {
  Term t;
  t.tuples = std::move(tuples);
  for (std::size_t i = 0; i < t.tuples.size(); ++i) t.sets.push_back(&storage[i]);
  for (const auto* s : t.sets) {
    if (t.order > limit / std::max<std::uint64_t>(1, s->size()))
      throw std::length_error("oracle: term too large to enumerate");
    t.order *= s->size();
    std::vector<std::int64_t> pos(s->member.size(), -1);
    for (std::size_t k = 0; k < s->elements.size(); ++k)
      pos[s->elements[k]] = static_cast<std::int64_t>(k);
    t.position.push_back(std::move(pos));
  }
  return t;
}

std::size_t index_of(const std::vector<Tuple>& tuples, const Tuple& t) {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  return static_cast<std::size_t>(it - tuples.begin());
}

void fill_faces(Term& longer, const Term& shorter) {
  for (const Tuple& tau : longer.tuples) {
    std::vector<std::size_t> f;
    for (std::size_t p = 0; p < tau.size(); ++p) {
      Tuple sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(p));
      f.push_back(index_of(shorter.tuples, sigma));
    }
    longer.faces.push_back(std::move(f));
  }
}

// Differential between adjacent tuple terms. `coboundary` selects the
// direction: d x on (q+2)-tuples versus boundary onto q-tuples.
std::vector<Code> apply_differential(const FiniteGroup& g, const Term& from, const Term& to,
                                     const std::vector<Code>& x, bool coboundary) {
  std::vector<Code> y(to.tuples.size(), g.zero());
  if (coboundary) {
    for (std::size_t ti = 0; ti < to.tuples.size(); ++ti)
      for (std::size_t p = 0; p < to.faces[ti].size(); ++p) {
        const Code v = x[to.faces[ti][p]];
        y[ti] = g.add(y[ti], p % 2 == 0 ? v : g.negate(v));
      }
  } else {
    for (std::size_t fi = 0; fi < from.tuples.size(); ++fi)
      for (std::size_t p = 0; p < from.faces[fi].size(); ++p) {
        const std::size_t si = from.faces[fi][p];
        y[si] = g.add(y[si], p % 2 == 0 ? x[fi] : g.negate(x[fi]));
      }
  }
  return y;
}

std::map<int, DegreeData> tuple_complex(const FiniteGroup& g,
                                        const std::vector<ElementSet>& family, bool cochain,
                                        std::uint64_t limit) {
  const std::size_t members = family.size();
  std::vector<std::vector<ElementSet>> storage(members);
  std::vector<Term> terms;
  for (std::size_t q = 0; q < members; ++q) {
    std::vector<Tuple> tuples = tuples_of_length(members, q + 1);
    for (const auto& t : tuples) {
      ElementSet s = family[t[0]];
      for (std::size_t i = 1; i < t.size(); ++i)
        s = cochain ? set_sum(g, s, family[t[i]]) : set_intersection(g, s, family[t[i]]);
      storage[q].push_back(std::move(s));
    }
    terms.push_back(make_term(std::move(tuples), storage[q], limit));
    if (q > 0) fill_faces(terms[q], terms[q - 1]);
  }

  auto is_zero_chain = [&](const std::vector<Code>& v) {
    return std::all_of(v.begin(), v.end(), [&](Code c) { return c == g.zero(); });
  };

  std::map<int, DegreeData> out;
  for (std::size_t q = 0; q < members; ++q) {
    const Term& term = terms[q];
    // outgoing: cochain q -> q+1, chain q -> q-1
    const Term* next = nullptr;
    if (cochain && q + 1 < members) next = &terms[q + 1];
    if (!cochain && q > 0) next = &terms[q - 1];
    const Term* prev = nullptr;
    if (cochain && q > 0) prev = &terms[q - 1];
    if (!cochain && q + 1 < members) prev = &terms[q + 1];

    std::vector<std::uint64_t> cycles;
    for (std::uint64_t c = 0; c < term.order; ++c) {
      if (!next) {
        cycles.push_back(c);
        continue;
      }
      if (is_zero_chain(apply_differential(g, term, *next, term.decode(c), cochain)))
        cycles.push_back(c);
    }
    std::vector<char> boundary(term.order, 0);
    std::int64_t boundary_count = 0;
    if (prev) {
      for (std::uint64_t c = 0; c < prev->order; ++c) {
        auto image = term.encode(apply_differential(g, *prev, term, prev->decode(c), cochain));
        if (!boundary[image]) {
          boundary[image] = 1;
          ++boundary_count;
        }
      }
    } else {
      boundary[0] = 1;
      boundary_count = 1;
    }

    DegreeData d;
    d.term_order = static_cast<std::int64_t>(term.order);
    d.cycles = static_cast<std::int64_t>(cycles.size());
    d.boundaries = boundary_count;
    const std::int64_t h = d.cycles / d.boundaries;
    d.invariant_factors = invariant_factors_from_counts(h, [&](std::int64_t m) {
      std::vector<Code> times(g.order());
      for (Code x = 0; x < g.order(); ++x) times[x] = g.multiply(x, m);
      std::int64_t n = 0;
      for (auto c : cycles) {
        auto v = term.decode(c);
        for (auto& x : v) x = times[x];
        if (boundary[term.encode(v)]) ++n;
      }
      return n / d.boundaries;
    });
    out[static_cast<int>(q)] = std::move(d);
  }
  return out;
}

}  // namespace

std::map<int, DegreeData> cochain_cohomology(const FiniteGroup& g,
                                             const std::vector<ElementSet>& family,
                                             std::uint64_t term_limit) {
  return tuple_complex(g, family, true, term_limit);
}

std::map<int, DegreeData> chain_homology(const FiniteGroup& g,
                                         const std::vector<ElementSet>& family,
                                         std::uint64_t term_limit) {
  return tuple_complex(g, family, false, term_limit);
}

bool is_one_cocycle(const FiniteGroup& g, const std::vector<ElementSet>& family,
                    const std::vector<Code>& cochain) {
  const std::size_t n = family.size();
  auto pairs = tuples_of_length(n, 2);
  if (cochain.size() != pairs.size()) throw std::invalid_argument("oracle: cochain length");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ElementSet s = set_sum(g, family[pairs[k][0]], family[pairs[k][1]]);
    if (!s.contains(cochain[k])) return false;
  }
  for (const auto& t : tuples_of_length(n, 3)) {
    // i_{bc} - i_{ac} + i_{ab} == 0
    Code bc = cochain[index_of(pairs, {t[1], t[2]})];
    Code ac = cochain[index_of(pairs, {t[0], t[2]})];
    Code ab = cochain[index_of(pairs, {t[0], t[1]})];
    if (g.add(g.add(bc, g.negate(ac)), ab) != g.zero()) return false;
  }
  return true;
}

bool is_one_coboundary(const FiniteGroup& g, const std::vector<ElementSet>& family,
                       const std::vector<Code>& cochain) {
  const std::size_t n = family.size();
  auto pairs = tuples_of_length(n, 2);
  // i_0 ranges over I_0; each later i_b is forced by i_{0b} = i_b - i_0.
  for (Code i0 : family[0].elements) {
    std::vector<Code> values(n);
    values[0] = i0;
    bool ok = true;
    for (std::size_t b = 1; b < n && ok; ++b) {
      values[b] = g.add(cochain[index_of(pairs, {0, b})], i0);
      ok = family[b].contains(values[b]);
    }
    for (std::size_t k = 0; k < pairs.size() && ok; ++k)
      ok = g.add(values[pairs[k][1]], g.negate(values[pairs[k][0]])) == cochain[k];
    if (ok) return true;
  }
  return false;
}

std::optional<Code> crt_search(const FiniteGroup& g, const std::vector<ElementSet>& moduli,
                               const std::vector<Code>& residues) {
  for (Code a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i)
      ok = moduli[i].contains(g.add(a, g.negate(residues[i])));
    if (ok) return a;
  }
  return std::nullopt;
}

bool is_distributive(const FiniteGroup& g, const std::vector<ElementSet>& family) {
  std::vector<ElementSet> members;
  auto insert = [&](ElementSet s) {
    for (const auto& m : members)
      if (m == s) return;
    members.push_back(std::move(s));
  };
  for (const auto& s : family) insert(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      ElementSet a = members[i], b = members[j];
      insert(set_sum(g, a, b));
      insert(set_intersection(g, a, b));
    }
  for (const auto& a : members)
    for (const auto& b : members)
      for (const auto& c : members) {
        ElementSet lhs = set_intersection(g, a, set_sum(g, b, c));
        ElementSet rhs = set_sum(g, set_intersection(g, a, b), set_intersection(g, a, c));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

std::int64_t hom_count(const std::vector<std::int64_t>& source_orders, const FiniteGroup& target) {
  std::int64_t total = 1;
  for (auto a : source_orders) {
    std::int64_t n = 0;
    for (Code b = 0; b < target.order(); ++b)
      if (a == 0 || target.multiply(b, a) == target.zero()) ++n;
    total *= n;
  }
  return total;
}

std::int64_t tensor_count(const std::vector<std::int64_t>& source_orders,
                          const FiniteGroup& target) {
  std::int64_t total = 1;
  for (auto a : source_orders) {
    if (a == 0) {
      total *= static_cast<std::int64_t>(target.order());
      continue;
    }
    std::vector<char> image(target.order(), 0);
    std::int64_t n = 0;
    for (Code b = 0; b < target.order(); ++b) {
      Code x = target.multiply(b, a);
      if (!image[x]) {
        image[x] = 1;
        ++n;
      }
    }
    total *= static_cast<std::int64_t>(target.order()) / n;
  }
  return total;
}

std::int64_t hom_count_exhaustive(const FiniteGroup& source, const FiniteGroup& target) {
  // A map is determined by images of the coordinate generators; it is well
  // defined iff m_i * image_i == 0.
  const std::size_t k = source.coordinates();
  std::int64_t count = 0;
  std::vector<Code> images(k, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      ok = target.multiply(images[i], source.moduli()[i]) == target.zero();
    if (ok) ++count;
    std::size_t i = 0;
    while (i < k && ++images[i] == target.order()) images[i++] = 0;
    if (i == k) break;
  }
  return count;
}

}  // namespace distlat::oracle
