#include "distlat/patterns.hpp"

namespace distlat {

const char* to_string(PatternFlavor f) {
  switch (f) {
    case PatternFlavor::constant: return "constant";
    case PatternFlavor::ideal: return "ideal";
    case PatternFlavor::quotient: return "quotient";
  }
  return "?";
}

std::optional<PatternFlavor> parse_flavor(std::string_view s) {
  if (s == "constant") return PatternFlavor::constant;
  if (s == "ideal") return PatternFlavor::ideal;
  if (s == "quotient") return PatternFlavor::quotient;
  return std::nullopt;
}

namespace {

void check_family(const std::vector<Subgroup>& family) {
  if (family.empty()) throw EmptyFamily("pattern: empty family");
  for (const auto& s : family) require_same_parent(family[0].parent(), s.parent(), "pattern");
}

Subgroup tuple_sum(const std::vector<Subgroup>& family, const Tuple& t) {
  Subgroup acc = family[t[0]];
  for (std::size_t i = 1; i < t.size(); ++i) acc = acc + family[t[i]];
  return acc;
}

}  // namespace

PatternAssignment PatternAssignment::constant(GroupPtr ambient, std::size_t covering_size) {
  if (covering_size == 0) throw EmptyFamily("pattern: empty covering");
  return PatternAssignment{std::move(ambient), covering_size, PatternFlavor::constant, {}};
}

PatternAssignment PatternAssignment::ideal(std::vector<Subgroup> family) {
  check_family(family);
  GroupPtr a = family[0].parent();
  const std::size_t n = family.size();
  return PatternAssignment{std::move(a), n, PatternFlavor::ideal, std::move(family)};
}

PatternAssignment PatternAssignment::quotient(std::vector<Subgroup> family) {
  check_family(family);
  GroupPtr a = family[0].parent();
  const std::size_t n = family.size();
  return PatternAssignment{std::move(a), n, PatternFlavor::quotient, std::move(family)};
}

ChainComplex pattern_complex(const PatternAssignment& p) {
  switch (p.flavor) {
    case PatternFlavor::constant: {
      Subgroup zero = Subgroup::zero(p.ambient);
      return tuple_cochain_complex(p.ambient, p.covering_size, CellKind::quotient,
                                   [&](const Tuple&) { return zero; });
    }
    case PatternFlavor::ideal:
      return cochain_complex(p.family);
    case PatternFlavor::quotient:
      return tuple_cochain_complex(p.ambient, p.covering_size, CellKind::quotient,
                                   [&](const Tuple& t) { return tuple_sum(p.family, t); });
  }
  throw std::invalid_argument("pattern: unknown flavor");
}

PatternCohomologyResult pattern_cohomology(const PatternAssignment& p, unsigned threads) {
  return {homology(pattern_complex(p), false, threads).by_degree};
}

GluingReport gluing_check(const PatternAssignment& p, const LatticeClosure& l) {
  if (p.flavor != PatternFlavor::ideal)
    throw std::invalid_argument("gluing_check: ideal flavor required");
  require_same_parent(p.ambient, l.parent, "gluing_check");
  GluingReport r;

  std::vector<std::size_t> idx;
  for (const auto& s : p.family) {
    auto i = l.index_of(s);
    if (!i) throw std::invalid_argument("gluing_check: family member outside the lattice");
    idx.push_back(*i);
  }

  ChainComplex c = cochain_complex(p.family);
  for (const auto& [deg, term] : c.terms())
    for (const Cell& cell : term.cells) {
      std::size_t join = idx[cell.tuple[0]];
      std::size_t meet = idx[cell.tuple[0]];
      for (std::size_t k = 1; k < cell.tuple.size(); ++k) {
        join = l.join_table[join][idx[cell.tuple[k]]];
        meet = l.meet_table[meet][idx[cell.tuple[k]]];
      }
      if (!(l.members[join] == cell.value)) r.intersect_condition = false;
      std::vector<Subgroup> parts;
      for (std::size_t a : cell.tuple) parts.push_back(p.family[a]);
      if (!(l.members[meet] == intersection_of(parts))) r.union_condition = false;
    }

  // H^0 is the kernel of d^0 (all of C^0 for a single set); it must consist
  // of constant sequences spanning the value on the union.
  const Subgroup total = intersection_of(p.family);
  const ComplexTerm& c0 = *c.term(0);
  IntLattice kernel =
      c.outgoing(0) ? kernel_image(*c.outgoing(0)).kernel.lift() : IntLattice::full(c0.group->generators());
  std::vector<IntVector> first_values;
  for (std::size_t k = 0; k < kernel.rank(); ++k) {
    auto values = c.cell_values(0, GroupElement(c0.group, kernel.basis().column(k)));
    for (const auto& v : values)
      if (!(v == values[0])) r.h0_is_union_value = false;
    first_values.push_back(values[0].coords());
  }
  if (!(Subgroup::from_vectors(p.ambient, first_values) == total)) r.h0_is_union_value = false;

  EqualizerReport e = equalizer_check(p.family);
  r.equalizer = e.equalizer;
  r.counterexample = std::move(e.counterexample);
  return r;
}

namespace {

struct Orders {
  std::map<int, Integer> terms;
  mpq_class term_chi = 1;
  mpq_class cohomology_chi = 1;
};

void multiply_signed(mpq_class& acc, const Integer& value, int degree) {
  if (degree % 2 == 0)
    acc *= mpq_class(value);
  else
    acc /= mpq_class(value);
}

Orders orders_of(const ChainComplex& c) {
  Orders o;
  for (const auto& [deg, term] : c.terms()) {
    Integer n = *term.group->order();
    o.terms.emplace(deg, n);
    multiply_signed(o.term_chi, n, deg);
  }
  for (const auto& [deg, h] : homology(c).by_degree) multiply_signed(o.cohomology_chi, *h.order(), deg);
  return o;
}

}  // namespace

EulerReport euler_consistency(const GroupPtr& ambient, const std::vector<Subgroup>& family) {
  if (!ambient->is_finite()) throw InfiniteAmbient("euler_consistency needs a finite ambient group");
  check_family(family);
  require_same_parent(ambient, family[0].parent(), "euler_consistency");

  Orders k = orders_of(pattern_complex(PatternAssignment::constant(ambient, family.size())));
  Orders i = orders_of(pattern_complex(PatternAssignment::ideal(family)));
  Orders q = orders_of(pattern_complex(PatternAssignment::quotient(family)));

  EulerReport r;
  for (const auto& [deg, n] : k.terms)
    if (n != i.terms.at(deg) * q.terms.at(deg)) r.term_orders = false;
  r.constant_euler = k.term_chi == k.cohomology_chi;
  r.ideal_euler = i.term_chi == i.cohomology_chi;
  r.quotient_euler = q.term_chi == q.cohomology_chi;
  r.multiplicative = k.cohomology_chi == i.cohomology_chi * q.cohomology_chi;
  return r;
}

}  // namespace distlat
