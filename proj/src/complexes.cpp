#include "distlat/complexes.hpp"

#include <atomic>
#include <thread>

#include "distlat/normal_form.hpp"

namespace distlat {

namespace {
std::atomic<std::uint64_t> laws_checked{0};
std::atomic<std::uint64_t> laws_violated{0};
}  // namespace

DifferentialLawTally differential_law_tally() { return {laws_checked.load(), laws_violated.load()}; }

std::vector<Tuple> increasing_tuples(std::size_t members, std::size_t length) {
  std::vector<Tuple> out;
  if (length > members) return out;
  Tuple t(length);
  for (std::size_t i = 0; i < length; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    std::size_t i = length;
    while (i > 0 && t[i - 1] == i - 1 + members - length) --i;
    if (i == 0) return out;
    ++t[i - 1];
    for (std::size_t j = i; j < length; ++j) t[j] = t[j - 1] + 1;
  }
}

namespace {

std::size_t cell_width(const Subgroup& value, CellKind kind) {
  return kind == CellKind::subgroup ? value.basis().cols() : value.parent()->generators();
}

// Relations of one summand in its own generator coordinates.
IntMatrix cell_relations(const Subgroup& value, CellKind kind) {
  if (kind == CellKind::quotient) return value.basis();
  const IntMatrix& rel = value.parent()->relations().basis();
  IntMatrix out(value.basis().cols(), rel.cols());
  for (std::size_t k = 0; k < rel.cols(); ++k) {
    auto c = value.lift().coordinates(rel.column(k));
    if (!c) throw InvariantViolation("subgroup lift misses a relation");
    out.set_column(k, *c);
  }
  return out;
}

ComplexTerm make_term(int degree, std::vector<std::pair<Tuple, Subgroup>> summands,
                      CellKind kind) {
  ComplexTerm term;
  term.degree = degree;
  std::vector<IntMatrix> blocks;
  std::size_t offset = 0;
  for (auto& [tuple, value] : summands) {
    const std::size_t w = cell_width(value, kind);
    blocks.push_back(cell_relations(value, kind));
    term.cells.push_back(Cell{std::move(tuple), std::move(value), kind, offset, w});
    offset += w;
  }
  term.group = AbelianGroup::presented(offset, block_diagonal(blocks));
  return term;
}

// Generator images of `from` inside `to`, where the value of `from` maps
// into the value of `to` (inclusion for subgroups, projection for quotients).
IntMatrix restriction(const Cell& from, const Cell& to) {
  if (from.kind == CellKind::quotient) return IntMatrix::identity(from.width);
  const IntMatrix& b = from.value.basis();
  IntMatrix out(to.width, from.width);
  for (std::size_t k = 0; k < b.cols(); ++k) {
    auto c = to.value.lift().coordinates(b.column(k));
    if (!c) throw InvariantViolation("restriction target does not contain source summand");
    out.set_column(k, *c);
  }
  return out;
}

std::size_t cell_index(const ComplexTerm& term, const Tuple& t) {
  // Cells are stored in lexicographic tuple order.
  auto it = std::lower_bound(term.cells.begin(), term.cells.end(), t,
                             [](const Cell& c, const Tuple& key) { return c.tuple < key; });
  if (it == term.cells.end() || it->tuple != t) throw InvariantViolation("missing tuple cell");
  return static_cast<std::size_t>(it - term.cells.begin());
}

Tuple omit(const Tuple& t, std::size_t p) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != p) out.push_back(t[i]);
  return out;
}

// Alternating face map between tuple-model terms: every cell of `longer`
// is joined to its faces in `shorter` with sign (-1)^p.
Homomorphism face_map(const ComplexTerm& longer, const ComplexTerm& shorter, bool homological) {
  const ComplexTerm& src = homological ? longer : shorter;
  const ComplexTerm& dst = homological ? shorter : longer;
  IntMatrix m(dst.group->generators(), src.group->generators());
  for (const Cell& big : longer.cells) {
    for (std::size_t p = 0; p < big.tuple.size(); ++p) {
      const Cell& small = shorter.cells[cell_index(shorter, omit(big.tuple, p))];
      const long sign = p % 2 == 0 ? 1 : -1;
      if (homological)
        m.add_block(small.offset, big.offset, restriction(big, small), sign);
      else
        m.add_block(big.offset, small.offset, restriction(small, big), sign);
    }
  }
  return Homomorphism(src.group, dst.group, std::move(m));
}

// Every degree-0 cell joined to the single augmentation cell with sign +1.
Homomorphism augmentation_map(const ComplexTerm& zero, const ComplexTerm& aug, bool homological) {
  const Cell& a = aug.cells.front();
  if (homological) {
    IntMatrix m(aug.group->generators(), zero.group->generators());
    for (const Cell& c : zero.cells) m.set_block(0, c.offset, restriction(c, a));
    return Homomorphism(zero.group, aug.group, std::move(m));
  }
  IntMatrix m(zero.group->generators(), aug.group->generators());
  for (const Cell& c : zero.cells) m.set_block(c.offset, 0, restriction(a, c));
  return Homomorphism(aug.group, zero.group, std::move(m));
}

ChainComplex build(Direction dir, const GroupPtr& parent, std::size_t members, CellKind kind,
                   const std::function<Subgroup(const Tuple&)>& value,
                   const std::optional<Subgroup>& augmentation) {
  const bool homological = dir == Direction::homological;
  std::map<int, ComplexTerm> terms;
  for (std::size_t q = 0; q < members; ++q) {
    std::vector<std::pair<Tuple, Subgroup>> summands;
    for (auto& t : increasing_tuples(members, q + 1)) {
      Subgroup v = value(t);
      require_same_parent(parent, v.parent(), "complex");
      summands.emplace_back(std::move(t), std::move(v));
    }
    terms.emplace(static_cast<int>(q),
                  make_term(static_cast<int>(q), std::move(summands), kind));
  }
  std::map<int, Homomorphism> diffs;
  for (std::size_t q = 0; q + 1 < members; ++q) {
    const int lo = static_cast<int>(q);
    Homomorphism f = face_map(terms.at(lo + 1), terms.at(lo), homological);
    diffs.emplace(homological ? lo + 1 : lo, std::move(f));
  }
  if (augmentation) {
    std::vector<std::pair<Tuple, Subgroup>> summands;
    summands.emplace_back(Tuple{}, *augmentation);
    terms.emplace(-1, make_term(-1, std::move(summands), kind));
    diffs.emplace(homological ? 0 : -1,
                  augmentation_map(terms.at(0), terms.at(-1), homological));
  }
  return ChainComplex(dir, std::move(terms), std::move(diffs), augmentation.has_value());
}

Subgroup combine(std::span<const Subgroup> family, const Tuple& t, bool sum) {
  Subgroup acc = family[t[0]];
  for (std::size_t i = 1; i < t.size(); ++i)
    acc = sum ? acc + family[t[i]] : acc.intersect(family[t[i]]);
  return acc;
}

void check_family(std::span<const Subgroup> family) {
  if (family.empty()) throw EmptyFamily("complex: empty family");
  for (const auto& s : family) require_same_parent(family[0].parent(), s.parent(), "complex");
}

}  // namespace

ChainComplex::ChainComplex(Direction direction, std::map<int, ComplexTerm> terms,
                           std::map<int, Homomorphism> differentials, bool augmented)
    : direction_(direction),
      terms_(std::move(terms)),
      differentials_(std::move(differentials)),
      augmented_(augmented) {
  for (const auto& [deg, f] : differentials_) {
    const ComplexTerm* s = term(deg);
    const ComplexTerm* t = term(deg + step());
    if (!s || !t) throw std::invalid_argument("differential between missing terms");
    require_same_parent(s->group, f.source(), "differential source");
    require_same_parent(t->group, f.target(), "differential target");
  }
  for (const auto& [deg, f] : differentials_) {
    if (!outgoing(deg + step())) continue;
    ++laws_checked;
    if (composite_vanishes(deg)) continue;
    ++laws_violated;
    throw InvariantViolation("consecutive differentials do not compose to zero at degree " +
                               std::to_string(deg));
  }
}

const ComplexTerm* ChainComplex::term(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? nullptr : &it->second;
}

const Homomorphism* ChainComplex::outgoing(int degree) const {
  auto it = differentials_.find(degree);
  return it == differentials_.end() ? nullptr : &it->second;
}

const Homomorphism* ChainComplex::incoming(int degree) const { return outgoing(degree - step()); }

bool ChainComplex::composite_vanishes(int degree) const {
  const Homomorphism* first = outgoing(degree);
  const Homomorphism* second = outgoing(degree + step());
  if (!first || !second) return true;
  return first->then(*second).is_zero();
}

std::vector<GroupElement> ChainComplex::cell_values(int degree, const GroupElement& x) const {
  const ComplexTerm* t = term(degree);
  if (!t) throw std::invalid_argument("cell_values: no term in this degree");
  require_same_parent(t->group, x.parent(), "cell_values");
  std::vector<GroupElement> out;
  for (const Cell& c : t->cells) {
    IntVector part(x.coords().begin() + c.offset, x.coords().begin() + c.offset + c.width);
    const GroupPtr& parent = c.value.parent();
    if (c.kind == CellKind::subgroup)
      out.emplace_back(parent, c.width == 0 ? zero_vector(parent->generators())
                                            : c.value.basis() * part);
    else
      out.push_back(c.value.reduce(GroupElement(parent, part)));
  }
  return out;
}

std::optional<GroupElement> ChainComplex::from_cell_values(
    int degree, std::span<const GroupElement> values) const {
  const ComplexTerm* t = term(degree);
  if (!t) throw std::invalid_argument("from_cell_values: no term in this degree");
  if (values.size() != t->cells.size())
    throw std::invalid_argument("from_cell_values: one value per summand expected");
  IntVector coords = zero_vector(t->group->generators());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Cell& c = t->cells[i];
    require_same_parent(c.value.parent(), values[i].parent(), "from_cell_values");
    IntVector part;
    if (c.kind == CellKind::subgroup) {
      auto k = c.value.lift().coordinates(values[i].coords());
      if (!k) return std::nullopt;
      part = std::move(*k);
    } else {
      part = values[i].coords();
    }
    for (std::size_t j = 0; j < c.width; ++j) coords[c.offset + j] = part[j];
  }
  return GroupElement(t->group, std::move(coords));
}

ChainComplex chain_complex(std::span<const Subgroup> family, bool augment) {
  check_family(family);
  std::optional<Subgroup> aug;
  if (augment) aug = sum_of(family);
  return build(
      Direction::homological, family[0].parent(), family.size(), CellKind::subgroup,
      [&](const Tuple& t) { return combine(family, t, false); }, aug);
}

ChainComplex cochain_complex(std::span<const Subgroup> family, bool augment) {
  check_family(family);
  std::optional<Subgroup> aug;
  if (augment) aug = intersection_of(family);
  return build(
      Direction::cohomological, family[0].parent(), family.size(), CellKind::subgroup,
      [&](const Tuple& t) { return combine(family, t, true); }, aug);
}

ChainComplex tuple_cochain_complex(const GroupPtr& parent, std::size_t members, CellKind kind,
                                   const std::function<Subgroup(const Tuple&)>& value) {
  if (members == 0) throw EmptyFamily("complex: empty covering");
  return build(Direction::cohomological, parent, members, kind, value, std::nullopt);
}

namespace {

struct DegreeHomology {
  DecomposedGroup group;
  std::vector<GroupElement> representatives;
};

DegreeHomology degree_homology(const ChainComplex& c, int degree, bool with_reps) {
  const ComplexTerm& t = *c.term(degree);
  const GroupPtr& g = t.group;
  const std::size_t n = g->generators();
  const Homomorphism* out = c.outgoing(degree);
  const Homomorphism* in = c.incoming(degree);

  IntLattice cycles = out ? kernel_image(*out).kernel.lift() : IntLattice::full(n);
  IntLattice boundaries = in ? kernel_image(*in).image.lift() : g->relations();

  const IntMatrix& zb = cycles.basis();
  const IntMatrix& bb = boundaries.basis();
  IntMatrix coeffs(zb.cols(), bb.cols());
  for (std::size_t k = 0; k < bb.cols(); ++k) {
    auto x = cycles.coordinates(bb.column(k));
    if (!x) throw InvariantViolation("boundary outside cycles at degree " + std::to_string(degree));
    coeffs.set_column(k, *x);
  }
  SmithForm s = snf(coeffs);

  IntVector factors;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < zb.cols(); ++i) {
    Integer d = i < s.rank ? Integer(s.diagonal(i, i)) : Integer(0);
    if (d == 1) continue;
    factors.push_back(d);
    picked.push_back(i);
  }
  DegreeHomology out_h{DecomposedGroup(std::move(factors)), {}};
  if (with_reps) {
    IntMatrix moved = zb * s.left_inverse;
    for (std::size_t i : picked) out_h.representatives.emplace_back(g, moved.column(i));
  }
  return out_h;
}

}  // namespace

HomologyResult homology(const ChainComplex& c, bool with_representatives, unsigned threads) {
  std::vector<int> degrees;
  for (const auto& [deg, t] : c.terms()) degrees.push_back(deg);
  std::vector<std::optional<DegreeHomology>> results(degrees.size());

  if (threads <= 1 || degrees.size() <= 1) {
    for (std::size_t i = 0; i < degrees.size(); ++i)
      results[i] = degree_homology(c, degrees[i], with_representatives);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(degrees.size());
    auto worker = [&] {
      for (std::size_t i; (i = next++) < degrees.size();) {
        try {
          results[i] = degree_homology(c, degrees[i], with_representatives);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(threads, degrees.size());
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  HomologyResult r;
  if (with_representatives) r.representatives.emplace();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    r.by_degree.emplace(degrees[i], std::move(results[i]->group));
    if (with_representatives)
      r.representatives->emplace(degrees[i], std::move(results[i]->representatives));
  }
  return r;
}

DegreeZeroComparison degree_zero(const ChainComplex& c) {
  const ComplexTerm* aug = c.term(-1);
  const ComplexTerm* zero = c.term(0);
  if (!c.augmented() || !aug || !zero || aug->cells.size() != 1 || zero->cells.empty())
    throw std::invalid_argument("degree_zero: augmented tuple complex required");
  const Subgroup& expected = aug->cells.front().value;
  const GroupPtr& parent = expected.parent();
  std::vector<IntVector> gens;
  bool injective = false;

  if (c.direction() == Direction::homological) {
    const Homomorphism& eps = *c.outgoing(0);
    for (std::size_t k = 0; k < zero->group->generators(); ++k) {
      GroupElement x = GroupElement::basis_vector(zero->group, k);
      gens.push_back(c.cell_values(-1, eps(x)).front().coords());
    }
    const IntLattice killed = kernel_image(eps).kernel.lift();
    const Homomorphism* d1 = c.incoming(0);
    injective = killed == (d1 ? kernel_image(*d1).image.lift() : zero->group->relations());
  } else {
    const Homomorphism& diag = *c.outgoing(-1);
    const Homomorphism* d0 = c.outgoing(0);
    const IntLattice cycles =
        d0 ? kernel_image(*d0).kernel.lift() : IntLattice::full(zero->group->generators());
    const KernelImage di = kernel_image(diag);
    injective = di.kernel.is_zero() && cycles == di.image.lift();
    for (std::size_t k = 0; k < cycles.rank(); ++k)
      gens.push_back(
          c.cell_values(0, GroupElement(zero->group, cycles.basis().column(k))).front().coords());
  }
  return {Subgroup::from_vectors(parent, gens), expected, injective};
}

bool is_cycle(const ChainComplex& c, int degree, const GroupElement& x) {
  const Homomorphism* out = c.outgoing(degree);
  if (!out) return true;
  return out->target()->is_relation(out->matrix() * x.coords());
}

bool is_boundary(const ChainComplex& c, int degree, const GroupElement& x) {
  const Homomorphism* in = c.incoming(degree);
  if (!in) return x.is_zero();
  return solve(*in, x).has_value();
}

std::optional<std::array<GroupElement, 3>> h1_witness(const Subgroup& i0, const Subgroup& i1,
                                                      const Subgroup& i2) {
  const std::array<Subgroup, 3> family{i0, i1, i2};
  ChainComplex c = cochain_complex(family);
  HomologyResult h = homology(c, true);
  const auto& reps = h.representatives->at(1);
  if (reps.empty()) return std::nullopt;
  auto v = c.cell_values(1, reps.front());
  return std::array<GroupElement, 3>{v[0], v[1], v[2]};
}

}  // namespace distlat
