#include "distlat/crt.hpp"

#include "distlat/complexes.hpp"
#include "distlat/lattice.hpp"

namespace distlat {

const char* to_string(CrtStatus s) {
  switch (s) {
    case CrtStatus::solved: return "solved";
    case CrtStatus::incompatible: return "incompatible";
    case CrtStatus::no_solution: return "no_solution";
  }
  return "?";
}

namespace {

Subgroup checked_intersection(const std::vector<Subgroup>& moduli) {
  if (moduli.empty()) throw EmptyFamily("crt: no moduli");
  for (const auto& m : moduli) require_same_parent(moduli[0].parent(), m.parent(), "crt");
  return intersection_of(moduli);
}

}  // namespace

CrtSolver::CrtSolver(std::vector<Subgroup> moduli)
    : moduli_(std::move(moduli)), intersection_(checked_intersection(moduli_)) {
  const GroupPtr& parent = moduli_[0].parent();
  const std::size_t n = parent->generators();
  const IntMatrix& rel = parent->relations().basis();

  std::size_t unknowns = 0;
  for (const auto& m : moduli_) {
    offsets_.push_back(unknowns);
    unknowns += m.basis().cols();
  }
  for (std::size_t a = 0; a < moduli_.size(); ++a)
    for (std::size_t b = a + 1; b < moduli_.size(); ++b) {
      pairs_.emplace_back(a, b);
      pair_sums_.push_back(moduli_[a] + moduli_[b]);
    }

  // Row block per pair (a, b): B_b c_b - B_a c_a + R s_ab = a_b - a_a.
  const std::size_t slack0 = unknowns;
  IntMatrix m(n * pairs_.size(), unknowns + rel.cols() * pairs_.size());
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const auto [a, b] = pairs_[p];
    m.add_block(p * n, offsets_[b], moduli_[b].basis(), 1);
    m.add_block(p * n, offsets_[a], moduli_[a].basis(), -1);
    m.set_block(p * n, slack0 + p * rel.cols(), rel);
  }
  system_ = hnf(m, true);
}

Compatibility CrtSolver::compatible(std::span<const GroupElement> residues) const {
  if (residues.size() != moduli_.size())
    throw std::invalid_argument("crt: one residue per modulus expected");
  for (const auto& r : residues) require_same_parent(moduli_[0].parent(), r.parent(), "crt");
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const auto [a, b] = pairs_[p];
    if (!pair_sums_[p].contains(residues[b] - residues[a])) return {false, pairs_[p]};
  }
  return {};
}

CrtOutcome CrtSolver::solve(std::span<const GroupElement> residues) const {
  CrtOutcome out;
  Compatibility c = compatible(residues);
  if (!c.compatible) {
    out.status = CrtStatus::incompatible;
    out.incompatibility = c.failing;
    return out;
  }
  const GroupPtr& parent = moduli_[0].parent();
  const std::size_t n = parent->generators();

  IntVector rhs;
  rhs.reserve(n * pairs_.size());
  std::vector<GroupElement> cocycle;
  for (const auto& [a, b] : pairs_) {
    cocycle.push_back(residues[b] - residues[a]);
    const IntVector d = subtract(residues[b].coords(), residues[a].coords());
    rhs.insert(rhs.end(), d.begin(), d.end());
  }

  IntVector i0 = zero_vector(n);
  if (!pairs_.empty()) {
    auto x = solve_linear(system_, rhs);
    if (!x) {
      out.status = CrtStatus::no_solution;
      out.certificate = std::move(cocycle);
      return out;
    }
    const IntMatrix& b0 = moduli_[0].basis();
    IntVector c0(x->begin() + offsets_[0], x->begin() + offsets_[0] + b0.cols());
    if (b0.cols() > 0) i0 = b0 * c0;
  }
  GroupElement a(parent, subtract(residues[0].coords(), i0));
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    if (!moduli_[k].contains(a - residues[k]))
      throw InvariantViolation("crt solution fails modulus " + std::to_string(k));
  out.status = CrtStatus::solved;
  out.reduced = intersection_.reduce(a);
  out.solution = std::move(a);
  return out;
}

Compatibility compatible(const ResidueSystem& r) { return CrtSolver(r.moduli).compatible(r.residues); }

CrtOutcome crt_solve(const ResidueSystem& r) { return CrtSolver(r.moduli).solve(r.residues); }

namespace {

// Coset representatives of Z^n / lift, or nullopt if the quotient is infinite.
std::optional<std::vector<IntVector>> coset_representatives(const Subgroup& s,
                                                            std::uint64_t limit) {
  const IntLattice& l = s.lift();
  if (!l.full_rank()) return std::nullopt;
  const Integer index = *l.index();
  if (index > Integer(static_cast<unsigned long>(limit))) return std::nullopt;
  const std::size_t n = l.dim();
  std::vector<unsigned long> radix(n);
  for (std::size_t k = 0; k < n; ++k) radix[k] = l.basis()(l.pivot_rows()[k], k).get_ui();
  std::vector<IntVector> reps;
  IntVector v = zero_vector(n);
  for (;;) {
    reps.push_back(v);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (v[k] + 1 < radix[k]) {
        v[k] += 1;
        break;
      }
      v[k] = 0;
      if (k == 0) return reps;
    }
    if (n == 0) return reps;
  }
}

void spot_check(const CrtSolver& solver) {
  const auto& moduli = solver.moduli();
  const GroupPtr& parent = moduli[0].parent();
  for (std::size_t g = 0; g < parent->generators(); ++g) {
    std::vector<GroupElement> residues;
    for (std::size_t a = 0; a < moduli.size(); ++a) {
      IntVector v = zero_vector(parent->generators());
      v[g] = 1;
      if (moduli[a].basis().cols() > 0)
        v = add(v, scale(moduli[a].basis().column(0), Integer(static_cast<long>(a + 1))));
      residues.emplace_back(parent, v);
    }
    if (solver.solve(residues).status != CrtStatus::solved)
      throw InvariantViolation("distributive family failed a spot solve");
  }
}

}  // namespace

EqualizerReport equalizer_check(std::span<const Subgroup> family, std::uint64_t limit) {
  std::vector<Subgroup> moduli(family.begin(), family.end());
  CrtSolver solver(moduli);
  const GroupPtr& parent = moduli[0].parent();
  EqualizerReport report;

  // a_0 = 0 loses nothing: translating every residue by a_0 preserves both
  // compatibility and solvability.
  std::vector<std::vector<IntVector>> reps(moduli.size());
  bool finite = true;
  Integer space = 1;
  for (std::size_t a = 1; a < moduli.size() && finite; ++a) {
    auto r = coset_representatives(moduli[a], limit);
    if (!r) {
      finite = false;
      break;
    }
    space *= static_cast<unsigned long>(r->size());
    if (space > Integer(static_cast<unsigned long>(limit))) finite = false;
    reps[a] = std::move(*r);
  }

  if (finite) {
    report.method = "enumeration";
    std::vector<std::size_t> digit(moduli.size(), 0);
    std::vector<GroupElement> residues(moduli.size(), GroupElement::zero(parent));
    for (;;) {
      for (std::size_t a = 1; a < moduli.size(); ++a)
        residues[a] = GroupElement(parent, reps[a][digit[a]]);
      if (solver.compatible(residues).compatible) {
        ++report.systems_checked;
        if (solver.solve(residues).status == CrtStatus::no_solution) {
          report.equalizer = false;
          report.counterexample = ResidueSystem{moduli, residues};
          return report;
        }
      }
      std::size_t a = moduli.size();
      while (a > 1) {
        --a;
        if (++digit[a] < reps[a].size()) break;
        digit[a] = 0;
        if (a == 1) return report;
      }
      if (moduli.size() <= 1) return report;
    }
  }

  try {
    LatticeClosure l = closure(moduli);
    if (is_distributive(l).distributive) {
      report.method = "distributivity";
      spot_check(solver);
      report.systems_checked = parent->generators();
      return report;
    }
  } catch (const ClosureCapExceeded&) {
  }

  // Every 1-cocycle has the form a_b - a_a with a_0 = 0 and a_b = i_0b, so
  // the equalizer holds exactly when H^1 of the family vanishes.
  report.method = "cohomology";
  ChainComplex c = cochain_complex(moduli);
  HomologyResult h = homology(c, true);
  auto deg1 = h.representatives->find(1);
  if (deg1 == h.representatives->end() || deg1->second.empty()) return report;
  const auto& classes = deg1->second;
  std::vector<GroupElement> values = c.cell_values(1, classes.front());
  std::vector<GroupElement> residues(moduli.size(), GroupElement::zero(parent));
  for (std::size_t b = 1; b < moduli.size(); ++b) residues[b] = values[b - 1];
  report.systems_checked = 1;
  if (solver.solve(residues).status != CrtStatus::no_solution)
    throw InvariantViolation("nonzero H^1 class produced a solvable system");
  report.equalizer = false;
  report.counterexample = ResidueSystem{moduli, residues};
  return report;
}

}  // namespace distlat
