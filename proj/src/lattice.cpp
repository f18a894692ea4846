#include "distlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace distlat {

std::optional<std::size_t> LatticeClosure::index_of(const Subgroup& s) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == s) return i;
  return std::nullopt;
}

LatticeClosure closure(std::span<const Subgroup> seed, std::size_t cap) {
  if (seed.empty()) throw EmptyFamily("closure: empty seed");
  LatticeClosure l;
  l.parent = seed[0].parent();
  std::map<IntLattice, std::size_t> lookup;

  auto insert = [&](const Subgroup& s) -> std::size_t {
    auto it = lookup.find(s.lift());
    if (it != lookup.end()) return it->second;
    if (l.members.size() >= cap)
      throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(cap) + " members", cap);
    l.members.push_back(s);
    lookup.emplace(s.lift(), l.members.size() - 1);
    return l.members.size() - 1;
  };

  for (const auto& s : seed) {
    require_same_parent(l.parent, s.parent(), "closure");
    l.seed_indices.push_back(insert(s));
  }

  // Every unordered pair is combined once; members appended during the scan
  // are paired with everything before them when the outer index reaches them.
  std::vector<std::vector<std::size_t>> join(1), meet(1);
  for (std::size_t i = 0; i < l.members.size(); ++i) {
    if (join.size() <= i) {
      join.resize(i + 1);
      meet.resize(i + 1);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Subgroup a = l.members[i];
      const Subgroup b = l.members[j];
      join[i].push_back(insert(a + b));
      meet[i].push_back(insert(a.intersect(b)));
    }
  }

  const std::size_t n = l.members.size();
  l.join_table.assign(n, std::vector<std::size_t>(n));
  l.meet_table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      l.join_table[i][j] = l.join_table[j][i] = join[i][j];
      l.meet_table[i][j] = l.meet_table[j][i] = meet[i][j];
    }
  return l;
}

bool meet_distributes(const LatticeClosure& l, std::size_t a, std::size_t b, std::size_t c) {
  const auto& J = l.join_table;
  const auto& M = l.meet_table;
  return M[a][J[b][c]] == J[M[a][b]][M[a][c]];
}

bool join_distributes(const LatticeClosure& l, std::size_t a, std::size_t b, std::size_t c) {
  const auto& J = l.join_table;
  const auto& M = l.meet_table;
  return J[a][M[b][c]] == M[J[a][b]][J[a][c]];
}

namespace {

std::optional<std::array<std::size_t, 3>> first_failure(const LatticeClosure& l,
                                                       std::size_t a_begin, std::size_t a_end) {
  const std::size_t n = l.size();
  for (std::size_t a = a_begin; a < a_end; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!meet_distributes(l, a, b, c)) return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

}  // namespace

DistributivityReport is_distributive(const LatticeClosure& l, unsigned threads) {
  const std::size_t n = l.size();
  std::optional<std::array<std::size_t, 3>> failure;
  if (threads <= 1 || n < 8) {
    failure = first_failure(l, 0, n);
  } else {
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::optional<std::array<std::size_t, 3>>> found(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end) found[w] = first_failure(l, begin, end);
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : found)
      if (f) {
        failure = f;
        break;
      }
  }

  DistributivityReport report;
  if (!failure) return report;
  report.distributive = false;
  const auto [a, b, c] = *failure;
  const Subgroup& lhs = l.members[l.meet_table[a][l.join_table[b][c]]];
  const Subgroup& rhs = l.members[l.join_table[l.meet_table[a][b]][l.meet_table[a][c]]];
  for (std::size_t k = 0; k < lhs.basis().cols(); ++k) {
    IntVector col = lhs.basis().column(k);
    if (!rhs.lift().contains(col)) {
      report.witness = DistributivityWitness{*failure, GroupElement(l.parent, std::move(col))};
      break;
    }
  }
  if (!report.witness) throw InvariantViolation("distributivity witness extraction failed");
  return report;
}

}  // namespace distlat
