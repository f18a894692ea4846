#include "distlat/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "distlat/complexes.hpp"
#include "distlat/derived.hpp"
#include "distlat/oracle.hpp"
#include "json.hpp"

namespace distlat {

namespace {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

constexpr std::uint64_t kOracleOrderLimit = 1u << 22;

Json vec(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json element(const GroupElement& x) { return vec(x.parent()->reduce(x.coords())); }

Json subgroup(const Subgroup& s) {
  Json a = Json::array();
  for (const auto& g : s.generators()) a.push_back(element(g));
  return a;
}

Json degrees(const std::map<int, DecomposedGroup>& by_degree) {
  Json d = Json::object();
  for (const auto& [q, g] : by_degree) d[std::to_string(q)] = vec(g.factors());
  return d;
}

Json pair(const IndexPair& p) { return Json::array({p.first, p.second}); }

Json cochain_values(std::span<const GroupElement> values, std::size_t members) {
  Json out = Json::array();
  std::size_t k = 0;
  for (const Tuple& t : increasing_tuples(members, 2))
    out.push_back({{"pair", Json::array({t[0], t[1]})}, {"value", element(values[k++])}});
  return out;
}

struct Context {
  const ProblemFile& problem;
  const RunOptions& options;
  std::vector<std::string> names;
  std::vector<Subgroup> family;
  Json doc;
  int exit_code = kExitOk;
};

Json representatives(const ChainComplex& c, const HomologyResult& h) {
  Json out = Json::object();
  for (const auto& [q, reps] : *h.representatives) {
    const ComplexTerm* t = c.term(q);
    Json list = Json::array();
    for (const auto& x : reps) {
      if (t->cells.empty()) {
        list.push_back(element(x));
        continue;
      }
      Json cells = Json::array();
      const auto values = c.cell_values(q, x);
      for (std::size_t i = 0; i < values.size(); ++i)
        cells.push_back({{"tuple", t->cells[i].tuple}, {"value", element(values[i])}});
      list.push_back(cells);
    }
    out[std::to_string(q)] = list;
  }
  return out;
}

void complex_command(Context& ctx, bool chain) {
  const ChainComplex c = chain ? chain_complex(ctx.family, ctx.options.augment)
                               : cochain_complex(ctx.family, ctx.options.augment);
  const HomologyResult h = homology(c, ctx.options.representatives, ctx.options.threads);
  ctx.doc["augmented"] = ctx.options.augment;
  ctx.doc["degrees"] = degrees(h.by_degree);
  if (h.representatives) ctx.doc["representatives"] = representatives(c, h);
  if (ctx.options.augment) {
    const DegreeZeroComparison z = degree_zero(c);
    ctx.doc["degree_zero"] = {{"image", subgroup(z.image)},
                              {"expected", subgroup(z.expected)},
                              {"injective", z.injective},
                              {"matches", z.matches()}};
  }
}

void closure_command(Context& ctx) {
  const LatticeClosure l = closure(ctx.family, ctx.options.cap);
  Json members = Json::array();
  for (const auto& m : l.members) members.push_back(subgroup(m));
  ctx.doc["cap"] = ctx.options.cap;
  ctx.doc["members"] = members;
  ctx.doc["seed_indices"] = l.seed_indices;
  ctx.doc["join"] = l.join_table;
  ctx.doc["meet"] = l.meet_table;
}

void distributive_command(Context& ctx) {
  const LatticeClosure l = closure(ctx.family, ctx.options.cap);
  const DistributivityReport r = is_distributive(l, ctx.options.threads);
  ctx.doc["closure_size"] = l.size();
  ctx.doc["distributive"] = r.distributive;
  if (r.witness) {
    Json members = Json::array();
    for (std::size_t i : r.witness->triple) members.push_back(subgroup(l.members[i]));
    ctx.doc["witness"] = {{"triple", r.witness->triple},
                          {"triple_members", members},
                          {"element", element(r.witness->element)}};
  }
}

void h1_witness_command(Context& ctx) {
  if (ctx.family.size() != 3)
    throw MalformedInput("h1-witness needs a family of exactly three subgroups, got " +
                         std::to_string(ctx.family.size()));
  const HomologyResult h = homology(cochain_complex(ctx.family), false, ctx.options.threads);
  ctx.doc["h1"] = vec(h.by_degree.at(1).factors());
  const auto w = h1_witness(ctx.family[0], ctx.family[1], ctx.family[2]);
  ctx.doc["nontrivial"] = w.has_value();
  if (w) ctx.doc["cocycle"] = cochain_values(*w, 3);
}

ResidueSystem residue_system(const Context& ctx) {
  ResidueSystem r{ctx.family, {}};
  for (const auto& n : ctx.names) {
    auto it = ctx.problem.residues.find(n);
    if (it == ctx.problem.residues.end()) throw MalformedInput("field residues." + n + ": missing");
    r.residues.push_back(it->second);
  }
  return r;
}

void crt_command(Context& ctx) {
  const CrtOutcome o = crt_solve(residue_system(ctx));
  ctx.doc["status"] = to_string(o.status);
  if (o.solution) {
    ctx.doc["solution"] = element(*o.reduced);
    ctx.doc["raw_solution"] = element(*o.solution);
    ctx.doc["modulus"] = subgroup(intersection_of(ctx.family));
  }
  if (o.incompatibility) {
    const auto [a, b] = *o.incompatibility;
    ctx.doc["incompatibility"] = {{"pair", pair(*o.incompatibility)},
                                  {"names", Json::array({ctx.names[a], ctx.names[b]})}};
  }
  if (o.certificate) ctx.doc["certificate"] = cochain_values(*o.certificate, ctx.family.size());
  if (o.status != CrtStatus::solved) ctx.exit_code = kExitNoSolution;
}

void equalizer_command(Context& ctx) {
  const EqualizerReport r = equalizer_check(ctx.family, ctx.options.enumeration_limit);
  ctx.doc["equalizer"] = r.equalizer;
  ctx.doc["method"] = r.method;
  ctx.doc["systems_checked"] = r.systems_checked;
  if (r.counterexample) {
    Json res = Json::array();
    for (const auto& a : r.counterexample->residues) res.push_back(element(a));
    ctx.doc["counterexample"] = {{"residues", res}};
  }
}

void pattern_command(Context& ctx) {
  if (!ctx.options.flavor) throw MalformedInput("pattern needs --flavor constant|ideal|quotient");
  PatternAssignment p;
  switch (*ctx.options.flavor) {
    case PatternFlavor::constant:
      p = PatternAssignment::constant(ctx.problem.ambient, ctx.family.size());
      break;
    case PatternFlavor::ideal:
      p = PatternAssignment::ideal(ctx.family);
      break;
    case PatternFlavor::quotient:
      p = PatternAssignment::quotient(ctx.family);
      break;
  }
  ctx.doc["flavor"] = to_string(*ctx.options.flavor);
  ctx.doc["degrees"] = degrees(pattern_cohomology(p, ctx.options.threads).by_degree);
}

void derived_command(Context& ctx, bool is_ext) {
  if (!ctx.options.module) throw MalformedInput("ext/tor need --module SPEC");
  const GroupPtr m = parse_module_spec(*ctx.options.module);
  if (!ctx.problem.ambient->is_free())
    throw MalformedInput("field ambient.torsion: ext/tor need a free ambient group");
  const std::size_t through = ctx.options.degrees.value_or(ctx.family.size() - 1);
  const auto d = is_ext ? ext(ctx.family, m, through) : tor(ctx.family, m, through);
  ctx.doc["module"] = m->decomposition().to_string();
  ctx.doc["degrees"] = degrees(d);
}

Json oracle_degrees(const std::map<int, oracle::DegreeData>& data) {
  Json d = Json::object();
  for (const auto& [q, x] : data) {
    Json f = Json::array();
    for (auto v : x.invariant_factors) f.push_back(std::to_string(v));
    d[std::to_string(q)] = f;
  }
  return d;
}

bool same_factors(const std::map<int, oracle::DegreeData>& o, const HomologyResult& h) {
  for (const auto& [q, x] : o) {
    auto it = h.by_degree.find(q);
    if (it == h.by_degree.end()) return false;
    std::vector<std::int64_t> f;
    for (const auto& v : it->second.factors()) f.push_back(v.get_si());
    if (f != x.invariant_factors) return false;
  }
  for (const auto& [q, g] : h.by_degree)
    if (!o.count(q) && !g.is_trivial()) return false;
  return true;
}

void oracle_command(Context& ctx) {
  const GroupPtr& g = ctx.problem.ambient;
  if (!g->is_finite()) throw MalformedInput("field ambient.free_rank: oracle needs a finite ambient group");
  if (*g->order() > kOracleOrderLimit)
    throw std::length_error("oracle: ambient order exceeds " + std::to_string(kOracleOrderLimit));
  std::vector<std::int64_t> moduli;
  for (const auto& d : g->torsion()) moduli.push_back(d.get_si());
  const oracle::FiniteGroup og(moduli);
  auto code = [&](const GroupElement& x) {
    oracle::Element e;
    for (const auto& v : x.coords()) e.push_back(v.get_si());
    return og.encode(e);
  };
  auto as_set = [&](const Subgroup& s) {
    std::vector<oracle::Element> gens;
    for (const auto& x : s.generators()) {
      oracle::Element e;
      for (const auto& v : x.coords()) e.push_back(v.get_si());
      gens.push_back(e);
    }
    return oracle::span(og, gens);
  };
  std::vector<oracle::ElementSet> fam;
  for (const auto& s : ctx.family) fam.push_back(as_set(s));

  bool agrees = true;
  const auto oc = oracle::cochain_cohomology(og, fam);
  const auto oh = oracle::chain_homology(og, fam);
  ctx.doc["order"] = std::to_string(og.order());
  ctx.doc["cohomology"] = oracle_degrees(oc);
  ctx.doc["homology"] = oracle_degrees(oh);
  agrees = agrees && same_factors(oc, homology(cochain_complex(ctx.family)));
  agrees = agrees && same_factors(oh, homology(chain_complex(ctx.family)));

  const bool dist = oracle::is_distributive(og, fam);
  ctx.doc["distributive"] = dist;
  try {
    agrees = agrees && dist == is_distributive(closure(ctx.family, ctx.options.cap)).distributive;
  } catch (const ClosureCapExceeded&) {
    // Nothing to compare against; the enumeration answer still stands.
  }

  bool have_residues = true;
  for (const auto& n : ctx.names) have_residues = have_residues && ctx.problem.residues.count(n);
  if (have_residues) {
    const ResidueSystem r = residue_system(ctx);
    std::vector<oracle::Code> res;
    for (const auto& a : r.residues) res.push_back(code(a));
    const auto found = oracle::crt_search(og, fam, res);
    Json crt = {{"solvable", found.has_value()}};
    if (found) {
      IntVector v;
      for (auto x : og.decode(*found)) v.emplace_back(static_cast<long>(x));
      crt["solution"] = vec(v);
    }
    ctx.doc["crt"] = crt;
    agrees = agrees && found.has_value() == (crt_solve(r).status == CrtStatus::solved);
  }

  if (ctx.problem.cochain) {
    const auto& values = *ctx.problem.cochain;
    const std::size_t n = ctx.family.size();
    if (values.size() != n * (n - 1) / 2)
      throw MalformedInput("field cochain: expected " + std::to_string(n * (n - 1) / 2) +
                           " values, one per pair of family members");
    std::vector<oracle::Code> c;
    for (const auto& v : values) c.push_back(code(v));
    ctx.doc["cochain"] = {{"cocycle", oracle::is_one_cocycle(og, fam, c)},
                          {"coboundary", oracle::is_one_coboundary(og, fam, c)}};
  }

  if (ctx.problem.element) {
    if (fam.size() != 3) throw MalformedInput("field element: needs a family of three subgroups");
    const oracle::Code x = code(*ctx.problem.element);
    const auto lhs = oracle::set_intersection(og, fam[0], oracle::set_sum(og, fam[1], fam[2]));
    const auto rhs = oracle::set_sum(og, oracle::set_intersection(og, fam[0], fam[1]),
                                     oracle::set_intersection(og, fam[0], fam[2]));
    ctx.doc["element"] = {{"in_meet_of_sum", lhs.contains(x)},
                          {"in_sum_of_meets", rhs.contains(x)},
                          {"breaks_distributivity", lhs.contains(x) && !rhs.contains(x)}};
  }

  ctx.doc["agrees"] = agrees;
  if (!agrees) ctx.exit_code = kExitVerificationFailed;
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"homology", [](Context& c) { complex_command(c, true); }},
      {"cohomology", [](Context& c) { complex_command(c, false); }},
      {"closure", closure_command},
      {"distributive", distributive_command},
      {"h1-witness", h1_witness_command},
      {"crt", crt_command},
      {"equalizer", equalizer_command},
      {"pattern", pattern_command},
      {"ext", [](Context& c) { derived_command(c, true); }},
      {"tor", [](Context& c) { derived_command(c, false); }},
      {"oracle", oracle_command},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

RunOutcome run_command(std::string_view command, const RunOptions& options, const ProblemFile& p) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw MalformedInput("unknown command \"" + std::string(command) + "\"");
  Context ctx{p, options, select_family(p, options.family), {}, Json::object()};
  ctx.family = family_members(p, ctx.names);
  ctx.doc["command"] = std::string(command);
  ctx.doc["family"] = ctx.names;
  it->second(ctx);
  return {ctx.doc.dump(2) + "\n", ctx.exit_code};
}

}  // namespace distlat
