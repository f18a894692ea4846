#include "distlat/problem.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace distlat {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw MalformedInput("field " + field + ": " + what);
}

Integer integer_at(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(field, "not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  fail(field, "expected an integer (decimal string or JSON integer)");
}

IntVector vector_at(const Json& j, const std::string& field, std::size_t length) {
  if (!j.is_array()) fail(field, "expected an array of integers");
  if (j.size() != length)
    fail(field, "expected " + std::to_string(length) + " coordinates, got " +
                    std::to_string(j.size()));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(integer_at(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

const Json& object_at(const Json& root, const char* key) {
  const Json& j = root.at(key);
  if (!j.is_object()) fail(key, "expected an object");
  return j;
}

GroupPtr parse_ambient(const Json& root) {
  if (!root.contains("ambient")) fail("ambient", "missing");
  const Json& a = object_at(root, "ambient");
  for (const auto& [k, v] : a.items())
    if (k != "free_rank" && k != "torsion") fail("ambient." + k, "unknown field");
  Integer rank = a.contains("free_rank") ? integer_at(a["free_rank"], "ambient.free_rank") : 0;
  if (rank < 0 || rank > 4096) fail("ambient.free_rank", "out of range");
  IntVector torsion;
  if (a.contains("torsion")) {
    const Json& t = a["torsion"];
    if (!t.is_array()) fail("ambient.torsion", "expected an array of integers");
    for (std::size_t i = 0; i < t.size(); ++i)
      torsion.push_back(integer_at(t[i], "ambient.torsion[" + std::to_string(i) + "]"));
  }
  try {
    return AbelianGroup::ambient(rank.get_ui(), torsion);
  } catch (const std::invalid_argument& e) {
    fail("ambient.torsion", e.what());
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    // Keep only the explanation after nlohmann's own position prefix.
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw MalformedInput(line_column(text, e.byte) + ": " + what);
  }
  if (!root.is_object()) throw MalformedInput("line 1, column 1: expected a JSON object");
  for (const auto& [k, v] : root.items())
    if (k != "ambient" && k != "subgroups" && k != "residues" && k != "families" &&
        k != "cochain" && k != "element")
      fail(k, "unknown field");

  ProblemFile p;
  p.ambient = parse_ambient(root);
  const std::size_t n = p.ambient->generators();

  if (!root.contains("subgroups")) fail("subgroups", "missing");
  for (const auto& [name, gens] : object_at(root, "subgroups").items()) {
    const std::string field = "subgroups." + name;
    if (name.empty()) fail("subgroups", "empty subgroup name");
    if (!gens.is_array()) fail(field, "expected an array of generator vectors");
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < gens.size(); ++i)
      vs.push_back(vector_at(gens[i], field + "[" + std::to_string(i) + "]", n));
    p.subgroup_names.push_back(name);
    p.subgroups.emplace(name, Subgroup::from_vectors(p.ambient, vs));
  }
  if (p.subgroups.empty()) fail("subgroups", "at least one subgroup is required");

  if (root.contains("residues"))
    for (const auto& [name, v] : object_at(root, "residues").items()) {
      const std::string field = "residues." + name;
      if (!p.subgroups.count(name)) fail(field, "no subgroup named \"" + name + "\"");
      p.residues.emplace(name, GroupElement(p.ambient, vector_at(v, field, n)));
    }

  if (root.contains("families"))
    for (const auto& [name, list] : object_at(root, "families").items()) {
      const std::string field = "families." + name;
      if (!list.is_array() || list.empty()) fail(field, "expected a nonempty array of names");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        if (!list[i].is_string()) fail(f, "expected a subgroup name");
        const std::string s = list[i].get<std::string>();
        if (!p.subgroups.count(s)) fail(f, "no subgroup named \"" + s + "\"");
        names.push_back(s);
      }
      p.families.emplace_back(name, std::move(names));
    }

  if (root.contains("cochain")) {
    const Json& c = root["cochain"];
    if (!c.is_array()) fail("cochain", "expected an array of vectors");
    std::vector<GroupElement> values;
    for (std::size_t i = 0; i < c.size(); ++i)
      values.emplace_back(p.ambient, vector_at(c[i], "cochain[" + std::to_string(i) + "]", n));
    p.cochain = std::move(values);
  }
  if (root.contains("element")) p.element = GroupElement(p.ambient, vector_at(root["element"], "element", n));
  return p;
}

std::vector<std::string> select_family(const ProblemFile& p, const std::optional<std::string>& name) {
  if (name) {
    for (const auto& [k, v] : p.families)
      if (k == *name) return v;
    throw MalformedInput("field families." + *name + ": no such family");
  }
  if (!p.families.empty()) return p.families.front().second;
  return p.subgroup_names;
}

std::vector<Subgroup> family_members(const ProblemFile& p, const std::vector<std::string>& names) {
  std::vector<Subgroup> out;
  for (const auto& n : names) out.push_back(p.subgroups.at(n));
  return out;
}

GroupPtr parse_module_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = [&](const std::string& why) -> MalformedInput {
    return MalformedInput("module \"" + std::string(spec) + "\": " + why);
  };
  if (s.empty()) throw bad("empty");
  if (s == "0") return AbelianGroup::free(0);
  IntVector orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string term = s.substr(pos, end - pos);
    if (term.empty() || term[0] != 'Z') throw bad("expected Z, Z^k or Z/n in \"" + term + "\"");
    try {
      if (term == "Z") {
        orders.emplace_back(0);
      } else if (term[1] == '^') {
        const Integer k = parse_integer(term.substr(2));
        if (k < 0 || k > 4096) throw bad("rank out of range");
        for (unsigned long i = 0; i < k.get_ui(); ++i) orders.emplace_back(0);
      } else if (term[1] == '/') {
        const Integer m = parse_integer(term.substr(2));
        if (m < 1) throw bad("modulus must be positive");
        orders.push_back(m);
      } else {
        throw bad("expected Z, Z^k or Z/n in \"" + term + "\"");
      }
    } catch (const MalformedInput&) {
      throw;
    } catch (const std::invalid_argument&) {
      throw bad("bad number in \"" + term + "\"");
    }
    pos = end + 1;
  }
  const DecomposedGroup d = DecomposedGroup::from_cyclic_orders(orders);
  return AbelianGroup::ambient(d.free_rank(), d.torsion());
}

}  // namespace distlat
