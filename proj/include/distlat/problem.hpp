#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distlat/group.hpp"

namespace distlat {

// Bad problem text; the message names the line/column or the offending field.
struct MalformedInput : std::invalid_argument {
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A parsed problem document. Coordinates list free generators first, then
/// one per torsion factor.
struct ProblemFile {
  GroupPtr ambient;
  std::vector<std::string> subgroup_names;  // in file order
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, GroupElement> residues;
  std::vector<std::pair<std::string, std::vector<std::string>>> families;  // in file order
  // Optional objects handed to the oracle for re-verification.
  std::optional<std::vector<GroupElement>> cochain;
  std::optional<GroupElement> element;
};

ProblemFile parse_problem(std::string_view text);

// The named family; without a name the first listed family, and without any
// families every subgroup in file order.
std::vector<std::string> select_family(const ProblemFile& p, const std::optional<std::string>& name);
std::vector<Subgroup> family_members(const ProblemFile& p, const std::vector<std::string>& names);

// "0", or terms "Z", "Z^k", "Z/n" joined by '+'.
GroupPtr parse_module_spec(std::string_view spec);

}  // namespace distlat
