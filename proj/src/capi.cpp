#include "distlat/distlat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "distlat/commands.hpp"
#include "json.hpp"

struct distlat_problem {
  distlat::ProblemFile file;
};

struct distlat_result {
  std::string json;
};

struct distlat_group {
  distlat::GroupPtr group;
};

struct distlat_subgroup {
  distlat::Subgroup value;
};

namespace {

thread_local std::string last_error;

distlat_status fail(distlat_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs f, mapping library exceptions onto status codes.
template <class F>
distlat_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const distlat::MalformedInput& e) {
    return fail(DISTLAT_MALFORMED_INPUT, e.what());
  } catch (const distlat::ClosureCapExceeded& e) {
    return fail(DISTLAT_CAP_EXCEEDED, e.what());
  } catch (const std::length_error& e) {
    return fail(DISTLAT_CAP_EXCEEDED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DISTLAT_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DISTLAT_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(DISTLAT_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

distlat::IntVector read_vector(const char* const* coords, std::size_t n) {
  distlat::IntVector v;
  for (std::size_t i = 0; i < n; ++i) {
    if (!coords[i]) throw std::invalid_argument("coordinate string is NULL");
    v.push_back(distlat::parse_integer(coords[i]));
  }
  return v;
}

}  // namespace

extern "C" {

const char* distlat_version(void) { return "0.1.0"; }

const char* distlat_last_error(void) { return last_error.c_str(); }

const char* distlat_status_name(distlat_status s) {
  switch (s) {
    case DISTLAT_OK: return "ok";
    case DISTLAT_VERIFICATION_FAILED: return "verification_failed";
    case DISTLAT_MALFORMED_INPUT: return "malformed_input";
    case DISTLAT_NO_SOLUTION: return "no_solution";
    case DISTLAT_CAP_EXCEEDED: return "cap_exceeded";
    case DISTLAT_INVALID_ARGUMENT: return "invalid_argument";
    case DISTLAT_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

void distlat_options_init(distlat_options* opts) {
  if (!opts) return;
  *opts = distlat_options{};
  opts->cap = distlat::kDefaultClosureCap;
  opts->degrees = -1;
  opts->enumeration_limit = distlat::kDefaultEnumerationLimit;
  opts->threads = 1;
}

size_t distlat_command_count(void) { return distlat::command_names().size(); }

const char* distlat_command_name(size_t i) {
  const auto& names = distlat::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

distlat_status distlat_problem_parse(const char* text, size_t length, distlat_problem** out) {
  if (!out) return fail(DISTLAT_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (!text) return fail(DISTLAT_INVALID_ARGUMENT, "text is NULL");
  return guarded([&] {
    *out = new distlat_problem{distlat::parse_problem(std::string_view(text, length))};
    return DISTLAT_OK;
  });
}

void distlat_problem_free(distlat_problem* p) { delete p; }

distlat_status distlat_run(const distlat_problem* p, const char* command,
                           const distlat_options* opts, distlat_result** out) {
  if (!out) return fail(DISTLAT_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (!p || !command) return fail(DISTLAT_INVALID_ARGUMENT, "problem or command is NULL");
  distlat_options defaults;
  distlat_options_init(&defaults);
  const distlat_options& o = opts ? *opts : defaults;
  return guarded([&] {
    distlat::RunOptions r;
    if (o.family) r.family = o.family;
    r.augment = o.augment != 0;
    r.representatives = o.representatives != 0;
    r.cap = o.cap;
    if (o.flavor) {
      r.flavor = distlat::parse_flavor(o.flavor);
      if (!r.flavor) throw distlat::MalformedInput(std::string("unknown flavor \"") + o.flavor + "\"");
    }
    if (o.module_spec) r.module = o.module_spec;
    if (o.degrees >= 0) r.degrees = static_cast<std::size_t>(o.degrees);
    r.enumeration_limit = o.enumeration_limit;
    r.threads = o.threads == 0 ? 1 : o.threads;
    distlat::RunOutcome outcome = distlat::run_command(command, r, p->file);
    *out = new distlat_result{std::move(outcome.document)};
    return static_cast<distlat_status>(outcome.exit_code);
  });
}

const char* distlat_result_json(const distlat_result* r) { return r ? r->json.c_str() : ""; }

void distlat_result_free(distlat_result* r) { delete r; }

distlat_status distlat_group_create(size_t free_rank, const char* const* torsion,
                                    size_t torsion_count, distlat_group** out) {
  if (!out) return fail(DISTLAT_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (torsion_count > 0 && !torsion) return fail(DISTLAT_INVALID_ARGUMENT, "torsion is NULL");
  return guarded([&] {
    *out = new distlat_group{distlat::AbelianGroup::ambient(free_rank, read_vector(torsion, torsion_count))};
    return DISTLAT_OK;
  });
}

void distlat_group_free(distlat_group* g) { delete g; }

size_t distlat_group_generators(const distlat_group* g) { return g ? g->group->generators() : 0; }

char* distlat_group_describe(const distlat_group* g) {
  if (!g) return nullptr;
  return copy_string(g->group->decomposition().to_string());
}

distlat_status distlat_subgroup_create(const distlat_group* g, const char* const* coords,
                                       size_t count, distlat_subgroup** out) {
  if (!out) return fail(DISTLAT_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (!g) return fail(DISTLAT_INVALID_ARGUMENT, "group is NULL");
  if (count > 0 && !coords) return fail(DISTLAT_INVALID_ARGUMENT, "coords is NULL");
  return guarded([&] {
    const std::size_t n = g->group->generators();
    std::vector<distlat::IntVector> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(read_vector(coords + i * n, n));
    *out = new distlat_subgroup{distlat::Subgroup::from_vectors(g->group, gens)};
    return DISTLAT_OK;
  });
}

void distlat_subgroup_free(distlat_subgroup* s) { delete s; }

distlat_status distlat_subgroup_sum(const distlat_subgroup* a, const distlat_subgroup* b,
                                    distlat_subgroup** out) {
  if (!out || !a || !b) return fail(DISTLAT_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new distlat_subgroup{a->value + b->value};
    return DISTLAT_OK;
  });
}

distlat_status distlat_subgroup_intersect(const distlat_subgroup* a, const distlat_subgroup* b,
                                          distlat_subgroup** out) {
  if (!out || !a || !b) return fail(DISTLAT_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new distlat_subgroup{a->value.intersect(b->value)};
    return DISTLAT_OK;
  });
}

distlat_status distlat_subgroup_equal(const distlat_subgroup* a, const distlat_subgroup* b,
                                      int* out) {
  if (!out || !a || !b) return fail(DISTLAT_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    distlat::require_same_parent(a->value.parent(), b->value.parent(), "distlat_subgroup_equal");
    *out = a->value == b->value;
    return DISTLAT_OK;
  });
}

distlat_status distlat_subgroup_contains(const distlat_subgroup* s, const char* const* coords,
                                         int* out) {
  if (!out || !s || !coords) return fail(DISTLAT_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const distlat::GroupPtr& g = s->value.parent();
    *out = s->value.contains(distlat::GroupElement(g, read_vector(coords, g->generators())));
    return DISTLAT_OK;
  });
}

char* distlat_subgroup_generators_json(const distlat_subgroup* s) {
  if (!s) return nullptr;
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : s->value.generators()) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& c : x.coords()) v.push_back(distlat::to_string(c));
    a.push_back(v);
  }
  return copy_string(a.dump());
}

void distlat_string_free(char* s) { std::free(s); }

}  // extern "C"
