#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "distlat/distlat.h"

namespace {

struct Request {
  std::string file;
  std::optional<std::string> family;
  bool augment = false;
  bool representatives = false;
  std::size_t cap = 512;
  std::optional<std::string> flavor;
  std::optional<std::string> module_spec;
  long degrees = -1;
  unsigned long long limit = 1ull << 20;
};

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_code(distlat_status s) {
  switch (s) {
    case DISTLAT_OK:
    case DISTLAT_VERIFICATION_FAILED:
    case DISTLAT_MALFORMED_INPUT:
    case DISTLAT_NO_SOLUTION:
    case DISTLAT_CAP_EXCEEDED:
      return static_cast<int>(s);
    case DISTLAT_INVALID_ARGUMENT:
      return DISTLAT_MALFORMED_INPUT;
    default:
      return 1;
  }
}

int execute(const std::string& command, const Request& r, unsigned threads) {
  const auto text = slurp(r.file);
  if (!text) {
    std::cerr << "error: cannot read " << r.file << "\n";
    return DISTLAT_MALFORMED_INPUT;
  }
  distlat_problem* problem = nullptr;
  distlat_status s = distlat_problem_parse(text->data(), text->size(), &problem);
  if (s != DISTLAT_OK) {
    std::cerr << "error: " << r.file << ": " << distlat_last_error() << "\n";
    return exit_code(s);
  }
  distlat_options o;
  distlat_options_init(&o);
  o.family = r.family ? r.family->c_str() : nullptr;
  o.augment = r.augment;
  o.representatives = r.representatives;
  o.cap = r.cap;
  o.flavor = r.flavor ? r.flavor->c_str() : nullptr;
  o.module_spec = r.module_spec ? r.module_spec->c_str() : nullptr;
  o.degrees = r.degrees;
  o.enumeration_limit = r.limit;
  o.threads = threads;

  distlat_result* result = nullptr;
  s = distlat_run(problem, command.c_str(), &o, &result);
  if (result) std::fputs(distlat_result_json(result), stdout);
  if (!result) std::cerr << "error: " << distlat_last_error() << "\n";
  distlat_result_free(result);
  distlat_problem_free(problem);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of subgroup families and the generalized Chinese remainder theorem"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(distlat_version()));
  unsigned threads = 1;
  app.add_option("--threads", threads, "Cap on internal parallelism")
      ->check(CLI::Range(1u, 1024u));

  Request r;
  std::string chosen;
  for (std::size_t i = 0; i < distlat_command_count(); ++i) {
    const std::string name = distlat_command_name(i);
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", r.file, "Problem file, or - for stdin")->required();
    sub->add_option("--family", r.family, "Family name from the problem file");
    if (name == "homology" || name == "cohomology") {
      sub->add_flag("--augment", r.augment, "Attach the augmentation in degree -1");
      sub->add_flag("--representatives", r.representatives, "Emit class representatives");
    }
    if (name == "closure" || name == "distributive" || name == "oracle")
      sub->add_option("--cap", r.cap, "Closure size cap")->check(CLI::PositiveNumber);
    if (name == "pattern")
      sub->add_option("--flavor", r.flavor, "constant, ideal or quotient")
          ->required()
          ->check(CLI::IsMember({"constant", "ideal", "quotient"}));
    if (name == "ext" || name == "tor") {
      sub->add_option("--module", r.module_spec, "Coefficient group, e.g. Z/8 or Z^2 + Z/4")
          ->required();
      sub->add_option("--degrees", r.degrees, "Highest degree to report")
          ->check(CLI::NonNegativeNumber);
    }
    if (name == "equalizer")
      sub->add_option("--limit", r.limit, "Largest residue search to enumerate");
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : DISTLAT_MALFORMED_INPUT;
  }
  return execute(chosen, r, threads);
}
