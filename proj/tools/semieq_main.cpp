// Command-line front end.  Everything goes through the shared C API.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "semieq.h"

namespace {

struct GlobalFlags {
  std::uint64_t budget = 0;  // 0 = library default
  std::uint64_t seed = 0;
  std::string corpus;
  std::string format = "text";

  semieq_options options() const {
    return {budget, seed, corpus.empty() ? nullptr : corpus.c_str(), format.c_str()};
  }
};

int finish(semieq_status status, char* report, int exit_code) {
  if (status != SEMIEQ_OK) {
    std::fprintf(stderr, "error: %s\n", semieq_last_error());
    return 2;
  }
  if (report != nullptr) {
    std::fputs(report, stdout);
    semieq_string_free(report);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-semigroup equation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_option("--budget", flags.budget, "evaluation node cap (matrix evaluations)");
  app.add_option("--seed", flags.seed, "seed echoed into reports");
  app.add_option("--corpus", flags.corpus, "corpus manifest path");
  app.add_option("--format", flags.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string semigroup, system, class_id, op = "both", equation, params;

  auto* check = app.add_subcommand("check", "evaluate a system on a semigroup");
  check->add_option("--semigroup", semigroup, "family descriptor or table file")
      ->required();
  check->add_option("--system", system, "class id, system file or inline text")
      ->required();

  auto* classify = app.add_subcommand("classify", "run every oracle and basis");
  classify->add_option("--semigroup", semigroup, "family descriptor or table file")
      ->required();

  auto* crossval = app.add_subcommand("crossval", "oracle vs basis over a corpus");
  crossval->add_option("--class", class_id, "catalogue class id")->required();

  auto* closure = app.add_subcommand("closure", "quotient/product closure suite");
  closure->add_option("--class", class_id, "catalogue class id")->required();
  closure->add_option("--op", op, "H, P or both")
      ->check(CLI::IsMember({"H", "P", "both"}));

  auto* skolemize = app.add_subcommand("skolemize", "turn a system into identities");
  skolemize->add_option("--system", system, "class id, system file or inline text")
      ->required();

  auto* localize = app.add_subcommand("localize", "local-submonoid transform");
  localize->add_option("--system", system, "class id, system file or inline text")
      ->required();

  auto* psolve = app.add_subcommand("psolve", "solvability over the positive integers");
  psolve->add_option("--eq", equation, "additive equation text")->required();
  psolve->add_option("--params", params, "comma-separated parameter values");

  auto* universal = app.add_subcommand("universal", "is a parameterless equation "
                                                    "solvable in every semigroup");
  universal->add_option("--eq", equation, "additive equation text")->required();

  auto* green = app.add_subcommand("green", "eggbox rendering of Green's relations");
  green->add_option("--semigroup", semigroup, "family descriptor or table file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors
  }

  semieq_options opts = flags.options();
  char* report = nullptr;
  int exit_code = 0;
  semieq_status status = SEMIEQ_ERR_USAGE;

  if (check->parsed()) {
    status = semieq_cmd_check(semigroup.c_str(), system.c_str(), &opts, &report,
                              &exit_code);
  } else if (classify->parsed()) {
    status = semieq_cmd_classify(semigroup.c_str(), &opts, &report, &exit_code);
  } else if (crossval->parsed()) {
    status = semieq_cmd_crossval(class_id.c_str(), &opts, &report, &exit_code);
  } else if (closure->parsed()) {
    status = semieq_cmd_closure(class_id.c_str(), op.c_str(), &opts, &report,
                                &exit_code);
  } else if (skolemize->parsed()) {
    status = semieq_cmd_skolemize(system.c_str(), &opts, &report, &exit_code);
  } else if (localize->parsed()) {
    status = semieq_cmd_localize(system.c_str(), &opts, &report, &exit_code);
  } else if (psolve->parsed()) {
    status = semieq_cmd_psolve(equation.c_str(), params.c_str(), &opts, &report,
                               &exit_code);
  } else if (universal->parsed()) {
    status = semieq_cmd_universal(equation.c_str(), &opts, &report, &exit_code);
  } else if (green->parsed()) {
    status = semieq_cmd_green(semigroup.c_str(), &opts, &report, &exit_code);
  }
  return finish(status, report, exit_code);
}
