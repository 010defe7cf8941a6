#ifndef SEMIEQ_COMMANDS_HPP_
#define SEMIEQ_COMMANDS_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"

#include "semieq/semigroup.hpp"

namespace semieq {

/// Options shared by every command; mirrors the CLI's global flags.
struct CommandOptions {
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  std::string corpus_path;  // empty = builtin corpus
  std::string format = "text";
};

/// Uniform command outcome.  `report` always carries the fields
/// command, inputs, verdict, rationale, witnesses, discrepancies and
/// elapsed_ms; `text` is the human rendering of the same content.
/// exit_code: 0 verdict true / clean, 1 verdict false / discrepancies.
struct CommandResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string text;

  std::string rendered(const std::string& format) const;
};

/// --semigroup accepts a family descriptor or a table file path;
/// --system accepts a catalogue class id, a file of systems, or inline text.
FiniteSemigroup resolve_semigroup(const std::string& spec);

CommandResult cmd_check(const std::string& semigroup, const std::string& system,
                        const CommandOptions& opts);
CommandResult cmd_classify(const std::string& semigroup, const CommandOptions& opts);
CommandResult cmd_crossval(const std::string& class_id, const CommandOptions& opts);
CommandResult cmd_closure(const std::string& class_id, const std::string& op,
                          const CommandOptions& opts);
CommandResult cmd_skolemize(const std::string& system, const CommandOptions& opts);
CommandResult cmd_localize(const std::string& system, const CommandOptions& opts);
CommandResult cmd_psolve(const std::string& equation, const std::string& params_csv,
                         const CommandOptions& opts);
CommandResult cmd_universal(const std::string& equation, const CommandOptions& opts);
CommandResult cmd_green(const std::string& semigroup, const CommandOptions& opts);

/// Eggbox-style text rendering of the D-class structure.
std::string render_eggbox(const FiniteSemigroup& s);

}  // namespace semieq

#endif  // SEMIEQ_COMMANDS_HPP_
