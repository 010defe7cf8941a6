#include "semieq.h"

#include <cstring>
#include <string>

#include "semieq/classes.hpp"
#include "semieq/commands.hpp"
#include "semieq/eqdsl.hpp"
#include "semieq/eval.hpp"
#include "semieq/semigroup.hpp"

namespace {

thread_local std::string g_last_error;

struct semieq_semigroup_impl {
  semieq::FiniteSemigroup sg;
};
struct semieq_system_impl {
  semieq::EquationSystem sys;
};

semieq_status status_for(const semieq::Error& e) {
  using semieq::ErrorCode;
  switch (e.code()) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ParseError:
    case ErrorCode::UnboundSymbol:
    case ErrorCode::DuplicateBinder:
    case ErrorCode::UnknownSymbol:
      return SEMIEQ_ERR_PARSE;
    case ErrorCode::BudgetExceeded:
      return SEMIEQ_ERR_BUDGET;
    case ErrorCode::InternalCheckFailed:
      return SEMIEQ_ERR_INTERNAL;
    case ErrorCode::UsageError:
    case ErrorCode::UnknownClass:
    case ErrorCode::UnsupportedParameter:
    case ErrorCode::HasParameters:
      return SEMIEQ_ERR_USAGE;
    default:
      return SEMIEQ_ERR_INVALID;
  }
}

template <typename F>
semieq_status guarded(F&& body) {
  try {
    body();
    return SEMIEQ_OK;
  } catch (const semieq::Error& e) {
    g_last_error = e.what();
    return status_for(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEMIEQ_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

semieq::CommandOptions to_options(const semieq_options* opts) {
  semieq::CommandOptions out;
  if (opts != nullptr) {
    if (opts->budget != 0) {
      out.budget = opts->budget;
    }
    out.seed = opts->seed;
    if (opts->corpus != nullptr) {
      out.corpus_path = opts->corpus;
    }
    if (opts->format != nullptr) {
      out.format = opts->format;
    }
  }
  return out;
}

semieq_status run_command(const semieq_options* opts, char** report, int* exit_code,
                          semieq::CommandResult (*fn)(const semieq::CommandOptions&,
                                                      const char*, const char*),
                          const char* arg1, const char* arg2) {
  return guarded([&] {
    semieq::CommandOptions options = to_options(opts);
    semieq::CommandResult result = fn(options, arg1, arg2);
    if (report != nullptr) {
      *report = copy_string(result.rendered(options.format));
    }
    if (exit_code != nullptr) {
      *exit_code = result.exit_code;
    }
  });
}

}  // namespace

extern "C" {

const char* semieq_last_error(void) { return g_last_error.c_str(); }

void semieq_string_free(char* s) { delete[] s; }

semieq_status semieq_semigroup_create(const char* descriptor_or_path,
                                      semieq_semigroup** out) {
  return guarded([&] {
    auto* handle = new semieq_semigroup_impl{
        semieq::resolve_semigroup(descriptor_or_path ? descriptor_or_path : "")};
    *out = reinterpret_cast<semieq_semigroup*>(handle);
  });
}

semieq_status semieq_semigroup_from_table(uint32_t order, const uint32_t* row_major,
                                          semieq_semigroup** out) {
  return guarded([&] {
    std::vector<semieq::element> flat(row_major,
                                      row_major + static_cast<size_t>(order) * order);
    auto* handle = new semieq_semigroup_impl{
        semieq::FiniteSemigroup::validated(order, std::move(flat))};
    *out = reinterpret_cast<semieq_semigroup*>(handle);
  });
}

uint32_t semieq_semigroup_order(const semieq_semigroup* s) {
  return reinterpret_cast<const semieq_semigroup_impl*>(s)->sg.order();
}

uint32_t semieq_semigroup_product(const semieq_semigroup* s, uint32_t a, uint32_t b) {
  return reinterpret_cast<const semieq_semigroup_impl*>(s)->sg.product(a, b);
}

void semieq_semigroup_free(semieq_semigroup* s) {
  delete reinterpret_cast<semieq_semigroup_impl*>(s);
}

semieq_status semieq_system_parse(const char* text, semieq_system** out) {
  return guarded([&] {
    auto* handle = new semieq_system_impl{semieq::parse_system(text ? text : "")};
    *out = reinterpret_cast<semieq_system*>(handle);
  });
}

semieq_status semieq_system_for_class(const char* class_id, semieq_system** out) {
  return guarded([&] {
    auto* handle = new semieq_system_impl{
        semieq::catalogue_entry(class_id ? class_id : "").basis};
    *out = reinterpret_cast<semieq_system*>(handle);
  });
}

semieq_status semieq_system_render(const semieq_system* sys, char** out_text) {
  return guarded([&] {
    *out_text =
        copy_string(semieq::render(reinterpret_cast<const semieq_system_impl*>(sys)->sys));
  });
}

void semieq_system_free(semieq_system* sys) {
  delete reinterpret_cast<semieq_system_impl*>(sys);
}

semieq_status semieq_evaluate(const semieq_semigroup* s, const semieq_system* sys,
                              uint64_t budget, int* verdict, char** report_json) {
  return guarded([&] {
    semieq::EvalOptions opts;
    if (budget != 0) {
      opts.budget = budget;
    }
    const auto& sg = reinterpret_cast<const semieq_semigroup_impl*>(s)->sg;
    const auto& system = reinterpret_cast<const semieq_system_impl*>(sys)->sys;
    semieq::EvalReport report = semieq::evaluate(sg, system, opts);
    if (verdict != nullptr) {
      *verdict = report.verdict ? 1 : 0;
    }
    if (report_json != nullptr) {
      nlohmann::json j = {{"verdict", report.verdict},
                          {"matrix_evals", report.matrix_evals},
                          {"estimated_cost", report.estimated_cost},
                          {"symbols", report.symbols},
                          {"trace", report.trace}};
      *report_json = copy_string(j.dump(2));
    }
  });
}

semieq_status semieq_cmd_check(const char* semigroup, const char* system,
                               const semieq_options* opts, char** report,
                               int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char* b) {
        return semieq::cmd_check(a ? a : "", b ? b : "", o);
      },
      semigroup, system);
}

semieq_status semieq_cmd_classify(const char* semigroup, const semieq_options* opts,
                                  char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_classify(a ? a : "", o);
      },
      semigroup, nullptr);
}

semieq_status semieq_cmd_crossval(const char* class_id, const semieq_options* opts,
                                  char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_crossval(a ? a : "", o);
      },
      class_id, nullptr);
}

semieq_status semieq_cmd_closure(const char* class_id, const char* op,
                                 const semieq_options* opts, char** report,
                                 int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char* b) {
        return semieq::cmd_closure(a ? a : "", b ? b : "both", o);
      },
      class_id, op);
}

semieq_status semieq_cmd_skolemize(const char* system, const semieq_options* opts,
                                   char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_skolemize(a ? a : "", o);
      },
      system, nullptr);
}

semieq_status semieq_cmd_localize(const char* system, const semieq_options* opts,
                                  char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_localize(a ? a : "", o);
      },
      system, nullptr);
}

semieq_status semieq_cmd_psolve(const char* equation, const char* params_csv,
                                const semieq_options* opts, char** report,
                                int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char* b) {
        return semieq::cmd_psolve(a ? a : "", b ? b : "", o);
      },
      equation, params_csv);
}

semieq_status semieq_cmd_universal(const char* equation, const semieq_options* opts,
                                   char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_universal(a ? a : "", o);
      },
      equation, nullptr);
}

semieq_status semieq_cmd_green(const char* semigroup, const semieq_options* opts,
                               char** report, int* exit_code) {
  return run_command(
      opts, report, exit_code,
      [](const semieq::CommandOptions& o, const char* a, const char*) {
        return semieq::cmd_green(a ? a : "", o);
      },
      semigroup, nullptr);
}

}  // extern "C"
