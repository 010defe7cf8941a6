#include "semieq/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semieq/classes.hpp"
#include "semieq/closure.hpp"
#include "semieq/corpus.hpp"
#include "semieq/eval.hpp"
#include "semieq/families.hpp"
#include "semieq/green.hpp"
#include "semieq/natsolve.hpp"
#include "semieq/transforms.hpp"

namespace semieq {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json base_report(const std::string& command, const CommandOptions& opts) {
  return json{{"command", command},
              {"inputs", json{{"budget", opts.budget}, {"seed", opts.seed}}},
              {"verdict", nullptr},
              {"rationale", ""},
              {"witnesses", json::array()},
              {"discrepancies", json::array()},
              {"elapsed_ms", 0.0}};
}

void set_inputs(json& report, std::initializer_list<std::pair<const char*, std::string>> kv) {
  for (const auto& [k, v] : kv) {
    report["inputs"][k] = v;
  }
}

EvalOptions eval_options(const CommandOptions& opts) {
  EvalOptions e;
  e.budget = opts.budget;
  return e;
}

const Corpus& corpus_for(const CommandOptions& opts, Corpus& storage) {
  if (opts.corpus_path.empty()) {
    return builtin_corpus();
  }
  storage = load_manifest(opts.corpus_path);
  return storage;
}

struct NamedSystem {
  std::string name;
  EquationSystem sys;
};

std::vector<NamedSystem> resolve_systems(const std::string& spec) {
  if (is_catalogue_class(spec)) {
    return {{spec, catalogue_entry(spec).basis}};
  }
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto systems = parse_systems(buffer.str());
    if (systems.empty()) {
      throw Error(ErrorCode::ParseError, spec + " contains no systems");
    }
    std::vector<NamedSystem> out;
    for (std::size_t i = 0; i < systems.size(); ++i) {
      out.push_back({spec + "#" + std::to_string(i + 1), std::move(systems[i])});
    }
    return out;
  }
  return {{"inline", parse_system(spec)}};
}

json trace_rows(const FiniteSemigroup& s, const EvalReport& report) {
  json rows = json::array();
  for (const auto& row : report.trace) {
    json obj = json::object();
    for (std::size_t i = 0; i < report.symbols.size(); ++i) {
      obj[report.symbols[i]] = s.display(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace

std::string CommandResult::rendered(const std::string& format) const {
  if (format == "json") {
    return report.dump(2) + "\n";
  }
  return text;
}

FiniteSemigroup resolve_semigroup(const std::string& spec) {
  if (looks_like_descriptor(spec)) {
    return make_family(spec);
  }
  if (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)) {
    return load_table(spec);
  }
  throw Error(ErrorCode::UsageError,
              "'" + spec + "' is neither a family descriptor nor a table file");
}

CommandResult cmd_check(const std::string& semigroup, const std::string& system,
                        const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("check", opts);
  set_inputs(result.report, {{"semigroup", semigroup}, {"system", system}});
  FiniteSemigroup s = resolve_semigroup(semigroup);
  auto systems = resolve_systems(system);

  bool all = true;
  std::ostringstream text;
  json details = json::array();
  for (const auto& [name, sys] : systems) {
    EvalReport report = evaluate(s, sys, eval_options(opts));
    all = all && report.verdict;
    details.push_back({{"system", name},
                       {"rendered", render(sys)},
                       {"verdict", report.verdict},
                       {"matrix_evals", report.matrix_evals},
                       {"trace", trace_rows(s, report)}});
    text << name << ": " << (report.verdict ? "true" : "false") << "  ("
         << report.matrix_evals << " matrix evaluations)\n";
    if (!report.trace.empty()) {
      const auto& row = report.trace.front();
      text << "  " << (report.verdict ? "sample witness row:" : "sample failing row:");
      for (std::size_t i = 0; i < report.symbols.size(); ++i) {
        text << " " << report.symbols[i] << "=" << s.display(row[i]);
      }
      text << "\n";
    }
  }
  result.report["verdict"] = all;
  result.report["witnesses"] = details;
  result.report["rationale"] = "quantifier search over " + std::to_string(s.order()) +
                               " elements";
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = all ? 0 : 1;
  text << "overall: " << (all ? "true" : "false") << "\n";
  result.text = text.str();
  return result;
}

CommandResult cmd_classify(const std::string& semigroup, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("classify", opts);
  set_inputs(result.report, {{"semigroup", semigroup}});
  FiniteSemigroup s = resolve_semigroup(semigroup);

  std::ostringstream text;
  text << "class        oracle  basis   agree\n";
  json rows = json::array();
  json discrepancies = json::array();
  for (const auto& entry : catalogue()) {
    bool oracle = entry.oracle(s);
    json row = {{"class", entry.id}, {"oracle", oracle}};
    std::string basis_text;
    try {
      bool basis = evaluate(s, entry.basis, eval_options(opts)).verdict;
      row["basis"] = basis;
      bool agree = basis == oracle;
      row["agree"] = agree;
      if (!agree) {
        discrepancies.push_back({{"class", entry.id}, {"oracle", oracle}, {"basis", basis}});
      }
      basis_text = basis ? "true " : "false";
      row["weakened"] = entry.weakened;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) {
        throw;
      }
      row["basis"] = nullptr;
      row["agree"] = nullptr;
      row["budget_estimate"] = e.detail();
      basis_text = "over-budget";
    }
    rows.push_back(std::move(row));
    text << entry.id << std::string(entry.id.size() < 13 ? 13 - entry.id.size() : 1, ' ')
         << (oracle ? "true " : "false") << "   " << basis_text << "\n";
  }
  result.report["witnesses"] = rows;
  result.report["discrepancies"] = discrepancies;
  result.report["verdict"] = discrepancies.empty();
  result.report["rationale"] = "structural oracles vs equational bases";
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = discrepancies.empty() ? 0 : 1;
  text << (discrepancies.empty() ? "no disagreements\n"
                                 : "DISAGREEMENTS: " + std::to_string(discrepancies.size()) +
                                       " (see report)\n");
  result.text = text.str();
  return result;
}

CommandResult cmd_crossval(const std::string& class_id, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("crossval", opts);
  set_inputs(result.report, {{"class", class_id}, {"corpus", opts.corpus_path}});
  Corpus storage;
  const Corpus& corpus = corpus_for(opts, storage);
  CrossValResult cv = cross_validate(class_id, corpus, eval_options(opts));

  std::ostringstream text;
  json discrepancies = json::array();
  for (const auto& item : cv.disagreements) {
    discrepancies.push_back(
        {{"member", item.member}, {"oracle", item.oracle}, {"basis", item.basis}});
    text << "disagreement on " << item.member << ": oracle "
         << (item.oracle ? "true" : "false") << ", basis "
         << (item.basis ? "true" : "false") << "\n";
  }
  json skips = json::array();
  for (const auto& skip : cv.budget_skips) {
    skips.push_back({{"member", skip.member}, {"estimated_cost", skip.estimated_cost}});
    text << "budget skip on " << skip.member << " (estimated cost "
         << skip.estimated_cost << ")\n";
  }
  result.report["discrepancies"] = discrepancies;
  result.report["witnesses"] = skips;
  result.report["verdict"] = cv.disagreements.empty();
  result.report["rationale"] = "oracle vs basis over " +
                               std::to_string(corpus.size()) + " corpus members";
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = cv.disagreements.empty() ? 0 : 1;
  text << "class " << class_id << ": " << cv.disagreements.size() << " disagreements, "
       << cv.budget_skips.size() << " budget skips over " << corpus.size()
       << " members\n";
  result.text = text.str();
  return result;
}

CommandResult cmd_closure(const std::string& class_id, const std::string& op,
                          const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("closure", opts);
  set_inputs(result.report, {{"class", class_id}, {"op", op}, {"corpus", opts.corpus_path}});
  if (op != "H" && op != "P" && op != "both") {
    throw Error(ErrorCode::UsageError, "--op must be H, P or both");
  }
  Corpus storage;
  const Corpus& corpus = corpus_for(opts, storage);
  ClosureOptions copts;
  copts.eval = eval_options(opts);

  json discrepancies = json::array();
  json skips = json::array();
  std::ostringstream text;
  auto absorb = [&](const char* which, const ClosureResult& r) {
    for (const auto& v : r.violations) {
      discrepancies.push_back({{"op", which}, {"violation", v.description}});
      text << which << " violation: " << v.description << "\n";
    }
    for (const auto& s : r.skipped) {
      skips.push_back({{"op", which}, {"skipped", s}});
    }
  };
  if (op == "H" || op == "both") {
    absorb("H", closed_under_H(class_id, corpus, copts));
  }
  if (op == "P" || op == "both") {
    absorb("P", closed_under_P(class_id, corpus, copts));
    if (class_id == "maxj") {
      // the bare maximum-class condition is the interesting non-closed case
      absorb("P", maxj_bare_condition_p_study(corpus));
    }
  }
  result.report["discrepancies"] = discrepancies;
  result.report["witnesses"] = skips;
  result.report["verdict"] = discrepancies.empty();
  result.report["rationale"] = "quotient and product closure via structural oracles";
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = discrepancies.empty() ? 0 : 1;
  text << "class " << class_id << " (" << op << "): " << discrepancies.size()
       << " violations, " << skips.size() << " skips\n";
  result.text = text.str();
  return result;
}

CommandResult cmd_skolemize(const std::string& system, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("skolemize", opts);
  set_inputs(result.report, {{"system", system}});
  auto systems = resolve_systems(system);
  std::ostringstream text;
  json outputs = json::array();
  for (const auto& [name, sys] : systems) {
    IdentitySystem ids = skolemize(sys);
    std::string rendered = render(ids);
    json ops = json::array();
    for (const auto& o : ids.ops) {
      ops.push_back({{"name", o.name}, {"arity", o.args.size()}});
    }
    outputs.push_back({{"system", name}, {"identities", rendered}, {"signature", ops}});
    text << rendered << "\n";
  }
  result.report["witnesses"] = outputs;
  result.report["verdict"] = true;
  result.report["rationale"] = "existential elimination, leftmost first";
  result.report["elapsed_ms"] = clock.ms();
  result.text = text.str();
  return result;
}

CommandResult cmd_localize(const std::string& system, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("localize", opts);
  set_inputs(result.report, {{"system", system}});
  auto systems = resolve_systems(system);
  std::ostringstream text;
  json outputs = json::array();
  for (const auto& [name, sys] : systems) {
    EquationSystem local = localise(sys);
    outputs.push_back({{"system", name}, {"localised", render(local)}});
    text << render(local) << "\n";
  }
  result.report["witnesses"] = outputs;
  result.report["verdict"] = true;
  result.report["rationale"] = "every symbol occurrence wrapped into the local submonoid";
  result.report["elapsed_ms"] = clock.ms();
  result.text = text.str();
  return result;
}

CommandResult cmd_psolve(const std::string& equation, const std::string& params_csv,
                         const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("psolve", opts);
  set_inputs(result.report, {{"eq", equation}, {"params", params_csv}});
  AdditiveEquation eq = parse_additive(equation);
  AdditiveEquationProfile prof = profile(eq);
  SolvabilityDecision decision = decide_solvable_in_P(prof);

  SemigroupOfSums structure_m = sums_structure(prof.m);
  SemigroupOfSums structure_n = sums_structure(prof.n);
  const char* rationale =
      decision.rationale == SolvabilityRationale::NoVariables     ? "no-variables"
      : decision.rationale == SolvabilityRationale::MixedSignsGcd ? "mixed-signs-gcd"
                                                                  : "containment";
  result.report["m"] = prof.m;
  result.report["n"] = prof.n;
  result.report["d"] = prof.d;
  result.report["dprime"] = prof.dprime;
  result.report["structure_m"] = structure_m.describe();
  result.report["structure_n"] = structure_n.describe();
  result.report["solvable"] = decision.solvable;
  result.report["verdict"] = decision.solvable;
  result.report["rationale"] = rationale;

  std::ostringstream text;
  auto vec = [](const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + ")";
  };
  text << "m = " << vec(prof.m) << ", n = " << vec(prof.n) << ", d = " << prof.d
       << ", d' = " << prof.dprime << "\n";
  text << "S(m) = " << structure_m.describe() << "\n";
  text << "S(n) = " << structure_n.describe() << "\n";
  text << "solvable: " << (decision.solvable ? "yes" : "no") << " (" << rationale
       << ")\n";

  if (!params_csv.empty()) {
    std::vector<std::int64_t> params;
    std::size_t pos = 0;
    while (pos <= params_csv.size()) {
      auto comma = params_csv.find(',', pos);
      std::string piece = params_csv.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        params.push_back(std::stoll(piece));
      } catch (const std::exception&) {
        throw Error(ErrorCode::UsageError, "bad parameter value '" + piece + "'");
      }
      if (comma == std::string::npos) {
        break;
      }
      pos = comma + 1;
    }
    auto witness = find_witness(prof, params);
    if (witness) {
      auto [lhs, rhs] = substitute(eq, params, *witness);
      result.report["witness"] = *witness;
      result.report["common_value"] = lhs;
      result.report["witnesses"].push_back(
          {{"witness", *witness}, {"common_value", lhs}});
      text << "witness " << vec(*witness) << ", common value " << lhs << "\n";
      (void)rhs;
    } else {
      result.report["witness"] = nullptr;
      text << "no witness for parameters " << vec(params) << "\n";
      result.report["verdict"] = false;
      result.exit_code = 1;
      result.report["elapsed_ms"] = clock.ms();
      result.text = text.str();
      return result;
    }
  }
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = decision.solvable ? 0 : 1;
  result.text = text.str();
  return result;
}

CommandResult cmd_universal(const std::string& equation, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("universal", opts);
  set_inputs(result.report, {{"eq", equation}});
  AdditiveEquation eq = parse_additive(equation);
  UniversalClassification cls = classify_universal(eq);
  const char* tag = cls.tag == UniversalTag::EqualCounts       ? "equal-counts"
                    : cls.tag == UniversalTag::MixedInequalities ? "mixed-inequalities"
                                                                 : "not-universal";
  result.report["verdict"] = cls.universal;
  result.report["rationale"] = tag;
  result.report["elapsed_ms"] = clock.ms();
  result.exit_code = cls.universal ? 0 : 1;
  result.text = std::string("universal: ") + (cls.universal ? "yes" : "no") + " (" +
                tag + ")\n";
  return result;
}

std::string render_eggbox(const FiniteSemigroup& s) {
  GreenData g = green_data(s);
  std::ostringstream out;
  out << "order " << s.order() << ": " << g.num_r() << " R-classes, " << g.num_l()
      << " L-classes, " << g.num_h() << " H-classes, " << g.num_d() << " D-classes, "
      << g.num_j() << " J-classes, " << g.idempotents.count() << " idempotents\n";
  for (element d = 0; d < g.num_d(); ++d) {
    std::vector<element> members;
    for (element a = 0; a < s.order(); ++a) {
      if (g.d_class[a] == d) {
        members.push_back(a);
      }
    }
    // R rows and L columns present in this D-class, ordered by least member
    std::vector<element> rows, cols;
    for (element a : members) {
      if (std::find(rows.begin(), rows.end(), g.r_class[a]) == rows.end()) {
        rows.push_back(g.r_class[a]);
      }
      if (std::find(cols.begin(), cols.end(), g.l_class[a]) == cols.end()) {
        cols.push_back(g.l_class[a]);
      }
    }
    std::vector<std::vector<std::string>> cells(rows.size(),
                                                std::vector<std::string>(cols.size()));
    for (element a : members) {
      std::size_t r =
          std::find(rows.begin(), rows.end(), g.r_class[a]) - rows.begin();
      std::size_t c =
          std::find(cols.begin(), cols.end(), g.l_class[a]) - cols.begin();
      std::string& cell = cells[r][c];
      if (!cell.empty()) {
        cell += " ";
      }
      cell += s.display(a);
      if (g.idempotents.contains(a)) {
        cell += "*";
      }
    }
    std::vector<std::size_t> widths(cols.size(), 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        widths[c] = std::max(widths[c], cells[r][c].size());
      }
    }
    out << "D-class " << d << " (" << members.size() << " elements)\n";
    std::string rule = "+";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      rule += std::string(widths[c] + 2, '-') + "+";
    }
    out << rule << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << "|";
      for (std::size_t c = 0; c < cols.size(); ++c) {
        out << " " << cells[r][c] << std::string(widths[c] - cells[r][c].size(), ' ')
            << " |";
      }
      out << "\n" << rule << "\n";
    }
  }
  return out.str();
}

CommandResult cmd_green(const std::string& semigroup, const CommandOptions& opts) {
  Stopwatch clock;
  CommandResult result;
  result.report = base_report("green", opts);
  set_inputs(result.report, {{"semigroup", semigroup}});
  FiniteSemigroup s = resolve_semigroup(semigroup);
  GreenData g = green_data(s);
  result.text = render_eggbox(s);
  result.report["verdict"] = true;
  result.report["rationale"] = "eggbox rendering";
  result.report["witnesses"] = {{"order", s.order()},
                                {"r_classes", g.num_r()},
                                {"l_classes", g.num_l()},
                                {"h_classes", g.num_h()},
                                {"d_classes", g.num_d()},
                                {"j_classes", g.num_j()},
                                {"idempotents", g.idempotents.count()},
                                {"eggbox", result.text}};
  result.report["elapsed_ms"] = clock.ms();
  return result;
}

}  // namespace semieq
