#include "semieq/natsolve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace semieq {

namespace {

constexpr std::int64_t kMaxExponent = 10'000;
constexpr std::int64_t kMaxCount = 1'000'000;
constexpr std::int64_t kMaxReach = 20'000'000;  // DP table cap

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in additive arithmetic");
  }
  return r;
}

std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in additive arithmetic");
  }
  return r;
}

std::int64_t gcd_list(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    g = std::gcd(g, v < 0 ? -v : v);
  }
  return g;
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  auto end = s.find_last_not_of(" \t\r\n");
  return end == std::string::npos ? std::string{} : s.substr(0, end + 1);
}

std::vector<std::string> parse_symbol_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "bad symbol list: " + text);
    }
    std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    out.push_back(text.substr(start, i - start));
  }
  return out;
}

void count_side(const std::string& side, const AdditiveEquation& eq,
                std::vector<std::int64_t>& var_counts,
                std::vector<std::int64_t>& par_counts) {
  std::size_t i = 0;
  bool any = false;
  while (i < side.size()) {
    if (std::isspace(static_cast<unsigned char>(side[i]))) {
      ++i;
      continue;
    }
    if (any) {
      if (side[i] != '*') {
        throw Error(ErrorCode::ParseError, "expected '*' between factors in: " + side);
      }
      ++i;
      while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) {
        ++i;
      }
    }
    if (i >= side.size() || !std::isalpha(static_cast<unsigned char>(side[i]))) {
      throw Error(ErrorCode::ParseError, "expected a symbol in: " + side);
    }
    std::size_t start = i;
    while (i < side.size() && std::isalnum(static_cast<unsigned char>(side[i]))) {
      ++i;
    }
    std::string sym = side.substr(start, i - start);
    std::int64_t power = 1;
    if (i < side.size() && side[i] == '^') {
      ++i;
      std::size_t dstart = i;
      while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) {
        ++i;
      }
      if (dstart == i) {
        throw Error(ErrorCode::ParseError, "expected an exponent after '^'");
      }
      power = std::stoll(side.substr(dstart, i - dstart));
      if (power < 1 || power > kMaxExponent) {
        throw Error(ErrorCode::Overflow, "exponent out of range [1," +
                                             std::to_string(kMaxExponent) + "]");
      }
    }
    auto var = std::find(eq.vars.begin(), eq.vars.end(), sym);
    auto par = std::find(eq.params.begin(), eq.params.end(), sym);
    if (var != eq.vars.end()) {
      auto& slot = var_counts[var - eq.vars.begin()];
      slot = add_ck(slot, power);
      if (slot > kMaxCount) {
        throw Error(ErrorCode::Overflow, "letter count cap exceeded for " + sym);
      }
    } else if (par != eq.params.end()) {
      auto& slot = par_counts[par - eq.params.begin()];
      slot = add_ck(slot, power);
      if (slot > kMaxCount) {
        throw Error(ErrorCode::Overflow, "letter count cap exceeded for " + sym);
      }
    } else {
      throw Error(ErrorCode::UnknownSymbol, "symbol '" + sym + "' is not declared");
    }
    any = true;
  }
  if (!any) {
    throw Error(ErrorCode::ParseError, "a word must have at least one letter");
  }
}

}  // namespace

AdditiveEquation parse_additive(const std::string& text) {
  AdditiveEquation eq;
  std::string eq_text;
  bool have_eq = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    std::string section =
        text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    pos = semi == std::string::npos ? text.size() + 1 : semi + 1;
    section = trim(section);
    if (section.empty()) {
      continue;
    }
    auto colon = section.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ParseError, "expected 'key: ...' in section: " + section);
    }
    std::string key = trim(section.substr(0, colon));
    std::string value = trim(section.substr(colon + 1));
    if (key == "params") {
      eq.params = parse_symbol_list(value);
    } else if (key == "vars") {
      eq.vars = parse_symbol_list(value);
    } else if (key == "eq") {
      eq_text = value;
      have_eq = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown section '" + key + "'");
    }
  }
  if (!have_eq) {
    throw Error(ErrorCode::ParseError, "missing 'eq:' section");
  }
  {
    auto all = eq.params;
    all.insert(all.end(), eq.vars.begin(), eq.vars.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw Error(ErrorCode::ParseError, "a symbol is declared twice");
    }
  }
  auto eq_pos = eq_text.find('=');
  if (eq_pos == std::string::npos || eq_text.find('=', eq_pos + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, "equation must contain exactly one '='");
  }
  eq.p_var.assign(eq.vars.size(), 0);
  eq.q_var.assign(eq.vars.size(), 0);
  eq.p_par.assign(eq.params.size(), 0);
  eq.q_par.assign(eq.params.size(), 0);
  count_side(eq_text.substr(0, eq_pos), eq, eq.p_var, eq.p_par);
  count_side(eq_text.substr(eq_pos + 1), eq, eq.q_var, eq.q_par);
  return eq;
}

AdditiveEquationProfile profile(const AdditiveEquation& eq) {
  AdditiveEquationProfile prof;
  prof.r = eq.p_var;
  prof.s = eq.q_var;
  prof.p = eq.p_par;
  prof.q = eq.q_par;
  for (std::size_t i = 0; i < eq.vars.size(); ++i) {
    prof.m.push_back(prof.r[i] - prof.s[i]);
  }
  for (std::size_t j = 0; j < eq.params.size(); ++j) {
    prof.n.push_back(prof.q[j] - prof.p[j]);
  }
  prof.d = gcd_list(prof.m);
  prof.dprime = gcd_list(prof.n);
  return prof;
}

bool SemigroupOfSums::contains(std::int64_t value) const {
  switch (form) {
    case Form::Empty:
      return false;
    case Form::ZeroOnly:
      return value == 0;
    case Form::FullLattice:
      return value % d == 0;
    case Form::Positive:
      if (value >= conductor) {
        return value % d == 0;
      }
      return std::binary_search(base.begin(), base.end(), value);
    case Form::Negative:
      if (value <= conductor) {
        return value % d == 0;
      }
      return std::binary_search(base.begin(), base.end(), value);
  }
  return false;
}

std::string SemigroupOfSums::describe() const {
  switch (form) {
    case Form::Empty:
      return "empty";
    case Form::ZeroOnly:
      return "{0}";
    case Form::FullLattice:
      return std::to_string(d) + "Z";
    case Form::Positive:
    case Form::Negative: {
      std::string out = form == Form::Positive ? "positive(" : "negative(";
      out += "d=" + std::to_string(d) + ", conductor=" + std::to_string(conductor) +
             ", base=[";
      for (std::size_t i = 0; i < base.size(); ++i) {
        out += (i ? "," : "") + std::to_string(base[i]);
      }
      return out + "])";
    }
  }
  return {};
}

SemigroupOfSums sums_structure(std::span<const std::int64_t> coeffs) {
  SemigroupOfSums out;
  if (coeffs.empty()) {
    out.form = SemigroupOfSums::Form::Empty;
    return out;
  }
  std::vector<std::int64_t> nz;
  for (std::int64_t c : coeffs) {
    if (c != 0) {
      nz.push_back(c);
    }
  }
  if (nz.empty()) {
    out.form = SemigroupOfSums::Form::ZeroOnly;
    return out;
  }
  out.d = gcd_list(nz);
  bool has_pos = std::any_of(nz.begin(), nz.end(), [](auto c) { return c > 0; });
  bool has_neg = std::any_of(nz.begin(), nz.end(), [](auto c) { return c < 0; });
  if (has_pos && has_neg) {
    out.form = SemigroupOfSums::Form::FullLattice;
    return out;
  }
  bool negative = has_neg;
  if (negative) {
    for (auto& c : nz) {
      c = -c;
    }
  }
  // S = shift + { nonnegative combinations }, a shifted numerical semigroup
  std::int64_t shift = 0;
  for (std::int64_t c : nz) {
    shift = add_ck(shift, c);
  }
  std::int64_t cmin = *std::min_element(nz.begin(), nz.end());
  std::int64_t cmax = *std::max_element(nz.begin(), nz.end());
  std::int64_t bound = mul_ck(cmin / out.d, cmax) + cmin + cmax + 2 * out.d + 2;
  if (bound > kMaxReach) {
    throw Error(ErrorCode::Overflow, "coefficients too large for membership table");
  }
  std::vector<bool> reach(static_cast<std::size_t>(bound), false);
  reach[0] = true;
  for (std::int64_t c : nz) {
    for (std::int64_t k = c; k < bound; ++k) {
      if (reach[static_cast<std::size_t>(k - c)]) {
        reach[static_cast<std::size_t>(k)] = true;
      }
    }
  }
  auto member = [&](std::int64_t v) {
    return v >= shift && v - shift < bound && reach[static_cast<std::size_t>(v - shift)];
  };
  std::int64_t run_needed = cmin / out.d;
  std::int64_t run = 0;
  std::int64_t conductor = 0;
  for (std::int64_t v = out.d;; v += out.d) {
    if (v - shift >= bound) {
      throw Error(ErrorCode::InternalCheckFailed, "membership table bound too small");
    }
    run = member(v) ? run + 1 : 0;
    if (run == run_needed) {
      conductor = v - (run_needed - 1) * out.d;
      break;
    }
  }
  out.form = SemigroupOfSums::Form::Positive;
  out.conductor = conductor;
  for (std::int64_t v = out.d; v < conductor; v += out.d) {
    if (member(v)) {
      out.base.push_back(v);
    }
  }
  if (negative) {
    out.form = SemigroupOfSums::Form::Negative;
    out.conductor = -out.conductor;
    for (auto& v : out.base) {
      v = -v;
    }
    std::sort(out.base.begin(), out.base.end());
  }
  return out;
}

bool sums_contained(const SemigroupOfSums& inner, const SemigroupOfSums& outer) {
  using Form = SemigroupOfSums::Form;
  switch (inner.form) {
    case Form::Empty:
      return true;
    case Form::ZeroOnly:
      return outer.contains(0);
    case Form::FullLattice:
      return outer.form == Form::FullLattice && inner.d % outer.d == 0;
    case Form::Positive: {
      if (outer.form == Form::FullLattice) {
        return inner.d % outer.d == 0;
      }
      if (outer.form != Form::Positive) {
        return false;
      }
      for (std::int64_t v : inner.base) {
        if (!outer.contains(v)) {
          return false;
        }
      }
      if (inner.d % outer.d != 0) {
        return false;
      }
      for (std::int64_t v = inner.conductor; v < outer.conductor; v += inner.d) {
        if (!outer.contains(v)) {
          return false;
        }
      }
      return true;
    }
    case Form::Negative: {
      if (outer.form == Form::FullLattice) {
        return inner.d % outer.d == 0;
      }
      if (outer.form != Form::Negative) {
        return false;
      }
      for (std::int64_t v : inner.base) {
        if (!outer.contains(v)) {
          return false;
        }
      }
      if (inner.d % outer.d != 0) {
        return false;
      }
      for (std::int64_t v = inner.conductor; v > outer.conductor; v -= inner.d) {
        if (!outer.contains(v)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

SolvabilityDecision decide_solvable_in_P(const AdditiveEquationProfile& prof) {
  SolvabilityDecision out;
  if (prof.m.empty()) {
    // no variables to pick: both sides must already agree for every choice
    // of positive parameters, i.e. every count difference vanishes
    out.rationale = SolvabilityRationale::NoVariables;
    out.solvable = std::all_of(prof.n.begin(), prof.n.end(),
                               [](std::int64_t v) { return v == 0; });
    return out;
  }
  SemigroupOfSums targets = prof.n.empty()
                                ? SemigroupOfSums{SemigroupOfSums::Form::ZeroOnly, 0, 0, {}}
                                : sums_structure(prof.n);
  SemigroupOfSums sums = sums_structure(prof.m);
  out.solvable = sums_contained(targets, sums);
  bool mixed = std::any_of(prof.m.begin(), prof.m.end(),
                           [](std::int64_t v) { return v > 0; }) &&
               std::any_of(prof.m.begin(), prof.m.end(),
                           [](std::int64_t v) { return v < 0; });
  if (mixed) {
    out.rationale = SolvabilityRationale::MixedSignsGcd;
    bool shortcut = prof.dprime % prof.d == 0;
    if (shortcut != out.solvable) {
      throw Error(ErrorCode::InternalCheckFailed,
                  "gcd shortcut disagrees with the containment decision");
    }
  } else {
    out.rationale = SolvabilityRationale::Containment;
  }
  return out;
}

namespace {

std::int64_t witness_target(const AdditiveEquationProfile& prof,
                            std::span<const std::int64_t> params) {
  if (params.size() != prof.n.size()) {
    throw Error(ErrorCode::UsageError, "parameter count does not match the profile");
  }
  std::int64_t target = 0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    if (params[j] < 1) {
      throw Error(ErrorCode::UsageError, "parameters must be positive integers");
    }
    target = add_ck(target, mul_ck(params[j], prof.n[j]));
  }
  return target;
}

// lexicographic DFS over t in [1,bound]^l; zero coefficients are pinned to
// t=1 (their value never matters and 1 is the lexicographic minimum)
void witness_dfs(const std::vector<std::int64_t>& m, std::int64_t bound,
                 std::int64_t remaining, std::size_t i, std::vector<std::int64_t>& t,
                 std::vector<std::vector<std::int64_t>>& out, std::size_t limit,
                 const std::vector<std::int64_t>& suffix_min,
                 const std::vector<std::int64_t>& suffix_max,
                 const std::vector<std::int64_t>& suffix_gcd) {
  if (out.size() >= limit) {
    return;
  }
  if (i == m.size()) {
    if (remaining == 0) {
      out.push_back(t);
    }
    return;
  }
  if (remaining < suffix_min[i] || remaining > suffix_max[i]) {
    return;
  }
  if (suffix_gcd[i] == 0 ? remaining != 0 : remaining % suffix_gcd[i] != 0) {
    return;
  }
  if (m[i] == 0) {
    t[i] = 1;
    witness_dfs(m, bound, remaining, i + 1, t, out, limit, suffix_min, suffix_max,
                suffix_gcd);
    return;
  }
  for (std::int64_t v = 1; v <= bound && out.size() < limit; ++v) {
    t[i] = v;
    witness_dfs(m, bound, remaining - v * m[i], i + 1, t, out, limit, suffix_min,
                suffix_max, suffix_gcd);
  }
}

std::vector<std::vector<std::int64_t>> bounded_witnesses(
    const AdditiveEquationProfile& prof, std::int64_t target, std::int64_t bound,
    std::size_t limit) {
  std::size_t l = prof.m.size();
  std::vector<std::int64_t> suffix_min(l + 1, 0), suffix_max(l + 1, 0),
      suffix_gcd(l + 1, 0);
  for (std::size_t i = l; i-- > 0;) {
    std::int64_t lo = prof.m[i] > 0 ? prof.m[i] : mul_ck(bound, prof.m[i]);
    std::int64_t hi = prof.m[i] > 0 ? mul_ck(bound, prof.m[i]) : prof.m[i];
    if (prof.m[i] == 0) {
      lo = hi = 0;
    }
    suffix_min[i] = add_ck(suffix_min[i + 1], lo);
    suffix_max[i] = add_ck(suffix_max[i + 1], hi);
    suffix_gcd[i] = std::gcd(suffix_gcd[i + 1], prof.m[i] < 0 ? -prof.m[i] : prof.m[i]);
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(l, 0);
  witness_dfs(prof.m, bound, target, 0, t, out, limit, suffix_min, suffix_max,
              suffix_gcd);
  return out;
}

std::int64_t witness_bound(const AdditiveEquationProfile& prof, std::int64_t target) {
  std::vector<std::int64_t> abs_m;
  for (std::int64_t v : prof.m) {
    if (v != 0) {
      abs_m.push_back(v < 0 ? -v : v);
    }
  }
  if (abs_m.empty()) {
    return 1;
  }
  SemigroupOfSums abs_structure = sums_structure(abs_m);
  std::int64_t cmin = *std::min_element(abs_m.begin(), abs_m.end());
  std::int64_t top = std::max<std::int64_t>(abs_structure.conductor,
                                            target < 0 ? -target : target);
  return top / cmin + static_cast<std::int64_t>(prof.m.size()) + 1;
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_witnesses(
    const AdditiveEquationProfile& prof, std::span<const std::int64_t> params,
    std::size_t limit) {
  std::int64_t target = witness_target(prof, params);
  if (prof.m.empty()) {
    std::vector<std::vector<std::int64_t>> out;
    if (target == 0 && limit > 0) {
      out.push_back({});
    }
    return out;
  }
  return bounded_witnesses(prof, target, witness_bound(prof, target), limit);
}

std::optional<std::vector<std::int64_t>> find_witness(
    const AdditiveEquationProfile& prof, std::span<const std::int64_t> params) {
  std::int64_t target = witness_target(prof, params);
  if (prof.m.empty()) {
    if (target == 0) {
      return std::vector<std::int64_t>{};
    }
    return std::nullopt;
  }
  std::int64_t bound = witness_bound(prof, target);
  std::vector<std::vector<std::int64_t>> found;
  for (int attempt = 0; attempt < 8 && found.empty(); ++attempt) {
    found = bounded_witnesses(prof, target, bound, 1);
    if (!found.empty()) {
      break;
    }
    // the bounded search is trusted only when unbounded membership agrees
    std::vector<std::int64_t> nonzero;
    for (std::int64_t v : prof.m) {
      if (v != 0) {
        nonzero.push_back(v);
      }
    }
    bool member = nonzero.empty() ? target == 0 : sums_structure(nonzero).contains(target);
    if (!member) {
      return std::nullopt;
    }
    bound = mul_ck(bound, 2);
  }
  if (found.empty()) {
    throw Error(ErrorCode::InternalCheckFailed,
                "membership says solvable but the bounded search found nothing");
  }
  const auto& t = found.front();
  // re-verify by substitution through the raw counts
  std::int64_t lhs = 0, rhs = 0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    lhs = add_ck(lhs, mul_ck(prof.p[j], params[j]));
    rhs = add_ck(rhs, mul_ck(prof.q[j], params[j]));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    lhs = add_ck(lhs, mul_ck(prof.r[i], t[i]));
    rhs = add_ck(rhs, mul_ck(prof.s[i], t[i]));
  }
  if (lhs != rhs) {
    throw Error(ErrorCode::InternalCheckFailed, "witness failed the substitution check");
  }
  return t;
}

std::pair<std::int64_t, std::int64_t> substitute(const AdditiveEquation& eq,
                                                 std::span<const std::int64_t> params,
                                                 std::span<const std::int64_t> vars) {
  if (params.size() != eq.params.size() || vars.size() != eq.vars.size()) {
    throw Error(ErrorCode::UsageError, "assignment sizes do not match the equation");
  }
  std::int64_t lhs = 0, rhs = 0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    lhs = add_ck(lhs, mul_ck(eq.p_par[j], params[j]));
    rhs = add_ck(rhs, mul_ck(eq.q_par[j], params[j]));
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    lhs = add_ck(lhs, mul_ck(eq.p_var[i], vars[i]));
    rhs = add_ck(rhs, mul_ck(eq.q_var[i], vars[i]));
  }
  return {lhs, rhs};
}

UniversalClassification classify_universal(const AdditiveEquation& eq) {
  if (!eq.params.empty()) {
    throw Error(ErrorCode::HasParameters,
                "universality is defined for parameterless equations");
  }
  UniversalClassification out;
  bool all_equal = true;
  bool more_left = false, more_right = false;
  for (std::size_t i = 0; i < eq.vars.size(); ++i) {
    if (eq.p_var[i] != eq.q_var[i]) {
      all_equal = false;
    }
    more_left |= eq.p_var[i] > eq.q_var[i];
    more_right |= eq.p_var[i] < eq.q_var[i];
  }
  if (all_equal) {
    out.universal = true;
    out.tag = UniversalTag::EqualCounts;
  } else if (more_left && more_right) {
    out.universal = true;
    out.tag = UniversalTag::MixedInequalities;
  }
  return out;
}

}  // namespace semieq
