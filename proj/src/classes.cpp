#include "semieq/classes.hpp"

#include <algorithm>

#include "semieq/families.hpp"

namespace semieq {

namespace {

const std::vector<std::string>& f_words() {
  static const std::vector<std::string> words = {"a*x", "x*a", "b*y", "y*b"};
  return words;
}

// Basis text for the inverse-pair classes: "x in V(a) & y in V(b)" plus one
// clause per product over F = {ax, xa, by, yb}.
std::string f_product_basis(int length, const std::string& clause_kind) {
  std::string text = "forall a b. exists x y. x in V(a) & y in V(b)";
  const auto& f = f_words();
  std::vector<int> pick(length, 0);
  while (true) {
    std::string product = f[pick[0]];
    for (int i = 1; i < length; ++i) {
      product += "*" + f[pick[i]];
    }
    if (clause_kind == "commute") {
      std::string reversed = f[pick[length - 1]];
      for (int i = length - 2; i >= 0; --i) {
        reversed += "*" + f[pick[i]];
      }
      text += " & " + product + " = " + reversed;
    } else {
      text += " & " + product + " in " + clause_kind;
    }
    int pos = length;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < static_cast<int>(f.size())) {
        break;
      }
      pick[pos] = 0;
      if (pos == 0) {
        return text;
      }
    }
  }
}

std::vector<std::vector<bool>> two_sided_ideals(const FiniteSemigroup& s) {
  element n = s.order();
  std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
  for (element a = 0; a < n; ++a) {
    ideal[a][a] = true;
    for (element x = 0; x < n; ++x) {
      ideal[a][s.product(a, x)] = true;
      element xa = s.product(x, a);
      ideal[a][xa] = true;
      for (element y = 0; y < n; ++y) {
        ideal[a][s.product(xa, y)] = true;
      }
    }
  }
  return ideal;
}

bool h_is_congruence(const FiniteSemigroup& s, const GreenData& g) {
  element n = s.order();
  for (element a = 0; a < n; ++a) {
    for (element b = a + 1; b < n; ++b) {
      if (g.h_class[a] != g.h_class[b]) {
        continue;
      }
      for (element x = 0; x < n; ++x) {
        if (g.h_class[s.product(x, a)] != g.h_class[s.product(x, b)] ||
            g.h_class[s.product(a, x)] != g.h_class[s.product(b, x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_group(const FiniteSemigroup& s) {
  return is_right_simple(s) && is_left_simple(s);
}

bool every_idempotent_primitive(const FiniteSemigroup& s) {
  auto idem = idempotent_elements(s);
  for (element e : idem) {
    for (element f : idem) {
      if (e != f && s.product(e, f) == e && s.product(f, e) == e) {
        return false;  // e sits strictly below f
      }
    }
  }
  return true;
}

bool ig_condition(const FiniteSemigroup& s) {
  GreenData g = green_data(s);
  for (element a = 0; a < s.order(); ++a) {
    bool found = false;
    for (element x = 0; x < s.order() && !found; ++x) {
      found = s.product(s.product(a, x), a) == a &&
              s.product(s.product(x, a), x) == x && g.group_h[x];
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool nr_condition(const FiniteSemigroup& s) {
  for (element a = 0; a < s.order(); ++a) {
    bool reg = false;
    for (element x = 0; x < s.order() && !reg; ++x) {
      reg = s.product(s.product(a, x), a) == a;
    }
    bool two_sided_unit = false;
    for (element y = 0; y < s.order() && !two_sided_unit; ++y) {
      two_sided_unit = s.product(y, a) == a && s.product(a, y) == a;
    }
    if (!reg || !two_sided_unit) {
      return false;
    }
  }
  return true;
}

std::vector<ClassEntry> build_catalogue() {
  std::vector<ClassEntry> out;
  auto add = [&out](std::string id, std::string notes, std::string basis_text,
                    bool regular_class, std::function<bool(const FiniteSemigroup&)> oracle,
                    bool weakened = false) {
    EquationSystem basis = parse_system(basis_text);
    basis.check_valid();
    desugar(basis).check_valid();
    out.push_back({std::move(id), std::move(notes), std::move(basis), regular_class,
                   weakened, std::move(oracle)});
  };

  add("group", "oracle: left and right simple; basis: ax=b and ya=b solvable",
      "forall a b. exists x y. a*x = b & y*a = b", true, is_group);
  add("regular", "oracle: axa=a solvable per element", "forall a. exists x. a*x*a = a",
      true, is_regular);
  add("cr", "union of groups; oracle: every H-class with a square inside is a group",
      "forall a. exists x. a = a*x*a & a*x = x*a", true, is_completely_regular);
  add("clifford", "semilattice of groups; oracle: regular with central idempotents",
      "forall a b. exists x y. a = a*x*a & a*b = b*y*a", true,
      [](const FiniteSemigroup& s) { return is_regular(s) && idempotents_central(s); });
  add("cs", "completely simple; oracle: simple with every idempotent primitive",
      "forall a b. exists x y. a = a*x*a & a = a*b*a*y", true,
      [](const FiniteSemigroup& s) {
        return green_data(s).num_j() == 1 && !idempotent_elements(s).empty() &&
               every_idempotent_primitive(s);
      });
  add("ig", "every element has an inverse inside a subgroup",
      "forall a. exists x y. x in V(a) & x H y & y in E", true, ig_condition);
  add("crypto", "completely regular with H a congruence",
      "forall a b. exists x. a = a*x*a & a*x = x*a & a*b H a*x*b & b*a H b*x*a", true,
      [](const FiniteSemigroup& s) {
        return is_completely_regular(s) && h_is_congruence(s, green_data(s));
      });
  add("rightid", "oracle: some e with ae=a for all a", "exists x. forall a. a*x = a",
      false, [](const FiniteSemigroup& s) {
        for (element e = 0; e < s.order(); ++e) {
          bool ok = true;
          for (element a = 0; a < s.order() && ok; ++a) {
            ok = s.product(a, e) == a;
          }
          if (ok) {
            return true;
          }
        }
        return false;
      });
  add("monoid", "oracle: two-sided identity exists",
      "exists x. forall a. a*x = a & x*a = a", false,
      [](const FiniteSemigroup& s) { return s.identity_element().has_value(); });
  add("simple", "single two-sided-ideal class", "forall a b. exists x y. a = x*b*y",
      false, [](const FiniteSemigroup& s) { return green_data(s).num_j() == 1; });
  add("rightsimple", "aS = S for every a", "forall a b. exists x. a = b*x", false,
      is_right_simple);
  add("leftsimple", "Sa = S for every a", "forall a b. exists x. a = x*b", false,
      is_left_simple);
  add("maxj",
      "maximum ideal class whose complement-collapse is not a null semigroup",
      "exists y. forall a. exists x z. a = x*y*z", false,
      [](const FiniteSemigroup& s) { return maxj_conditions(s).rees_not_null; });
  add("bisimple", "single D-class",
      "forall a b. exists t u v x y. a = t*u & t = a*v & t = x*b & b = y*t"
      " | a = x*b & b = y*a | a = b*x & b = a*y",
      false, [](const FiniteSemigroup& s) { return green_data(s).num_d() == 1; });
  add("rightgroup", "right simple with an idempotent",
      "forall a b. exists x y. a*x = b & y = y^2", false, [](const FiniteSemigroup& s) {
        return is_right_simple(s) && !idempotent_elements(s).empty();
      });
  add("id", "an idempotent exists", "exists x. x = x^2", false,
      [](const FiniteSemigroup& s) { return !idempotent_elements(s).empty(); });
  add("inverse", "regular with commuting idempotents", f_product_basis(2, "commute"),
      true, [](const FiniteSemigroup& s) {
        return is_regular(s) && idempotents_commute(s);
      });
  add("orthodox", "regular with idempotents closed under product",
      f_product_basis(3, "E"), true, [](const FiniteSemigroup& s) {
        return is_regular(s) && idempotents_closed(s);
      });
  add("esolid", "regular with the idempotent-generated part a union of groups",
      f_product_basis(3, "G"), true, is_esolid);
  add("esolid2",
      "weakened study entry: length-2 products only; known not to capture the oracle",
      f_product_basis(2, "E"), true, is_esolid, /*weakened=*/true);
  add("reg34", "regularity with inverse choices for a, a^2 and b^2",
      "forall a b. exists x u v. x in V(a) & u in V(a^2) & v in V(b^2)", true,
      is_regular);
  add("inv35", "inverse via commuting idempotents aua, bvb",
      "forall a b. exists x u v. x in V(a) & u in V(a^2) & v in V(b^2)"
      " & a*u*a*b*v*b = b*v*b*a*u*a",
      true, [](const FiniteSemigroup& s) {
        return is_regular(s) && idempotents_commute(s);
      });
  add("orth36", "orthodox via the product aua.bvb idempotent",
      "forall a b. exists x u v. x in V(a) & u in V(a^2) & v in V(b^2)"
      " & a*u*a*b*v*b in E",
      true, [](const FiniteSemigroup& s) {
        return is_regular(s) && idempotents_closed(s);
      });
  add("es37", "E-solid via the product aua.bvb inside a subgroup",
      "forall a b. exists x u v. x in V(a) & u in V(a^2) & v in V(b^2)"
      " & a*u*a*b*v*b in G",
      true, is_esolid);
  add("nr", "every element regular and fixed by some two-sided local unit",
      "forall a. exists x y. a = a*x*a & a = y*a & a = a*y", true, nr_condition);
  return out;
}

}  // namespace

const std::vector<ClassEntry>& catalogue() {
  static const std::vector<ClassEntry> entries = build_catalogue();
  return entries;
}

const ClassEntry& catalogue_entry(const std::string& class_id) {
  for (const auto& entry : catalogue()) {
    if (entry.id == class_id) {
      return entry;
    }
  }
  throw Error(ErrorCode::UnknownClass, "no catalogue class named '" + class_id + "'");
}

bool is_catalogue_class(const std::string& class_id) {
  for (const auto& entry : catalogue()) {
    if (entry.id == class_id) {
      return true;
    }
  }
  return false;
}

bool oracle_check(const std::string& class_id, const FiniteSemigroup& s) {
  return catalogue_entry(class_id).oracle(s);
}

CrossValResult cross_validate(const std::string& class_id, const Corpus& corpus,
                              const EvalOptions& opts) {
  const ClassEntry& entry = catalogue_entry(class_id);
  CrossValResult result;
  for (const auto& member : corpus.entries()) {
    bool oracle = entry.oracle(member.sg);
    try {
      bool basis = evaluate(member.sg, entry.basis, opts).verdict;
      if (basis != oracle) {
        result.disagreements.push_back({member.name, oracle, basis});
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) {
        throw;
      }
      result.budget_skips.push_back({member.name, e.detail()});
    }
  }
  return result;
}

std::vector<element> idempotent_elements(const FiniteSemigroup& s) {
  std::vector<element> out;
  for (element a = 0; a < s.order(); ++a) {
    if (s.product(a, a) == a) {
      out.push_back(a);
    }
  }
  return out;
}

bool idempotents_commute(const FiniteSemigroup& s) {
  auto idem = idempotent_elements(s);
  for (element e : idem) {
    for (element f : idem) {
      if (s.product(e, f) != s.product(f, e)) {
        return false;
      }
    }
  }
  return true;
}

bool idempotents_closed(const FiniteSemigroup& s) {
  auto idem = idempotent_elements(s);
  for (element e : idem) {
    for (element f : idem) {
      element p = s.product(e, f);
      if (s.product(p, p) != p) {
        return false;
      }
    }
  }
  return true;
}

bool idempotents_central(const FiniteSemigroup& s) {
  for (element e : idempotent_elements(s)) {
    for (element a = 0; a < s.order(); ++a) {
      if (s.product(e, a) != s.product(a, e)) {
        return false;
      }
    }
  }
  return true;
}

bool is_completely_regular(const FiniteSemigroup& s) {
  GreenData g = green_data(s);
  return std::all_of(g.group_h.begin(), g.group_h.end(), [](bool b) { return b; });
}

bool is_right_simple(const FiniteSemigroup& s) {
  element n = s.order();
  for (element a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    element count = 0;
    for (element x = 0; x < n; ++x) {
      element p = s.product(a, x);
      if (!hit[p]) {
        hit[p] = true;
        ++count;
      }
    }
    if (count != n) {
      return false;
    }
  }
  return true;
}

bool is_left_simple(const FiniteSemigroup& s) {
  element n = s.order();
  for (element a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    element count = 0;
    for (element x = 0; x < n; ++x) {
      element p = s.product(x, a);
      if (!hit[p]) {
        hit[p] = true;
        ++count;
      }
    }
    if (count != n) {
      return false;
    }
  }
  return true;
}

bool esolid_core_condition(const FiniteSemigroup& s) {
  if (idempotent_elements(s).empty()) {
    return false;
  }
  return is_completely_regular(core(s).sub);
}

bool esolid_solidity_condition(const FiniteSemigroup& s) {
  GreenData g = green_data(s);
  auto idem = idempotent_elements(s);
  for (element e : idem) {
    for (element f : idem) {
      if (g.l_class[e] != g.l_class[f]) {
        continue;
      }
      for (element gg : idem) {
        if (g.r_class[f] != g.r_class[gg]) {
          continue;
        }
        bool found = false;
        for (element h : idem) {
          if (g.r_class[e] == g.r_class[h] && g.l_class[h] == g.l_class[gg]) {
            found = true;
            break;
          }
        }
        if (!found) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_esolid(const FiniteSemigroup& s) {
  if (!is_regular(s)) {
    return false;
  }
  bool via_core = esolid_core_condition(s);
  bool via_solidity = esolid_solidity_condition(s);
  if (via_core != via_solidity) {
    throw Error(ErrorCode::InternalCheckFailed,
                "core-of-groups and solidity conditions disagree on a regular semigroup");
  }
  return via_core;
}

MaxJConditions maxj_conditions(const FiniteSemigroup& s) {
  element n = s.order();
  auto ideals = two_sided_ideals(s);
  element max_rep = n;
  for (element m = 0; m < n; ++m) {
    if (std::all_of(ideals[m].begin(), ideals[m].end(), [](bool b) { return b; })) {
      max_rep = m;
      break;
    }
  }
  MaxJConditions cond{false, false, false};
  if (max_rep == n) {
    return cond;
  }
  cond.has_max = true;
  // the maximum class: everything whose ideal is all of S
  std::vector<element> top;
  for (element a = 0; a < n; ++a) {
    if (std::all_of(ideals[a].begin(), ideals[a].end(), [](bool b) { return b; })) {
      top.push_back(a);
    }
  }
  std::vector<bool> in_top(n, false);
  for (element a : top) {
    in_top[a] = true;
  }
  // collapse of the complement: the class with a zero adjoined
  bool some_product_stays = false;
  for (element a : top) {
    for (element b : top) {
      if (in_top[s.product(a, b)]) {
        some_product_stays = true;
      }
    }
  }
  cond.rees_not_null = some_product_stays;
  bool iso_two_null = top.size() == 1 && !in_top[s.product(top[0], top[0])];
  cond.not_iso_two_null = !iso_two_null;
  if (cond.rees_not_null != cond.not_iso_two_null) {
    throw Error(ErrorCode::InternalCheckFailed,
                "the two collapse conditions disagree on a maximum ideal class");
  }
  return cond;
}

bool has_maximum_j_class(const FiniteSemigroup& s) {
  return maxj_conditions(s).has_max;
}

NrCheckReport nr_counterexample_check(const EvalOptions& opts) {
  FiniteSemigroup t3 = full_transformation_monoid(3);
  FiniteSemigroup u = u3();
  const EquationSystem& nr = catalogue_entry("nr").basis;
  NrCheckReport report{};
  report.t3_satisfies = evaluate(t3, nr, opts).verdict;
  report.u3_satisfies = evaluate(u, nr, opts).verdict;
  report.u3_regular = is_regular(u);
  // the non-permutation maps form a product-closed subset of T3
  std::vector<bool> non_perm(t3.order(), false);
  for (element m = 0; m < t3.order(); ++m) {
    const std::string& l = t3.labels()[m];
    non_perm[m] = !(l.find('0') != std::string::npos && l.find('1') != std::string::npos &&
                    l.find('2') != std::string::npos);
  }
  report.u3_closed_in_t3 = true;
  for (element a = 0; a < t3.order(); ++a) {
    for (element b = 0; b < t3.order(); ++b) {
      if (non_perm[a] && non_perm[b] && !non_perm[t3.product(a, b)]) {
        report.u3_closed_in_t3 = false;
      }
    }
  }
  if (!report.t3_satisfies || report.u3_satisfies || !report.u3_regular ||
      !report.u3_closed_in_t3) {
    throw Error(ErrorCode::InternalCheckFailed,
                "regular-subsemigroup counterexample did not reproduce");
  }
  return report;
}

}  // namespace semieq
