#include "semieq/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace semieq {

namespace {

element max_plus_one(const std::vector<element>& ids) {
  element m = 0;
  for (element v : ids) {
    m = std::max(m, v + 1);
  }
  return m;
}

// Groups equal rows of `sets` (bitsets over the elements) into dense ids.
std::vector<element> classify(const std::vector<std::vector<bool>>& sets) {
  std::map<std::vector<bool>, element> seen;
  std::vector<element> ids(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a) {
    auto [it, inserted] = seen.try_emplace(sets[a], static_cast<element>(seen.size()));
    ids[a] = it->second;
  }
  return ids;
}

std::vector<element> renumber_dense(std::vector<element> raw) {
  std::map<element, element> seen;
  for (element& v : raw) {
    auto [it, inserted] = seen.try_emplace(v, static_cast<element>(seen.size()));
    v = it->second;
  }
  return raw;
}

struct UnionFind {
  std::vector<element> parent;
  explicit UnionFind(element n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  element find(element a) {
    while (parent[a] != a) {
      a = parent[a] = parent[parent[a]];
    }
    return a;
  }
  void unite(element a, element b) { parent[find(a)] = find(b); }
};

}  // namespace

element GreenData::num_r() const { return max_plus_one(r_class); }
element GreenData::num_l() const { return max_plus_one(l_class); }
element GreenData::num_h() const { return max_plus_one(h_class); }
element GreenData::num_d() const { return max_plus_one(d_class); }
element GreenData::num_j() const { return max_plus_one(j_class); }

GreenData green_data(const FiniteSemigroup& s) {
  element n = s.order();
  GreenData g;

  std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
  for (element a = 0; a < n; ++a) {
    right[a][a] = true;  // aS^1 contains a
    left[a][a] = true;
    for (element x = 0; x < n; ++x) {
      right[a][s.product(a, x)] = true;
      left[a][s.product(x, a)] = true;
    }
  }
  g.r_class = classify(right);
  g.l_class = classify(left);

  std::vector<element> h_raw(n);
  element nl = max_plus_one(g.l_class);
  for (element a = 0; a < n; ++a) {
    h_raw[a] = g.r_class[a] * nl + g.l_class[a];
  }
  g.h_class = renumber_dense(std::move(h_raw));

  // J via two-sided ideals S^1 a S^1 = {a} u aS u Sa u SaS
  std::vector<std::vector<bool>> two_sided(n, std::vector<bool>(n, false));
  for (element a = 0; a < n; ++a) {
    auto& ideal = two_sided[a];
    ideal[a] = true;
    for (element x = 0; x < n; ++x) {
      ideal[s.product(a, x)] = true;
      ideal[s.product(x, a)] = true;
      element xa = s.product(x, a);
      for (element y = 0; y < n; ++y) {
        ideal[s.product(xa, y)] = true;
      }
    }
  }
  g.j_class = classify(two_sided);

  // D = join of R and L
  UnionFind uf(n);
  std::vector<element> first_r(max_plus_one(g.r_class), static_cast<element>(-1));
  std::vector<element> first_l(max_plus_one(g.l_class), static_cast<element>(-1));
  for (element a = 0; a < n; ++a) {
    if (first_r[g.r_class[a]] == static_cast<element>(-1)) {
      first_r[g.r_class[a]] = a;
    } else {
      uf.unite(a, first_r[g.r_class[a]]);
    }
    if (first_l[g.l_class[a]] == static_cast<element>(-1)) {
      first_l[g.l_class[a]] = a;
    } else {
      uf.unite(a, first_l[g.l_class[a]]);
    }
  }
  std::vector<element> d_raw(n);
  for (element a = 0; a < n; ++a) {
    d_raw[a] = uf.find(a);
  }
  g.d_class = renumber_dense(std::move(d_raw));

  // On finite semigroups D = J; a violation can only be an implementation bug.
  for (element a = 0; a < n; ++a) {
    for (element b = a + 1; b < n; ++b) {
      if ((g.d_class[a] == g.d_class[b]) != (g.j_class[a] == g.j_class[b])) {
        throw Error(ErrorCode::InternalCheckFailed,
                    "D and J computed differently on a finite semigroup");
      }
    }
  }

  g.idempotents = ElementSubset(n);
  g.group_h.resize(n);
  for (element a = 0; a < n; ++a) {
    if (s.product(a, a) == a) {
      g.idempotents.add(a);
    }
    g.group_h[a] = g.h_class[a] == g.h_class[s.product(a, a)];
  }
  return g;
}

ElementSubset inverses_of(const FiniteSemigroup& s, element a) {
  if (a >= s.order()) {
    throw Error(ErrorCode::UsageError, "element index out of range");
  }
  ElementSubset out(s.order());
  for (element x = 0; x < s.order(); ++x) {
    if (s.product(s.product(a, x), a) == a && s.product(s.product(x, a), x) == x) {
      out.add(x);
    }
  }
  return out;
}

bool is_regular(const FiniteSemigroup& s) {
  for (element a = 0; a < s.order(); ++a) {
    bool found = false;
    for (element x = 0; x < s.order() && !found; ++x) {
      found = s.product(s.product(a, x), a) == a;
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

SubSemigroup core(const FiniteSemigroup& s) {
  ElementSubset idem(s.order());
  for (element a = 0; a < s.order(); ++a) {
    if (s.product(a, a) == a) {
      idem.add(a);
    }
  }
  if (idem.empty()) {
    throw Error(ErrorCode::NoIdempotents, "semigroup has no idempotents");
  }
  return subsemigroup_generated(s, idem);
}

SubSemigroup local_subsemigroup(const FiniteSemigroup& s, element e) {
  if (e >= s.order() || s.product(e, e) != e) {
    throw Error(ErrorCode::NotIdempotent,
                "local subsemigroups exist only at idempotents");
  }
  std::vector<element> to_parent;
  std::vector<element> sub_index(s.order(), static_cast<element>(-1));
  for (element x = 0; x < s.order(); ++x) {
    element v = s.product(s.product(e, x), e);
    if (sub_index[v] == static_cast<element>(-1)) {
      sub_index[v] = static_cast<element>(to_parent.size());
      to_parent.push_back(v);
    }
  }
  element n = static_cast<element>(to_parent.size());
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      table[i * n + j] = sub_index[s.product(to_parent[i], to_parent[j])];
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    for (element p : to_parent) {
      labels.push_back(s.labels()[p]);
    }
  }
  return {from_validated_parts(n, std::move(table), std::move(labels)),
          std::move(to_parent)};
}

namespace {

// (index, period) of the monogenic subsemigroup generated by a.
std::pair<element, element> element_orbit(const FiniteSemigroup& s, element a) {
  std::vector<element> seen_at(s.order(), 0);
  element v = a;
  element step = 1;
  while (seen_at[v] == 0) {
    seen_at[v] = step;
    v = s.product(v, a);
    ++step;
  }
  element index = seen_at[v];
  element period = step - seen_at[v];
  return {index, period};
}

struct IsoProfile {
  bool idempotent;
  element orbit_index, orbit_period;
  std::size_t r_size, l_size, h_size, d_size;
  bool group_h;

  auto key() const {
    return std::tuple(idempotent, orbit_index, orbit_period, r_size, l_size, h_size,
                      d_size, group_h);
  }
};

std::vector<IsoProfile> profiles(const FiniteSemigroup& s, const GreenData& g) {
  element n = s.order();
  std::vector<std::size_t> r_sz(g.num_r(), 0), l_sz(g.num_l(), 0), h_sz(g.num_h(), 0),
      d_sz(g.num_d(), 0);
  for (element a = 0; a < n; ++a) {
    ++r_sz[g.r_class[a]];
    ++l_sz[g.l_class[a]];
    ++h_sz[g.h_class[a]];
    ++d_sz[g.d_class[a]];
  }
  std::vector<IsoProfile> out(n);
  for (element a = 0; a < n; ++a) {
    auto [oi, op] = element_orbit(s, a);
    out[a] = {g.idempotents.contains(a), oi,          op,
              r_sz[g.r_class[a]],        l_sz[g.l_class[a]], h_sz[g.h_class[a]],
              d_sz[g.d_class[a]],        static_cast<bool>(g.group_h[a])};
  }
  return out;
}

bool extend(const FiniteSemigroup& s, const FiniteSemigroup& t,
            const std::vector<std::vector<element>>& candidates, std::vector<element>& map,
            std::vector<bool>& used, element next) {
  element n = s.order();
  if (next == n) {
    return true;
  }
  for (element img : candidates[next]) {
    if (used[img]) {
      continue;
    }
    map[next] = img;
    // a pair (x,y) needs checking once all of x, y and x*y are assigned;
    // that happens exactly at the step where the last of them equals `next`
    bool consistent = true;
    for (element x = 0; x <= next && consistent; ++x) {
      for (element y = 0; y <= next; ++y) {
        element p = s.product(x, y);
        if (p > next || (x != next && y != next && p != next)) {
          continue;
        }
        if (t.product(map[x], map[y]) != map[p]) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      used[img] = true;
      if (extend(s, t, candidates, map, used, next + 1)) {
        return true;
      }
      used[img] = false;
    }
  }
  map[next] = static_cast<element>(-1);
  return false;
}

}  // namespace

std::optional<std::vector<element>> are_isomorphic(const FiniteSemigroup& s,
                                                   const FiniteSemigroup& t) {
  if (s.order() != t.order()) {
    return std::nullopt;
  }
  GreenData gs = green_data(s);
  GreenData gt = green_data(t);
  auto ps = profiles(s, gs);
  auto pt = profiles(t, gt);
  {
    auto ks = ps, kt = pt;
    auto lt = [](const IsoProfile& a, const IsoProfile& b) { return a.key() < b.key(); };
    std::sort(ks.begin(), ks.end(), lt);
    std::sort(kt.begin(), kt.end(), lt);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i].key() != kt[i].key()) {
        return std::nullopt;
      }
    }
  }
  element n = s.order();
  std::vector<std::vector<element>> candidates(n);
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (ps[a].key() == pt[b].key()) {
        candidates[a].push_back(b);
      }
    }
    if (candidates[a].empty()) {
      return std::nullopt;
    }
  }
  std::vector<element> map(n, static_cast<element>(-1));
  std::vector<bool> used(n, false);
  if (extend(s, t, candidates, map, used, 0)) {
    return map;
  }
  return std::nullopt;
}

}  // namespace semieq
