#include "semieq/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

namespace semieq {

namespace {

FiniteSemigroup build(element n, const std::function<element(element, element)>& mul,
                      std::vector<std::string> labels = {}) {
  std::vector<element> table(static_cast<std::size_t>(n) * n);
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      table[i * n + j] = mul(i, j);
    }
  }
  return from_validated_parts(n, std::move(table), std::move(labels));
}

element parse_uint(std::string_view text, const char* what) {
  element value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::UnsupportedParameter,
                std::string("bad ") + what + " in descriptor: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FiniteSemigroup cyclic_group(element n) {
  if (n == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "Zn needs n >= 1");
  }
  std::vector<std::string> labels;
  for (element i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return build(n, [n](element a, element b) { return (a + b) % n; }, std::move(labels));
}

FiniteSemigroup monogenic(element index, element period) {
  if (index == 0 || period == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "mono needs index >= 1 and period >= 1");
  }
  element n = index + period - 1;  // powers a^1 .. a^n
  auto reduce = [index, period, n](element power) {
    // power is 1-based
    if (power <= n) {
      return power;
    }
    return static_cast<element>((power - index) % period + index);
  };
  std::vector<std::string> labels;
  for (element i = 1; i <= n; ++i) {
    labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return build(n,
               [reduce](element a, element b) { return reduce(a + b + 2) - 1; },
               std::move(labels));
}

FiniteSemigroup chain_semilattice(element k) {
  if (k == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "chain needs k >= 1");
  }
  std::vector<std::string> labels;
  for (element i = 0; i < k; ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  return build(k, [](element a, element b) { return std::min(a, b); }, std::move(labels));
}

FiniteSemigroup null_semigroup(element k) {
  if (k == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "null needs k >= 1");
  }
  std::vector<std::string> labels{"0"};
  for (element i = 1; i < k; ++i) {
    labels.push_back("a" + std::to_string(i));
  }
  return build(k, [](element, element) { return element{0}; }, std::move(labels));
}

FiniteSemigroup left_zero(element k) {
  if (k == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "lz needs k >= 1");
  }
  return build(k, [](element a, element) { return a; });
}

FiniteSemigroup right_zero(element k) {
  if (k == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "rz needs k >= 1");
  }
  return build(k, [](element, element b) { return b; });
}

FiniteSemigroup full_transformation_monoid(element n) {
  if (n == 0 || n > 4) {
    throw Error(ErrorCode::UnsupportedParameter, "T:<n> supports 1 <= n <= 4");
  }
  element count = 1;
  for (element i = 0; i < n; ++i) {
    count *= n;
  }
  // map index <-> image vector, lexicographic
  std::vector<std::vector<element>> maps(count, std::vector<element>(n));
  for (element m = 0; m < count; ++m) {
    element rem = m;
    for (element pos = n; pos-- > 0;) {
      maps[m][pos] = rem % n;
      rem /= n;
    }
  }
  auto index_of = [&](const std::vector<element>& f) {
    element idx = 0;
    for (element pos = 0; pos < n; ++pos) {
      idx = idx * n + f[pos];
    }
    return idx;
  };
  std::vector<std::string> labels;
  for (element m = 0; m < count; ++m) {
    std::string l;
    for (element pos = 0; pos < n; ++pos) {
      l += static_cast<char>('0' + maps[m][pos]);
    }
    labels.push_back(l);
  }
  return build(count,
               [&](element f, element g) {
                 // x(fg) = (xf)g
                 std::vector<element> h(n);
                 for (element x = 0; x < n; ++x) {
                   h[x] = maps[g][maps[f][x]];
                 }
                 return index_of(h);
               },
               std::move(labels));
}

FiniteSemigroup u3() {
  FiniteSemigroup t3 = full_transformation_monoid(3);
  ElementSubset non_perm(t3.order());
  for (element m = 0; m < t3.order(); ++m) {
    const std::string& l = t3.labels()[m];
    bool is_perm = l.find('0') != std::string::npos && l.find('1') != std::string::npos &&
                   l.find('2') != std::string::npos;
    if (!is_perm) {
      non_perm.add(m);
    }
  }
  return subsemigroup_generated(t3, non_perm).sub;
}

FiniteSemigroup brandt(element n) {
  if (n == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "brandt needs n >= 1");
  }
  element count = n * n + 1;
  element zero = count - 1;
  std::vector<std::string> labels;
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  labels.push_back("0");
  return build(count,
               [n, zero](element a, element b) {
                 if (a == zero || b == zero) {
                   return zero;
                 }
                 element j = a % n, k = b / n;
                 return j == k ? (a / n) * n + b % n : zero;
               },
               std::move(labels));
}

FiniteSemigroup brandt_truncated(element i) {
  if (i == 0) {
    throw Error(ErrorCode::UnsupportedParameter, "btrunc needs i >= 1");
  }
  // elements: (j,k) for j,k < i at index j*i+k, then (i,i), then zero
  element count = i * i + 2;
  element top = i * i;  // (i,i)
  element zero = count - 1;
  auto row_of = [i, top](element a) { return a == top ? i : a / i; };
  auto col_of = [i, top](element a) { return a == top ? i : a % i; };
  std::vector<std::string> labels;
  for (element j = 0; j < i; ++j) {
    for (element k = 0; k < i; ++k) {
      labels.push_back("(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
  labels.push_back("(" + std::to_string(i) + "," + std::to_string(i) + ")");
  labels.push_back("0");
  return build(count,
               [=](element a, element b) {
                 if (a == zero || b == zero) {
                   return zero;
                 }
                 if (col_of(a) != row_of(b)) {
                   return zero;
                 }
                 element r = row_of(a), c = col_of(b);
                 if (r == i && c == i) {
                   return top;
                 }
                 if (r == i || c == i) {
                   return zero;  // (i,k) and (j,i) with j,k < i are not elements
                 }
                 return r * i + c;
               },
               std::move(labels));
}

FiniteSemigroup zero_rectangular_band(const std::vector<std::vector<int>>& structure) {
  if (structure.empty() || structure[0].empty()) {
    throw Error(ErrorCode::UnsupportedParameter, "zrb needs a nonempty structure matrix");
  }
  element rows = static_cast<element>(structure.size());      // lambda range
  element cols = static_cast<element>(structure[0].size());   // i range
  for (const auto& r : structure) {
    if (r.size() != cols) {
      throw Error(ErrorCode::UnsupportedParameter, "zrb structure matrix is ragged");
    }
    for (int v : r) {
      if (v != 0 && v != 1) {
        throw Error(ErrorCode::UnsupportedParameter, "zrb structure entries must be 0 or 1");
      }
    }
  }
  element count = rows * cols + 1;
  element zero = count - 1;
  // (i,lambda) at index i*rows + lambda
  std::vector<std::string> labels;
  for (element i = 0; i < cols; ++i) {
    for (element l = 0; l < rows; ++l) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(l) + ")");
    }
  }
  labels.push_back("0");
  return build(count,
               [=, &structure](element a, element b) {
                 if (a == zero || b == zero) {
                   return zero;
                 }
                 element ai = a / rows, al = a % rows;
                 element bj = b / rows, bl = b % rows;
                 return structure[al][bj] == 1 ? ai * rows + bl : zero;
               },
               std::move(labels));
}

std::vector<std::vector<int>> counterexample_band_matrix() {
  return {{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}};
}

bool looks_like_descriptor(const std::string& text) {
  if (text == "U3") {
    return true;
  }
  for (const char* prefix :
       {"Zn:", "mono:", "chain:", "null:", "lz:", "rz:", "T:", "brandt:", "btrunc:", "zrb:"}) {
    if (text.rfind(prefix, 0) == 0) {
      return true;
    }
  }
  return false;
}

FiniteSemigroup make_family(const std::string& descriptor) {
  if (descriptor == "U3") {
    return u3();
  }
  auto colon = descriptor.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::UnsupportedParameter, "unknown family descriptor: " + descriptor);
  }
  std::string head = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);
  if (head == "Zn") {
    return cyclic_group(parse_uint(rest, "n"));
  }
  if (head == "mono") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::UnsupportedParameter, "mono:<i>,<p> expected");
    }
    return monogenic(parse_uint(rest.substr(0, comma), "index"),
                     parse_uint(rest.substr(comma + 1), "period"));
  }
  if (head == "chain") {
    return chain_semilattice(parse_uint(rest, "k"));
  }
  if (head == "null") {
    return null_semigroup(parse_uint(rest, "k"));
  }
  if (head == "lz") {
    return left_zero(parse_uint(rest, "k"));
  }
  if (head == "rz") {
    return right_zero(parse_uint(rest, "k"));
  }
  if (head == "T") {
    return full_transformation_monoid(parse_uint(rest, "n"));
  }
  if (head == "brandt") {
    return brandt(parse_uint(rest, "n"));
  }
  if (head == "btrunc") {
    return brandt_truncated(parse_uint(rest, "i"));
  }
  if (head == "zrb") {
    auto second = rest.find(':');
    if (second == std::string::npos) {
      throw Error(ErrorCode::UnsupportedParameter, "zrb:<rows>x<cols>:<rows-csv> expected");
    }
    std::string dims = rest.substr(0, second);
    std::string body = rest.substr(second + 1);
    auto x = dims.find('x');
    if (x == std::string::npos) {
      throw Error(ErrorCode::UnsupportedParameter, "zrb dimensions must look like 4x4");
    }
    element rows = parse_uint(dims.substr(0, x), "rows");
    element cols = parse_uint(dims.substr(x + 1), "cols");
    std::vector<std::vector<int>> structure;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string row = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      std::vector<int> bits;
      for (char c : row) {
        if (c != '0' && c != '1') {
          throw Error(ErrorCode::UnsupportedParameter, "zrb rows must be 0/1 strings");
        }
        bits.push_back(c - '0');
      }
      if (bits.size() != cols) {
        throw Error(ErrorCode::UnsupportedParameter, "zrb row width does not match cols");
      }
      structure.push_back(std::move(bits));
      if (comma == std::string::npos) {
        break;
      }
      pos = comma + 1;
    }
    if (structure.size() != rows) {
      throw Error(ErrorCode::UnsupportedParameter, "zrb row count does not match rows");
    }
    return zero_rectangular_band(structure);
  }
  throw Error(ErrorCode::UnsupportedParameter, "unknown family descriptor: " + descriptor);
}

}  // namespace semieq
