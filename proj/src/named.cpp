#include "kschmidt/named.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "kschmidt/constructions.hpp"
#include "kschmidt/error.hpp"

namespace kschmidt {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::kBadParams, "bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return v;
}

std::size_t check_order(std::uint64_t order, const Limits& limits) {
  if (order > limits.order_cap) {
    throw Error(ErrorKind::kOrderBudgetExceeded,
                "order " + (order == kSaturated ? std::string("(overflow)") : std::to_string(order)) +
                    " exceeds cap " + std::to_string(limits.order_cap));
  }
  return static_cast<std::size_t>(order);
}

void require_params(const NamedGroupSpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    throw Error(ErrorKind::kBadParams, spec.name + " takes " + std::to_string(lo) +
                                           (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
  }
}

void validate(const NamedGroupSpec& spec) {
  const auto& n = spec.name;
  if (n == "trivial") {
    require_params(spec, 0, 0);
  } else if (n == "cyclic") {
    require_params(spec, 1, 1);
    if (spec.params[0] < 1) throw Error(ErrorKind::kBadParams, "cyclic needs n >= 1");
  } else if (n == "dihedral") {
    require_params(spec, 1, 1);
    if (spec.params[0] < 1) throw Error(ErrorKind::kBadParams, "dihedral needs n >= 1");
  } else if (n == "quaternion") {
    require_params(spec, 0, 1);
    if (!spec.params.empty() && spec.params[0] != 8) {
      throw Error(ErrorKind::kBadParams, "only the quaternion group of order 8 is supported");
    }
  } else if (n == "symmetric") {
    require_params(spec, 1, 1);
    if (spec.params[0] < 1 || spec.params[0] > 20) throw Error(ErrorKind::kBadParams, "symmetric needs 1 <= n <= 20");
  } else if (n == "elementary_abelian") {
    require_params(spec, 2, 2);
    if (!is_prime(spec.params[0])) throw Error(ErrorKind::kBadParams, "elementary_abelian needs a prime p");
  } else if (n == "direct_product") {
    require_params(spec, 0, 0);
    if (spec.factors.empty()) throw Error(ErrorKind::kBadParams, "direct_product needs at least one factor");
    for (const auto& f : spec.factors) validate(f);
  } else {
    throw Error(ErrorKind::kUnknownName, "unknown group name '" + n + "'");
  }
}

FiniteGroup cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(kTrusted, n, std::move(t), "C" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  // r^i s^a · r^j s^b = r^(i ± j) s^(a+b)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, a = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n, b = y / n;
      const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
      t[x * order + y] = static_cast<Element>(((a + b) % 2) * n + rot);
    }
  }
  return FiniteGroup(kTrusted, order, std::move(t), "D" + std::to_string(n));
}

FiniteGroup quaternion() {
  // unit u in {1,i,j,k} and sign; index = 2u + (sign negative)
  static constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      int sign = kSign[u][v] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      t[x * 8 + y] = static_cast<Element>(2 * kUnitProduct[u][v] + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup(kTrusted, 8, std::move(t), "Q8");
}

FiniteGroup symmetric(std::size_t n, const Limits& limits) {
  std::uint64_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order = mul_saturating(order, k);
  check_order(order, limits);
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  // Lexicographic rank of a permutation.
  const auto rank = [n](const std::vector<std::uint8_t>& q) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < n; ++j) smaller += q[j] < q[i];
      r = r * (n - i) + smaller;
    }
    return r;
  };
  std::vector<Element> t(m * m);
  std::vector<std::uint8_t> prod(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      // (a·b)(x) = a(b(x))
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      t[a * m + b] = static_cast<Element>(rank(prod));
    }
  }
  return FiniteGroup(kTrusted, m, std::move(t), "S" + std::to_string(n));
}

FiniteGroup product_of(const std::vector<FiniteGroup>& parts, const Limits& limits) {
  FiniteGroup acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, parts[i], limits).group;
  return acc;
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, std::string_view whole) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw Error(ErrorKind::kBadParams, "unbalanced ')' in '" + std::string(whole) + "'");
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::kBadParams, "unbalanced '(' in '" + std::string(whole) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

NamedGroupSpec parse_inner(std::string_view text, std::string_view whole) {
  text = trim(text);
  NamedGroupSpec spec;
  if (const auto paren = text.find('('); paren != std::string_view::npos) {
    spec.name = std::string(trim(text.substr(0, paren)));
    if (text.back() != ')') throw Error(ErrorKind::kBadParams, "expected ')' at end of '" + std::string(whole) + "'");
    if (spec.name != "direct_product") {
      throw Error(ErrorKind::kUnknownName, "only direct_product takes a factor list, got '" + spec.name + "'");
    }
    const auto body = text.substr(paren + 1, text.size() - paren - 2);
    for (const auto part : split_top(body, whole)) {
      if (part.empty()) throw Error(ErrorKind::kBadParams, "empty factor in '" + std::string(whole) + "'");
      spec.factors.push_back(parse_inner(part, whole));
    }
  } else {
    std::size_t pos = text.find(':');
    spec.name = std::string(text.substr(0, pos));
    while (pos != std::string_view::npos) {
      const std::size_t next = text.find(':', pos + 1);
      spec.params.push_back(parse_uint(text.substr(pos + 1, next == std::string_view::npos ? next : next - pos - 1), whole));
      pos = next;
    }
  }
  validate(spec);
  return spec;
}

}  // namespace

std::string NamedGroupSpec::to_string() const {
  std::string out = name;
  if (name == "direct_product") {
    out += "(";
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + factors[i].to_string();
    return out + ")";
  }
  for (const auto p : params) out += ":" + std::to_string(p);
  return out;
}

NamedGroupSpec parse_named(std::string_view text) {
  if (trim(text).empty()) throw Error(ErrorKind::kBadParams, "empty group spec");
  return parse_inner(text, text);
}

std::uint64_t named_order(const NamedGroupSpec& spec) {
  const auto& n = spec.name;
  if (n == "trivial") return 1;
  if (n == "cyclic") return spec.params.at(0);
  if (n == "dihedral") return mul_saturating(2, spec.params.at(0));
  if (n == "quaternion") return 8;
  if (n == "symmetric") {
    std::uint64_t o = 1;
    for (std::uint64_t k = 2; k <= spec.params.at(0); ++k) o = mul_saturating(o, k);
    return o;
  }
  if (n == "elementary_abelian") {
    std::uint64_t o = 1;
    for (std::uint64_t k = 0; k < spec.params.at(1); ++k) o = mul_saturating(o, spec.params.at(0));
    return o;
  }
  std::uint64_t o = 1;
  for (const auto& f : spec.factors) o = mul_saturating(o, named_order(f));
  return o;
}

FiniteGroup named_group(const NamedGroupSpec& spec, const Limits& limits) {
  validate(spec);
  check_order(named_order(spec), limits);
  const auto& n = spec.name;
  if (n == "trivial") return FiniteGroup();
  if (n == "cyclic") return cyclic(spec.params[0]);
  if (n == "dihedral") return dihedral(spec.params[0]);
  if (n == "quaternion") return quaternion();
  if (n == "symmetric") return symmetric(spec.params[0], limits);
  if (n == "elementary_abelian") {
    const auto p = spec.params[0], k = spec.params[1];
    if (k == 0) return FiniteGroup();
    const std::vector<FiniteGroup> parts(k, cyclic(p));
    std::string label = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
    return product_of(parts, limits).with_label(std::move(label));
  }
  std::vector<FiniteGroup> parts;
  for (const auto& f : spec.factors) parts.push_back(named_group(f, limits));
  return product_of(parts, limits);
}

FiniteGroup named_group(std::string_view text, const Limits& limits) {
  return named_group(parse_named(text), limits);
}

std::vector<CorpusEntry> corpus_bases(std::uint64_t max_order) {
  std::vector<CorpusEntry> out;
  const auto add = [&](NamedGroupSpec spec) {
    const auto order = named_order(spec);
    if (order <= max_order) out.push_back(CorpusEntry{std::move(spec), order});
  };
  add({"trivial", {}, {}});
  for (std::uint64_t n = 2; n <= max_order; ++n) add({"cyclic", {n}, {}});
  for (std::uint64_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t k = 2, o = p * p; o <= max_order; ++k, o *= p) add({"elementary_abelian", {p, k}, {}});
  }
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) add({"dihedral", {n}, {}});
  add({"quaternion", {}, {}});
  add({"symmetric", {3}, {}});
  add({"symmetric", {4}, {}});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

std::vector<CorpusEntry> corpus(std::uint64_t max_order) {
  auto bases = corpus_bases(max_order);
  std::vector<CorpusEntry> out = bases;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].order < 2) continue;
    for (std::size_t j = i; j < bases.size(); ++j) {
      if (bases[j].order < 2) continue;
      const auto order = mul_saturating(bases[i].order, bases[j].order);
      if (order > max_order) continue;
      out.push_back(CorpusEntry{NamedGroupSpec{"direct_product", {}, {bases[i].spec, bases[j].spec}}, order});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

}  // namespace kschmidt
