#include "kschmidt/group.hpp"

#include <map>
#include <queue>
#include <sstream>

#include "kschmidt/error.hpp"

namespace kschmidt {
namespace {

[[noreturn]] void not_a_group(const std::string& reason) {
  throw Error(ErrorKind::kNotAGroup, reason);
}

std::vector<Element> compose_permutations(const Permutation& a, const Permutation& b) {
  // (a*b)(x) = a(b(x))
  std::vector<Element> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

std::shared_ptr<FiniteGroup::Data> FiniteGroup::derive(std::size_t order, std::vector<Element> table,
                                                       std::string label) {
  auto data = std::make_shared<Data>();
  data->order = order;
  data->table = std::move(table);
  data->label = std::move(label);
  data->inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (data->table[a * order + b] == 0) {
        data->inverse[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  data->element_orders.assign(order, 1);
  for (std::size_t a = 1; a < order; ++a) {
    std::size_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = data->table[x * order + a];
      ++k;
    }
    data->element_orders[a] = k;
  }
  for (std::size_t a = 0; a < order && data->abelian; ++a) {
    for (std::size_t b = a + 1; b < order; ++b) {
      if (data->table[a * order + b] != data->table[b * order + a]) {
        data->abelian = false;
        break;
      }
    }
  }
  return data;
}

FiniteGroup::FiniteGroup() : FiniteGroup(kTrusted, 1, {0}, "trivial") {}

FiniteGroup::FiniteGroup(TrustedTag, std::size_t order, std::vector<Element> table, std::string label)
    : data_(derive(order, std::move(table), std::move(label))) {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) not_a_group("empty table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      std::ostringstream os;
      os << "row " << a << " has length " << table[a].size() << ", expected " << n;
      not_a_group(os.str());
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        std::ostringstream os;
        os << "closure: entry (" << a << "," << b << ") = " << table[a][b] << " out of range";
        not_a_group(os.str());
      }
      flat.push_back(table[a][b]);
    }
  }
  const auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      std::ostringstream os;
      os << "identity: element 0 is not a two-sided identity at element " << a;
      not_a_group(os.str());
    }
  }
  // Latin square: every row and column a permutation.
  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element v = at(a, b);
      if (seen[v] == a) {
        std::ostringstream os;
        os << "invertibility: row " << a << " repeats value " << v;
        not_a_group(os.str());
      }
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const Element v = at(a, b);
      if (seen[v] == b) {
        std::ostringstream os;
        os << "invertibility: column " << b << " repeats value " << v;
        not_a_group(os.str());
      }
      seen[v] = b;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "associativity fails for (a,b,c) = (" << a << "," << b << "," << c << ")";
          not_a_group(os.str());
        }
      }
    }
  }
  return FiniteGroup(kTrusted, n, std::move(flat), std::move(label));
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                           std::string label, const Limits& limits) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    std::vector<char> hit(degree, 0);
    bool ok = p.size() == degree;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      if (p[i] >= degree || hit[p[i]]) ok = false;
      else hit[p[i]] = 1;
    }
    if (!ok) {
      std::ostringstream os;
      os << "generator " << g << " is not a permutation of 0.." << (degree == 0 ? 0 : degree - 1);
      throw Error(ErrorKind::kNotAPermutation, os.str());
    }
  }

  Permutation identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, 0}};
  std::queue<Element> todo;
  todo.push(0);
  while (!todo.empty()) {
    const Element cur = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      auto next = compose_permutations(elements[cur], gen);
      if (index.count(next)) continue;
      if (elements.size() >= limits.order_cap) {
        throw Error(ErrorKind::kOrderBudgetExceeded,
                    "permutation closure exceeds order cap " + std::to_string(limits.order_cap));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      todo.push(static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = index.at(compose_permutations(elements[a], elements[b]));
    }
  }
  return FiniteGroup(kTrusted, n, std::move(flat), std::move(label));
}

Element FiniteGroup::pow(Element a, std::uint64_t k) const noexcept {
  k %= element_order(a);
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->label = std::move(label);
  return FiniteGroup(std::move(copy));
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  return a.same_as(b) || a.data_->table == b.data_->table;
}

}  // namespace kschmidt
