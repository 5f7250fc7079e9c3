#include "kschmidt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "kschmidt/error.hpp"
#include "kschmidt/named.hpp"

namespace kschmidt {
namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::kBadInput, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

template <class T>
T get_as(const Json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, std::string(what) + ": " + e.what());
  }
}

std::string label_of(const Json& doc) {
  return doc.contains("label") ? get_as<std::string>(doc.at("label"), "label") : std::string();
}

std::string expect_format(const Json& doc) {
  return get_as<std::string>(field(doc, "format"), "format");
}

NormalSubgroup normal_from_members(const FiniteGroup& g, const Json& doc, const char* key) {
  if (!doc.contains(key)) return NormalSubgroup::trivial(g);
  auto members = get_as<std::vector<std::int64_t>>(doc.at(key), key);
  std::vector<Element> out;
  for (const auto m : members) {
    if (m < 0 || static_cast<std::uint64_t>(m) >= g.order()) {
      throw Error(ErrorKind::kBadInput, std::string(key) + ": element " + std::to_string(m) + " out of range");
    }
    out.push_back(static_cast<Element>(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return NormalSubgroup::verified(g, std::move(out));
}

}  // namespace

FiniteGroup group_from_json(const Json& doc, const Limits& limits) {
  if (doc.is_string()) return named_group(doc.get<std::string>(), limits);
  const std::string format = expect_format(doc);
  if (format == "cayley-v1") {
    const auto table = get_as<std::vector<std::vector<std::int64_t>>>(field(doc, "table"), "table");
    if (doc.contains("order") && get_as<std::size_t>(doc.at("order"), "order") != table.size()) {
      throw Error(ErrorKind::kBadInput, "order does not match table size");
    }
    if (table.size() > limits.order_cap) {
      throw Error(ErrorKind::kOrderBudgetExceeded, "order " + std::to_string(table.size()) + " exceeds cap " +
                                                       std::to_string(limits.order_cap));
    }
    std::vector<std::vector<Element>> rows(table.size());
    for (std::size_t a = 0; a < table.size(); ++a) {
      if (table[a].size() != table.size()) {
        throw Error(ErrorKind::kNotAGroup, "row " + std::to_string(a) + " has length " +
                                               std::to_string(table[a].size()) + ", expected " +
                                               std::to_string(table.size()));
      }
      for (const auto v : table[a]) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= table.size()) {
          throw Error(ErrorKind::kNotAGroup, "closure: entry " + std::to_string(v) + " in row " +
                                                 std::to_string(a) + " is out of range");
        }
        rows[a].push_back(static_cast<Element>(v));
      }
    }
    return FiniteGroup::from_table(rows, label_of(doc));
  }
  if (format == "perm-v1") {
    const auto degree = get_as<std::size_t>(field(doc, "degree"), "degree");
    const auto gens = get_as<std::vector<std::vector<std::int64_t>>>(field(doc, "generators"), "generators");
    std::vector<Permutation> perms;
    for (const auto& g : gens) {
      Permutation p;
      for (const auto v : g) {
        if (v < 0) throw Error(ErrorKind::kNotAPermutation, "negative image " + std::to_string(v));
        p.push_back(static_cast<std::uint32_t>(v));
      }
      perms.push_back(std::move(p));
    }
    return FiniteGroup::from_permutations(degree, perms, label_of(doc), limits);
  }
  throw Error(ErrorKind::kBadInput, "unsupported group format '" + format + "'");
}

ProfiniteTower tower_from_json(const Json& doc, const Limits& limits) {
  if (expect_format(doc) != "tower-v1") throw Error(ErrorKind::kBadInput, "expected format tower-v1");
  const Json& levels_doc = field(doc, "levels");
  if (!levels_doc.is_array()) throw Error(ErrorKind::kBadInput, "levels must be an array");
  std::vector<FiniteGroup> levels;
  for (const auto& level : levels_doc) levels.push_back(group_from_json(level, limits));
  std::vector<std::vector<Element>> maps;
  const auto raw = get_as<std::vector<std::vector<std::int64_t>>>(field(doc, "maps"), "maps");
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::vector<Element> map;
    for (const auto v : raw[k]) {
      if (v < 0) throw Error(ErrorKind::kBadInput, "map " + std::to_string(k) + " has a negative entry");
      map.push_back(static_cast<Element>(v));
    }
    maps.push_back(std::move(map));
  }
  return ProfiniteTower(std::move(levels), std::move(maps));
}

FiberPowerSpec fiber_power_spec_from_json(const Json& doc, const Limits& limits) {
  if (expect_format(doc) != "fiber-power-v1") throw Error(ErrorKind::kBadInput, "expected format fiber-power-v1");
  FiniteGroup g = group_from_json(field(doc, "group"), limits);
  FiberPowerSpec spec{g, normal_from_members(g, doc, "g0"), normal_from_members(g, doc, "m0"),
                      normal_from_members(g, doc, "kernel"),
                      get_as<std::size_t>(field(doc, "copies"), "copies")};
  return spec;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kBadInput, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kBadInput, path.string() + ": " + e.what());
  }
}

Json to_json(const FiniteGroup& group) {
  Json table = Json::array();
  for (Element a = 0; a < group.order(); ++a) {
    const auto row = group.row(a);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return Json{{"format", "cayley-v1"}, {"order", group.order()}, {"table", std::move(table)},
              {"label", group.label()}};
}

Json to_json(const ProfiniteTower& tower) {
  Json levels = Json::array();
  for (const auto& level : tower.levels()) levels.push_back(to_json(level));
  Json maps = Json::array();
  for (const auto& m : tower.maps()) maps.push_back(m);
  return Json{{"format", "tower-v1"}, {"levels", std::move(levels)}, {"maps", std::move(maps)}};
}

Json to_json(const IsoFingerprint& fp) {
  Json hist = Json::array();
  for (const auto& [order, count] : fp.element_order_histogram) hist.push_back({order, count});
  return Json{{"order", fp.order},
              {"element_order_histogram", std::move(hist)},
              {"abelian", fp.abelian},
              {"center_order", fp.center_order},
              {"derived_series_orders", fp.derived_series_orders},
              {"conjugacy_class_sizes", fp.conjugacy_class_sizes}};
}

Json to_json(const FiberPowerSpec& spec) {
  return Json{{"format", "fiber-power-v1"},
              {"group", to_json(spec.group)},
              {"g0", spec.g0.members()},
              {"m0", spec.m0.members()},
              {"kernel", spec.kernel.members()},
              {"copies", spec.copies}};
}

std::string describe(const IsoFingerprint& fp) {
  std::string out = "order " + std::to_string(fp.order) + (fp.abelian ? " abelian" : " nonabelian");
  out += ", element orders {";
  for (std::size_t i = 0; i < fp.element_order_histogram.size(); ++i) {
    const auto& [o, c] = fp.element_order_histogram[i];
    out += (i ? ", " : "") + std::to_string(o) + ":" + std::to_string(c);
  }
  return out + "}";
}

std::string digest(const FiniteGroup& group) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(group.order());
  for (const auto e : group.flat_table()) mix(e);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kschmidt
