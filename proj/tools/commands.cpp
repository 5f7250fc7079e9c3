#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kschmidt/constructions.hpp"
#include "kschmidt/endomorphism.hpp"
#include "kschmidt/error.hpp"
#include "kschmidt/finite_images.hpp"
#include "kschmidt/io.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/named.hpp"
#include "kschmidt/report.hpp"
#include "kschmidt/tower.hpp"
#include "kschmidt/verify/sweeps.hpp"

namespace kschmidt::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::optional<std::uint64_t> max_order;
  std::optional<std::uint64_t> budget;
  std::vector<std::string> named;
  std::vector<std::string> files;

  // tower inputs
  std::string verbal;
  std::string exponents_text;
  std::vector<std::uint64_t> w_exponents;
  std::string tower_file;

  // command specific
  std::string endo;
  std::string x, y;
  std::uint64_t g_order = 0;
  std::vector<std::string> sweeps;
  bool list = false;

  Limits limits() const {
    Limits l;
    if (budget) l.search_nodes = *budget;
    return l;
  }
};

struct Outcome {
  Report report;
  std::string text;
};

std::vector<Element> to_vec(std::span<const Element> s) { return {s.begin(), s.end()}; }

std::string join_elements(std::span<const Element> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// A path to a JSON document, or else an inline named spec.
FiniteGroup load_group_ref(const std::string& ref, const Limits& limits) {
  if (std::filesystem::exists(ref)) return group_from_json(read_json_file(ref), limits);
  return named_group(ref, limits);
}

std::vector<FiniteGroup> input_groups(const Options& o, std::size_t expected) {
  std::vector<FiniteGroup> groups;
  for (const auto& f : o.files) {
    if (!std::filesystem::exists(f)) throw Error(ErrorKind::kBadInput, "no such file: " + f);
    groups.push_back(group_from_json(read_json_file(f), o.limits()));
  }
  for (const auto& n : o.named) {
    groups.push_back(named_group(n, o.limits()).with_label(n));
  }
  if (groups.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " group(s) (files or --named), got " +
                     std::to_string(groups.size()));
  }
  return groups;
}

std::string label_or(const FiniteGroup& g, const std::string& fallback) {
  return g.label().empty() ? fallback : g.label();
}

Json subgroup_json(const Subgroup& s) {
  const auto sg = as_group(s).group;
  const auto fp = fingerprint(sg);
  return Json{{"order", s.order()}, {"members", to_vec(s.members())}, {"fingerprint", to_json(fp)},
              {"description", describe(fp)}};
}

// --- commands ---------------------------------------------------------------

Outcome cmd_decompose(const Options& o) {
  const auto g = input_groups(o, 1).front();
  const auto limits = o.limits();
  const auto d = decompose(g, limits);
  const auto kind = indecomposability(g, limits);
  Outcome out;
  out.report.command = "decompose";
  out.report.add_input(g);
  out.report.lemma_refs = {"Krull-Schmidt theorem: existence"};
  Json factors = Json::array();
  std::ostringstream text;
  text << label_or(g, "group") << " (order " << g.order() << "): " << d.size() << " factor(s)";
  if (kind == Indecomposability::kTrivial) text << ", trivial";
  if (kind == Indecomposability::kIndecomposable) text << ", indecomposable";
  text << "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    factors.push_back(subgroup_json(d.factors()[i]));
    text << "  [" << i << "] " << describe(fingerprint(d.factor_group(i))) << "  members "
         << join_elements(d.factors()[i].members()) << "\n";
  }
  out.report.result = Json{{"order", g.order()},
                           {"factors", std::move(factors)},
                           {"indecomposable", kind != Indecomposability::kDecomposable},
                           {"trivial", kind == Indecomposability::kTrivial}};
  out.text = text.str();
  return out;
}

Outcome cmd_iso(const Options& o) {
  const auto groups = input_groups(o, 2);
  const auto& a = groups[0];
  const auto& b = groups[1];
  const auto f = find_isomorphism(a, b, o.limits());
  Outcome out;
  out.report.command = "iso";
  out.report.add_input(a);
  out.report.add_input(b);
  out.report.result = Json{{"isomorphic", f.has_value()},
                           {"fingerprints_equal", fingerprint(a) == fingerprint(b)},
                           {"witness", f ? Json(to_vec(f->images())) : Json(nullptr)}};
  out.text = label_or(a, "A") + " and " + label_or(b, "B") + (f ? ": isomorphic\n" : ": not isomorphic\n");
  if (f) out.text += "  witness " + join_elements(f->images()) + "\n";
  return out;
}

std::vector<Element> parse_number_list(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<Element>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad entry '" + item + "' in number list");
    }
  }
  return out;
}

Json classification_json(const EndoClassification& c) {
  return Json{{"kind", std::string(endo_kind_name(c.kind))},
              {"fitting_exponent", c.fitting_exponent},
              {"nilpotency_index", c.nilpotency_index ? Json(*c.nilpotency_index) : Json(nullptr)}};
}

Outcome cmd_fitting(const Options& o) {
  const auto g = input_groups(o, 1).front();
  if (o.endo.empty()) throw UsageError("fitting needs --endo <comma-separated images>");
  const auto f = GroupHom::verified(g, g, parse_number_list(o.endo));
  const auto split = fitting_decomposition(f);
  const auto cls = classify_normal_endo(f);
  Outcome out;
  out.report.command = "fitting";
  out.report.add_input(g);
  out.report.lemma_refs = {"Fitting's lemma", "automorphism-or-nilpotent dichotomy"};
  out.report.result = Json{{"exponent", split.exponent},
                           {"kernel_part", subgroup_json(split.kernel_part)},
                           {"image_part", subgroup_json(split.image_part)},
                           {"classification", classification_json(cls)}};
  std::ostringstream text;
  text << "exponent " << split.exponent << "\n  ker f^n order " << split.kernel_part.order() << " "
       << join_elements(split.kernel_part.members()) << "\n  Im f^n order " << split.image_part.order() << " "
       << join_elements(split.image_part.members()) << "\n  kind " << endo_kind_name(cls.kind);
  if (cls.nilpotency_index) text << " (index " << *cls.nilpotency_index << ")";
  text << "\n";
  out.text = text.str();
  return out;
}

Outcome cmd_normal_endos(const Options& o) {
  const auto g = input_groups(o, 1).front();
  Limits limits = o.limits();
  limits.endo_order_cap = o.max_order.value_or(16);
  const auto endos = enumerate_endomorphisms(g, true, limits);
  Outcome out;
  out.report.command = "normal-endos";
  out.report.add_input(g);
  out.report.lemma_refs = {"Fitting's lemma", "automorphism-or-nilpotent dichotomy"};
  Json list = Json::array();
  std::map<std::string, std::size_t> counts;
  std::ostringstream text;
  for (const auto& f : endos) {
    const auto c = classify_normal_endo(f);
    ++counts[std::string(endo_kind_name(c.kind))];
    list.push_back(Json{{"images", to_vec(f.images())}, {"classification", classification_json(c)}});
    text << "  " << join_elements(f.images()) << "  " << endo_kind_name(c.kind) << "\n";
  }
  out.report.result = Json{{"count", endos.size()},
                           {"kinds", counts},
                           {"indecomposable", is_indecomposable(g, limits)},
                           {"endomorphisms", std::move(list)}};
  out.text = std::to_string(endos.size()) + " normal endomorphism(s) of " + label_or(g, "group") + "\n" + text.str();
  return out;
}

// First complement split of `group` with a part of order g_order that
// (optionally) is isomorphic to `like`; returns {part, rest}.
std::optional<std::pair<NormalSubgroup, NormalSubgroup>> split_off(const FiniteGroup& group, std::uint64_t g_order,
                                                                   const FiniteGroup* like, const Limits& limits) {
  for (const auto& [a, b] : complement_splits(group, limits)) {
    for (const auto& [part, rest] : {std::pair{a, b}, std::pair{b, a}}) {
      if (part.order() != g_order) continue;
      if (like && !are_isomorphic(as_group(part).group, *like, limits)) continue;
      return std::pair{part, rest};
    }
  }
  return std::nullopt;
}

Outcome cmd_cancel(const Options& o) {
  if (o.x.empty() || o.y.empty() || o.g_order == 0) throw UsageError("cancel needs --x, --y and --g-order");
  const auto limits = o.limits();
  const auto x = load_group_ref(o.x, limits);
  const auto y = load_group_ref(o.y, limits);
  if (o.g_order < 2 || x.order() % o.g_order != 0) {
    throw Error(ErrorKind::kBadParams, "--g-order must be a divisor of |X| greater than 1");
  }
  std::optional<std::pair<NormalSubgroup, NormalSubgroup>> sx;
  if (o.g_order == x.order()) {
    sx = std::pair{NormalSubgroup::whole(x), NormalSubgroup::trivial(x)};
  } else {
    sx = split_off(x, o.g_order, nullptr, limits);
  }
  if (!sx) throw Error(ErrorKind::kPreconditionViolated, "X has no direct factor of order " + std::to_string(o.g_order));
  const auto gx = as_group(sx->first).group;
  std::optional<std::pair<NormalSubgroup, NormalSubgroup>> sy;
  if (o.g_order == y.order()) {
    if (are_isomorphic(y, gx, limits)) sy = std::pair{NormalSubgroup::whole(y), NormalSubgroup::trivial(y)};
  } else if (y.order() % o.g_order == 0) {
    sy = split_off(y, o.g_order, &gx, limits);
  }
  if (!sy) {
    if (!are_isomorphic(x, y, limits)) throw Error(ErrorKind::kNotIsomorphicAmbient, "X and Y are not isomorphic");
    throw Error(ErrorKind::kPreconditionViolated, "Y has no direct factor isomorphic to the chosen factor of X");
  }
  const auto factors_of = [](const std::pair<NormalSubgroup, NormalSubgroup>& s) {
    std::vector<NormalSubgroup> f{s.first};
    if (!s.second.is_trivial()) f.push_back(s.second);
    return f;
  };
  const auto dx = InternalDecomposition::verified(x, factors_of(*sx));
  const auto dy = InternalDecomposition::verified(y, factors_of(*sy));
  const auto c = cancel_factor(dx, 0, dy, 0, limits);
  Outcome out;
  out.report.command = "cancel";
  out.report.add_input(x, o.x);
  out.report.add_input(y, o.y);
  out.report.lemma_refs = {"cancellation of finite direct factors", "Krull-Schmidt theorem: uniqueness"};
  out.report.result = Json{{"g_order", o.g_order},
                           {"x_factor", to_vec(sx->first.members())},
                           {"y_factor", to_vec(sy->first.members())},
                           {"complement_x", subgroup_json(c.complement_x)},
                           {"complement_y", subgroup_json(c.complement_y)},
                           {"isomorphism", to_vec(c.isomorphism.images())}};
  out.text = "A = " + join_elements(c.complement_x.members()) + "\nB = " + join_elements(c.complement_y.members()) +
             "\nA -> B: " + join_elements(c.isomorphism.images()) + " (positions within A and B)\n";
  return out;
}

// --- towers -------------------------------------------------------------------

ProfiniteTower load_tower(const Options& o, std::size_t index = 0) {
  if (!o.verbal.empty() && index == 0) {
    if (o.exponents_text.empty()) throw UsageError("--verbal needs --exponents");
    std::vector<std::uint64_t> exponents;
    for (const auto e : parse_number_list(o.exponents_text)) exponents.push_back(e);
    return verbal_quotient_tower(named_group(o.verbal, o.limits()), exponents);
  }
  const std::size_t file_index = o.verbal.empty() ? index : index - 1;
  if (file_index >= o.files.size()) throw UsageError("missing tower file");
  return tower_from_json(read_json_file(o.files[file_index]), o.limits());
}

Json level_orders(const ProfiniteTower& t) {
  Json out = Json::array();
  for (const auto& l : t.levels()) out.push_back(l.order());
  return out;
}

void add_tower_inputs(Report& r, const ProfiniteTower& t, const std::string& prefix) {
  for (std::size_t k = 0; k < t.depth(); ++k) r.add_input(t.level(k), prefix + "level " + std::to_string(k));
}

Outcome cmd_tower_validate(const Options& o) {
  const auto t = load_tower(o);
  const auto v = validate_tower(t);
  Outcome out;
  out.report.command = "tower validate";
  add_tower_inputs(out.report, t, "");
  out.report.result = Json{{"valid", v.valid}, {"violations", v.violations}, {"level_orders", level_orders(t)}};
  out.text = v.valid ? "valid tower of depth " + std::to_string(t.depth()) + "\n" : "invalid tower\n";
  for (const auto& s : v.violations) out.text += "  " + s + "\n";
  return out;
}

Outcome cmd_tower_decompose(const Options& o) {
  const auto t = load_tower(o);
  const auto limits = o.limits();
  const auto chain = tower_decompose(t, limits);
  Outcome out;
  out.report.command = "tower decompose";
  add_tower_inputs(out.report, t, "");
  out.report.lemma_refs = {"coherent decomposition of an inverse system", "escaping-factor bound"};
  Json levels = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < t.depth(); ++k) {
    Json factors = Json::array();
    text << "level " << k << " (order " << t.level(k).order() << "):";
    for (const auto& f : chain.per_level[k].factors()) {
      factors.push_back(subgroup_json(f));
      text << " " << f.order();
    }
    text << "\n";
    levels.push_back(Json{{"order", t.level(k).order()}, {"factors", std::move(factors)}});
  }
  Json corr = Json::array();
  for (std::size_t k = 0; k < chain.correspondence.size(); ++k) {
    Json row = Json::array();
    text << "level " << k + 1 << " -> " << k << ":";
    for (const auto i : chain.correspondence[k]) {
      if (i == CoherentDecomposition::kToTrivial) {
        row.push_back(nullptr);
        text << " -";
      } else {
        row.push_back(i);
        text << " " << i;
      }
    }
    text << "\n";
    corr.push_back(std::move(row));
  }
  Json bounds = Json::array();
  std::vector<std::uint64_t> ms = o.w_exponents.empty() ? std::vector<std::uint64_t>{2} : o.w_exponents;
  for (const auto m : ms) {
    for (const auto& row : w_bound(t, chain, m)) {
      bounds.push_back(Json{{"level", row.level}, {"exponent", row.exponent}, {"escaping", row.escaping},
                            {"quotient_order", row.quotient_order}, {"holds", row.holds}});
      text << "m=" << m << " level " << row.level << ": " << row.escaping << " escaping, |G/G^m| = "
           << row.quotient_order << (row.holds ? "" : "  VIOLATED") << "\n";
    }
  }
  out.report.result = Json{{"levels", std::move(levels)}, {"correspondence", std::move(corr)}, {"w_bound", bounds}};
  out.text = text.str();
  return out;
}

Json fin_json(const FinSet& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes) {
    classes.push_back(Json{{"order", c.representative.order()},
                           {"fingerprint", to_json(c.fingerprint)},
                           {"description", describe(c.fingerprint)}});
  }
  return Json{{"max_order", s.max_order}, {"classes", std::move(classes)}};
}

Outcome cmd_tower_fin(const Options& o) {
  const auto t = load_tower(o);
  const std::size_t max = o.max_order.value_or(16);
  const auto s = fin_images(t, max, o.limits());
  Outcome out;
  out.report.command = "tower fin";
  add_tower_inputs(out.report, t, "");
  out.report.lemma_refs = {"finite images of a profinite group"};
  out.report.result = fin_json(s);
  out.text = std::to_string(s.classes.size()) + " class(es) of order <= " + std::to_string(max) + "\n";
  for (const auto& c : s.classes) out.text += "  " + describe(c.fingerprint) + "\n";
  return out;
}

Outcome cmd_tower_same_fin(const Options& o) {
  const auto left = load_tower(o, 0);
  const auto right = load_tower(o, 1);
  const std::size_t max = o.max_order.value_or(16);
  const auto cmp = same_fin(left, right, max, o.limits());
  Outcome out;
  out.report.command = "tower same-fin";
  add_tower_inputs(out.report, left, "left ");
  add_tower_inputs(out.report, right, "right ");
  out.report.lemma_refs = {"finite images of a profinite group"};
  Json witness = nullptr;
  if (cmp.witness) {
    witness = Json{{"side", cmp.side},
                   {"order", cmp.witness->representative.order()},
                   {"fingerprint", to_json(cmp.witness->fingerprint)},
                   {"description", describe(cmp.witness->fingerprint)}};
  }
  out.report.result = Json{{"equal", cmp.equal}, {"max_order", max}, {"witness", witness}};
  out.text = cmp.equal ? "same finite images up to order " + std::to_string(max) + "\n"
                       : "different: " + describe(cmp.witness->fingerprint) + " only on the " + cmp.side + "\n";
  return out;
}

Outcome cmd_fiber_power(const Options& o) {
  if (o.files.empty()) throw UsageError("fiber-power needs a fiber-power-v1 spec file");
  const auto limits = o.limits();
  const auto spec = fiber_power_spec_from_json(read_json_file(o.files.front()), limits);
  const auto fp = fiber_power(spec, limits);
  Outcome out;
  out.report.command = "fiber-power";
  out.report.add_input(spec.group);
  out.report.lemma_refs = {"fiber power construction"};
  out.report.result = Json{{"order", fp.group.order()},
                           {"predicted_order", fp.predicted_order},
                           {"description", fp.description},
                           {"fingerprint", to_json(fingerprint(fp.group))}};
  out.text = fp.description + "\n";
  if (!o.tower_file.empty()) {
    const auto t = tower_from_json(read_json_file(o.tower_file), limits);
    const auto w = verify_image(t, fp.group, limits);
    out.report.result["image"] =
        w ? Json{{"level", w->level}, {"surjection", to_vec(w->surjection.images())}} : Json(nullptr);
    out.text += w ? "image of tower level " + std::to_string(w->level) + "\n" : "not an image of any tower level\n";
  }
  return out;
}

Outcome cmd_corpus(const Options& o) {
  const auto max = o.max_order.value_or(16);
  Outcome out;
  out.report.command = "corpus";
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& c : corpus(max)) {
    const auto g = named_group(c.spec, o.limits());
    list.push_back(Json{{"spec", c.spec.to_string()}, {"order", c.order}, {"label", g.label()},
                        {"abelian", g.is_abelian()}});
    text << std::setw(5) << c.order << "  " << c.spec.to_string() << "\n";
  }
  out.report.result = Json{{"max_order", max}, {"groups", std::move(list)}};
  out.text = text.str();
  return out;
}

Outcome cmd_selftest(const Options& o, bool& failed) {
  Outcome out;
  out.report.command = "selftest";
  Json results = Json::array();
  std::ostringstream text;
  if (o.list) {
    for (const auto& s : verify::sweeps()) {
      results.push_back(Json{{"name", s.name}, {"description", s.description}, {"default_max_order", s.default_max_order}});
      text << std::left << std::setw(24) << s.name << std::setw(6) << s.default_max_order << s.description << "\n";
    }
    out.report.result = Json{{"sweeps", std::move(results)}};
    out.text = text.str();
    return out;
  }
  std::vector<const verify::SweepInfo*> chosen;
  if (o.sweeps.empty()) {
    for (const auto& s : verify::sweeps()) chosen.push_back(&s);
  } else {
    for (const auto& name : o.sweeps) {
      const auto* s = verify::find_sweep(name);
      if (!s) throw UsageError("unknown sweep '" + name + "' (see selftest --list)");
      chosen.push_back(s);
    }
  }
  std::size_t total_checks = 0, total_failures = 0;
  for (const auto* s : chosen) {
    const std::uint64_t max = o.max_order ? std::min(*o.max_order, s->default_max_order) : s->default_max_order;
    const auto r = verify::run_sweep(*s, max, o.limits());
    total_checks += r.checks;
    total_failures += r.failures;
    results.push_back(Json{{"name", r.name}, {"max_order", max}, {"checks", r.checks}, {"failures", r.failures},
                           {"messages", r.messages}});
    text << std::left << std::setw(24) << r.name << " max " << std::setw(4) << max << " checks " << std::setw(8)
         << r.checks << " failures " << r.failures << "  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (const auto& m : r.messages) text << "    " << m << "\n";
  }
  failed = total_failures > 0;
  out.report.result = Json{{"sweeps", std::move(results)}, {"checks", total_checks}, {"failures", total_failures}};
  text << total_checks << " checks, " << total_failures << " failures\n";
  out.text = text.str();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krull-Schmidt workbench for finite groups and truncated profinite towers", "kschmidt"};
  app.require_subcommand(1);
  Options o;
  std::string active = "kschmidt";

  const auto common = [&](CLI::App* sub, bool groups) {
    sub->add_flag("--json", o.json, "Machine-readable JSON report");
    sub->add_option("--max-order", o.max_order, "Order bound (meaning depends on the command)");
    sub->add_option("--budget", o.budget, "Search node cap (default 10^7)");
    if (groups) {
      sub->add_option("--named", o.named, "Inline group spec, e.g. cyclic:6 or direct_product(cyclic:2,symmetric:3)")
          ->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      sub->add_option("files", o.files, "Group or tower JSON files");
    }
  };
  const auto tower_inputs = [&](CLI::App* sub) {
    sub->add_option("--verbal", o.verbal, "Build the verbal quotient tower of this named group");
    sub->add_option("--exponents", o.exponents_text, "Comma-separated exponents m1|m2|... for --verbal");
  };

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a group into indecomposable direct factors");
  common(decompose_cmd, true);
  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two groups");
  common(iso_cmd, true);
  auto* fitting_cmd = app.add_subcommand("fitting", "Fitting split of a normal endomorphism");
  common(fitting_cmd, true);
  fitting_cmd->add_option("--endo", o.endo, "Comma-separated image vector")->required();
  auto* endos_cmd = app.add_subcommand("normal-endos", "List and classify normal endomorphisms");
  common(endos_cmd, true);
  auto* cancel_cmd = app.add_subcommand("cancel", "Cancel a common direct factor of X and Y");
  common(cancel_cmd, false);
  cancel_cmd->add_option("--x", o.x, "Group file or named spec for X")->required();
  cancel_cmd->add_option("--y", o.y, "Group file or named spec for Y")->required();
  cancel_cmd->add_option("--g-order", o.g_order, "Order of the factor to cancel")->required();

  auto* tower_cmd = app.add_subcommand("tower", "Truncated profinite towers");
  tower_cmd->require_subcommand(1);
  auto* t_validate = tower_cmd->add_subcommand("validate", "Check connecting maps");
  auto* t_decompose = tower_cmd->add_subcommand("decompose", "Coherent levelwise decomposition");
  auto* t_fin = tower_cmd->add_subcommand("fin", "Finite images up to --max-order (default 16)");
  auto* t_same = tower_cmd->add_subcommand("same-fin", "Compare finite images of two towers");
  auto* t_fiber = tower_cmd->add_subcommand("fiber-power", "Build a fiber power from a spec file");
  for (auto* sub : {t_validate, t_decompose, t_fin, t_same, t_fiber}) common(sub, true);
  for (auto* sub : {t_validate, t_decompose, t_fin, t_same}) tower_inputs(sub);
  t_decompose->add_option("--exponent", o.w_exponents, "Exponent m for the escaping-factor bound (repeatable)")
      ->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* fiber_cmd = app.add_subcommand("fiber-power", "Build a fiber power from a spec file");
  common(fiber_cmd, true);
  for (auto* sub : {t_fiber, fiber_cmd}) {
    sub->add_option("--tower", o.tower_file, "Tower file: also search for a level mapping onto the result");
  }
  auto* corpus_cmd = app.add_subcommand("corpus", "List the named-group corpus up to --max-order (default 16)");
  common(corpus_cmd, false);
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant sweeps");
  common(selftest_cmd, false);
  selftest_cmd->add_option("--sweep", o.sweeps, "Run only this sweep (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  selftest_cmd->add_flag("--list", o.list, "List sweeps and their default order bounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  bool failed = false;
  try {
    Outcome result;
    if (*decompose_cmd) {
      active = "decompose";
      result = cmd_decompose(o);
    } else if (*iso_cmd) {
      active = "iso";
      result = cmd_iso(o);
    } else if (*fitting_cmd) {
      active = "fitting";
      result = cmd_fitting(o);
    } else if (*endos_cmd) {
      active = "normal-endos";
      result = cmd_normal_endos(o);
    } else if (*cancel_cmd) {
      active = "cancel";
      result = cmd_cancel(o);
    } else if (*t_validate) {
      active = "tower validate";
      result = cmd_tower_validate(o);
    } else if (*t_decompose) {
      active = "tower decompose";
      result = cmd_tower_decompose(o);
    } else if (*t_fin) {
      active = "tower fin";
      result = cmd_tower_fin(o);
    } else if (*t_same) {
      active = "tower same-fin";
      result = cmd_tower_same_fin(o);
    } else if (*t_fiber || *fiber_cmd) {
      active = "fiber-power";
      result = cmd_fiber_power(o);
    } else if (*corpus_cmd) {
      active = "corpus";
      result = cmd_corpus(o);
    } else if (*selftest_cmd) {
      active = "selftest";
      result = cmd_selftest(o, failed);
    }
    if (o.json) {
      out << result.report.dump() << "\n";
    } else {
      out << result.text;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.json) {
      out << Json{{"command", active}, {"error", {{"kind", std::string(e.kind_name())}, {"message", e.what()}}}}.dump(2)
          << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
  return failed ? 1 : 0;
}

}  // namespace kschmidt::cli
