#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "kschmidt/finite_images.hpp"
#include "kschmidt/group.hpp"
#include "kschmidt/hom.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/limits.hpp"
#include "kschmidt/subgroup.hpp"
#include "kschmidt/tower.hpp"

namespace kschmidt {

using Json = nlohmann::json;

/// Accepts {"format":"cayley-v1",...}, {"format":"perm-v1",...} or a bare
/// string holding a named spec. Throws Error{kBadInput} on malformed
/// documents, plus whatever group construction raises.
FiniteGroup group_from_json(const Json& doc, const Limits& limits = {});

/// {"format":"tower-v1","levels":[group...],"maps":[[...]...]}
ProfiniteTower tower_from_json(const Json& doc, const Limits& limits = {});

/// {"format":"fiber-power-v1","group":<group>,"g0":[...],"m0":[...],
///  "kernel":[...],"copies":n}; subgroup member lists may be omitted for
/// the trivial subgroup. Subgroups are verified normal.
FiberPowerSpec fiber_power_spec_from_json(const Json& doc, const Limits& limits = {});

Json read_json_file(const std::filesystem::path& path);

Json to_json(const FiniteGroup& group);  // cayley-v1
Json to_json(const ProfiniteTower& tower);
Json to_json(const IsoFingerprint& fp);
Json to_json(const FiberPowerSpec& spec);

/// Short human-readable name for a fingerprint, e.g. "order 6 abelian".
std::string describe(const IsoFingerprint& fp);

/// FNV-1a over the order and the multiplication table, as 16 hex digits.
std::string digest(const FiniteGroup& group);

}  // namespace kschmidt
