#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mapsym/perm.hpp"
#include "mapsym/perm_group.hpp"

namespace mapsym {

/// A task-to-PE assignment: mapping[t] is the PE index running task t.
/// Not necessarily injective (several tasks may share a PE).
using Mapping = std::vector<unsigned>;

/// Architecture symmetry acting on the PE values: every task stays put, its
/// PE is renamed by g.
Mapping act_arch(const Perm& g, const Mapping& m);

/// Task symmetry acting on the positions: task h(i) receives the PE that
/// task i had, i.e. result[h(i)] = m[i].
Mapping act_task(const Perm& h, const Mapping& m);

/// Orbit of a mapping under the product of the architecture group (on
/// values) and the task group (on positions). The two actions commute, so
/// breadth-first closure over both generator sets enumerates the orbit.
std::set<Mapping> mapping_orbit(const PermGroup& arch_group, const PermGroup& task_group,
                                const Mapping& m);

/// Least element of the orbit: the canonical mapping of the equivalence
/// class. Computed by orbit enumeration with a running minimum; when the
/// architecture group is the full symmetric group on each PE type class
/// (buses), the architecture side is folded to a first-use relabeling
/// instead of being enumerated.
Mapping canonical_mapping(const PermGroup& arch_group, const PermGroup& task_group,
                          const std::vector<std::uint16_t>& pe_type_of, const Mapping& m);

/// Stable byte encoding of the canonical mapping, usable as a cache key.
/// Two mappings get the same key exactly when they are equivalent.
std::string mapping_cache_key(const PermGroup& arch_group, const PermGroup& task_group,
                              const std::vector<std::uint16_t>& pe_type_of, const Mapping& m);

/// Hex spelling of a cache key for display.
std::string hex_key(const std::string& key);

} // namespace mapsym
