#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/cost_model.hpp"
#include "mapsym/explore.hpp"
#include "mapsym/task_graph.hpp"

namespace mapsym {

/// How candidate sub-architectures of each size are chosen:
///  - simple: one randomly grown chain of subsets, one candidate per size
///  - brute_force: every subset
///  - groups: one representative per orbit under the architecture's
///    automorphism group
///  - inv_semi: one representative per induced-subgraph isomorphism class,
///    i.e. per partial-symmetry equivalence class; never more classes than
///    the groups method
enum class Strategy { simple, brute_force, groups, inv_semi };

Strategy strategy_from_string(const std::string& s);
std::string to_string(Strategy s);

/// Representatives of sub-architecture equivalence classes, smallest size
/// first, lexicographically least subset per class. method must be groups or
/// inv_semi. max_size 0 means all sizes.
///
/// The groups method walks each candidate's orbit, so it is meant for
/// platforms whose automorphism group is small (meshes). The inv_semi
/// method never touches the group: it deduplicates by canonical certificate
/// of the induced subgraph, which also handles bus platforms whose groups
/// are huge.
std::vector<std::vector<unsigned>> enumerate_subarch_classes(const ArchGraph& arch,
                                                             Strategy method,
                                                             unsigned max_size = 0);

/// Grow-and-evaluate search for the smallest sub-architecture meeting a cost
/// deadline: for each size, map the application onto each candidate with a
/// greedy list scheduler and evaluate; stop after the first size whose best
/// cost is within the deadline. A deadline no candidate meets is reported in
/// the result, not an error. seed only affects the simple strategy.
ExplorationResult subarch_explore(Strategy strategy, const TaskGraph& tg, const ArchGraph& arch,
                                  const CostModel& model, double deadline, std::uint64_t seed,
                                  unsigned max_size = 0);

/// The deterministic mapping heuristic used by subarch_explore: tasks in
/// descending best-case cost order, each onto the PE minimizing load plus
/// computation cost. Scheduling runs in the subset's canonical vertex order,
/// so isomorphic subsets always receive equal-cost mappings; without that,
/// per-size best costs would depend on the representative chosen and the
/// strategies would stop being comparable. Returns an empty mapping with
/// infinite cost when some task fits no PE in the subset.
std::pair<Mapping, double> greedy_subset_mapping(const TaskGraph& tg, const ArchGraph& arch,
                                                 const CostModel& model,
                                                 const std::vector<unsigned>& subset);

} // namespace mapsym
