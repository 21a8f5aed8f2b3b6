#pragma once

#include <cstdint>

#include "mapsym/cost_model.hpp"
#include "mapsym/explore.hpp"
#include "mapsym/perm_group.hpp"
#include "mapsym/task_graph.hpp"

namespace mapsym {

struct GAConfig {
  std::size_t mu = 20;          // parents kept per generation
  std::size_t lambda = 20;      // children bred per generation
  std::size_t generations = 50;
  double mutation_rate = 0.05;  // per-gene probability
  std::uint64_t seed = 1;
  bool symmetry_cache = true;   // false = cache keyed by the raw tuple
};

/// mu+lambda evolution over mappings, fitness = -cost. Every evaluation goes
/// through a cache first; with the symmetry cache the key is the canonical
/// representative of the mapping's equivalence class under arch_group x
/// task_group, so equivalent mappings cost one simulator invocation total.
///
/// The random stream is derived per (seed, generation, child), never from
/// the cache state, and cached costs equal fresh ones; therefore the search
/// trajectory is identical with the cache on or off, only the number of
/// invocations changes. Evaluations are reduced in index order, which is
/// also what keeps a future concurrent implementation output-identical.
ExplorationResult ga_explore(const GAConfig& cfg, const TaskGraph& tg, const ArchGraph& arch,
                             const PermGroup& arch_group, const PermGroup& task_group,
                             const CostModel& model);

} // namespace mapsym
