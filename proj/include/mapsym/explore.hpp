#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mapsym/mapping.hpp"

namespace mapsym {

/// One requested evaluation during an exploration run. `cache_hit` true
/// means the simulator was not invoked; `hit_kind` is then "exact" when the
/// very same tuple had been evaluated before and "symmetry" when only an
/// equivalent one had.
struct TrialRecord {
  std::size_t index = 0;
  std::size_t generation = 0;          // GA runs; 0 for the initial population
  std::vector<unsigned> subset;        // sub-architecture runs; empty for GA
  Mapping mapping;
  double cost = 0.0;
  bool cache_hit = false;
  std::string hit_kind;                // "", "exact", "symmetry"
};

/// Best outcome for one sub-architecture size.
struct SizeBest {
  std::size_t size = 0;
  std::size_t trials = 0;              // evaluations requested at this size
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<unsigned> best_subset;
  Mapping best_mapping;
};

struct ExplorationResult {
  std::vector<TrialRecord> trials;

  std::size_t evaluations = 0;         // simulator invocations (cache misses)
  std::size_t exact_hits = 0;
  std::size_t symmetry_hits = 0;

  double best_cost = std::numeric_limits<double>::infinity();
  Mapping best_mapping;
  std::vector<unsigned> best_subset;   // sub-architecture runs

  std::vector<double> best_cost_per_generation;  // GA runs, entry 0 = initial
  std::vector<SizeBest> best_per_size;           // sub-architecture runs

  /// Sub-architecture runs: smallest size whose best cost met the deadline;
  /// 0 when the deadline was never met (reported, not an error).
  std::size_t deadline_size = 0;
  bool deadline_met = false;
};

} // namespace mapsym
