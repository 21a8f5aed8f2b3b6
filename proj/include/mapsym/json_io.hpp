#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/cost_model.hpp"
#include "mapsym/explore.hpp"
#include "mapsym/ga.hpp"
#include "mapsym/mapping.hpp"
#include "mapsym/partial_perm.hpp"
#include "mapsym/subarch.hpp"
#include "mapsym/task_graph.hpp"

// JSON interchange for every file the command line reads or writes. All
// parsers throw std::invalid_argument with a readable message on malformed
// input; all writers produce byte-stable output (objects serialize with
// sorted keys).
//
// Formats:
//   topology      {"name", "allow_disconnected", "nodes": [{"type","name"}],
//                  "links": [{"a","b","resource","hops"}]}
//   task graph    {"name", "tasks": [{"name"}], "channels":
//                  [{"from","to","volume"}], "symmetries": [[images]]}
//   mapping       {"mapping": [pe indices]} or a bare array
//   cost model    {"comm_factor", "compute": {"TYPE": [per-task costs]}}
//   generators    {"degree", "mode": "group"|"semigroup", "certificate",
//                  "order"|"element_count", "generators": [[images]] or
//                  [[[from,to]]]}
//   run config    {"mode": "ga"|"subarch", "architecture", "task_graph",
//                  "cost_model", "seed", "ga": {...}, "subarch": {...}}
//   trials        one JSON object per line (JSON-lines)
//   summary       single JSON object of counters and bests
namespace mapsym::json_io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

TopologyGraph topology_from_string(const std::string& text);
std::string topology_to_string(const TopologyGraph& topo);

TaskGraph task_graph_from_string(const std::string& text);
std::string task_graph_to_string(const TaskGraph& tg);

Mapping mapping_from_string(const std::string& text);
std::string mapping_to_string(const Mapping& m);

CostModel cost_model_from_string(const std::string& text, std::size_t task_count);
std::string cost_model_to_string(const CostModel& model);

struct GeneratorFile {
  unsigned degree = 0;
  std::string mode;             // "group" or "semigroup"
  std::string certificate_hex;  // canonical certificate of the source graph
  std::string order;            // group mode: decimal order
  std::uint64_t element_count = 0;  // semigroup mode
  std::vector<Perm> perms;
  std::vector<PartialPerm> partial_perms;
};

GeneratorFile generator_file_from_string(const std::string& text);
std::string generator_file_to_string(const GeneratorFile& file);

struct RunConfig {
  std::string mode;          // "ga" or "subarch"
  std::string architecture;  // preset name or file path
  std::string task_graph;    // "fixture:NAME" or file path
  std::string cost_model;    // "fixture", "fixture:NAME", or file path
  std::uint64_t seed = 1;
  GAConfig ga;               // mode "ga"
  Strategy strategy = Strategy::groups;  // mode "subarch"
  double deadline = 0.0;
  unsigned max_size = 0;
};

RunConfig run_config_from_string(const std::string& text);
std::string run_config_to_string(const RunConfig& cfg);

std::string trial_to_line(const TrialRecord& rec);
std::string trials_to_lines(const std::vector<TrialRecord>& recs);
std::vector<TrialRecord> trials_from_lines(const std::string& text);

/// Summary of a finished run; extra carries run identification (mode,
/// inputs, seed) and is merged in as-is.
std::string summary_to_string(const ExplorationResult& result,
                              const std::vector<std::pair<std::string, std::string>>& extra);

/// Plot data: for sub-architecture runs one row per size
/// (size,trials,cumulative_trials,best_cost), for GA runs one row per
/// generation (generation,cumulative_trials,best_cost).
std::string trials_to_csv(const std::vector<TrialRecord>& recs);

} // namespace mapsym::json_io
