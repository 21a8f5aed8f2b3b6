#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/mapping.hpp"
#include "mapsym/task_graph.hpp"

namespace mapsym {

// Synthetic evaluation model: per-(task, PE type) computation costs plus a
// per-hop communication factor. Cost of a mapping is
//
//   max over PEs of (sum of computation costs of the tasks placed there)
//   + sum over channels of volume * hop_distance * comm_factor.
//
// Because it reads only type labels and hop distances, the value is
// unchanged by architecture automorphisms. Task-side invariance additionally
// needs equal cost rows for tasks related by a declared task symmetry;
// validate_cost_symmetry checks that.
class CostModel {
public:
  explicit CostModel(std::size_t task_count) : tasks_(task_count) {}

  void set_compute_cost(unsigned task, const std::string& pe_type, double cost);
  bool has_compute_cost(unsigned task, const std::string& pe_type) const;
  double compute_cost(unsigned task, const std::string& pe_type) const;

  void set_comm_factor(double factor);
  double comm_factor() const { return comm_factor_; }

  std::size_t task_count() const { return tasks_; }
  const std::map<std::string, std::vector<double>>& compute_table() const { return compute_; }

private:
  std::size_t tasks_;
  std::map<std::string, std::vector<double>> compute_;  // type -> per-task cost, -1 = unset
  double comm_factor_ = 1.0;
};

double evaluate_cost(const TaskGraph& tg, const ArchGraph& arch, const CostModel& model,
                     const Mapping& m);

// Throws std::invalid_argument unless every declared task symmetry maps each
// task to one with an identical cost row.
void validate_cost_symmetry(const TaskGraph& tg, const CostModel& model);

} // namespace mapsym
