#include "mapsym/cost_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapsym {

void CostModel::set_compute_cost(unsigned task, const std::string& pe_type, double cost) {
  if (task >= tasks_)
    throw std::invalid_argument("cost model: task index out of range");
  if (cost < 0)
    throw std::invalid_argument("cost model: negative computation cost");
  auto it = compute_.find(pe_type);
  if (it == compute_.end())
    it = compute_.emplace(pe_type, std::vector<double>(tasks_, -1.0)).first;
  it->second[task] = cost;
}

bool CostModel::has_compute_cost(unsigned task, const std::string& pe_type) const {
  auto it = compute_.find(pe_type);
  return task < tasks_ && it != compute_.end() && it->second[task] >= 0;
}

double CostModel::compute_cost(unsigned task, const std::string& pe_type) const {
  auto it = compute_.find(pe_type);
  if (task >= tasks_ || it == compute_.end() || it->second[task] < 0)
    throw std::invalid_argument("cost model: no cost for task " + std::to_string(task) +
                                " on PE type '" + pe_type + "'");
  return it->second[task];
}

void CostModel::set_comm_factor(double factor) {
  if (factor < 0)
    throw std::invalid_argument("cost model: negative communication factor");
  comm_factor_ = factor;
}

double evaluate_cost(const TaskGraph& tg, const ArchGraph& arch, const CostModel& model,
                     const Mapping& m) {
  if (m.size() != tg.task_count())
    throw std::invalid_argument("evaluate_cost: mapping length does not match task count");
  std::vector<double> load(arch.size(), 0.0);
  for (unsigned t = 0; t < m.size(); ++t) {
    if (m[t] >= arch.size())
      throw std::invalid_argument("evaluate_cost: mapping target out of range");
    load[m[t]] += model.compute_cost(t, arch.node_type(m[t]));
  }
  double makespan = *std::max_element(load.begin(), load.end());
  double comm = 0.0;
  for (const Channel& c : tg.channels())
    if (m[c.from] != m[c.to])
      comm += c.volume * static_cast<double>(arch.hop_distance(m[c.from], m[c.to]));
  return makespan + comm * model.comm_factor();
}

void validate_cost_symmetry(const TaskGraph& tg, const CostModel& model) {
  for (const Perm& h : tg.symmetry_generators()) {
    for (unsigned t = 0; t < tg.task_count(); ++t) {
      for (const auto& [type, row] : model.compute_table()) {
        if (row[t] != row[h(t)])
          throw std::invalid_argument("cost model: tasks " + std::to_string(t) + " and " +
                                      std::to_string(h(t)) +
                                      " are symmetric but have different costs on type '" +
                                      type + "'");
      }
    }
  }
}

} // namespace mapsym
