#include "mapsym/task_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mapsym {

unsigned TaskGraph::add_task(std::string name) {
  if (name.empty())
    name = "T" + std::to_string(names_.size() + 1);
  names_.push_back(std::move(name));
  return static_cast<unsigned>(names_.size() - 1);
}

void TaskGraph::add_channel(unsigned from, unsigned to, double volume) {
  if (from >= names_.size() || to >= names_.size())
    throw std::invalid_argument("TaskGraph::add_channel: task out of range");
  if (volume < 0)
    throw std::invalid_argument("TaskGraph::add_channel: negative volume");
  channels_.push_back(Channel{from, to, volume});
}

bool TaskGraph::preserves_channels(const Perm& p) const {
  if (p.degree() != names_.size())
    return false;
  using Key = std::tuple<unsigned, unsigned, double>;
  std::vector<Key> original, mapped;
  original.reserve(channels_.size());
  mapped.reserve(channels_.size());
  for (const auto& c : channels_) {
    original.emplace_back(c.from, c.to, c.volume);
    mapped.emplace_back(p(c.from), p(c.to), c.volume);
  }
  std::sort(original.begin(), original.end());
  std::sort(mapped.begin(), mapped.end());
  return original == mapped;
}

void TaskGraph::add_symmetry(Perm generator) {
  if (!preserves_channels(generator))
    throw std::invalid_argument("TaskGraph::add_symmetry: not a channel-preserving permutation");
  sym_gens_.push_back(std::move(generator));
}

PermGroup TaskGraph::symmetry_group() const {
  return PermGroup(static_cast<unsigned>(names_.size()), sym_gens_);
}

} // namespace mapsym
