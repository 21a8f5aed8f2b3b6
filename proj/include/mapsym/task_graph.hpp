#pragma once

#include <string>
#include <vector>

#include "mapsym/perm.hpp"
#include "mapsym/perm_group.hpp"
#include "mapsym/point_set.hpp"

namespace mapsym {

/// A directed communication channel between two tasks. Parallel channels
/// are allowed and carry multiset semantics.
struct Channel {
  unsigned from = 0;
  unsigned to = 0;
  double volume = 1.0;
};

/// A static dataflow application: named tasks, weighted channels, and the
/// application's known symmetries as permutation generators of the task set.
/// Generators are validated on insertion: a task symmetry must map the
/// channel multiset onto itself, volumes included.
class TaskGraph {
public:
  TaskGraph() = default;

  unsigned add_task(std::string name = "");

  void add_channel(unsigned from, unsigned to, double volume = 1.0);

  /// Throws std::invalid_argument unless the permutation preserves the
  /// channel multiset (volumes included).
  void add_symmetry(Perm generator);

  bool preserves_channels(const Perm& p) const;

  std::size_t task_count() const { return names_.size(); }

  const std::string& task_name(unsigned i) const { return names_.at(i); }

  const std::vector<Channel>& channels() const { return channels_; }

  const std::vector<Perm>& symmetry_generators() const { return sym_gens_; }

  /// The group generated by the declared symmetries (trivial if none).
  PermGroup symmetry_group() const;

  PointSet points() const { return PointSet(names_.size(), names_); }

  std::string name;

private:
  std::vector<std::string> names_;
  std::vector<Channel> channels_;
  std::vector<Perm> sym_gens_;
};

} // namespace mapsym
