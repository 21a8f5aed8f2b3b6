#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapsym/point_set.hpp"

namespace mapsym {

/// One physical communication link between two processing elements.
/// Parallel links over different resources are allowed (multigraph).
struct TopologyLink {
  unsigned a = 0;
  unsigned b = 0;
  std::string resource = "link";
  unsigned hops = 1;  // weight contributed to path lengths
};

/// A multicore platform as the hardware describes it: typed processing
/// elements plus physical links. This is the interchange form; symmetry
/// computations run on the derived ArchGraph instead.
class TopologyGraph {
public:
  TopologyGraph() = default;

  unsigned add_node(std::string type, std::string name = "");

  void add_link(unsigned a, unsigned b, std::string resource = "link", unsigned hops = 1);

  std::size_t node_count() const { return types_.size(); }

  const std::string& node_type(unsigned i) const { return types_.at(i); }
  const std::string& node_name(unsigned i) const { return names_.at(i); }

  const std::vector<TopologyLink>& links() const { return links_; }

  std::string name;

  /// Disconnected platforms are almost always input mistakes; deriving one
  /// throws unless this is set.
  bool allow_disconnected = false;

  PointSet points() const { return PointSet(types_.size(), names_); }

private:
  std::vector<std::string> types_;
  std::vector<std::string> names_;
  std::vector<TopologyLink> links_;
};

/// The complete node- and edge-labeled graph that symmetry is computed on.
/// Every pair of nodes carries a label classifying how they communicate; for
/// point-to-point networks that is the shortest-path hop distance, so
/// a shared bus comes out with one constant label. Node labels are the
/// processing element types, which is what keeps heterogeneous platforms
/// from acquiring symmetries they do not have.
class ArchGraph {
public:
  ArchGraph(std::vector<std::string> node_types, std::vector<std::string> node_names,
            std::vector<std::vector<std::string>> edge_labels,
            std::vector<std::vector<unsigned>> hop_distance, std::string name = "");

  unsigned size() const { return static_cast<unsigned>(type_of_.size()); }

  const std::string& node_type(unsigned v) const { return type_table_[type_of_[v]]; }
  std::uint16_t node_type_id(unsigned v) const { return type_of_[v]; }
  const std::vector<std::string>& node_types_table() const { return type_table_; }

  const std::string& node_name(unsigned v) const { return names_[v]; }

  const std::string& edge_label(unsigned u, unsigned v) const {
    return edge_table_[edge_of_[u][v]];
  }
  std::uint16_t edge_label_id(unsigned u, unsigned v) const { return edge_of_[u][v]; }
  const std::vector<std::string>& edge_labels_table() const { return edge_table_; }

  /// Numeric communication distance, used by cost evaluation. Zero on the
  /// diagonal.
  unsigned hop_distance(unsigned u, unsigned v) const { return hops_[u][v]; }

  const std::string& name() const { return name_; }

  PointSet points() const { return PointSet(names_.size(), names_); }

  /// The labeled subgraph induced by the given nodes, in the given order
  /// (callers pass sorted node lists; the order becomes the new indexing).
  ArchGraph induced_subgraph(const std::vector<unsigned>& nodes) const;

private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::string> type_table_;
  std::vector<std::uint16_t> type_of_;
  std::vector<std::string> edge_table_;
  std::vector<std::vector<std::uint16_t>> edge_of_;
  std::vector<std::vector<unsigned>> hops_;
};

/// Expand a topology into the complete labeled graph: edge label between u
/// and v is the length of the shortest path (sum of per-link hop weights),
/// node labels are the PE types. Throws std::invalid_argument on
/// disconnected input unless the topology opts in; the label "unreachable"
/// is used for disconnected pairs in that case.
ArchGraph derive_architecture_graph(const TopologyGraph& topo);

/// Row-major rows x cols mesh of identical PEs named PE_1.. with nearest
/// neighbor links.
TopologyGraph mesh_topology(unsigned rows, unsigned cols, const std::string& pe_type = "PE");

/// All-to-all links over one shared resource; type_counts is an ordered list
/// of (type, count).
TopologyGraph bus_topology(const std::vector<std::pair<std::string, unsigned>>& type_counts,
                           const std::string& resource = "bus");

/// 4x4 mesh of Epiphany cores (the Parallella board's coprocessor).
TopologyGraph parallella_topology();

/// 4 ARM cores and 8 DSP cores on a shared interconnect (Keystone-style SoC).
TopologyGraph keystone_topology();

} // namespace mapsym
