#include "mapsym/arch_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace mapsym {

unsigned TopologyGraph::add_node(std::string type, std::string name) {
  if (name.empty())
    name = "PE_" + std::to_string(types_.size() + 1);
  types_.push_back(std::move(type));
  names_.push_back(std::move(name));
  return static_cast<unsigned>(types_.size() - 1);
}

void TopologyGraph::add_link(unsigned a, unsigned b, std::string resource, unsigned hops) {
  if (a >= types_.size() || b >= types_.size())
    throw std::invalid_argument("TopologyGraph::add_link: node out of range");
  if (a == b)
    throw std::invalid_argument("TopologyGraph::add_link: self link");
  if (resource.empty())
    throw std::invalid_argument("TopologyGraph::add_link: empty resource label");
  if (hops == 0)
    throw std::invalid_argument("TopologyGraph::add_link: hops must be positive");
  links_.push_back(TopologyLink{a, b, std::move(resource), hops});
}

ArchGraph::ArchGraph(std::vector<std::string> node_types, std::vector<std::string> node_names,
                     std::vector<std::vector<std::string>> edge_labels,
                     std::vector<std::vector<unsigned>> hop_distance, std::string name)
    : name_(std::move(name)), names_(std::move(node_names)), hops_(std::move(hop_distance)) {
  const std::size_t n = node_types.size();
  if (names_.size() != n || edge_labels.size() != n || hops_.size() != n)
    throw std::invalid_argument("ArchGraph: inconsistent table sizes");

  std::map<std::string, std::uint16_t> type_ids;
  for (const auto& t : node_types) {
    if (!type_ids.count(t)) {
      type_ids.emplace(t, static_cast<std::uint16_t>(type_table_.size()));
      type_table_.push_back(t);
    }
  }
  for (const auto& t : node_types)
    type_of_.push_back(type_ids.at(t));

  std::map<std::string, std::uint16_t> edge_ids;
  edge_of_.assign(n, std::vector<std::uint16_t>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    if (edge_labels[u].size() != n || hops_[u].size() != n)
      throw std::invalid_argument("ArchGraph: label matrix is not square");
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v)
        continue;
      if (edge_labels[u][v] != edge_labels[v][u])
        throw std::invalid_argument("ArchGraph: label matrix is not symmetric");
      const std::string& l = edge_labels[u][v];
      auto it = edge_ids.find(l);
      if (it == edge_ids.end()) {
        it = edge_ids.emplace(l, static_cast<std::uint16_t>(edge_table_.size())).first;
        edge_table_.push_back(l);
      }
      edge_of_[u][v] = it->second;
    }
  }
}

ArchGraph ArchGraph::induced_subgraph(const std::vector<unsigned>& nodes) const {
  const std::size_t k = nodes.size();
  if (k == 0)
    throw std::invalid_argument("induced_subgraph: empty node subset");
  std::vector<std::string> types(k), names(k);
  std::vector<std::vector<std::string>> labels(k, std::vector<std::string>(k));
  std::vector<std::vector<unsigned>> hops(k, std::vector<unsigned>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (nodes[i] >= size())
      throw std::invalid_argument("induced_subgraph: node out of range");
    types[i] = node_type(nodes[i]);
    names[i] = node_name(nodes[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        continue;
      labels[i][j] = edge_label(nodes[i], nodes[j]);
      hops[i][j] = hop_distance(nodes[i], nodes[j]);
    }
  }
  return ArchGraph(std::move(types), std::move(names), std::move(labels), std::move(hops),
                   name_.empty() ? "" : name_ + "|sub");
}

ArchGraph derive_architecture_graph(const TopologyGraph& topo) {
  const std::size_t n = topo.node_count();
  if (n == 0)
    throw std::invalid_argument("derive_architecture_graph: empty topology");

  // Adjacency with minimal per-pair link weight; parallel links collapse to
  // the cheapest one for distance purposes.
  std::vector<std::vector<std::pair<unsigned, unsigned>>> adj(n);
  for (const auto& l : topo.links()) {
    adj[l.a].push_back({l.b, l.hops});
    adj[l.b].push_back({l.a, l.hops});
  }

  constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();
  std::vector<std::vector<unsigned>> dist(n, std::vector<unsigned>(n, kUnreachable));

  // Dijkstra from every node; with unit weights this is plain BFS cost.
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    using Entry = std::pair<unsigned, unsigned>;  // (distance, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0, static_cast<unsigned>(s)});
    while (!pq.empty()) {
      auto [dc, c] = pq.top();
      pq.pop();
      if (dc > d[c])
        continue;
      for (auto [nb, w] : adj[c]) {
        if (dc + w < d[nb]) {
          d[nb] = dc + w;
          pq.push({d[nb], nb});
        }
      }
    }
  }

  std::vector<std::string> types(n), names(n);
  for (std::size_t v = 0; v < n; ++v) {
    types[v] = topo.node_type(static_cast<unsigned>(v));
    names[v] = topo.node_name(static_cast<unsigned>(v));
  }

  std::vector<std::vector<std::string>> labels(n, std::vector<std::string>(n));
  std::vector<std::vector<unsigned>> hops(n, std::vector<unsigned>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v)
        continue;
      if (dist[u][v] == kUnreachable) {
        if (!topo.allow_disconnected)
          throw std::invalid_argument("derive_architecture_graph: topology is disconnected");
        labels[u][v] = "unreachable";
        hops[u][v] = kUnreachable;
      } else {
        labels[u][v] = std::to_string(dist[u][v]);
        hops[u][v] = dist[u][v];
      }
    }
  }

  return ArchGraph(std::move(types), std::move(names), std::move(labels), std::move(hops),
                   topo.name);
}

TopologyGraph mesh_topology(unsigned rows, unsigned cols, const std::string& pe_type) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("mesh_topology: empty mesh");
  TopologyGraph t;
  t.name = "mesh" + std::to_string(rows) + "x" + std::to_string(cols);
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c)
      t.add_node(pe_type);
  auto id = [cols](unsigned r, unsigned c) { return r * cols + c; };
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols)
        t.add_link(id(r, c), id(r, c + 1), "noc", 1);
      if (r + 1 < rows)
        t.add_link(id(r, c), id(r + 1, c), "noc", 1);
    }
  }
  return t;
}

TopologyGraph bus_topology(const std::vector<std::pair<std::string, unsigned>>& type_counts,
                           const std::string& resource) {
  TopologyGraph t;
  t.name = "bus";
  for (const auto& [type, count] : type_counts) {
    for (unsigned i = 0; i < count; ++i)
      t.add_node(type, type + "_" + std::to_string(i + 1));
  }
  const unsigned n = static_cast<unsigned>(t.node_count());
  if (n == 0)
    throw std::invalid_argument("bus_topology: no nodes");
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      t.add_link(a, b, resource, 1);
  return t;
}

TopologyGraph parallella_topology() {
  TopologyGraph t = mesh_topology(4, 4, "Epiphany");
  t.name = "parallella";
  return t;
}

TopologyGraph keystone_topology() {
  TopologyGraph t = bus_topology({{"ARM", 4}, {"DSP", 8}}, "msmc");
  t.name = "keystone";
  return t;
}

} // namespace mapsym
