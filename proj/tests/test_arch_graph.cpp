#include "doctest.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/canonical_form.hpp"

using mapsym::ArchGraph;
using mapsym::TopologyGraph;

namespace {

// Oracle: breadth-first hop distances on the topology (all link weights 1).
std::vector<std::vector<unsigned>> bfs_distances(const TopologyGraph& t) {
  unsigned n = static_cast<unsigned>(t.node_count());
  std::vector<std::vector<unsigned>> adj(n);
  for (const auto& l : t.links()) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<std::vector<unsigned>> dist(n, std::vector<unsigned>(n, ~0u));
  for (unsigned s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<unsigned> queue{s};
    while (!queue.empty()) {
      unsigned u = queue.front();
      queue.pop_front();
      for (unsigned v : adj[u])
        if (dist[s][v] == ~0u) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

} // namespace

TEST_CASE("mesh builder") {
  TopologyGraph m22 = mapsym::mesh_topology(2, 2, "RISC");
  CHECK(m22.node_count() == 4);
  CHECK(m22.links().size() == 4);
  CHECK(m22.node_type(0) == "RISC");
  CHECK(m22.node_name(0) == "PE_1");
  CHECK(m22.node_name(3) == "PE_4");

  TopologyGraph m44 = mapsym::mesh_topology(4, 4);
  CHECK(m44.node_count() == 16);
  CHECK(m44.links().size() == 24);  // 2 * 4 * 3 grid edges

  CHECK(mapsym::mesh_topology(1, 1).node_count() == 1);
  CHECK(mapsym::mesh_topology(1, 1).links().empty());
  CHECK_THROWS_AS(mapsym::mesh_topology(0, 3), std::invalid_argument);
}

TEST_CASE("derived 2x2 mesh is the complete graph with hop labels") {
  ArchGraph g = mapsym::derive_architecture_graph(mapsym::mesh_topology(2, 2));
  CHECK(g.size() == 4);
  CHECK(g.edge_label(0, 1) == "1");
  CHECK(g.edge_label(0, 2) == "1");
  CHECK(g.edge_label(0, 3) == "2");  // diagonal
  CHECK(g.edge_label(1, 2) == "2");
  CHECK(g.hop_distance(0, 3) == 2);
  CHECK(g.hop_distance(0, 0) == 0);
}

TEST_CASE("hop labels equal breadth-first distances on meshes up to 5x5") {
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned c = 1; c <= 5; ++c) {
      TopologyGraph t = mapsym::mesh_topology(r, c);
      ArchGraph g = mapsym::derive_architecture_graph(t);
      auto dist = bfs_distances(t);
      for (unsigned u = 0; u < g.size(); ++u)
        for (unsigned v = 0; v < g.size(); ++v)
          CHECK(g.hop_distance(u, v) == dist[u][v]);
    }

  // 4x4 labels range over 1..6; opposite corners are 6 apart.
  ArchGraph m = mapsym::derive_architecture_graph(mapsym::mesh_topology(4, 4));
  CHECK(m.hop_distance(0, 15) == 6);
  unsigned max_label = 0;
  for (unsigned u = 0; u < 16; ++u)
    for (unsigned v = u + 1; v < 16; ++v) {
      CHECK(m.hop_distance(u, v) >= 1);
      max_label = std::max(max_label, m.hop_distance(u, v));
    }
  CHECK(max_label == 6);
}

TEST_CASE("triangle inequality on derived hop labels") {
  ArchGraph g = mapsym::derive_architecture_graph(mapsym::mesh_topology(3, 4));
  for (unsigned a = 0; a < g.size(); ++a)
    for (unsigned b = 0; b < g.size(); ++b)
      for (unsigned c = 0; c < g.size(); ++c)
        CHECK(g.hop_distance(a, c) <= g.hop_distance(a, b) + g.hop_distance(b, c));
}

TEST_CASE("bus builder and shared-resource labels") {
  TopologyGraph bus = mapsym::bus_topology({{"ARM", 2}, {"DSP", 3}});
  CHECK(bus.node_count() == 5);
  ArchGraph g = mapsym::derive_architecture_graph(bus);
  // Every pair communicates over the single shared resource: one off-diagonal
  // label for all pairs.
  const std::string& label = g.edge_label(0, 1);
  for (unsigned u = 0; u < g.size(); ++u)
    for (unsigned v = u + 1; v < g.size(); ++v)
      CHECK(g.edge_label(u, v) == label);
  CHECK(g.node_type(0) == "ARM");
  CHECK(g.node_type(4) == "DSP");

  CHECK(mapsym::bus_topology({{"A", 1}}).node_count() == 1);
  CHECK_THROWS_AS(mapsym::bus_topology({}), std::invalid_argument);
}

TEST_CASE("platform presets") {
  TopologyGraph para = mapsym::parallella_topology();
  CHECK(para.node_count() == 16);
  for (unsigned i = 0; i < 16; ++i)
    CHECK(para.node_type(i) == "Epiphany");

  TopologyGraph key = mapsym::keystone_topology();
  CHECK(key.node_count() == 12);
  unsigned arm = 0, dsp = 0;
  for (unsigned i = 0; i < 12; ++i) {
    if (key.node_type(i) == "ARM")
      ++arm;
    else if (key.node_type(i) == "DSP")
      ++dsp;
  }
  CHECK(arm == 4);
  CHECK(dsp == 8);
}

TEST_CASE("disconnected topologies need an explicit opt-in") {
  TopologyGraph t;
  t.add_node("A");
  t.add_node("A");
  t.add_node("A");
  t.add_link(0, 1);
  CHECK_THROWS_AS(mapsym::derive_architecture_graph(t), std::invalid_argument);

  t.allow_disconnected = true;
  ArchGraph g = mapsym::derive_architecture_graph(t);
  CHECK(g.edge_label(0, 1) == "1");
  CHECK(g.edge_label(0, 2) == "unreachable");
  CHECK(g.edge_label(1, 2) == "unreachable");
}

TEST_CASE("link validation") {
  TopologyGraph t;
  t.add_node("A");
  t.add_node("A");
  CHECK_THROWS_AS(t.add_link(0, 0), std::invalid_argument);   // self-loop
  CHECK_THROWS_AS(t.add_link(0, 5), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(t.add_link(0, 1, ""), std::invalid_argument);
  CHECK_THROWS_AS(t.add_link(0, 1, "link", 0), std::invalid_argument);
}

TEST_CASE("weighted links change derived distances") {
  TopologyGraph t;
  t.add_node("A");
  t.add_node("A");
  t.add_node("A");
  t.add_link(0, 1, "link", 5);
  t.add_link(1, 2, "link", 1);
  t.add_link(0, 2, "link", 2);
  ArchGraph g = mapsym::derive_architecture_graph(t);
  CHECK(g.hop_distance(0, 1) == 3);  // via node 2, 2 + 1 < 5
  CHECK(g.hop_distance(0, 2) == 2);
}

TEST_CASE("induced subgraphs inherit labels") {
  ArchGraph m = mapsym::derive_architecture_graph(mapsym::mesh_topology(4, 4));

  std::vector<unsigned> all(16);
  for (unsigned i = 0; i < 16; ++i)
    all[i] = i;
  ArchGraph full = m.induced_subgraph(all);
  CHECK(full.size() == m.size());
  CHECK(mapsym::canonical_graph_form(full).certificate() ==
        mapsym::canonical_graph_form(m).certificate());

  ArchGraph adj = m.induced_subgraph({0, 1});
  CHECK(adj.size() == 2);
  CHECK(adj.edge_label(0, 1) == "1");

  ArchGraph corners = m.induced_subgraph({0, 15});
  CHECK(corners.edge_label(0, 1) == "6");

  CHECK_THROWS_AS(m.induced_subgraph({}), std::invalid_argument);
}

TEST_CASE("node bookkeeping of the derived graph") {
  ArchGraph g = mapsym::derive_architecture_graph(mapsym::keystone_topology());
  CHECK(g.node_types_table().size() == 2);
  for (unsigned v = 0; v < g.size(); ++v)
    CHECK(g.node_types_table()[g.node_type_id(v)] == g.node_type(v));
  for (unsigned u = 0; u < g.size(); ++u)
    for (unsigned v = 0; v < g.size(); ++v) {
      CHECK(g.edge_label(u, v) == g.edge_label(v, u));
      CHECK(g.edge_labels_table()[g.edge_label_id(u, v)] == g.edge_label(u, v));
    }
}
