#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapsym/arch_graph.hpp"

namespace mapsym {

/// Canonical form of a node- and edge-labeled complete graph. Two graphs
/// produce byte-identical certificates exactly when some bijection of their
/// nodes preserves node and edge labels, so certificate equality is
/// decidable sub-architecture equivalence.
struct CanonicalForm {
  std::vector<std::string> type_table;  // distinct node labels, sorted
  std::vector<std::string> edge_table;  // distinct edge labels, sorted
  std::vector<std::uint16_t> type_seq;  // node label ids in canonical order
  /// Edge label ids, one row per canonical position d listing the labels to
  /// positions 0..d-1 (the lower triangle in discovery order).
  std::vector<std::uint16_t> edge_rows;
  /// Witness: original node index placed at each canonical position. Not
  /// part of the certificate; two isomorphic graphs get equal certificates
  /// but generally different witnesses.
  std::vector<unsigned> order;

  /// Deterministic byte encoding of everything except the witness.
  std::string certificate() const;
};

/// Computes the certificate by backtracking over node orderings that realize
/// the sorted node-label sequence, keeping the lexicographically least edge
/// row sequence. Candidates that are interchangeable with an already tried
/// sibling (equal labels to every other node) are skipped, which keeps
/// label-uniform cliques linear instead of factorial. Worst case is still
/// exponential; intended scale is at most around 16 nodes.
CanonicalForm canonical_graph_form(const ArchGraph& g);

} // namespace mapsym
