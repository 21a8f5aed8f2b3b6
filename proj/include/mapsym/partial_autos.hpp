#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/inverse_semigroup.hpp"
#include "mapsym/partial_perm.hpp"
#include "mapsym/perm_group.hpp"

namespace mapsym {

/// A partial permutation of the nodes is a partial symmetry of the platform
/// exactly when it is an isomorphism between the induced labeled subgraphs
/// of its domain and image: node types preserved pointwise, edge labels
/// preserved pairwise.
bool is_partial_automorphism(const ArchGraph& g, const PartialPerm& f);

/// The full (total) automorphism group. Found by a stabilizer-style sweep:
/// for each node i and each plausible image c, search for one automorphism
/// fixing 0..i-1 pointwise and mapping i to c; the representatives found
/// this way generate the group. Backtracking is pruned by per-node label
/// signatures. Verified against brute force in the tests for small graphs.
PermGroup automorphism_group(const ArchGraph& g);

struct PartialAutoOptions {
  /// Start the generating set from the automorphism group (full symmetries
  /// are cheap to find and cover a large part of the semigroup up front).
  bool seed_with_group = false;

  /// Cap on the closure maintained for membership tests.
  std::uint64_t closure_cap = SemigroupClosure::kDefaultCap;
};

/// Generating set for the inverse semigroup of all partial symmetries,
/// found by depth-first search over domain-growing extensions. Children of
/// a partial map extend its domain by a single point strictly greater than
/// the current maximum, so each partial map is visited exactly once; a
/// candidate that fails the label check prunes its whole subtree.
/// Throws ResourceLimitError if the membership closure exceeds the cap.
std::vector<PartialPerm> partial_automorphism_generators(
    const ArchGraph& g, const PartialAutoOptions& opts = {});

/// Same search, returning the fully enumerated semigroup (the closure the
/// search maintained anyway) instead of discarding it.
InverseSemigroup partial_automorphism_semigroup(const ArchGraph& g,
                                                const PartialAutoOptions& opts = {});

/// Reference implementation: enumerate every partial permutation in
/// lexicographic order (domain, then image sequence), keep those passing the
/// label check that are not yet generated. Exact but exponential twice over;
/// refuses graphs with more than 6 nodes. Oracle for the search above.
std::vector<PartialPerm> partial_automorphism_generators_naive(
    const ArchGraph& g, std::uint64_t closure_cap = SemigroupClosure::kDefaultCap);

/// Number of partial symmetries (the empty map included), by walking the
/// pruned extension tree without storing anything.
std::uint64_t count_partial_automorphisms(const ArchGraph& g);

} // namespace mapsym
