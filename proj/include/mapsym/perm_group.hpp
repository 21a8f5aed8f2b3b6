#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mapsym/perm.hpp"

namespace mapsym {

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built eagerly at construction. The chain
/// answers membership (by sifting) and order (product of orbit sizes);
/// no randomization and no base-change machinery.
class PermGroup {
public:
  /// The trivial group on n points.
  static PermGroup trivial(unsigned degree);

  PermGroup(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }

  /// The generators the group was constructed from (identities dropped).
  const std::vector<Perm>& generators() const { return gens_; }

  bool is_trivial() const { return levels_.empty(); }

  bool contains(const Perm& p) const;

  /// Throws std::overflow_error if the order does not fit in 64 bits.
  std::uint64_t order() const;

  /// Order as a decimal string, independent of machine word width.
  std::string order_string() const;

  /// Transversal sizes along the stabilizer chain; their product is the order.
  std::vector<std::uint64_t> order_factors() const;

  /// All elements, enumerated deterministically from the chain. Intended
  /// for small groups (oracles, canonical forms at desk scale).
  std::vector<Perm> elements() const;

private:
  struct Level {
    unsigned base_point;
    std::vector<Perm> gens;  // strong generators fixing all earlier base points
    std::unordered_map<unsigned, Perm> transversal;  // point -> u with u(base) = point
    std::vector<unsigned> orbit;                     // insertion order
  };

  void rebuild_orbit(std::size_t level);
  void complete_level(std::size_t level);

  // Sift p through levels starting at `from`. Returns the residue and the
  // level at which sifting stopped (levels_.size() on full success).
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;

  void add_strong_generator(Perm p, std::size_t level);

  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

/// Direct product G x H acting componentwise; the two factors act on
/// different things (architecture nodes and task indices), so the product is
/// kept as the pair of groups rather than as permutations of a merged set.
struct ProductGroup {
  PermGroup first;
  PermGroup second;

  std::uint64_t order() const { return first.order() * second.order(); }

  std::string order_string() const;
};

ProductGroup direct_product(PermGroup g, PermGroup h);

} // namespace mapsym
