#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "mapsym/errors.hpp"
#include "mapsym/partial_perm.hpp"

namespace mapsym {

namespace detail {

/// Partial permutations on up to 32 points packed into four words, one byte
/// per point holding image+1 (0 means undefined). Keeps the closure hash set
/// allocation-free per element.
struct PackedPP {
  std::array<std::uint64_t, 4> w{};

  bool operator==(const PackedPP& o) const { return w == o.w; }
};

struct PackedPPHash {
  std::size_t operator()(const PackedPP& p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : p.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }
};

PackedPP pack(const PartialPerm& f);
PartialPerm unpack(const PackedPP& p, unsigned degree);
PackedPP packed_compose(const PackedPP& f, const PackedPP& g, unsigned degree);
PackedPP packed_inverse(const PackedPP& f, unsigned degree);

} // namespace detail

/// Incrementally maintained closure of a set of partial permutations under
/// composition and inversion. Used both by inverse semigroup construction
/// and by the generator search, which alternates membership tests with
/// generator additions. Enumeration order is deterministic.
class SemigroupClosure {
public:
  static constexpr std::uint64_t kDefaultCap = 5'000'000;
  static constexpr unsigned kMaxDegree = 32;

  explicit SemigroupClosure(unsigned degree, std::uint64_t cap = kDefaultCap);

  unsigned degree() const { return degree_; }

  std::uint64_t size() const { return order_.size(); }

  bool contains(const PartialPerm& f) const;

  /// Add a generator and close; throws ResourceLimitError if the closure
  /// would exceed the cap. No-op if already a member.
  void add_generator(const PartialPerm& f);

  /// Elements in enumeration order. Materializes; meant for small closures.
  std::vector<PartialPerm> elements() const;

  /// Visit elements in enumeration order without materializing.
  void for_each(const std::function<void(const PartialPerm&)>& fn) const;

private:
  void insert_and_close(const detail::PackedPP& p);

  unsigned degree_;
  std::uint64_t cap_;
  std::vector<detail::PackedPP> multipliers_;  // generators and their inverses
  std::unordered_map<detail::PackedPP, std::uint32_t, detail::PackedPPHash> index_;
  std::vector<detail::PackedPP> order_;  // enumeration order
};

/// An inverse semigroup of partial permutations, given by generators and
/// represented by its fully enumerated closure. Construction throws
/// ResourceLimitError if the closure exceeds `cap` elements; a capped
/// closure is never kept around half-built.
class InverseSemigroup {
public:
  explicit InverseSemigroup(unsigned degree, std::vector<PartialPerm> generators,
                            std::uint64_t cap = SemigroupClosure::kDefaultCap);

  unsigned degree() const { return closure_.degree(); }

  const std::vector<PartialPerm>& generators() const { return gens_; }

  std::uint64_t size() const { return closure_.size(); }

  bool contains(const PartialPerm& f) const;

  std::vector<PartialPerm> elements() const { return closure_.elements(); }

  void for_each(const std::function<void(const PartialPerm&)>& fn) const {
    closure_.for_each(fn);
  }

  /// Orbit of a point: all images of x under elements defined at x.
  /// Computed by closure over generators and their inverses.
  std::set<unsigned> orbit_point(unsigned x) const;

  /// Orbit of a subset W: all t(W) over elements t with W contained in
  /// dom(t). Distinct from pointwise reachability: the whole set must move
  /// through each generator application together.
  std::set<std::vector<unsigned>> orbit_set(const std::vector<unsigned>& w) const;

private:
  std::vector<PartialPerm> gens_;
  SemigroupClosure closure_;
};

} // namespace mapsym
