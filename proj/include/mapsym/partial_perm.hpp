#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "mapsym/perm.hpp"

namespace mapsym {

/// A partial permutation of {0, ..., n-1}: an injective map from a subset
/// (its domain) onto a subset (its image). Stored as an image table with -1
/// marking undefined points.
///
/// Composition follows the library convention (left to right) and uses the
/// extended rule for partial maps: compose(f, g) is defined exactly on the
/// x in dom(f) with f(x) in dom(g), where it equals g(f(x)). Under this rule
/// partial permutations over a fixed point set form an inverse semigroup:
/// t * ~t * t == t, and the idempotents are the partial identities.
class PartialPerm {
public:
  /// The empty partial permutation (nowhere defined) on n points.
  explicit PartialPerm(unsigned degree) : img_(degree, -1) {}

  /// Total embedding of a permutation.
  explicit PartialPerm(const Perm& p);

  /// From an image table with -1 for undefined entries; throws
  /// std::invalid_argument unless injective and in range.
  explicit PartialPerm(std::vector<int> images);

  static PartialPerm empty(unsigned degree) { return PartialPerm(degree); }

  static PartialPerm identity(unsigned degree);

  /// The idempotent that fixes exactly the given points.
  static PartialPerm partial_identity(unsigned degree, std::span<const unsigned> domain);
  static PartialPerm partial_identity(unsigned degree, std::initializer_list<unsigned> domain);

  /// From explicit (from, to) pairs; throws on duplicates or range errors.
  static PartialPerm from_pairs(unsigned degree,
                                std::span<const std::pair<unsigned, unsigned>> pairs);
  static PartialPerm from_pairs(unsigned degree,
                                std::initializer_list<std::pair<unsigned, unsigned>> pairs);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  bool defined_at(unsigned x) const { return img_[x] >= 0; }

  /// Image of x, or -1 if undefined there.
  int image(unsigned x) const { return img_[x]; }

  const std::vector<int>& image_table() const { return img_; }

  std::vector<unsigned> domain() const;     // sorted
  std::vector<unsigned> image_set() const;  // sorted

  std::size_t domain_size() const;

  bool is_empty() const { return domain_size() == 0; }

  bool is_total() const { return domain_size() == img_.size(); }

  /// True iff this is a partial identity, equivalently t*t == t.
  bool is_idempotent() const;

  PartialPerm inverse() const;

  /// Restriction to dom() intersected with the given points.
  PartialPerm restricted_to(std::span<const unsigned> points) const;

  /// Conversion to a total permutation; throws unless is_total().
  Perm to_perm() const;

  bool operator==(const PartialPerm& other) const { return img_ == other.img_; }
  bool operator!=(const PartialPerm& other) const { return img_ != other.img_; }

  /// Lexicographic on image tables; deterministic total order for sorting.
  bool operator<(const PartialPerm& other) const { return img_ < other.img_; }

private:
  std::vector<int> img_;
};

/// Extended left-to-right composition, defined on {x in dom(f) : f(x) in dom(g)}.
PartialPerm compose(const PartialPerm& f, const PartialPerm& g);

inline PartialPerm operator*(const PartialPerm& f, const PartialPerm& g) {
  return compose(f, g);
}

/// Inverse, same spelling mpsym-style code tends to use.
inline PartialPerm operator~(const PartialPerm& f) { return f.inverse(); }

std::ostream& operator<<(std::ostream& os, const PartialPerm& f);

} // namespace mapsym

template <>
struct std::hash<mapsym::PartialPerm> {
  std::size_t operator()(const mapsym::PartialPerm& f) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : f.image_table()) {
      h ^= static_cast<std::size_t>(x + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};
