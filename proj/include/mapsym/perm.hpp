#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace mapsym {

/// A permutation of {0, ..., n-1}, stored as its image table.
///
/// Composition is applied left to right throughout this library:
/// (p * q)(x) == q(p(x)), i.e. p acts first. All other conventions
/// (partial permutations, group actions) follow from this one.
class Perm {
public:
  /// Identity on n points.
  explicit Perm(unsigned degree);

  /// From an image table; throws std::invalid_argument unless it is a
  /// bijection of {0, ..., images.size()-1}.
  explicit Perm(std::vector<unsigned> images);

  static Perm identity(unsigned degree) { return Perm(degree); }

  /// Convenience for tests and fixtures: product of the given cycles.
  /// Cycles are applied to the identity, so disjoint cycles mean the usual
  /// thing and the degree is explicit.
  static Perm from_cycles(unsigned degree,
                          std::initializer_list<std::initializer_list<unsigned>> cycles);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  unsigned operator()(unsigned x) const { return img_[x]; }

  const std::vector<unsigned>& images() const { return img_; }

  bool is_identity() const;

  Perm inverse() const;

  /// Smallest point x with p(x) != x; degree() if none.
  unsigned first_moved() const;

  bool operator==(const Perm& other) const { return img_ == other.img_; }
  bool operator!=(const Perm& other) const { return img_ != other.img_; }

  /// Lexicographic on image tables; a deterministic total order, nothing more.
  bool operator<(const Perm& other) const { return img_ < other.img_; }

private:
  std::vector<unsigned> img_;
};

/// Left-to-right composition: compose(p, q)(x) == q(p(x)).
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

std::ostream& operator<<(std::ostream& os, const Perm& p);

} // namespace mapsym

template <>
struct std::hash<mapsym::Perm> {
  std::size_t operator()(const mapsym::Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};
