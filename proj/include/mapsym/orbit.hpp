#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "mapsym/perm.hpp"
#include "mapsym/perm_group.hpp"

namespace mapsym {

/// Orbit of `start` under the group generated by `gens`, for an arbitrary
/// action given as apply(perm, object) -> object. Plain breadth-first
/// closure; cost is |orbit| * |gens| applications. Returned as an ordered
/// set so the canonical representative is *begin().
template <typename Obj, typename Apply>
std::set<Obj> orbit_of(std::span<const Perm> gens, const Obj& start, Apply&& apply) {
  std::set<Obj> seen{start};
  std::vector<const Obj*> work{&*seen.begin()};
  while (!work.empty()) {
    const Obj* cur = work.back();
    work.pop_back();
    for (const Perm& g : gens) {
      Obj next = apply(g, *cur);
      auto [it, inserted] = seen.insert(std::move(next));
      if (inserted)
        work.push_back(&*it);
    }
  }
  return seen;
}

/// Least element of the orbit; the canonical representative of the
/// equivalence class of `start`.
template <typename Obj, typename Apply>
Obj canonical_rep(std::span<const Perm> gens, const Obj& start, Apply&& apply) {
  auto orb = orbit_of(gens, start, apply);
  return *orb.begin();
}

inline unsigned apply_point(const Perm& g, unsigned x) { return g(x); }

inline std::vector<unsigned> apply_set(const Perm& g, const std::vector<unsigned>& w) {
  std::vector<unsigned> out;
  out.reserve(w.size());
  for (unsigned x : w)
    out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<unsigned> orbit_point(const PermGroup& g, unsigned x) {
  return orbit_of(std::span<const Perm>(g.generators()), x, apply_point);
}

inline std::set<std::vector<unsigned>> orbit_set(const PermGroup& g,
                                                 const std::vector<unsigned>& w) {
  std::vector<unsigned> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  return orbit_of(std::span<const Perm>(g.generators()), sorted, apply_set);
}

inline unsigned canonical_point(const PermGroup& g, unsigned x) {
  return *orbit_point(g, x).begin();
}

inline std::vector<unsigned> canonical_set(const PermGroup& g,
                                           const std::vector<unsigned>& w) {
  return *orbit_set(g, w).begin();
}

} // namespace mapsym
