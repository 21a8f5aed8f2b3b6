#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "mapsym/errors.hpp"
#include "mapsym/inverse_semigroup.hpp"
#include "mapsym/partial_perm.hpp"
#include "mapsym/perm.hpp"
#include "mapsym/perm_group.hpp"

using mapsym::InverseSemigroup;
using mapsym::PartialPerm;
using mapsym::Perm;
using mapsym::PermGroup;
using mapsym::ResourceLimitError;
using mapsym::SemigroupClosure;

namespace {

const std::vector<Perm> d8_gens{Perm::from_cycles(4, {{0, 1, 3, 2}}),
                                Perm({1, 0, 3, 2})};

std::vector<PartialPerm> embed(const std::vector<Perm>& perms) {
  std::vector<PartialPerm> out;
  for (const Perm& p : perms)
    out.emplace_back(p);
  return out;
}

} // namespace

TEST_CASE("single partial identity closes to itself") {
  InverseSemigroup s(4, {PartialPerm::partial_identity(4, {1})});
  CHECK(s.size() == 1);
  CHECK(s.contains(PartialPerm::partial_identity(4, {1})));
  CHECK_FALSE(s.contains(PartialPerm::empty(4)));
}

TEST_CASE("embedded group closes to exactly its elements") {
  // Total permutations compose to total permutations and invert to total
  // permutations, so the closure of an embedded group is the group itself.
  PermGroup d8(4, d8_gens);
  InverseSemigroup s(4, embed(d8.generators()));
  CHECK(s.size() == 8);
  std::size_t full_domain = 0;
  s.for_each([&](const PartialPerm& t) {
    if (t.is_total())
      ++full_domain;
  });
  CHECK(full_domain == 8);

  // Membership agrees with the group on all 24 total permutations.
  std::vector<unsigned> img{0, 1, 2, 3};
  do {
    Perm p(img);
    CHECK(s.contains(PartialPerm(p)) == d8.contains(p));
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("closure is closed under composition and inversion") {
  // A mixed generating set producing a few hundred elements; check
  // exhaustively that products and inverses stay inside.
  InverseSemigroup s(4, {PartialPerm(Perm::from_cycles(4, {{0, 1, 3, 2}})),
                         PartialPerm::from_pairs(4, {{0, 1}, {1, 2}})});
  std::vector<PartialPerm> elems = s.elements();
  CHECK(elems.size() == s.size());
  CHECK(elems.size() <= 10000);
  for (const PartialPerm& a : elems) {
    CHECK(s.contains(a.inverse()));
    for (const PartialPerm& b : elems)
      CHECK(s.contains(a * b));
  }

  // Generators are members; the laws hold inside the closure.
  for (const PartialPerm& g : s.generators()) {
    CHECK(s.contains(g));
    CHECK(s.contains(g * g.inverse() * g));
  }
}

TEST_CASE("enumeration order is deterministic") {
  std::vector<PartialPerm> gens{PartialPerm::from_pairs(5, {{0, 1}, {1, 0}, {2, 3}}),
                                PartialPerm::partial_identity(5, {0, 2, 4})};
  InverseSemigroup a(5, gens);
  InverseSemigroup b(5, gens);
  CHECK(a.elements() == b.elements());
}

TEST_CASE("point orbits under partial maps") {
  // One-directional shift on a path: 0->1, 1->2. Inverses are included in
  // orbit computation, so every point on the path reaches every other.
  InverseSemigroup s(3, {PartialPerm::from_pairs(3, {{0, 1}, {1, 2}})});
  CHECK(s.orbit_point(0) == std::set<unsigned>{0, 1, 2});
  CHECK(s.orbit_point(2) == std::set<unsigned>{0, 1, 2});

  InverseSemigroup fixed(3, {PartialPerm::partial_identity(3, {0, 1, 2})});
  CHECK(fixed.orbit_point(1) == std::set<unsigned>{1});
}

TEST_CASE("set orbits need the whole set inside one domain") {
  // s maps {0,1} jointly to {1,2}; the pair {0,2} is split across domains
  // by every element, so its orbit is itself alone.
  InverseSemigroup s(3, {PartialPerm::from_pairs(3, {{0, 1}, {1, 2}})});
  std::set<std::vector<unsigned>> orb01 = s.orbit_set({0, 1});
  CHECK(orb01.count({0, 1}) == 1);
  CHECK(orb01.count({1, 2}) == 1);
  CHECK(orb01.size() == 2);

  // Orbit of any member equals the orbit (strong-orbit property).
  for (const std::vector<unsigned>& w : orb01)
    CHECK(s.orbit_set(w) == orb01);

  InverseSemigroup trivial(3, {PartialPerm::partial_identity(3, {0, 1, 2})});
  CHECK(trivial.orbit_set({0, 2}) == std::set<std::vector<unsigned>>{{0, 2}});
}

TEST_CASE("cap produces an error, not a truncated answer") {
  CHECK_THROWS_AS(InverseSemigroup(4, embed(d8_gens), 3), ResourceLimitError);
  try {
    InverseSemigroup(4, embed(d8_gens), 3);
  } catch (const ResourceLimitError& e) {
    CHECK(e.cap() == 3);
  }
}

TEST_CASE("packed representation round-trips") {
  using mapsym::detail::pack;
  using mapsym::detail::unpack;
  PartialPerm p = PartialPerm::from_pairs(32, {{0, 31}, {15, 16}, {31, 0}});
  CHECK(unpack(pack(p), 32) == p);
  PartialPerm e = PartialPerm::empty(32);
  CHECK(unpack(pack(e), 32) == e);

  PartialPerm a = PartialPerm::from_pairs(6, {{0, 1}, {2, 3}});
  PartialPerm b = PartialPerm::from_pairs(6, {{1, 5}, {3, 0}});
  CHECK(unpack(mapsym::detail::packed_compose(pack(a), pack(b), 6), 6) == a * b);
  CHECK(unpack(mapsym::detail::packed_inverse(pack(a), 6), 6) == a.inverse());
}

TEST_CASE("degree cap of the packed form") {
  CHECK_THROWS_AS(SemigroupClosure(33), std::invalid_argument);
  CHECK_NOTHROW(SemigroupClosure(32));
}
