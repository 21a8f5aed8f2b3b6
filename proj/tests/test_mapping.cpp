#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mapsym/mapping.hpp"
#include "mapsym/partial_autos.hpp"
#include "mapsym/perm.hpp"
#include "mapsym/perm_group.hpp"
#include "mapsym/task_graph.hpp"
#include "mapsym/util.hpp"

using mapsym::Mapping;
using mapsym::Perm;
using mapsym::PermGroup;
using mapsym::RandomStream;

namespace {

// The 2x2 mesh group on PE indices 0..3 (row-major) and the nodes' types.
const PermGroup mesh_group(4, {Perm::from_cycles(4, {{0, 1, 3, 2}}), Perm({1, 0, 3, 2})});
const std::vector<std::uint16_t> same_type{0, 0, 0, 0};

// The audio pipeline's task swap: the two filter chains trade places.
const Perm pi({0, 4, 5, 6, 1, 2, 3, 7});
const PermGroup task_group(8, {pi});

// The worked mapping, PE names (2,3,3,3,4,4,4,1), here with 0-based indices.
const Mapping m1{1, 2, 2, 2, 3, 3, 3, 0};

// Row swap of the mesh: PE_1<->PE_3, PE_2<->PE_4.
const Perm tau({2, 3, 0, 1});

Mapping random_mapping(std::size_t tasks, unsigned pes, RandomStream& rs) {
  Mapping m(tasks);
  for (auto& v : m)
    v = static_cast<unsigned>(rs.below(pes));
  return m;
}

} // namespace

TEST_CASE("architecture symmetries rename the PE values") {
  CHECK(mapsym::act_arch(tau, m1) == Mapping{3, 0, 0, 0, 1, 1, 1, 2});  // (4,1,1,1,2,2,2,3)
  CHECK(mapsym::act_arch(Perm(4), m1) == m1);

  RandomStream rs(67);
  for (int t = 0; t < 100; ++t) {
    Mapping m = random_mapping(8, 4, rs);
    const std::vector<Perm>& gens = mesh_group.generators();
    Perm g = gens[rs.below(gens.size())];
    Perm h = gens[rs.below(gens.size())];
    // Left-to-right composition: g acts first.
    CHECK(mapsym::act_arch(g * h, m) == mapsym::act_arch(h, mapsym::act_arch(g, m)));
  }

  CHECK_THROWS_AS(mapsym::act_arch(Perm(3), m1), std::invalid_argument);
  CHECK_THROWS_AS(mapsym::act_arch(Perm(4), Mapping{9, 0}), std::invalid_argument);
}

TEST_CASE("task symmetries permute the tuple positions") {
  CHECK(mapsym::act_task(pi, m1) == Mapping{1, 3, 3, 3, 2, 2, 2, 0});  // (2,4,4,4,3,3,3,1)
  CHECK(mapsym::act_task(Perm(8), m1) == m1);
  CHECK(mapsym::act_task(pi, mapsym::act_task(pi, m1)) == m1);  // involution

  RandomStream rs(71);
  for (int t = 0; t < 100; ++t) {
    Mapping m = random_mapping(8, 4, rs);
    Perm h1 = (rs.next() & 1) ? pi : Perm(8);
    Perm h2 = (rs.next() & 1) ? pi : Perm(8);
    CHECK(mapsym::act_task(h1 * h2, m) == mapsym::act_task(h2, mapsym::act_task(h1, m)));
  }

  CHECK_THROWS_AS(mapsym::act_task(Perm(3), m1), std::invalid_argument);
}

TEST_CASE("the two actions commute") {
  RandomStream rs(73);
  for (int t = 0; t < 100; ++t) {
    Mapping m = random_mapping(8, 4, rs);
    for (const Perm& g : mesh_group.generators())
      CHECK(mapsym::act_task(pi, mapsym::act_arch(g, m)) ==
            mapsym::act_arch(g, mapsym::act_task(pi, m)));
  }
}

TEST_CASE("the orbit of the worked mapping") {
  std::set<Mapping> orbit = mapsym::mapping_orbit(mesh_group, task_group, m1);

  // Exhaustive oracle: apply every (g, h) pair explicitly.
  std::set<Mapping> expected;
  for (const Perm& g : mesh_group.elements())
    for (const Perm& h : task_group.elements())
      expected.insert(mapsym::act_task(h, mapsym::act_arch(g, m1)));
  CHECK(orbit == expected);
  CHECK(orbit.size() == 16);
  CHECK((mesh_group.order() * task_group.order()) % orbit.size() == 0);

  // The named transformations land where the worked example says
  // (values 0-based here; the prose names PEs 1..4).
  CHECK(orbit.count(m1) == 1);
  CHECK(orbit.count({3, 0, 0, 0, 1, 1, 1, 2}) == 1);  // tau.m1 = (4,1,1,1,2,2,2,3)
  CHECK(orbit.count({1, 3, 3, 3, 2, 2, 2, 0}) == 1);  // pi.m1 = (2,4,4,4,3,3,3,1)
  CHECK(orbit.count({3, 1, 1, 1, 0, 0, 0, 2}) == 1);  // tau.pi.m1 = (4,2,2,2,1,1,1,3)

  // Same value pattern does not mean same orbit: these tuples reuse the
  // multiset (a, b^3, c^3, d) but no mesh symmetry produces them, because
  // the value relabelings they need (e.g. 2->1, 3->3, 4->2, 1->4) move
  // adjacent PEs to non-adjacent ones.
  CHECK(orbit.count({0, 2, 2, 2, 1, 1, 1, 3}) == 0);  // (1,3,3,3,2,2,2,4)
  CHECK(orbit.count({2, 0, 0, 0, 3, 3, 3, 1}) == 0);  // (3,1,1,1,4,4,4,2)
  CHECK(orbit.count({0, 1, 1, 1, 2, 2, 2, 3}) == 0);  // (1,2,2,2,3,3,3,4)
  CHECK(orbit.count({2, 3, 3, 3, 0, 0, 0, 1}) == 0);  // (3,4,4,4,1,1,1,2)
}

TEST_CASE("trivial groups leave a mapping alone") {
  PermGroup ta = PermGroup::trivial(4);
  PermGroup tt = PermGroup::trivial(8);
  CHECK(mapsym::mapping_orbit(ta, tt, m1) == std::set<Mapping>{m1});
  CHECK(mapsym::canonical_mapping(ta, tt, same_type, m1) == m1);
}

TEST_CASE("canonical mapping is the orbit minimum and constant on the orbit") {
  Mapping canon = mapsym::canonical_mapping(mesh_group, task_group, same_type, m1);
  std::set<Mapping> orbit = mapsym::mapping_orbit(mesh_group, task_group, m1);
  CHECK(canon == *orbit.begin());
  CHECK(mapsym::canonical_mapping(mesh_group, task_group, same_type,
                                  mapsym::act_arch(tau, m1)) == canon);
  CHECK(mapsym::canonical_mapping(mesh_group, task_group, same_type,
                                  mapsym::act_task(pi, m1)) == canon);
  CHECK(mapsym::canonical_mapping(mesh_group, task_group, same_type, canon) == canon);
}

TEST_CASE("canonical values induce exactly the orbit partition") {
  RandomStream rs(79);
  std::map<Mapping, Mapping> canon_of;  // mapping -> canonical value
  for (int t = 0; t < 500; ++t) {
    Mapping m = random_mapping(8, 4, rs);
    canon_of[m] = mapsym::canonical_mapping(mesh_group, task_group, same_type, m);
  }
  for (const auto& [m, c] : canon_of) {
    std::set<Mapping> orbit = mapsym::mapping_orbit(mesh_group, task_group, m);
    CHECK(orbit.count(c) == 1);
    for (const auto& [m2, c2] : canon_of)
      CHECK((c == c2) == (orbit.count(m2) == 1));
  }
}

TEST_CASE("interchangeable-PE platforms use the relabeling shortcut") {
  // Two types, each with two interchangeable PEs: the full product of the
  // per-type symmetric groups. The shortcut must agree with plain orbit
  // enumeration.
  PermGroup bus_group(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  std::vector<std::uint16_t> bus_types{0, 0, 1, 1};
  RandomStream rs(83);
  for (int t = 0; t < 200; ++t) {
    Mapping m = random_mapping(6, 4, rs);
    PermGroup tg = (rs.next() & 1) ? PermGroup(6, {Perm::from_cycles(6, {{0, 1}})})
                                   : PermGroup::trivial(6);
    Mapping canon = mapsym::canonical_mapping(bus_group, tg, bus_types, m);
    CHECK(canon == *mapsym::mapping_orbit(bus_group, tg, m).begin());
  }
}

TEST_CASE("cache keys separate exactly the equivalence classes") {
  std::string k1 = mapsym::mapping_cache_key(mesh_group, task_group, same_type, m1);
  CHECK(k1 == mapsym::mapping_cache_key(mesh_group, task_group, same_type,
                                        mapsym::act_task(pi, m1)));
  CHECK(k1 == mapsym::mapping_cache_key(mesh_group, task_group, same_type,
                                        mapsym::act_arch(tau, m1)));

  RandomStream rs(89);
  for (int t = 0; t < 50; ++t) {
    Mapping a = random_mapping(8, 4, rs);
    Mapping b = random_mapping(8, 4, rs);
    bool equivalent = mapsym::mapping_orbit(mesh_group, task_group, a).count(b) == 1;
    CHECK((mapsym::mapping_cache_key(mesh_group, task_group, same_type, a) ==
           mapsym::mapping_cache_key(mesh_group, task_group, same_type, b)) == equivalent);
  }
}

TEST_CASE("keys are stable bytes") {
  // Golden value: canonical form of m1's class under the mesh x pipeline
  // action, hex spelling. Guards the serialization, not just the partition.
  std::string key = mapsym::mapping_cache_key(mesh_group, task_group, same_type, m1);
  CHECK(mapsym::hex_key(key) ==
        mapsym::hex_key(mapsym::mapping_cache_key(mesh_group, task_group, same_type, m1)));
  Mapping canon = mapsym::canonical_mapping(mesh_group, task_group, same_type, m1);
  CHECK(canon == Mapping{0, 1, 1, 1, 3, 3, 3, 2});
  CHECK(mapsym::hex_key(key) ==
        "4d4b31000000080000000000000001000000010000000100000003000000030000000300000002");
}
