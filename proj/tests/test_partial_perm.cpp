#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mapsym/partial_perm.hpp"
#include "mapsym/perm.hpp"
#include "mapsym/util.hpp"

using mapsym::PartialPerm;
using mapsym::Perm;
using mapsym::RandomStream;

namespace {

// Uniformly random partial permutation: each point independently kept in the
// domain with probability 1/2, images assigned injectively at random.
PartialPerm random_partial(unsigned degree, RandomStream& rs) {
  std::vector<unsigned> targets(degree);
  for (unsigned i = 0; i < degree; ++i)
    targets[i] = i;
  for (unsigned i = degree; i > 1; --i)
    std::swap(targets[i - 1], targets[rs.below(i)]);
  std::vector<int> img(degree, -1);
  unsigned used = 0;
  for (unsigned x = 0; x < degree; ++x)
    if (rs.next() & 1)
      img[x] = static_cast<int>(targets[used++]);
  return PartialPerm(std::move(img));
}

} // namespace

// The running example on a 4x4 mesh named PE_1..PE_16 (indices 0..15):
// f maps 1->13, 5->9, 6->10, 7->11, 8->12, 12->8 and g maps the first mesh
// column one step right, 1->2, 5->6, 9->10, 13->14 (PE names).
static const PartialPerm f_example = PartialPerm::from_pairs(
    16, {{0, 12}, {4, 8}, {5, 9}, {6, 10}, {7, 11}, {11, 7}});
static const PartialPerm g_example =
    PartialPerm::from_pairs(16, {{0, 1}, {4, 5}, {8, 9}, {12, 13}});

TEST_CASE("extended composition keeps only points whose image lands in the next domain") {
  PartialPerm gf = f_example * g_example;  // f first, then g
  CHECK(gf == PartialPerm::from_pairs(16, {{0, 13}, {4, 9}}));  // PE_1->PE_14, PE_5->PE_10
  CHECK(gf.domain_size() == 2);

  CHECK(f_example * PartialPerm::empty(16) == PartialPerm::empty(16));
  CHECK(PartialPerm::empty(16) * f_example == PartialPerm::empty(16));
}

TEST_CASE("inverse swaps domain and image") {
  PartialPerm gi = g_example.inverse();
  CHECK(gi == PartialPerm::from_pairs(16, {{1, 0}, {5, 4}, {9, 8}, {13, 12}}));
  CHECK(gi.domain() == g_example.image_set());
  CHECK(PartialPerm::empty(5).inverse() == PartialPerm::empty(5));

  // g * g^-1 is the partial identity on dom(g) = {PE_1, PE_5, PE_9, PE_13}.
  PartialPerm idem = g_example * gi;
  CHECK(idem == PartialPerm::partial_identity(16, {0, 4, 8, 12}));
  CHECK(idem.is_idempotent());
}

TEST_CASE("partial identities") {
  PartialPerm i = PartialPerm::partial_identity(16, {0, 4, 8, 12});
  CHECK(i * i == i);
  CHECK(i.is_idempotent());
  CHECK(i.domain() == i.image_set());

  CHECK(PartialPerm::partial_identity(4, {0, 1, 2, 3}) == PartialPerm(Perm(4)));
  CHECK(PartialPerm::partial_identity(4, {}) == PartialPerm::empty(4));
  CHECK(PartialPerm::identity(4).is_total());

  CHECK(PartialPerm::empty(4).is_idempotent());
  CHECK_FALSE(g_example.is_idempotent());
}

TEST_CASE("idempotents are exactly the partial identities") {
  RandomStream rs(23);
  for (int t = 0; t < 200; ++t) {
    PartialPerm p = random_partial(6, rs);
    bool is_partial_id = true;
    for (unsigned x = 0; x < 6; ++x)
      if (p.defined_at(x) && p.image(x) != static_cast<int>(x))
        is_partial_id = false;
    CHECK(p.is_idempotent() == is_partial_id);
  }
}

TEST_CASE("intersection law for partial identities") {
  // id_I * id_F = id_F * id_I = id_{I intersect F}.
  RandomStream rs(29);
  for (int t = 0; t < 100; ++t) {
    std::vector<unsigned> i_set, f_set, both;
    for (unsigned x = 0; x < 8; ++x) {
      bool in_i = rs.next() & 1, in_f = rs.next() & 1;
      if (in_i)
        i_set.push_back(x);
      if (in_f)
        f_set.push_back(x);
      if (in_i && in_f)
        both.push_back(x);
    }
    PartialPerm pi = PartialPerm::partial_identity(8, i_set);
    PartialPerm pf = PartialPerm::partial_identity(8, f_set);
    PartialPerm pb = PartialPerm::partial_identity(8, both);
    CHECK(pi * pf == pb);
    CHECK(pf * pi == pb);
  }
}

TEST_CASE("inverse semigroup laws on random elements") {
  RandomStream rs(31);
  for (int t = 0; t < 200; ++t) {
    PartialPerm a = random_partial(8, rs);
    PartialPerm b = random_partial(8, rs);
    PartialPerm c = random_partial(8, rs);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() * a == a);
    CHECK(a.inverse() * a * a.inverse() == a.inverse());
    CHECK((a * a.inverse()).is_idempotent());

    // Composition preserves injectivity: constructing from the raw table of
    // the product must not throw.
    CHECK_NOTHROW(PartialPerm((a * b).image_table()));
  }
}

TEST_CASE("total embeddings compose like permutations") {
  RandomStream rs(37);
  for (int t = 0; t < 100; ++t) {
    std::vector<unsigned> pi(8), qi(8);
    for (unsigned i = 0; i < 8; ++i)
      pi[i] = qi[i] = i;
    for (unsigned i = 8; i > 1; --i) {
      std::swap(pi[i - 1], pi[rs.below(i)]);
      std::swap(qi[i - 1], qi[rs.below(i)]);
    }
    Perm p(pi), q(qi);
    CHECK(PartialPerm(p) * PartialPerm(q) == PartialPerm(p * q));
    CHECK(PartialPerm(p).to_perm() == p);
  }
}

TEST_CASE("accessors and validation") {
  CHECK(f_example.domain() == std::vector<unsigned>{0, 4, 5, 6, 7, 11});
  CHECK(f_example.image_set() == std::vector<unsigned>{7, 8, 9, 10, 11, 12});
  CHECK(f_example.domain_size() == 6);
  CHECK_FALSE(f_example.is_total());
  CHECK_FALSE(f_example.is_empty());
  CHECK(PartialPerm::empty(3).is_empty());
  CHECK(f_example.defined_at(0));
  CHECK_FALSE(f_example.defined_at(1));
  CHECK(f_example.image(1) == -1);

  CHECK_THROWS_AS(PartialPerm({0, 0, -1}), std::invalid_argument);   // not injective
  CHECK_THROWS_AS(PartialPerm({5, -1, -1}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(PartialPerm({-2, -1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm::from_pairs(4, {{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm::from_pairs(4, {{0, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm::empty(3).to_perm(), std::invalid_argument);
}

TEST_CASE("restriction") {
  std::vector<unsigned> window{0, 4, 5};
  PartialPerm r = f_example.restricted_to(window);
  CHECK(r == PartialPerm::from_pairs(16, {{0, 12}, {4, 8}, {5, 9}}));
  CHECK(f_example.restricted_to(f_example.domain()) == f_example);
  CHECK(f_example.restricted_to(std::vector<unsigned>{}) == PartialPerm::empty(16));
}
