#include "mapsym/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "mapsym/util.hpp"

namespace mapsym {

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {});
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (g.is_identity())
      continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  if (gens_.empty())
    return;

  unsigned b0 = degree_;
  for (const auto& g : gens_)
    b0 = std::min(b0, g.first_moved());
  levels_.push_back(Level{b0, gens_, {}, {}});
  complete_level(0);
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.transversal.clear();
  lv.orbit.clear();
  lv.orbit.push_back(lv.base_point);
  lv.transversal.emplace(lv.base_point, Perm::identity(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    unsigned c = lv.orbit[i];
    const Perm u_c = lv.transversal.at(c);
    for (const auto& s : lv.gens) {
      unsigned d = s(c);
      if (!lv.transversal.count(d)) {
        lv.orbit.push_back(d);
        lv.transversal.emplace(d, compose(u_c, s));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    unsigned d = p(lv.base_point);
    auto it = lv.transversal.find(d);
    if (it == lv.transversal.end())
      return {std::move(p), i};
    p = compose(p, it->second.inverse());
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::complete_level(std::size_t level) {
  rebuild_orbit(level);
  // Verify every Schreier generator of this level against the chain below;
  // residues that fail to sift become strong generators of the deeper
  // levels. levels_ may grow (and reallocate) inside the loop, so the level
  // is re-indexed on every access instead of held by reference.
  for (std::size_t i = 0; i < levels_[level].orbit.size(); ++i) {
    unsigned c = levels_[level].orbit[i];
    const Perm u_c = levels_[level].transversal.at(c);
    for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
      const Perm s = levels_[level].gens[si];
      unsigned d = s(c);
      Perm h = compose(compose(u_c, s), levels_[level].transversal.at(d).inverse());
      if (h.is_identity())
        continue;
      auto [res, l] = strip(std::move(h), level + 1);
      if (res.is_identity())
        continue;
      if (l == levels_.size())
        levels_.push_back(Level{res.first_moved(), {}, {}, {}});
      for (std::size_t m = level + 1; m <= l; ++m)
        levels_[m].gens.push_back(res);
      for (std::size_t m = l; m > level; --m)
        complete_level(m);
    }
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: degree mismatch");
  return strip(p, 0).first.is_identity();
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_) {
    std::uint64_t sz = lv.orbit.size();
    if (n > UINT64_MAX / sz)
      throw std::overflow_error("PermGroup::order: does not fit in 64 bits");
    n *= sz;
  }
  return n;
}

std::string PermGroup::order_string() const {
  std::string s = "1";
  for (const auto& lv : levels_)
    s = decimal_mul(s, lv.orbit.size());
  return s;
}

std::vector<std::uint64_t> PermGroup::order_factors() const {
  std::vector<std::uint64_t> f;
  for (const auto& lv : levels_)
    f.push_back(lv.orbit.size());
  return f;
}

std::vector<Perm> PermGroup::elements() const {
  std::vector<Perm> out{Perm::identity(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].orbit.size());
    for (unsigned c : levels_[i].orbit) {
      const Perm& u = levels_[i].transversal.at(c);
      for (const auto& t : out)
        next.push_back(compose(t, u));
    }
    out = std::move(next);
  }
  return out;
}

std::string ProductGroup::order_string() const {
  std::string s = first.order_string();
  for (std::uint64_t f : second.order_factors())
    s = decimal_mul(s, f);
  return s;
}

ProductGroup direct_product(PermGroup g, PermGroup h) {
  return ProductGroup{std::move(g), std::move(h)};
}

} // namespace mapsym
