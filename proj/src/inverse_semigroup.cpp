#include "mapsym/inverse_semigroup.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace mapsym {

namespace detail {

static inline std::uint8_t get_byte(const PackedPP& p, unsigned i) {
  return static_cast<std::uint8_t>(p.w[i >> 3] >> ((i & 7) * 8));
}

static inline void set_byte(PackedPP& p, unsigned i, std::uint8_t v) {
  p.w[i >> 3] |= static_cast<std::uint64_t>(v) << ((i & 7) * 8);
}

PackedPP pack(const PartialPerm& f) {
  PackedPP p;
  for (unsigned x = 0; x < f.degree(); ++x) {
    int y = f.image(x);
    if (y >= 0)
      set_byte(p, x, static_cast<std::uint8_t>(y + 1));
  }
  return p;
}

PartialPerm unpack(const PackedPP& p, unsigned degree) {
  std::vector<int> img(degree, -1);
  for (unsigned x = 0; x < degree; ++x) {
    std::uint8_t b = get_byte(p, x);
    if (b)
      img[x] = static_cast<int>(b) - 1;
  }
  return PartialPerm(std::move(img));
}

PackedPP packed_compose(const PackedPP& f, const PackedPP& g, unsigned degree) {
  PackedPP out;
  for (unsigned x = 0; x < degree; ++x) {
    std::uint8_t a = get_byte(f, x);
    if (!a)
      continue;
    std::uint8_t b = get_byte(g, a - 1);
    if (b)
      set_byte(out, x, b);
  }
  return out;
}

PackedPP packed_inverse(const PackedPP& f, unsigned degree) {
  PackedPP out;
  for (unsigned x = 0; x < degree; ++x) {
    std::uint8_t a = get_byte(f, x);
    if (a)
      set_byte(out, a - 1, static_cast<std::uint8_t>(x + 1));
  }
  return out;
}

} // namespace detail

using detail::PackedPP;

SemigroupClosure::SemigroupClosure(unsigned degree, std::uint64_t cap)
    : degree_(degree), cap_(cap) {
  if (degree > kMaxDegree)
    throw std::invalid_argument("SemigroupClosure: degree above packed limit of 32");
}

bool SemigroupClosure::contains(const PartialPerm& f) const {
  if (f.degree() != degree_)
    throw std::invalid_argument("SemigroupClosure::contains: degree mismatch");
  return index_.count(detail::pack(f)) != 0;
}

void SemigroupClosure::add_generator(const PartialPerm& f) {
  if (f.degree() != degree_)
    throw std::invalid_argument("SemigroupClosure::add_generator: degree mismatch");
  PackedPP p = detail::pack(f);
  PackedPP pinv = detail::packed_inverse(p, degree_);

  std::size_t first_new_mult = multipliers_.size();
  multipliers_.push_back(p);
  if (!(pinv == p))
    multipliers_.push_back(pinv);

  // Existing elements combined with the new multipliers, then the ordinary
  // worklist closure over everything new.
  std::size_t snapshot = order_.size();
  insert_and_close(p);
  for (std::size_t i = 0; i < snapshot; ++i) {
    for (std::size_t m = first_new_mult; m < multipliers_.size(); ++m) {
      insert_and_close(detail::packed_compose(order_[i], multipliers_[m], degree_));
      insert_and_close(detail::packed_compose(multipliers_[m], order_[i], degree_));
    }
  }
}

void SemigroupClosure::insert_and_close(const PackedPP& start) {
  auto [it, inserted] = index_.emplace(start, static_cast<std::uint32_t>(order_.size()));
  if (!inserted)
    return;
  order_.push_back(start);
  if (order_.size() > cap_)
    throw ResourceLimitError("semigroup closure exceeded element cap", cap_);

  // Worklist over newly inserted elements; products with all multipliers on
  // both sides keep the set closed under composition (inverses of words are
  // covered because every generator's inverse is itself a multiplier).
  std::size_t head = order_.size() - 1;
  while (head < order_.size()) {
    PackedPP cur = order_[head];
    ++head;
    for (const PackedPP& m : multipliers_) {
      PackedPP right = detail::packed_compose(cur, m, degree_);
      if (index_.emplace(right, static_cast<std::uint32_t>(order_.size())).second) {
        order_.push_back(right);
        if (order_.size() > cap_)
          throw ResourceLimitError("semigroup closure exceeded element cap", cap_);
      }
      PackedPP left = detail::packed_compose(m, cur, degree_);
      if (index_.emplace(left, static_cast<std::uint32_t>(order_.size())).second) {
        order_.push_back(left);
        if (order_.size() > cap_)
          throw ResourceLimitError("semigroup closure exceeded element cap", cap_);
      }
    }
  }
}

std::vector<PartialPerm> SemigroupClosure::elements() const {
  std::vector<PartialPerm> out;
  out.reserve(order_.size());
  for (const auto& p : order_)
    out.push_back(detail::unpack(p, degree_));
  return out;
}

void SemigroupClosure::for_each(const std::function<void(const PartialPerm&)>& fn) const {
  for (const auto& p : order_)
    fn(detail::unpack(p, degree_));
}

InverseSemigroup::InverseSemigroup(unsigned degree, std::vector<PartialPerm> generators,
                                   std::uint64_t cap)
    : gens_(std::move(generators)), closure_(degree, cap) {
  for (const auto& g : gens_) {
    if (g.degree() != degree)
      throw std::invalid_argument("InverseSemigroup: generator degree mismatch");
    closure_.add_generator(g);
  }
}

bool InverseSemigroup::contains(const PartialPerm& f) const {
  return closure_.contains(f);
}

std::set<unsigned> InverseSemigroup::orbit_point(unsigned x) const {
  if (x >= degree())
    throw std::invalid_argument("orbit_point: point out of range");
  std::set<unsigned> seen{x};
  std::vector<unsigned> work{x};
  while (!work.empty()) {
    unsigned c = work.back();
    work.pop_back();
    for (const auto& g : gens_) {
      for (const PartialPerm& t : {g, g.inverse()}) {
        int y = t.image(c);
        if (y >= 0 && seen.insert(static_cast<unsigned>(y)).second)
          work.push_back(static_cast<unsigned>(y));
      }
    }
  }
  return seen;
}

std::set<std::vector<unsigned>> InverseSemigroup::orbit_set(
    const std::vector<unsigned>& w) const {
  std::vector<unsigned> start = w;
  std::sort(start.begin(), start.end());
  for (unsigned x : start)
    if (x >= degree())
      throw std::invalid_argument("orbit_set: point out of range");

  std::set<std::vector<unsigned>> seen{start};
  std::vector<std::vector<unsigned>> work{start};
  while (!work.empty()) {
    std::vector<unsigned> cur = std::move(work.back());
    work.pop_back();
    for (const auto& g : gens_) {
      for (const PartialPerm& t : {g, g.inverse()}) {
        std::vector<unsigned> img;
        img.reserve(cur.size());
        bool applicable = true;
        for (unsigned x : cur) {
          int y = t.image(x);
          if (y < 0) {
            applicable = false;
            break;
          }
          img.push_back(static_cast<unsigned>(y));
        }
        if (!applicable)
          continue;
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second)
          work.push_back(std::move(img));
      }
    }
  }
  return seen;
}

} // namespace mapsym
