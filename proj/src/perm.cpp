#include "mapsym/perm.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mapsym {

Perm::Perm(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (unsigned x : img_) {
    if (x >= img_.size() || seen[x])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(unsigned degree,
                       std::initializer_list<std::initializer_list<unsigned>> cycles) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2)
      continue;
    auto it = cycle.begin();
    unsigned first = *it;
    unsigned prev = *it;
    for (++it; it != cycle.end(); ++it) {
      if (*it >= degree || prev >= degree)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      img[prev] = *it;
      prev = *it;
    }
    img[prev] = first;
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < img_.size(); ++x)
    if (img_[x] != x)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(img_.size());
  for (unsigned x = 0; x < img_.size(); ++x)
    inv[img_[x]] = x;
  return Perm(std::move(inv));
}

unsigned Perm::first_moved() const {
  for (unsigned x = 0; x < img_.size(); ++x)
    if (img_[x] != x)
      return x;
  return degree();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<unsigned> img(p.degree());
  for (unsigned x = 0; x < p.degree(); ++x)
    img[x] = q(p(x));
  return Perm(std::move(img));
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  // Cycle notation, fixed points omitted; "()" for the identity.
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (unsigned x = 0; x < p.degree(); ++x) {
    if (done[x] || p(x) == x)
      continue;
    any = true;
    os << '(' << x;
    done[x] = true;
    for (unsigned y = p(x); y != x; y = p(y)) {
      os << ' ' << y;
      done[y] = true;
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os;
}

} // namespace mapsym
