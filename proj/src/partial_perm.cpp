#include "mapsym/partial_perm.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mapsym {

PartialPerm::PartialPerm(const Perm& p) : img_(p.degree()) {
  for (unsigned x = 0; x < p.degree(); ++x)
    img_[x] = static_cast<int>(p(x));
}

PartialPerm::PartialPerm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int y : img_) {
    if (y < 0) {
      if (y != -1)
        throw std::invalid_argument("PartialPerm: undefined entries must be -1");
      continue;
    }
    if (static_cast<std::size_t>(y) >= img_.size() || seen[y])
      throw std::invalid_argument("PartialPerm: image table is not injective");
    seen[y] = true;
  }
}

PartialPerm PartialPerm::identity(unsigned degree) {
  return PartialPerm(Perm::identity(degree));
}

PartialPerm PartialPerm::partial_identity(unsigned degree,
                                          std::span<const unsigned> domain) {
  std::vector<int> img(degree, -1);
  for (unsigned x : domain) {
    if (x >= degree)
      throw std::invalid_argument("partial_identity: point out of range");
    img[x] = static_cast<int>(x);
  }
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::partial_identity(unsigned degree,
                                          std::initializer_list<unsigned> domain) {
  std::vector<unsigned> pts(domain);
  return partial_identity(degree, std::span<const unsigned>(pts));
}

PartialPerm PartialPerm::from_pairs(unsigned degree,
                                    std::span<const std::pair<unsigned, unsigned>> pairs) {
  std::vector<int> img(degree, -1);
  for (auto [from, to] : pairs) {
    if (from >= degree || to >= degree)
      throw std::invalid_argument("PartialPerm::from_pairs: point out of range");
    if (img[from] != -1)
      throw std::invalid_argument("PartialPerm::from_pairs: duplicate domain point");
    img[from] = static_cast<int>(to);
  }
  return PartialPerm(std::move(img));
}

PartialPerm PartialPerm::from_pairs(unsigned degree,
                                    std::initializer_list<std::pair<unsigned, unsigned>> pairs) {
  std::vector<std::pair<unsigned, unsigned>> v(pairs);
  return from_pairs(degree, std::span<const std::pair<unsigned, unsigned>>(v));
}

std::vector<unsigned> PartialPerm::domain() const {
  std::vector<unsigned> dom;
  for (unsigned x = 0; x < img_.size(); ++x)
    if (img_[x] >= 0)
      dom.push_back(x);
  return dom;
}

std::vector<unsigned> PartialPerm::image_set() const {
  std::vector<unsigned> im;
  for (int y : img_)
    if (y >= 0)
      im.push_back(static_cast<unsigned>(y));
  std::sort(im.begin(), im.end());
  return im;
}

std::size_t PartialPerm::domain_size() const {
  std::size_t n = 0;
  for (int y : img_)
    if (y >= 0)
      ++n;
  return n;
}

bool PartialPerm::is_idempotent() const {
  for (unsigned x = 0; x < img_.size(); ++x)
    if (img_[x] >= 0 && img_[x] != static_cast<int>(x))
      return false;
  return true;
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int> inv(img_.size(), -1);
  for (unsigned x = 0; x < img_.size(); ++x)
    if (img_[x] >= 0)
      inv[img_[x]] = static_cast<int>(x);
  return PartialPerm(std::move(inv));
}

PartialPerm PartialPerm::restricted_to(std::span<const unsigned> points) const {
  std::vector<int> img(img_.size(), -1);
  for (unsigned x : points) {
    if (x >= img_.size())
      throw std::invalid_argument("restricted_to: point out of range");
    img[x] = img_[x];
  }
  return PartialPerm(std::move(img));
}

Perm PartialPerm::to_perm() const {
  if (!is_total())
    throw std::invalid_argument("to_perm: partial permutation is not total");
  std::vector<unsigned> img(img_.size());
  for (unsigned x = 0; x < img_.size(); ++x)
    img[x] = static_cast<unsigned>(img_[x]);
  return Perm(std::move(img));
}

PartialPerm compose(const PartialPerm& f, const PartialPerm& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(f.degree(), -1);
  for (unsigned x = 0; x < f.degree(); ++x) {
    int y = f.image(x);
    if (y >= 0 && g.defined_at(static_cast<unsigned>(y)))
      img[x] = g.image(static_cast<unsigned>(y));
  }
  return PartialPerm(std::move(img));
}

std::ostream& operator<<(std::ostream& os, const PartialPerm& f) {
  os << '[';
  bool first = true;
  for (unsigned x = 0; x < f.degree(); ++x) {
    if (!f.defined_at(x))
      continue;
    if (!first)
      os << ' ';
    os << x << "->" << f.image(x);
    first = false;
  }
  return os << ']';
}

} // namespace mapsym
