#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapsym {

/// The finite set {0, ..., size-1} that permutations act on, with optional
/// display names. Algorithms work on indices; names exist so that fixtures
/// and command-line output can talk about "PE_1" instead of 0 without
/// off-by-one accidents.
class PointSet {
public:
  explicit PointSet(std::size_t size) : size_(size) {}

  PointSet(std::size_t size, std::vector<std::string> names)
      : size_(size), names_(std::move(names)) {
    if (!names_.empty() && names_.size() != size_)
      throw std::invalid_argument("PointSet: name count does not match size");
  }

  std::size_t size() const { return size_; }

  bool has_names() const { return !names_.empty(); }

  /// Display name of a point; falls back to the decimal index.
  std::string name(std::size_t i) const {
    if (i >= size_)
      throw std::out_of_range("PointSet::name: point out of range");
    return names_.empty() ? std::to_string(i) : names_[i];
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    return std::nullopt;
  }

private:
  std::size_t size_;
  std::vector<std::string> names_;
};

} // namespace mapsym
