#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mapsym {

/// Raised when an enumeration would exceed a configured cap. Callers that
/// hit this must treat the result as unknown, never as a truncated answer.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what_happened, std::uint64_t cap)
      : std::runtime_error(what_happened + " (cap: " + std::to_string(cap) + ")"),
        cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

} // namespace mapsym
