#include "mapsym/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapsym {

std::string decimal_mul(const std::string& decimal, std::uint64_t factor) {
  if (decimal.empty())
    throw std::invalid_argument("decimal_mul: empty input");
  if (factor == 0)
    return "0";
  std::string out;
  out.reserve(decimal.size() + 20);
  unsigned __int128 carry = 0;
  for (auto it = decimal.rbegin(); it != decimal.rend(); ++it) {
    if (*it < '0' || *it > '9')
      throw std::invalid_argument("decimal_mul: not a decimal string");
    unsigned __int128 v = static_cast<unsigned __int128>(*it - '0') * factor + carry;
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    carry = v / 10;
  }
  while (carry > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(carry % 10)));
    carry /= 10;
  }
  while (out.size() > 1 && out.back() == '0')
    out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

// splitmix64; good enough statistically and trivially portable.
static std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

RandomStream RandomStream::derived(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return RandomStream(mix64(mix64(seed ^ (a * 0xd1342543de82ef95ull)) ^
                            (b * 0xaf251af3b0f025b5ull)));
}

std::uint64_t RandomStream::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::below(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("RandomStream::below: n must be positive");
  // Modulo bias is below 2^-50 for the ranges used here.
  return next() % n;
}

double RandomStream::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

} // namespace mapsym
