#include "mapsym/mapping.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapsym {

Mapping act_arch(const Perm& g, const Mapping& m) {
  Mapping out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= g.degree())
      throw std::invalid_argument("act_arch: mapping target out of range");
    out[i] = g(m[i]);
  }
  return out;
}

Mapping act_task(const Perm& h, const Mapping& m) {
  if (h.degree() != m.size())
    throw std::invalid_argument("act_task: degree does not match task count");
  Mapping out(m.size());
  for (unsigned i = 0; i < m.size(); ++i)
    out[h(i)] = m[i];
  return out;
}

std::set<Mapping> mapping_orbit(const PermGroup& arch_group, const PermGroup& task_group,
                                const Mapping& m) {
  std::set<Mapping> seen{m};
  std::vector<const Mapping*> work{&*seen.begin()};
  while (!work.empty()) {
    const Mapping* cur = work.back();
    work.pop_back();
    auto push = [&](Mapping next) {
      auto [it, inserted] = seen.insert(std::move(next));
      if (inserted)
        work.push_back(&*it);
    };
    for (const Perm& g : arch_group.generators())
      push(act_arch(g, *cur));
    for (const Perm& h : task_group.generators())
      push(act_task(h, *cur));
  }
  return seen;
}

namespace {

// True when the group is exactly the direct product of the full symmetric
// groups on the PE type classes; buses look like this. Checked, not assumed:
// every generator must preserve classes and the order must match.
bool is_full_type_product(const PermGroup& g, const std::vector<std::uint16_t>& pe_type_of) {
  if (pe_type_of.size() != g.degree())
    return false;
  for (const Perm& p : g.generators())
    for (unsigned x = 0; x < p.degree(); ++x)
      if (pe_type_of[p(x)] != pe_type_of[x])
        return false;

  std::vector<std::uint64_t> class_size;
  for (std::uint16_t t : pe_type_of) {
    if (t >= class_size.size())
      class_size.resize(t + 1, 0);
    ++class_size[t];
  }
  long double expected = 1.0L;
  for (std::uint64_t s : class_size)
    for (std::uint64_t k = 2; k <= s; ++k)
      expected *= static_cast<long double>(k);
  if (expected > 1e18L)
    return false;  // cannot confirm via 64-bit order; fall back

  std::uint64_t expect = 1;
  for (std::uint64_t s : class_size)
    for (std::uint64_t k = 2; k <= s; ++k)
      expect *= k;
  return g.order() == expect;
}

// Lexicographically least value relabeling within PE type classes: each
// first occurrence takes the smallest unused PE index of its class.
Mapping least_class_relabeling(const std::vector<std::uint16_t>& pe_type_of, const Mapping& m) {
  std::vector<std::vector<unsigned>> pool(1);
  for (unsigned pe = 0; pe < pe_type_of.size(); ++pe) {
    std::uint16_t t = pe_type_of[pe];
    if (t >= pool.size())
      pool.resize(t + 1);
    pool[t].push_back(pe);  // ascending by construction
  }
  std::vector<std::size_t> next(pool.size(), 0);
  std::vector<int> relabel(pe_type_of.size(), -1);
  Mapping out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned v = m[i];
    if (relabel[v] < 0)
      relabel[v] = static_cast<int>(pool[pe_type_of[v]][next[pe_type_of[v]]++]);
    out[i] = static_cast<unsigned>(relabel[v]);
  }
  return out;
}

} // namespace

Mapping canonical_mapping(const PermGroup& arch_group, const PermGroup& task_group,
                          const std::vector<std::uint16_t>& pe_type_of, const Mapping& m) {
  for (unsigned v : m)
    if (v >= arch_group.degree())
      throw std::invalid_argument("canonical_mapping: mapping target out of range");

  constexpr std::uint64_t kTaskEnumerationBound = 100000;
  bool small_task_side = true;
  try {
    small_task_side = task_group.order() <= kTaskEnumerationBound;
  } catch (const std::overflow_error&) {
    small_task_side = false;
  }

  if (small_task_side && is_full_type_product(arch_group, pe_type_of)) {
    // Architecture side folds to a relabeling, so only the task side needs
    // walking. This is what makes bus platforms with huge symmetric groups
    // tractable.
    Mapping best;
    for (const Perm& h : task_group.elements()) {
      Mapping cand = least_class_relabeling(pe_type_of, act_task(h, m));
      if (best.empty() || cand < best)
        best = std::move(cand);
    }
    return best;
  }

  auto orb = mapping_orbit(arch_group, task_group, m);
  return *orb.begin();
}

std::string mapping_cache_key(const PermGroup& arch_group, const PermGroup& task_group,
                              const std::vector<std::uint16_t>& pe_type_of, const Mapping& m) {
  Mapping canon = canonical_mapping(arch_group, task_group, pe_type_of, m);
  std::string key = "MK1";
  auto put_u32 = [&key](std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8)
      key.push_back(static_cast<char>((v >> s) & 0xff));
  };
  put_u32(static_cast<std::uint32_t>(canon.size()));
  for (unsigned v : canon)
    put_u32(v);
  return key;
}

std::string hex_key(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

} // namespace mapsym
