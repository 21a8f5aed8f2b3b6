#include "mapsym/partial_autos.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapsym {

bool is_partial_automorphism(const ArchGraph& g, const PartialPerm& f) {
  if (f.degree() != g.size())
    throw std::invalid_argument("is_partial_automorphism: degree mismatch");
  std::vector<unsigned> dom = f.domain();
  for (unsigned x : dom) {
    unsigned y = static_cast<unsigned>(f.image(x));
    if (g.node_type_id(x) != g.node_type_id(y))
      return false;
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      unsigned u = dom[i], v = dom[j];
      unsigned fu = static_cast<unsigned>(f.image(u));
      unsigned fv = static_cast<unsigned>(f.image(v));
      if (g.edge_label_id(u, v) != g.edge_label_id(fu, fv))
        return false;
    }
  }
  return true;
}

namespace {

// Order-invariant per-node signature: node type and the multiset of incident
// edge labels. A node can only map to a node with an equal signature.
std::vector<std::vector<std::uint32_t>> node_signatures(const ArchGraph& g) {
  const unsigned n = g.size();
  std::vector<std::vector<std::uint32_t>> sig(n);
  for (unsigned v = 0; v < n; ++v) {
    sig[v].push_back(g.node_type_id(v));
    std::vector<std::uint32_t> inc;
    for (unsigned u = 0; u < n; ++u)
      if (u != v)
        inc.push_back(g.edge_label_id(v, u));
    std::sort(inc.begin(), inc.end());
    sig[v].insert(sig[v].end(), inc.begin(), inc.end());
  }
  return sig;
}

// First automorphism fixing 0..fixed-1 pointwise with fixed -> target,
// assigning remaining vertices in index order.
std::optional<Perm> find_automorphism(const ArchGraph& g,
                                      const std::vector<std::vector<std::uint32_t>>& sig,
                                      unsigned fixed, unsigned target) {
  const unsigned n = g.size();
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](unsigned v, unsigned w) {
    if (sig[v] != sig[w])
      return false;
    for (unsigned u = 0; u < v; ++u) {
      if (img[u] < 0)
        continue;
      if (g.edge_label_id(u, v) != g.edge_label_id(static_cast<unsigned>(img[u]), w))
        return false;
    }
    return true;
  };

  for (unsigned v = 0; v < fixed; ++v) {
    img[v] = static_cast<int>(v);
    used[v] = true;
  }
  if (used[target] || !consistent(fixed, target))
    return std::nullopt;
  img[fixed] = static_cast<int>(target);
  used[target] = true;

  // Iterative DFS over vertices fixed+1..n-1.
  std::vector<unsigned> next_try(n + 1, 0);
  unsigned v = fixed + 1;
  while (v > fixed) {
    if (v == n) {
      std::vector<unsigned> images(n);
      for (unsigned i = 0; i < n; ++i)
        images[i] = static_cast<unsigned>(img[i]);
      return Perm(std::move(images));
    }
    bool advanced = false;
    for (unsigned w = next_try[v]; w < n; ++w) {
      if (used[w] || !consistent(v, w))
        continue;
      img[v] = static_cast<int>(w);
      used[w] = true;
      next_try[v] = w + 1;
      ++v;
      next_try[v] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      next_try[v] = 0;
      --v;
      if (v == fixed)
        break;
      used[img[v]] = false;
      img[v] = -1;
    }
  }
  return std::nullopt;
}

} // namespace

PermGroup automorphism_group(const ArchGraph& g) {
  const unsigned n = g.size();
  auto sig = node_signatures(g);
  std::vector<Perm> gens;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned c = i + 1; c < n; ++c) {
      if (sig[i] != sig[c])
        continue;
      bool quick_ok = true;
      for (unsigned j = 0; j < i && quick_ok; ++j)
        quick_ok = g.edge_label_id(j, i) == g.edge_label_id(j, c);
      if (!quick_ok)
        continue;
      if (auto p = find_automorphism(g, sig, i, c))
        gens.push_back(std::move(*p));
    }
  }
  return PermGroup(n, std::move(gens));
}

namespace {

struct TreeSearch {
  const ArchGraph& g;
  unsigned n;
  std::vector<int> img;        // current partial map
  std::vector<bool> img_used;  // image points taken
  std::vector<unsigned> dom;   // current domain, ascending

  explicit TreeSearch(const ArchGraph& graph)
      : g(graph), n(graph.size()), img(graph.size(), -1), img_used(graph.size(), false) {}

  // Label checks for extending the current map by p -> q; everything already
  // in the map is known consistent.
  bool extension_ok(unsigned p, unsigned q) const {
    if (g.node_type_id(p) != g.node_type_id(q))
      return false;
    for (unsigned x : dom) {
      if (g.edge_label_id(x, p) != g.edge_label_id(static_cast<unsigned>(img[x]), q))
        return false;
    }
    return true;
  }

  // Walk all partial automorphisms whose domain extends the current one by
  // points above `from`, calling visit on each (the current node included
  // exactly once by the caller).
  template <typename Visit>
  void walk(unsigned from, Visit&& visit) {
    for (unsigned p = from; p < n; ++p) {
      for (unsigned q = 0; q < n; ++q) {
        if (img_used[q] || !extension_ok(p, q))
          continue;
        img[p] = static_cast<int>(q);
        img_used[q] = true;
        dom.push_back(p);
        visit();
        walk(p + 1, visit);
        dom.pop_back();
        img_used[q] = false;
        img[p] = -1;
      }
    }
  }

  PartialPerm current() const { return PartialPerm(img); }
};

} // namespace

std::vector<PartialPerm> partial_automorphism_generators(const ArchGraph& g,
                                                         const PartialAutoOptions& opts) {
  const unsigned n = g.size();
  SemigroupClosure closure(n, opts.closure_cap);
  std::vector<PartialPerm> gens;

  auto consider = [&](const PartialPerm& f) {
    if (!closure.contains(f)) {
      gens.push_back(f);
      closure.add_generator(f);
    }
  };

  if (opts.seed_with_group) {
    PermGroup grp = automorphism_group(g);  // keep alive past generators()
    for (const Perm& p : grp.generators())
      consider(PartialPerm(p));
  }

  // Membership is tested at every node of the tree. Skipping tests at nodes
  // that still extend would be unsound: composition never enlarges domains,
  // so a restriction missed here (say, the identity on one endpoint of a
  // two-node path of distinct types) is lost for good.
  TreeSearch ts(g);
  consider(ts.current());  // the empty map is the tree's root
  ts.walk(0, [&] { consider(ts.current()); });
  return gens;
}

InverseSemigroup partial_automorphism_semigroup(const ArchGraph& g,
                                                const PartialAutoOptions& opts) {
  std::vector<PartialPerm> gens = partial_automorphism_generators(g, opts);
  return InverseSemigroup(g.size(), std::move(gens), opts.closure_cap);
}

std::vector<PartialPerm> partial_automorphism_generators_naive(const ArchGraph& g,
                                                               std::uint64_t closure_cap) {
  const unsigned n = g.size();
  if (n > 6)
    throw std::invalid_argument(
        "partial_automorphism_generators_naive: reference search is limited to 6 nodes");

  SemigroupClosure closure(n, closure_cap);
  std::vector<PartialPerm> gens;

  // All sorted domains in lexicographic order: each subset visited with its
  // elements ascending, prefixes before extensions.
  std::vector<unsigned> domain;
  std::vector<int> img(n, -1);
  std::vector<bool> img_used(n, false);

  auto try_current = [&] {
    PartialPerm f(img);
    if (is_partial_automorphism(g, f) && !closure.contains(f)) {
      gens.push_back(f);
      closure.add_generator(f);
    }
  };

  // Image sequences for the fixed domain, lexicographic.
  auto assign = [&](auto&& self, std::size_t di) -> void {
    if (di == domain.size()) {
      try_current();
      return;
    }
    for (unsigned q = 0; q < n; ++q) {
      if (img_used[q])
        continue;
      img[domain[di]] = static_cast<int>(q);
      img_used[q] = true;
      self(self, di + 1);
      img_used[q] = false;
      img[domain[di]] = -1;
    }
  };

  auto domains = [&](auto&& self, unsigned from) -> void {
    assign(assign, 0);
    for (unsigned p = from; p < n; ++p) {
      domain.push_back(p);
      self(self, p + 1);
      domain.pop_back();
    }
  };

  // The empty domain case is handled by the first assign() call above.
  domains(domains, 0);
  return gens;
}

std::uint64_t count_partial_automorphisms(const ArchGraph& g) {
  TreeSearch ts(g);
  std::uint64_t count = 1;  // the empty map
  ts.walk(0, [&] { ++count; });
  return count;
}

} // namespace mapsym
