#include "mapsym/subarch.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "mapsym/canonical_form.hpp"
#include "mapsym/orbit.hpp"
#include "mapsym/partial_autos.hpp"
#include "mapsym/util.hpp"

namespace mapsym {

Strategy strategy_from_string(const std::string& s) {
  if (s == "simple")
    return Strategy::simple;
  if (s == "brute-force")
    return Strategy::brute_force;
  if (s == "groups")
    return Strategy::groups;
  if (s == "inv-semi")
    return Strategy::inv_semi;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::simple: return "simple";
    case Strategy::brute_force: return "brute-force";
    case Strategy::groups: return "groups";
    case Strategy::inv_semi: return "inv-semi";
  }
  throw std::invalid_argument("unknown strategy value");
}

namespace {

// First k-subset in lexicographic order.
std::vector<unsigned> first_subset(unsigned k) {
  std::vector<unsigned> w(k);
  std::iota(w.begin(), w.end(), 0u);
  return w;
}

// Advance to the next k-subset of 0..n-1; false when exhausted.
bool next_subset(std::vector<unsigned>& w, unsigned n) {
  const unsigned k = static_cast<unsigned>(w.size());
  for (unsigned i = k; i-- > 0;) {
    if (w[i] < n - k + i) {
      ++w[i];
      for (unsigned j = i + 1; j < k; ++j)
        w[j] = w[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// True iff w is the least element of its orbit; aborts the orbit walk as
// soon as a smaller image shows up.
bool is_orbit_least(const PermGroup& group, const std::vector<unsigned>& w) {
  std::set<std::vector<unsigned>> seen{w};
  std::vector<const std::vector<unsigned>*> work{&*seen.begin()};
  while (!work.empty()) {
    const auto* cur = work.back();
    work.pop_back();
    for (const Perm& g : group.generators()) {
      auto img = apply_set(g, *cur);
      if (img < w)
        return false;
      auto [it, inserted] = seen.insert(std::move(img));
      if (inserted)
        work.push_back(&*it);
    }
  }
  return true;
}

// Candidate subsets of one size for a strategy, in lexicographic order.
// group is only consulted by Strategy::groups.
std::vector<std::vector<unsigned>> candidates_of_size(const ArchGraph& arch,
                                                      const PermGroup* group, Strategy strategy,
                                                      unsigned k,
                                                      std::unordered_set<std::string>* seen_certs) {
  const unsigned n = arch.size();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> w = first_subset(k);
  do {
    switch (strategy) {
      case Strategy::brute_force:
        out.push_back(w);
        break;
      case Strategy::groups:
        if (is_orbit_least(*group, w))
          out.push_back(w);
        break;
      case Strategy::inv_semi: {
        auto cert = canonical_graph_form(arch.induced_subgraph(w)).certificate();
        if (seen_certs->insert(std::move(cert)).second)
          out.push_back(w);
        break;
      }
      case Strategy::simple:
        throw std::logic_error("simple strategy has no class enumeration");
    }
  } while (next_subset(w, n));
  return out;
}

} // namespace

std::vector<std::vector<unsigned>> enumerate_subarch_classes(const ArchGraph& arch,
                                                             Strategy method,
                                                             unsigned max_size) {
  if (method != Strategy::groups && method != Strategy::inv_semi)
    throw std::invalid_argument("enumerate_subarch_classes: method must be groups or inv-semi");
  const unsigned n = arch.size();
  const unsigned top = (max_size == 0 || max_size > n) ? n : max_size;

  PermGroup group = PermGroup::trivial(n);
  if (method == Strategy::groups)
    group = automorphism_group(arch);

  std::vector<std::vector<unsigned>> reps;
  std::unordered_set<std::string> seen_certs;
  for (unsigned k = 1; k <= top; ++k) {
    auto at_k = candidates_of_size(arch, &group, method, k, &seen_certs);
    reps.insert(reps.end(), at_k.begin(), at_k.end());
  }
  return reps;
}

std::pair<Mapping, double> greedy_subset_mapping(const TaskGraph& tg, const ArchGraph& arch,
                                                 const CostModel& model,
                                                 const std::vector<unsigned>& subset) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  ArchGraph induced = arch.induced_subgraph(subset);
  CanonicalForm cf = canonical_graph_form(induced);
  const unsigned k = static_cast<unsigned>(subset.size());

  // PE types in canonical position order.
  std::vector<const std::string*> pos_type(k);
  for (unsigned c = 0; c < k; ++c)
    pos_type[c] = &cf.type_table[cf.type_seq[c]];

  const std::size_t s = tg.task_count();
  std::vector<double> best_case(s, kInf);
  for (unsigned t = 0; t < s; ++t)
    for (unsigned c = 0; c < k; ++c)
      if (model.has_compute_cost(t, *pos_type[c]))
        best_case[t] = std::min(best_case[t], model.compute_cost(t, *pos_type[c]));
  for (double b : best_case)
    if (b == kInf)
      return {Mapping{}, kInf};

  std::vector<unsigned> task_order(s);
  std::iota(task_order.begin(), task_order.end(), 0u);
  std::stable_sort(task_order.begin(), task_order.end(),
                   [&](unsigned a, unsigned b) { return best_case[a] > best_case[b]; });

  std::vector<double> load(k, 0.0);
  Mapping at_position(s, 0);
  for (unsigned t : task_order) {
    unsigned choice = 0;
    double choice_cost = kInf;
    for (unsigned c = 0; c < k; ++c) {
      if (!model.has_compute_cost(t, *pos_type[c]))
        continue;
      double total = load[c] + model.compute_cost(t, *pos_type[c]);
      if (total < choice_cost) {
        choice_cost = total;
        choice = c;
      }
    }
    load[choice] = choice_cost;
    at_position[t] = choice;
  }

  Mapping m(s);
  for (unsigned t = 0; t < s; ++t)
    m[t] = subset[cf.order[at_position[t]]];
  return {m, evaluate_cost(tg, arch, model, m)};
}

ExplorationResult subarch_explore(Strategy strategy, const TaskGraph& tg, const ArchGraph& arch,
                                  const CostModel& model, double deadline, std::uint64_t seed,
                                  unsigned max_size) {
  validate_cost_symmetry(tg, model);
  const unsigned n = arch.size();
  const unsigned top = (max_size == 0 || max_size > n) ? n : max_size;

  PermGroup group = PermGroup::trivial(n);
  if (strategy == Strategy::groups)
    group = automorphism_group(arch);

  ExplorationResult out;
  std::unordered_set<std::string> seen_certs;
  RandomStream rng(seed);
  std::vector<unsigned> grown;  // simple strategy growth chain, kept sorted

  for (unsigned k = 1; k <= top; ++k) {
    std::vector<std::vector<unsigned>> candidates;
    if (strategy == Strategy::simple) {
      std::vector<unsigned> unused;
      for (unsigned v = 0; v < n; ++v)
        if (!std::binary_search(grown.begin(), grown.end(), v))
          unused.push_back(v);
      grown.push_back(unused[rng.below(unused.size())]);
      std::sort(grown.begin(), grown.end());
      candidates.push_back(grown);
    } else {
      candidates = candidates_of_size(arch, &group, strategy, k, &seen_certs);
    }

    SizeBest best;
    best.size = k;
    for (const auto& w : candidates) {
      auto [m, cost] = greedy_subset_mapping(tg, arch, model, w);
      TrialRecord rec;
      rec.index = out.trials.size();
      rec.subset = w;
      rec.mapping = m;
      rec.cost = cost;
      out.trials.push_back(std::move(rec));
      ++out.evaluations;
      ++best.trials;
      if (cost < best.best_cost) {
        best.best_cost = cost;
        best.best_subset = w;
        best.best_mapping = m;
      }
      if (cost < out.best_cost) {
        out.best_cost = cost;
        out.best_mapping = m;
        out.best_subset = w;
      }
    }
    double met = best.best_cost;
    out.best_per_size.push_back(std::move(best));
    if (met <= deadline) {
      out.deadline_met = true;
      out.deadline_size = k;
      break;
    }
  }
  return out;
}

} // namespace mapsym
