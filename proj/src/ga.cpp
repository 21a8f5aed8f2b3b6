#include "mapsym/ga.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mapsym/util.hpp"

namespace mapsym {

namespace {

std::string raw_key(const Mapping& m) {
  std::string key = "RAW";
  for (unsigned v : m)
    for (int s = 24; s >= 0; s -= 8)
      key.push_back(static_cast<char>((v >> s) & 0xff));
  return key;
}

struct EvalCache {
  const TaskGraph& tg;
  const ArchGraph& arch;
  const PermGroup& arch_group;
  const PermGroup& task_group;
  const CostModel& model;
  const std::vector<std::uint16_t>& pe_type_of;
  bool symmetry;

  std::unordered_map<std::string, double> costs;
  std::unordered_set<std::string> seen_raw;

  double evaluate(const Mapping& m, std::size_t generation, ExplorationResult& out) {
    std::string raw = raw_key(m);
    std::string key =
        symmetry ? mapping_cache_key(arch_group, task_group, pe_type_of, m) : raw;

    TrialRecord rec;
    rec.index = out.trials.size();
    rec.generation = generation;
    rec.mapping = m;

    auto it = costs.find(key);
    if (it != costs.end()) {
      rec.cache_hit = true;
      rec.hit_kind = seen_raw.count(raw) ? "exact" : "symmetry";
      rec.cost = it->second;
      if (rec.hit_kind == "exact")
        ++out.exact_hits;
      else
        ++out.symmetry_hits;
    } else {
      rec.cost = evaluate_cost(tg, arch, model, m);
      costs.emplace(std::move(key), rec.cost);
      ++out.evaluations;
    }
    seen_raw.insert(std::move(raw));

    if (rec.cost < out.best_cost) {
      out.best_cost = rec.cost;
      out.best_mapping = m;
    }
    out.trials.push_back(std::move(rec));
    return out.trials.back().cost;
  }
};

} // namespace

ExplorationResult ga_explore(const GAConfig& cfg, const TaskGraph& tg, const ArchGraph& arch,
                             const PermGroup& arch_group, const PermGroup& task_group,
                             const CostModel& model) {
  if (cfg.mu < 1 || cfg.lambda < 1)
    throw std::invalid_argument("ga_explore: population sizes must be at least 1");
  if (cfg.mutation_rate < 0 || cfg.mutation_rate > 1)
    throw std::invalid_argument("ga_explore: mutation rate outside [0,1]");
  if (arch_group.degree() != arch.size())
    throw std::invalid_argument("ga_explore: architecture group degree mismatch");
  if (task_group.degree() != tg.task_count())
    throw std::invalid_argument("ga_explore: task group degree mismatch");
  validate_cost_symmetry(tg, model);

  const unsigned r = arch.size();
  const std::size_t s = tg.task_count();
  std::vector<std::uint16_t> pe_type_of(r);
  for (unsigned v = 0; v < r; ++v)
    pe_type_of[v] = arch.node_type_id(v);

  ExplorationResult out;
  EvalCache cache{tg, arch, arch_group, task_group, model, pe_type_of, cfg.symmetry_cache,
                  {}, {}};

  struct Individual {
    Mapping genes;
    double cost;
  };
  std::vector<Individual> pop;
  pop.reserve(cfg.mu + cfg.lambda);

  for (std::size_t i = 0; i < cfg.mu; ++i) {
    RandomStream rng = RandomStream::derived(cfg.seed, 0, i);
    Mapping m(s);
    for (auto& gene : m)
      gene = static_cast<unsigned>(rng.below(r));
    pop.push_back({m, cache.evaluate(m, 0, out)});
  }

  auto select = [&] {
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& a, const Individual& b) { return a.cost < b.cost; });
    if (pop.size() > cfg.mu)
      pop.resize(cfg.mu);
  };
  select();
  out.best_cost_per_generation.push_back(pop.front().cost);

  for (std::size_t gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Individual> children;
    children.reserve(cfg.lambda);
    for (std::size_t j = 0; j < cfg.lambda; ++j) {
      RandomStream rng = RandomStream::derived(cfg.seed, gen, j);
      const Mapping& p1 = pop[rng.below(cfg.mu)].genes;
      const Mapping& p2 = pop[rng.below(cfg.mu)].genes;
      Mapping child(s);
      for (std::size_t t = 0; t < s; ++t)
        child[t] = (rng.next() & 1) ? p2[t] : p1[t];
      for (std::size_t t = 0; t < s; ++t)
        if (rng.unit() < cfg.mutation_rate)
          child[t] = static_cast<unsigned>(rng.below(r));
      children.push_back({child, 0.0});
    }
    for (Individual& c : children) {
      c.cost = cache.evaluate(c.genes, gen, out);
      pop.push_back(std::move(c));
    }
    select();
    out.best_cost_per_generation.push_back(pop.front().cost);
  }

  return out;
}

} // namespace mapsym
