#include "mapsym/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mapsym::json_io {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

json cost_to_json(double cost) {
  if (cost == kInf)
    return nullptr;
  return cost;
}

double cost_from_json(const json& j) {
  if (j.is_null())
    return kInf;
  return j.get<double>();
}

} // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    fail("cannot write '" + path + "'");
  out << content;
  if (!out)
    fail("write failed for '" + path + "'");
}

TopologyGraph topology_from_string(const std::string& text) {
  json j = parse(text, "topology");
  try {
    TopologyGraph topo;
    topo.name = j.value("name", "");
    topo.allow_disconnected = j.value("allow_disconnected", false);
    for (const json& node : j.at("nodes"))
      topo.add_node(node.at("type").get<std::string>(), node.value("name", ""));
    for (const json& link : j.value("links", json::array()))
      topo.add_link(link.at("a").get<unsigned>(), link.at("b").get<unsigned>(),
                    link.value("resource", std::string("link")), link.value("hops", 1u));
    return topo;
  } catch (const json::exception& e) {
    fail(std::string("topology: ") + e.what());
  }
}

std::string topology_to_string(const TopologyGraph& topo) {
  json nodes = json::array();
  for (unsigned v = 0; v < topo.node_count(); ++v)
    nodes.push_back({{"type", topo.node_type(v)}, {"name", topo.node_name(v)}});
  json links = json::array();
  for (const TopologyLink& l : topo.links())
    links.push_back({{"a", l.a}, {"b", l.b}, {"resource", l.resource}, {"hops", l.hops}});
  json j{{"name", topo.name},
         {"allow_disconnected", topo.allow_disconnected},
         {"nodes", nodes},
         {"links", links}};
  return j.dump(2) + "\n";
}

TaskGraph task_graph_from_string(const std::string& text) {
  json j = parse(text, "task graph");
  try {
    TaskGraph tg;
    tg.name = j.value("name", "");
    for (const json& task : j.at("tasks"))
      tg.add_task(task.value("name", ""));
    for (const json& ch : j.value("channels", json::array()))
      tg.add_channel(ch.at("from").get<unsigned>(), ch.at("to").get<unsigned>(),
                     ch.value("volume", 1.0));
    for (const json& gen : j.value("symmetries", json::array()))
      tg.add_symmetry(Perm(gen.get<std::vector<unsigned>>()));
    return tg;
  } catch (const json::exception& e) {
    fail(std::string("task graph: ") + e.what());
  }
}

std::string task_graph_to_string(const TaskGraph& tg) {
  json tasks = json::array();
  for (unsigned t = 0; t < tg.task_count(); ++t)
    tasks.push_back({{"name", tg.task_name(t)}});
  json channels = json::array();
  for (const Channel& c : tg.channels())
    channels.push_back({{"from", c.from}, {"to", c.to}, {"volume", c.volume}});
  json syms = json::array();
  for (const Perm& p : tg.symmetry_generators())
    syms.push_back(p.images());
  json j{{"name", tg.name}, {"tasks", tasks}, {"channels", channels}, {"symmetries", syms}};
  return j.dump(2) + "\n";
}

Mapping mapping_from_string(const std::string& text) {
  json j = parse(text, "mapping");
  try {
    if (j.is_array())
      return j.get<Mapping>();
    return j.at("mapping").get<Mapping>();
  } catch (const json::exception& e) {
    fail(std::string("mapping: ") + e.what());
  }
}

std::string mapping_to_string(const Mapping& m) {
  json j{{"mapping", m}};
  return j.dump() + "\n";
}

CostModel cost_model_from_string(const std::string& text, std::size_t task_count) {
  json j = parse(text, "cost model");
  try {
    CostModel model(task_count);
    model.set_comm_factor(j.value("comm_factor", 1.0));
    for (const auto& [type, row] : j.at("compute").items()) {
      auto costs = row.get<std::vector<double>>();
      if (costs.size() != task_count)
        fail("cost model: row for type '" + type + "' has " + std::to_string(costs.size()) +
             " entries, expected " + std::to_string(task_count));
      for (unsigned t = 0; t < task_count; ++t)
        model.set_compute_cost(t, type, costs[t]);
    }
    return model;
  } catch (const json::exception& e) {
    fail(std::string("cost model: ") + e.what());
  }
}

std::string cost_model_to_string(const CostModel& model) {
  json compute = json::object();
  for (const auto& [type, row] : model.compute_table())
    compute[type] = row;
  json j{{"comm_factor", model.comm_factor()}, {"compute", compute}};
  return j.dump(2) + "\n";
}

GeneratorFile generator_file_from_string(const std::string& text) {
  json j = parse(text, "generator file");
  try {
    GeneratorFile file;
    file.degree = j.at("degree").get<unsigned>();
    file.mode = j.at("mode").get<std::string>();
    if (file.mode != "group" && file.mode != "semigroup")
      fail("generator file: mode must be group or semigroup");
    file.certificate_hex = j.value("certificate", "");
    if (file.mode == "group") {
      file.order = j.value("order", "");
      for (const json& gen : j.at("generators"))
        file.perms.emplace_back(gen.get<std::vector<unsigned>>());
    } else {
      file.element_count = j.value("element_count", std::uint64_t{0});
      for (const json& gen : j.at("generators")) {
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (const json& pr : gen)
          pairs.emplace_back(pr.at(0).get<unsigned>(), pr.at(1).get<unsigned>());
        file.partial_perms.push_back(PartialPerm::from_pairs(file.degree, pairs));
      }
    }
    return file;
  } catch (const json::exception& e) {
    fail(std::string("generator file: ") + e.what());
  }
}

std::string generator_file_to_string(const GeneratorFile& file) {
  json gens = json::array();
  if (file.mode == "group") {
    for (const Perm& p : file.perms)
      gens.push_back(p.images());
  } else {
    for (const PartialPerm& p : file.partial_perms) {
      json pairs = json::array();
      for (unsigned x : p.domain())
        pairs.push_back({x, static_cast<unsigned>(p.image(x))});
      gens.push_back(pairs);
    }
  }
  json j{{"degree", file.degree},
         {"mode", file.mode},
         {"certificate", file.certificate_hex},
         {"generators", gens}};
  if (file.mode == "group")
    j["order"] = file.order;
  else
    j["element_count"] = file.element_count;
  return j.dump(2) + "\n";
}

RunConfig run_config_from_string(const std::string& text) {
  json j = parse(text, "run config");
  try {
    RunConfig cfg;
    cfg.mode = j.at("mode").get<std::string>();
    if (cfg.mode != "ga" && cfg.mode != "subarch")
      fail("run config: mode must be ga or subarch");
    cfg.architecture = j.at("architecture").get<std::string>();
    cfg.task_graph = j.at("task_graph").get<std::string>();
    cfg.cost_model = j.value("cost_model", std::string("fixture"));
    cfg.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("ga")) {
      const json& g = j["ga"];
      cfg.ga.mu = g.value("mu", cfg.ga.mu);
      cfg.ga.lambda = g.value("lambda", cfg.ga.lambda);
      cfg.ga.generations = g.value("generations", cfg.ga.generations);
      cfg.ga.mutation_rate = g.value("mutation_rate", cfg.ga.mutation_rate);
      cfg.ga.symmetry_cache = g.value("symmetry_cache", cfg.ga.symmetry_cache);
    }
    cfg.ga.seed = cfg.seed;
    if (j.contains("subarch")) {
      const json& s = j["subarch"];
      cfg.strategy = strategy_from_string(s.value("strategy", std::string("groups")));
      cfg.deadline = s.value("deadline", 0.0);
      cfg.max_size = s.value("max_size", 0u);
    }
    return cfg;
  } catch (const json::exception& e) {
    fail(std::string("run config: ") + e.what());
  }
}

std::string run_config_to_string(const RunConfig& cfg) {
  json j{{"mode", cfg.mode},
         {"architecture", cfg.architecture},
         {"task_graph", cfg.task_graph},
         {"cost_model", cfg.cost_model},
         {"seed", cfg.seed},
         {"ga",
          {{"mu", cfg.ga.mu},
           {"lambda", cfg.ga.lambda},
           {"generations", cfg.ga.generations},
           {"mutation_rate", cfg.ga.mutation_rate},
           {"symmetry_cache", cfg.ga.symmetry_cache}}},
         {"subarch",
          {{"strategy", to_string(cfg.strategy)},
           {"deadline", cfg.deadline},
           {"max_size", cfg.max_size}}}};
  return j.dump(2) + "\n";
}

std::string trial_to_line(const TrialRecord& rec) {
  json j{{"trial", rec.index},
         {"generation", rec.generation},
         {"subset", rec.subset},
         {"mapping", rec.mapping},
         {"cost", cost_to_json(rec.cost)},
         {"cache_hit", rec.cache_hit},
         {"hit_kind", rec.hit_kind}};
  return j.dump();
}

std::string trials_to_lines(const std::vector<TrialRecord>& recs) {
  std::string out;
  for (const TrialRecord& rec : recs) {
    out += trial_to_line(rec);
    out += '\n';
  }
  return out;
}

std::vector<TrialRecord> trials_from_lines(const std::string& text) {
  std::vector<TrialRecord> recs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    json j = parse(line, "trial record");
    try {
      TrialRecord rec;
      rec.index = j.at("trial").get<std::size_t>();
      rec.generation = j.value("generation", std::size_t{0});
      rec.subset = j.value("subset", std::vector<unsigned>{});
      rec.mapping = j.value("mapping", Mapping{});
      rec.cost = cost_from_json(j.at("cost"));
      rec.cache_hit = j.value("cache_hit", false);
      rec.hit_kind = j.value("hit_kind", std::string());
      recs.push_back(std::move(rec));
    } catch (const json::exception& e) {
      fail(std::string("trial record: ") + e.what());
    }
  }
  return recs;
}

std::string summary_to_string(const ExplorationResult& result,
                              const std::vector<std::pair<std::string, std::string>>& extra) {
  json j{{"trials", result.trials.size()},
         {"evaluations", result.evaluations},
         {"exact_hits", result.exact_hits},
         {"symmetry_hits", result.symmetry_hits},
         {"best_cost", cost_to_json(result.best_cost)},
         {"best_mapping", result.best_mapping}};
  if (!result.best_subset.empty())
    j["best_subset"] = result.best_subset;
  if (!result.best_cost_per_generation.empty())
    j["best_cost_per_generation"] = result.best_cost_per_generation;
  if (!result.best_per_size.empty()) {
    json sizes = json::array();
    for (const SizeBest& b : result.best_per_size)
      sizes.push_back({{"size", b.size},
                       {"trials", b.trials},
                       {"best_cost", cost_to_json(b.best_cost)},
                       {"best_subset", b.best_subset},
                       {"best_mapping", b.best_mapping}});
    j["best_per_size"] = sizes;
    j["deadline_met"] = result.deadline_met;
    j["deadline_size"] = result.deadline_size;
  }
  for (const auto& [key, value] : extra)
    j[key] = value;
  return j.dump(2) + "\n";
}

std::string trials_to_csv(const std::vector<TrialRecord>& recs) {
  auto num = [](double v) { return v == kInf ? std::string() : json(v).dump(); };
  bool subarch = false;
  for (const TrialRecord& rec : recs)
    if (!rec.subset.empty())
      subarch = true;

  std::string out;
  if (subarch) {
    out = "size,trials,cumulative_trials,best_cost\n";
    std::size_t cumulative = 0;
    std::size_t i = 0;
    while (i < recs.size()) {
      std::size_t size = recs[i].subset.size();
      std::size_t count = 0;
      double best = kInf;
      while (i < recs.size() && recs[i].subset.size() == size) {
        best = std::min(best, recs[i].cost);
        ++count;
        ++i;
      }
      cumulative += count;
      out += std::to_string(size) + "," + std::to_string(count) + "," +
             std::to_string(cumulative) + "," + num(best) + "\n";
    }
  } else {
    out = "generation,cumulative_trials,best_cost\n";
    std::size_t cumulative = 0;
    double best = kInf;
    std::size_t i = 0;
    while (i < recs.size()) {
      std::size_t gen = recs[i].generation;
      while (i < recs.size() && recs[i].generation == gen) {
        best = std::min(best, recs[i].cost);
        ++cumulative;
        ++i;
      }
      out += std::to_string(gen) + "," + std::to_string(cumulative) + "," + num(best) + "\n";
    }
  }
  return out;
}

} // namespace mapsym::json_io
