#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "mapsym/canonical_form.hpp"
#include "mapsym/errors.hpp"
#include "mapsym/fixtures.hpp"
#include "mapsym/ga.hpp"
#include "mapsym/json_io.hpp"
#include "mapsym/mapping.hpp"
#include "mapsym/partial_autos.hpp"
#include "mapsym/subarch.hpp"

namespace {

using namespace mapsym;
namespace fs = std::filesystem;

// Wall-clock note on stderr; stdout stays byte-stable across runs.
struct Stopwatch {
  std::string label;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Stopwatch() {
    auto dt = std::chrono::steady_clock::now() - start;
    std::cerr << "time: " << label << " "
              << std::chrono::duration<double>(dt).count() << "s\n";
  }
};

// Architecture argument: a preset ("parallella", "keystone", "mesh:RxC" or
// "mesh:RxCxTYPE", "bus:TYPE=N,TYPE=N,...") or a topology JSON path.
TopologyGraph resolve_topology(const std::string& spec) {
  if (spec == "parallella")
    return parallella_topology();
  if (spec == "keystone")
    return keystone_topology();
  if (spec.rfind("mesh:", 0) == 0) {
    std::string dims = spec.substr(5);
    std::string type = "RISC";
    auto x1 = dims.find('x');
    if (x1 == std::string::npos)
      throw std::invalid_argument("mesh preset needs mesh:RxC, got '" + spec + "'");
    auto x2 = dims.find('x', x1 + 1);
    if (x2 != std::string::npos) {
      type = dims.substr(x2 + 1);
      dims = dims.substr(0, x2);
    }
    unsigned rows = std::stoul(dims.substr(0, x1));
    unsigned cols = std::stoul(dims.substr(x1 + 1));
    return mesh_topology(rows, cols, type);
  }
  if (spec.rfind("bus:", 0) == 0) {
    std::vector<std::pair<std::string, unsigned>> counts;
    std::string rest = spec.substr(4);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string item = rest.substr(0, comma);
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("bus preset needs bus:TYPE=N,..., got '" + spec + "'");
      counts.emplace_back(item.substr(0, eq),
                          static_cast<unsigned>(std::stoul(item.substr(eq + 1))));
    }
    return bus_topology(counts);
  }
  return json_io::topology_from_string(json_io::read_file(spec));
}

ArchGraph resolve_architecture(const std::string& spec) {
  return derive_architecture_graph(resolve_topology(spec));
}

// Task-graph argument: "fixture:NAME" or a JSON path.
TaskGraph resolve_task_graph(const std::string& spec) {
  if (spec.rfind("fixture:", 0) == 0)
    return fixtures::task_graph(spec.substr(8));
  return json_io::task_graph_from_string(json_io::read_file(spec));
}

CostModel resolve_cost_model(const std::string& spec, const TaskGraph& tg,
                             const ArchGraph& arch) {
  if (spec == "fixture") {
    if (tg.name.empty())
      throw std::invalid_argument(
          "cost_model 'fixture' needs a named task graph (use fixture:NAME)");
    return fixtures::cost_model(tg.name, arch);
  }
  if (spec.rfind("fixture:", 0) == 0)
    return fixtures::cost_model(spec.substr(8), arch);
  return json_io::cost_model_from_string(json_io::read_file(spec), tg.task_count());
}

std::string default_cache_dir() {
  const char* env = std::getenv("MAPSYM_CACHE_DIR");
  return env ? env : "";
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

fs::path cache_file(const std::string& dir, const std::string& cert, const std::string& kind) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(cert)));
  return fs::path(dir) / (std::string(buf) + "-" + kind + ".json");
}

// Cached generators are only trusted when the stored certificate matches the
// graph's own; the file name hash is just an address.
std::optional<json_io::GeneratorFile> load_cached(const std::string& dir,
                                                  const std::string& cert_hex,
                                                  const std::string& kind, unsigned degree) {
  if (dir.empty())
    return std::nullopt;
  fs::path path = cache_file(dir, cert_hex, kind);
  if (!fs::exists(path))
    return std::nullopt;
  try {
    auto file = json_io::generator_file_from_string(json_io::read_file(path.string()));
    if (file.certificate_hex == cert_hex && file.degree == degree) {
      std::cerr << "cache: hit " << path.string() << "\n";
      return file;
    }
    std::cerr << "cache: stale entry ignored " << path.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "cache: unreadable entry ignored (" << e.what() << ")\n";
  }
  return std::nullopt;
}

void store_cache(const std::string& dir, const std::string& cert_hex, const std::string& kind,
                 const json_io::GeneratorFile& file) {
  if (dir.empty())
    return;
  fs::create_directories(dir);
  fs::path path = cache_file(dir, cert_hex, kind);
  json_io::write_file(path.string(), json_io::generator_file_to_string(file));
  std::cerr << "cache: stored " << path.string() << "\n";
}

json_io::GeneratorFile group_generators(const ArchGraph& arch, const std::string& cache_dir) {
  std::string cert_hex = hex_key(canonical_graph_form(arch).certificate());
  if (auto cached = load_cached(cache_dir, cert_hex, "group", arch.size()))
    return *cached;
  PermGroup g = automorphism_group(arch);
  json_io::GeneratorFile file;
  file.degree = arch.size();
  file.mode = "group";
  file.certificate_hex = cert_hex;
  file.order = g.order_string();
  file.perms = g.generators();
  store_cache(cache_dir, cert_hex, "group", file);
  return file;
}

int cmd_autos(const std::string& arch_spec, const std::string& mode, bool seed_group,
              const std::string& cache_dir, const std::string& out) {
  Stopwatch timer{"autos"};
  ArchGraph arch = resolve_architecture(arch_spec);

  json_io::GeneratorFile file;
  if (mode == "group") {
    file = group_generators(arch, cache_dir);
    std::cout << "order: " << file.order << "\n";
    std::cout << "generators: " << file.perms.size() << "\n";
  } else {
    std::string cert_hex = hex_key(canonical_graph_form(arch).certificate());
    std::string kind = seed_group ? "semigroup-seeded" : "semigroup";
    if (auto cached = load_cached(cache_dir, cert_hex, kind, arch.size())) {
      file = *cached;
    } else {
      PartialAutoOptions opts;
      opts.seed_with_group = seed_group;
      file.degree = arch.size();
      file.mode = "semigroup";
      file.certificate_hex = cert_hex;
      file.partial_perms = partial_automorphism_generators(arch, opts);
      file.element_count = count_partial_automorphisms(arch);
      store_cache(cache_dir, cert_hex, kind, file);
    }
    std::cout << "elements: " << file.element_count << "\n";
    std::cout << "generators: " << file.partial_perms.size() << "\n";
  }
  if (!out.empty())
    json_io::write_file(out, json_io::generator_file_to_string(file));
  return 0;
}

int cmd_canon(const std::string& arch_spec, const std::string& tg_spec,
              const std::string& mapping_path, const std::string& cache_dir,
              const std::string& out) {
  Stopwatch timer{"canon"};
  ArchGraph arch = resolve_architecture(arch_spec);
  TaskGraph tg = resolve_task_graph(tg_spec);
  Mapping m = json_io::mapping_from_string(json_io::read_file(mapping_path));
  if (m.size() != tg.task_count())
    throw std::invalid_argument("mapping length " + std::to_string(m.size()) +
                                " does not match task count " +
                                std::to_string(tg.task_count()));
  for (unsigned v : m)
    if (v >= arch.size())
      throw std::invalid_argument("mapping entry " + std::to_string(v) +
                                  " outside architecture of size " +
                                  std::to_string(arch.size()));

  auto group_file = group_generators(arch, cache_dir);
  PermGroup arch_group(arch.size(), group_file.perms);
  PermGroup task_group = tg.symmetry_group();
  std::vector<std::uint16_t> pe_type_of(arch.size());
  for (unsigned v = 0; v < arch.size(); ++v)
    pe_type_of[v] = arch.node_type_id(v);

  Mapping canon = canonical_mapping(arch_group, task_group, pe_type_of, m);
  std::string key = hex_key(mapping_cache_key(arch_group, task_group, pe_type_of, m));

  std::cout << "canonical:";
  for (unsigned v : canon)
    std::cout << " " << v;
  std::cout << "\n";
  std::cout << "key: " << key << "\n";

  if (!out.empty()) {
    std::string entries;
    for (std::size_t i = 0; i < canon.size(); ++i)
      entries += (i ? "," : "") + std::to_string(canon[i]);
    json_io::write_file(out, "{\"canonical\": [" + entries + "], \"key\": \"" + key + "\"}\n");
  }
  return 0;
}

int cmd_classes(const std::string& arch_spec, const std::string& method, unsigned max_size,
                const std::string& out) {
  Stopwatch timer{"classes"};
  ArchGraph arch = resolve_architecture(arch_spec);
  Strategy strat = strategy_from_string(method);
  auto reps = enumerate_subarch_classes(arch, strat, max_size);

  std::size_t current = 0;
  std::size_t count = 0;
  for (const auto& w : reps) {
    if (w.size() != current) {
      if (count)
        std::cout << "size " << current << ": " << count << "\n";
      current = w.size();
      count = 0;
    }
    ++count;
  }
  if (count)
    std::cout << "size " << current << ": " << count << "\n";
  std::cout << "total: " << reps.size() << "\n";

  if (!out.empty()) {
    std::string body = "{\"method\": \"" + method + "\", \"representatives\": [";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      body += i ? ",[" : "[";
      for (std::size_t j = 0; j < reps[i].size(); ++j)
        body += (j ? "," : "") + std::to_string(reps[i][j]);
      body += "]";
    }
    body += "]}\n";
    json_io::write_file(out, body);
  }
  return 0;
}

int cmd_dse(const std::string& config_path, const std::string& out_dir) {
  Stopwatch timer{"dse"};
  auto cfg = json_io::run_config_from_string(json_io::read_file(config_path));
  ArchGraph arch = resolve_architecture(cfg.architecture);
  TaskGraph tg = resolve_task_graph(cfg.task_graph);
  CostModel model = resolve_cost_model(cfg.cost_model, tg, arch);

  ExplorationResult result;
  std::vector<std::pair<std::string, std::string>> extra{
      {"mode", cfg.mode},
      {"architecture", cfg.architecture},
      {"task_graph", cfg.task_graph},
      {"cost_model", cfg.cost_model},
      {"seed", std::to_string(cfg.seed)},
  };
  if (cfg.mode == "ga") {
    PermGroup arch_group = automorphism_group(arch);
    PermGroup task_group = tg.symmetry_group();
    result = ga_explore(cfg.ga, tg, arch, arch_group, task_group, model);
    extra.emplace_back("symmetry_cache", cfg.ga.symmetry_cache ? "on" : "off");
  } else {
    result = subarch_explore(cfg.strategy, tg, arch, model, cfg.deadline, cfg.seed,
                             cfg.max_size);
    extra.emplace_back("strategy", to_string(cfg.strategy));
  }

  fs::create_directories(out_dir);
  json_io::write_file((fs::path(out_dir) / "trials.jsonl").string(),
                      json_io::trials_to_lines(result.trials));
  json_io::write_file((fs::path(out_dir) / "summary.json").string(),
                      json_io::summary_to_string(result, extra));

  std::cout << "trials: " << result.trials.size() << "\n";
  std::cout << "evaluations: " << result.evaluations << "\n";
  std::cout << "exact hits: " << result.exact_hits << "\n";
  std::cout << "symmetry hits: " << result.symmetry_hits << "\n";
  std::cout << "best cost: " << result.best_cost << "\n";
  if (!result.best_per_size.empty()) {
    if (result.deadline_met)
      std::cout << "deadline met at size: " << result.deadline_size << "\n";
    else
      std::cout << "deadline not met\n";
  }
  return 0;
}

int cmd_report(const std::string& trials_path, const std::string& out) {
  Stopwatch timer{"report"};
  auto recs = json_io::trials_from_lines(json_io::read_file(trials_path));
  std::string csv = json_io::trials_to_csv(recs);
  if (out.empty())
    std::cout << csv;
  else
    json_io::write_file(out, csv);
  return 0;
}

int cmd_fixtures(const std::string& out_dir) {
  Stopwatch timer{"fixtures"};
  fs::create_directories(out_dir);
  fs::path dir(out_dir);
  for (const std::string& name : fixtures::names()) {
    TaskGraph tg = fixtures::task_graph(name);
    ArchGraph arch = fixtures::architecture(name);
    json_io::write_file((dir / (name + ".taskgraph.json")).string(),
                        json_io::task_graph_to_string(tg));
    json_io::write_file((dir / (name + ".cost.json")).string(),
                        json_io::cost_model_to_string(fixtures::cost_model(name, arch)));

    json_io::RunConfig cfg;
    cfg.mode = "ga";
    cfg.task_graph = "fixture:" + name;
    cfg.cost_model = "fixture";
    cfg.seed = 1;
    if (name == "sobel" || name == "mjpeg")
      cfg.architecture = "parallella";
    else if (name == "audio-filter")
      cfg.architecture = "mesh:2x2";
    else if (name == "matmult")
      cfg.architecture = "bus:CORE_A=1,CORE_B=1,CORE_C=1,CORE_D=1";
    else
      cfg.architecture = "bus:CORE_A=1,CORE_B=1,CORE_C=1,CORE_D=1,CORE_E=1,CORE_F=1";
    json_io::write_file((dir / ("ga_" + name + ".json")).string(),
                        json_io::run_config_to_string(cfg));
  }

  // Topology files for the bundled platforms.
  json_io::write_file((dir / "parallella.topology.json").string(),
                      json_io::topology_to_string(parallella_topology()));
  json_io::write_file((dir / "keystone.topology.json").string(),
                      json_io::topology_to_string(keystone_topology()));

  // The worked mapping from the mapping-equivalence example: eight tasks on
  // the 2x2 mesh.
  json_io::write_file((dir / "audio-filter.m1.json").string(),
                      json_io::mapping_to_string({1, 2, 2, 2, 3, 3, 3, 0}));

  // Sub-architecture search configurations.
  json_io::RunConfig sub;
  sub.mode = "subarch";
  sub.architecture = "mesh:3x3";
  sub.task_graph = "fixture:audio-filter";
  sub.cost_model = "fixture";
  sub.strategy = Strategy::groups;
  sub.deadline = 0.0;
  json_io::write_file((dir / "subarch_mesh3x3.json").string(),
                      json_io::run_config_to_string(sub));
  sub.architecture = "bus:BIG=2,LITTLE=2,DSP=2";
  sub.task_graph = "fixture:matmult";
  sub.strategy = Strategy::inv_semi;
  json_io::write_file((dir / "subarch_hetbus.json").string(),
                      json_io::run_config_to_string(sub));

  std::cout << "fixtures written to " << out_dir << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-aware mapping toolkit for multicore platforms"};
  app.require_subcommand(1);

  std::string arch_spec, tg_spec, mapping_path, mode = "group", method = "groups";
  std::string cache_dir = default_cache_dir(), out, out_dir = ".", config_path, trials_path;
  bool seed_group = false;
  unsigned max_size = 0;

  CLI::App* autos = app.add_subcommand("autos", "Architecture symmetries (group or semigroup)");
  autos->add_option("arch", arch_spec, "Preset or topology JSON")->required();
  autos->add_option("--mode", mode, "group or semigroup")
      ->check(CLI::IsMember({"group", "semigroup"}));
  autos->add_flag("--seed-group", seed_group, "Seed the semigroup search with the group");
  autos->add_option("--cache-dir", cache_dir, "Generator cache directory");
  autos->add_option("--out", out, "Write generators JSON here");

  CLI::App* canon = app.add_subcommand("canon", "Canonical mapping and cache key");
  canon->add_option("arch", arch_spec, "Preset or topology JSON")->required();
  canon->add_option("taskgraph", tg_spec, "fixture:NAME or task graph JSON")->required();
  canon->add_option("mapping", mapping_path, "Mapping JSON")->required();
  canon->add_option("--cache-dir", cache_dir, "Generator cache directory");
  canon->add_option("--out", out, "Write canonical mapping JSON here");

  CLI::App* classes = app.add_subcommand("classes", "Sub-architecture equivalence classes");
  classes->add_option("arch", arch_spec, "Preset or topology JSON")->required();
  classes->add_option("--method", method, "groups or inv-semi")
      ->check(CLI::IsMember({"groups", "inv-semi"}));
  classes->add_option("--max-size", max_size, "Largest subset size (0 = all)");
  classes->add_option("--out", out, "Write representatives JSON here");

  CLI::App* dse = app.add_subcommand("dse", "Run a design-space exploration config");
  dse->add_option("config", config_path, "Run configuration JSON")->required();
  dse->add_option("--out-dir", out_dir, "Directory for trials.jsonl and summary.json");

  CLI::App* report = app.add_subcommand("report", "Trials JSON-lines to plot CSV");
  report->add_option("trials", trials_path, "trials.jsonl from dse")->required();
  report->add_option("--out", out, "Write CSV here (default: stdout)");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Write bundled fixture files");
  fixtures_cmd->add_option("--out-dir", out_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(autos))
      return cmd_autos(arch_spec, mode, seed_group, cache_dir, out);
    if (app.got_subcommand(canon))
      return cmd_canon(arch_spec, tg_spec, mapping_path, cache_dir, out);
    if (app.got_subcommand(classes))
      return cmd_classes(arch_spec, method, max_size, out);
    if (app.got_subcommand(dse))
      return cmd_dse(config_path, out_dir);
    if (app.got_subcommand(report))
      return cmd_report(trials_path, out);
    if (app.got_subcommand(fixtures_cmd))
      return cmd_fixtures(out_dir);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
