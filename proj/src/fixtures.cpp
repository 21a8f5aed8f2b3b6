#include "mapsym/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace mapsym::fixtures {

std::vector<std::string> names() {
  return {"sobel", "matmult", "mjpeg", "mandelbrot", "audio-filter"};
}

namespace {

TaskGraph sobel() {
  TaskGraph tg;
  tg.name = "sobel";
  tg.add_task("read");   // 0
  tg.add_task("gx");     // 1
  tg.add_task("gy");     // 2
  tg.add_task("comb");   // 3
  tg.add_task("write");  // 4
  for (int rep = 0; rep < 3; ++rep) {
    tg.add_channel(0, 1, 1.0);
    tg.add_channel(0, 2, 1.0);
    tg.add_channel(1, 3, 1.0);
    tg.add_channel(2, 3, 1.0);
    tg.add_channel(3, 4, 1.0);
  }
  tg.add_symmetry(Perm({0, 2, 1, 3, 4}));  // gx and gy do the same work
  return tg;
}

TaskGraph matmult() {
  TaskGraph tg;
  tg.name = "matmult";
  tg.add_task("read");   // 0
  tg.add_task("mul_hi"); // 1, the larger block
  tg.add_task("mul_lo"); // 2
  tg.add_task("acc");    // 3
  tg.add_task("write");  // 4
  tg.add_channel(0, 1, 4.0);
  tg.add_channel(0, 2, 2.0);
  tg.add_channel(1, 3, 4.0);
  tg.add_channel(2, 3, 2.0);
  tg.add_channel(0, 3, 1.0);
  tg.add_channel(3, 4, 1.0);
  // Unequal block volumes leave no symmetry to declare.
  return tg;
}

TaskGraph mjpeg() {
  TaskGraph tg;
  tg.name = "mjpeg";
  tg.add_task("read");   // 0
  tg.add_task("split");  // 1
  for (int i = 0; i < 4; ++i)
    tg.add_task("dct" + std::to_string(i));  // 2..5
  for (int i = 0; i < 4; ++i)
    tg.add_task("q" + std::to_string(i));    // 6..9
  tg.add_task("merge");  // 10
  tg.add_task("write");  // 11
  tg.add_channel(0, 1, 2.0);
  for (unsigned i = 0; i < 4; ++i) {
    tg.add_channel(1, 2 + i, 1.0);
    tg.add_channel(2 + i, 6 + i, 1.0);
    tg.add_channel(6 + i, 10, 1.0);
  }
  tg.add_channel(1, 10, 0.5);  // frame header forwarded around the workers
  tg.add_channel(10, 11, 2.0);
  // The four dct+q pipelines are interchangeable: all of S4, via a 4-cycle
  // and a transposition acting on both stages at once.
  tg.add_symmetry(Perm({0, 1, 3, 4, 5, 2, 7, 8, 9, 6, 10, 11}));
  tg.add_symmetry(Perm({0, 1, 3, 2, 4, 5, 7, 6, 8, 9, 10, 11}));
  return tg;
}

TaskGraph mandelbrot() {
  TaskGraph tg;
  tg.name = "mandelbrot";
  tg.add_task("src");  // 0
  for (int i = 1; i <= 16; ++i)
    tg.add_task("job" + std::to_string(i));  // 1..16
  tg.add_task("sink");  // 17
  for (unsigned i = 1; i <= 16; ++i) {
    // Every job covers a different slice of the set, so volumes differ and
    // no two jobs are interchangeable.
    tg.add_channel(0, i, 1.0 + 0.25 * i);
    tg.add_channel(i, 17, 0.5 + 0.25 * i);
  }
  return tg;
}

TaskGraph audio_filter() {
  TaskGraph tg;
  tg.name = "audio-filter";
  for (int i = 1; i <= 8; ++i)
    tg.add_task("T" + std::to_string(i));  // 0..7
  tg.add_channel(0, 1, 2.0);
  tg.add_channel(1, 2, 2.0);
  tg.add_channel(2, 3, 2.0);
  tg.add_channel(3, 7, 2.0);
  tg.add_channel(0, 4, 2.0);
  tg.add_channel(4, 5, 2.0);
  tg.add_channel(5, 6, 2.0);
  tg.add_channel(6, 7, 2.0);
  tg.add_symmetry(Perm({0, 4, 5, 6, 1, 2, 3, 7}));  // left and right channel swap
  return tg;
}

const std::map<std::string, double>& type_speed_factors() {
  static const std::map<std::string, double> factors = {
      {"Epiphany", 1.0}, {"RISC", 1.0},   {"ARM", 1.0},    {"DSP", 2.0},
      {"BIG", 1.0},      {"LITTLE", 3.0}, {"CORE_A", 1.0}, {"CORE_B", 1.3},
      {"CORE_C", 1.7},   {"CORE_D", 2.1}, {"CORE_E", 0.8}, {"CORE_F", 1.5},
  };
  return factors;
}

std::vector<double> base_costs(const std::string& name) {
  if (name == "sobel")
    return {6, 8, 8, 7, 4};
  if (name == "matmult")
    return {4, 8, 6, 5, 2};
  if (name == "mjpeg")
    return {3, 2, 9, 9, 9, 9, 5, 5, 5, 5, 3, 2};
  if (name == "mandelbrot") {
    std::vector<double> base(18, 10.0);
    base[0] = 2.0;
    base[17] = 3.0;
    return base;
  }
  if (name == "audio-filter")
    return {3, 6, 5, 4, 6, 5, 4, 3};
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

} // namespace

TaskGraph task_graph(const std::string& name) {
  if (name == "sobel")
    return sobel();
  if (name == "matmult")
    return matmult();
  if (name == "mjpeg")
    return mjpeg();
  if (name == "mandelbrot")
    return mandelbrot();
  if (name == "audio-filter")
    return audio_filter();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

ArchGraph architecture(const std::string& name) {
  if (name == "sobel" || name == "mjpeg")
    return derive_architecture_graph(parallella_topology());
  if (name == "audio-filter")
    return derive_architecture_graph(mesh_topology(2, 2, "RISC"));
  if (name == "matmult")
    return derive_architecture_graph(bus_topology(
        {{"CORE_A", 1}, {"CORE_B", 1}, {"CORE_C", 1}, {"CORE_D", 1}}));
  if (name == "mandelbrot")
    return derive_architecture_graph(
        bus_topology({{"CORE_A", 1}, {"CORE_B", 1}, {"CORE_C", 1},
                      {"CORE_D", 1}, {"CORE_E", 1}, {"CORE_F", 1}}));
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

CostModel cost_model(const std::string& name, const ArchGraph& arch) {
  std::vector<double> base = base_costs(name);
  CostModel model(base.size());
  const auto& factors = type_speed_factors();
  for (const std::string& type : arch.node_types_table()) {
    auto it = factors.find(type);
    double f = it == factors.end() ? 1.0 : it->second;
    for (unsigned t = 0; t < base.size(); ++t)
      model.set_compute_cost(t, type, base[t] * f);
  }
  model.set_comm_factor(1.0);
  return model;
}

ArchGraph hetero_bus() {
  return derive_architecture_graph(
      bus_topology({{"BIG", 2}, {"LITTLE", 2}, {"DSP", 2}}));
}

} // namespace mapsym::fixtures
