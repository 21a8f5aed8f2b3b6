#pragma once

#include <string>
#include <vector>

#include "mapsym/arch_graph.hpp"
#include "mapsym/cost_model.hpp"
#include "mapsym/task_graph.hpp"

namespace mapsym::fixtures {

/// Names of the bundled benchmark task graphs: "sobel", "matmult", "mjpeg",
/// "mandelbrot", "audio-filter". Task counts, channel counts and symmetry
/// groups follow the usual published profiles of these benchmarks (5/15 with
/// a 2-element group, 5/6 trivial, 12/15 with S4, 18/32 trivial, 8/8 with a
/// 2-element group).
std::vector<std::string> names();

TaskGraph task_graph(const std::string& name);

/// The architecture each benchmark is paired with by default: the mesh
/// platforms for the symmetric benchmarks, fully heterogeneous buses (every
/// PE its own type, so no architecture symmetry at all) for the two
/// benchmarks with trivial task groups.
ArchGraph architecture(const std::string& name);

/// Per-type computation costs for the named benchmark on the given
/// architecture; rows are equal across symmetric tasks by construction.
CostModel cost_model(const std::string& name, const ArchGraph& arch);

/// A 6-PE shared-bus platform with two PEs each of three core types of very
/// different speeds. Small enough to brute force, heterogeneous enough that
/// a randomly grown sub-architecture usually misses the per-size optimum.
ArchGraph hetero_bus();

} // namespace mapsym::fixtures
