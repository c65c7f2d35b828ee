#ifndef VCP_REFERENCE_HPP
#define VCP_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include "vcp/graph.hpp"

namespace vcp {

// Sequential single-process algorithms over the whole graph, used by the
// CLI --verify mode. They share the simulator's conventions (weak
// connectivity for CC, undirected doubling, dangling PR mass dropped,
// N = covered vertices) but none of its machinery.

/// Weakly-connected component labels; label = smallest dense vertex id in
/// the component. Isolated vertices label themselves.
std::vector<std::int64_t> reference_cc(const Graph& g);

/// Dijkstra distances from source (kUnreachable when not reachable).
/// Directed graphs follow arc direction; undirected records relax both ways.
std::vector<std::int64_t> reference_sssp(const Graph& g, vid_t source);

/// Fixed-iteration synchronous PageRank over covered vertices.
std::vector<double> reference_pagerank(const Graph& g, int iterations, double damping);

} // namespace vcp

#endif
