#ifndef VCP_BASELINES_HPP
#define VCP_BASELINES_HPP

#include <optional>
#include <utility>

#include "vcp/assignment.hpp"
#include "vcp/graph.hpp"

namespace vcp {

struct BaselineParams {
    bid_t p = 2;
    std::uint64_t seed = 0; // hash salt
    // CVC grid (rows, cols), rows*cols == p. Defaults to the divisor pair
    // minimizing rows+cols.
    std::optional<std::pair<bid_t, bid_t>> grid;
};

/// Degree-based hashing: edge goes to hash(id of the lower-degree
/// endpoint) mod p; equal degrees pick src.
PartitionAssignment partition_dbh(const Graph& g, const BaselineParams& params);

/// 2D (Cartesian) vertex cut: edge (u,v) lands on grid cell
/// (hash(u) mod rows, hash(v) mod cols), row-major. Confines each vertex
/// to one row as source and one column as target, so replicas(v) <=
/// rows + cols - 1. A prime p without an explicit grid degenerates to
/// (1, p) and records a warning.
PartitionAssignment partition_cvc(const Graph& g, const BaselineParams& params);

/// Uniform hash of the edge index.
PartitionAssignment partition_random(const Graph& g, const BaselineParams& params);

/// Default CVC grid for p: (r, p/r) with r the largest divisor of p <= sqrt(p).
std::pair<bid_t, bid_t> default_cvc_grid(bid_t p);

} // namespace vcp

#endif
