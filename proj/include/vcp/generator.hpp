#ifndef VCP_GENERATOR_HPP
#define VCP_GENERATOR_HPP

#include <cstdint>

#include "vcp/graph.hpp"

namespace vcp {

/// Chung-Lu style expected-degree model: per-vertex weights are drawn from
/// a Pareto density p(w) ~ w^-eta, rescaled so the mean weight equals
/// target_avg_degree, and round(|V|*avg/2) undirected edges are sampled
/// with both endpoints picked proportionally to weight. The expected degree
/// of a vertex equals its weight, so the degree distribution keeps the
/// d^-eta tail. Self-loops are rejected; parallel edges are kept.
struct PowerLawSpec {
    vid_t num_vertices = 0;
    double target_avg_degree = 0.0;
    double eta = 0.0; // tail exponent, > 1; lower = more skewed
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec (hand-rolled sampling, no unspecified
/// std::distribution behavior). Throws validation_error on an infeasible
/// spec.
Graph generate_power_law(const PowerLawSpec& spec);

} // namespace vcp

#endif
