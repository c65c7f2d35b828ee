#include "vcp/baselines.hpp"

#include <cmath>

#include "vcp/hashing.hpp"

namespace vcp {

std::pair<bid_t, bid_t> default_cvc_grid(bid_t p)
{
    bid_t rows = 1;
    for (bid_t d = static_cast<bid_t>(std::sqrt(static_cast<double>(p))); d >= 1; --d) {
        if (p % d == 0) {
            rows = d;
            break;
        }
    }
    return {rows, p / rows};
}

PartitionAssignment partition_dbh(const Graph& g, const BaselineParams& params)
{
    if (params.p < 1)
        throw validation_error("dbh: p must be >= 1");
    const auto& deg = g.degrees();
    PartitionAssignment a;
    a.p = params.p;
    a.part.reserve(g.num_edges());
    for (const Edge& e : g.edges()) {
        const vid_t key = deg[e.dst] < deg[e.src] ? e.dst : e.src; // tie -> src
        a.part.push_back(static_cast<bid_t>(hash_u64(key, params.seed) % params.p));
    }
    return a;
}

PartitionAssignment partition_cvc(const Graph& g, const BaselineParams& params)
{
    if (params.p < 1)
        throw validation_error("cvc: p must be >= 1");
    bid_t rows, cols;
    PartitionAssignment a;
    if (params.grid) {
        rows = params.grid->first;
        cols = params.grid->second;
        if (rows < 1 || cols < 1 || rows * cols != params.p)
            throw validation_error("cvc: grid rows*cols must equal p");
    } else {
        std::tie(rows, cols) = default_cvc_grid(params.p);
        if (rows == 1 && params.p > 1)
            a.warnings.push_back("cvc: p=" + std::to_string(params.p) +
                                 " has no nontrivial grid, degenerating to (1," +
                                 std::to_string(params.p) + ")");
    }
    a.p = params.p;
    a.part.reserve(g.num_edges());
    for (const Edge& e : g.edges()) {
        const auto row = static_cast<bid_t>(hash_u64(e.src, params.seed) % rows);
        const auto col = static_cast<bid_t>(hash_u64(e.dst, params.seed + 1) % cols);
        a.part.push_back(row * cols + col);
    }
    return a;
}

PartitionAssignment partition_random(const Graph& g, const BaselineParams& params)
{
    if (params.p < 1)
        throw validation_error("random: p must be >= 1");
    PartitionAssignment a;
    a.p = params.p;
    a.part.reserve(g.num_edges());
    for (eid_t i = 0; i < g.num_edges(); ++i)
        a.part.push_back(static_cast<bid_t>(hash_u64(i, params.seed) % params.p));
    return a;
}

} // namespace vcp
