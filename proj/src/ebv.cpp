#include "vcp/ebv.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace vcp {

PartitionerState::PartitionerState(bid_t p, vid_t num_vertices)
    : stride_((static_cast<std::size_t>(num_vertices) + 63) / 64),
      keep_(static_cast<std::size_t>(p) * stride_, 0),
      e_count_(p, 0),
      v_count_(p, 0)
{
}

void PartitionerState::assign(const Edge& e, bid_t i)
{
    e_count_[i]++;
    for (vid_t v : {e.src, e.dst}) {
        std::uint64_t& word = keep_[i * stride_ + (v >> 6)];
        const std::uint64_t bit = 1ull << (v & 63);
        if (!(word & bit)) {
            word |= bit;
            v_count_[i]++;
        }
    }
}

double evaluate(const PartitionerState& state, const Edge& e, bid_t i,
                const EbvParams& params, const GraphTotals& totals)
{
    const double edges_per_part = static_cast<double>(totals.num_edges) / params.p;
    const double verts_per_part = static_cast<double>(totals.num_vertices) / params.p;
    double score = 0.0;
    if (!state.in_keep(i, e.src))
        score += 1.0;
    if (!state.in_keep(i, e.dst))
        score += 1.0;
    score += params.alpha * (static_cast<double>(state.edge_count(i)) / edges_per_part);
    score += params.beta * (static_cast<double>(state.vertex_count(i)) / verts_per_part);
    return score;
}

std::vector<eid_t> sort_edges(const Graph& g)
{
    const auto& deg = g.degrees();
    std::vector<eid_t> order(g.num_edges());
    std::iota(order.begin(), order.end(), eid_t{0});
    std::stable_sort(order.begin(), order.end(), [&](eid_t a, eid_t b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        const std::uint64_t ka = std::uint64_t{deg[ea.src]} + deg[ea.dst];
        const std::uint64_t kb = std::uint64_t{deg[eb.src]} + deg[eb.dst];
        return ka < kb;
    });
    return order;
}

PartitionAssignment partition_ebv(const Graph& g, const EbvParams& params,
                                  std::vector<EbvStep>* steps)
{
    if (params.p < 1)
        throw validation_error("ebv: p must be >= 1");
    if (!(params.alpha > 0.0) || !(params.beta > 0.0))
        throw validation_error("ebv: alpha and beta must be positive");
    if (g.num_edges() == 0)
        throw validation_error("ebv: graph has no edges");

    const GraphTotals totals{g.num_edges(), g.num_vertices()};
    const double edges_per_part = static_cast<double>(totals.num_edges) / params.p;
    const double verts_per_part = static_cast<double>(totals.num_vertices) / params.p;

    std::vector<eid_t> order;
    if (params.sort) {
        order = sort_edges(g);
    } else {
        order.resize(g.num_edges());
        std::iota(order.begin(), order.end(), eid_t{0});
    }

    PartitionerState state(params.p, g.num_vertices());
    PartitionAssignment a;
    a.p = params.p;
    a.part.resize(g.num_edges());
    if (steps) {
        steps->clear();
        steps->reserve(g.num_edges());
    }

    std::vector<double> scores(steps ? params.p : 0);
    for (eid_t idx : order) {
        const Edge& e = g.edge(idx);
        bid_t best = 0;
        double best_score = std::numeric_limits<double>::infinity();
        for (bid_t i = 0; i < params.p; ++i) {
            // Same term order as evaluate() so traced scores match exactly.
            double score = 0.0;
            if (!state.in_keep(i, e.src))
                score += 1.0;
            if (!state.in_keep(i, e.dst))
                score += 1.0;
            score += params.alpha * (static_cast<double>(state.edge_count(i)) / edges_per_part);
            score += params.beta * (static_cast<double>(state.vertex_count(i)) / verts_per_part);
            const bool take = params.tie_break == TieBreak::highest_index
                                  ? score <= best_score
                                  : score < best_score;
            if (take) {
                best_score = score;
                best = i;
            }
            if (steps)
                scores[i] = score;
        }
        a.part[idx] = best;
        if (steps)
            steps->push_back({idx, scores, best});
        state.assign(e, best);
    }
    return a;
}

} // namespace vcp
