#ifndef VCP_EBV_HPP
#define VCP_EBV_HPP

#include <vector>

#include "vcp/assignment.hpp"
#include "vcp/graph.hpp"

namespace vcp {

enum class TieBreak {
    highest_index, // default: matches the worked 2-subgraph example
    lowest_index,
};

struct EbvParams {
    bid_t p = 2;
    double alpha = 1.0; // weight of the edge-balance term
    double beta = 1.0;  // weight of the vertex-balance term
    bool sort = true;   // degree-sum sorting preprocessing
    TieBreak tie_break = TieBreak::highest_index;
};

/// Working state of the greedy loop: per-subgraph keep-sets (membership
/// bitmaps over dense vertex ids) plus edge/vertex counters. v_count[i] ==
/// |keep[i]| at all times.
class PartitionerState {
  public:
    PartitionerState(bid_t p, vid_t num_vertices);

    bool in_keep(bid_t i, vid_t v) const
    {
        return (keep_[i * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    eid_t edge_count(bid_t i) const { return e_count_[i]; }
    vid_t vertex_count(bid_t i) const { return v_count_[i]; }
    bid_t parts() const { return static_cast<bid_t>(e_count_.size()); }

    /// Applies the post-assignment update: bump e_count, add each endpoint
    /// not yet kept (v_count tracks keep-set size, so a self-loop adds one).
    void assign(const Edge& e, bid_t i);

  private:
    std::size_t stride_; // 64-bit words per subgraph bitmap
    std::vector<std::uint64_t> keep_;
    std::vector<eid_t> e_count_;
    std::vector<vid_t> v_count_;
};

struct GraphTotals {
    eid_t num_edges;
    vid_t num_vertices;
};

/// Greedy evaluation score of placing edge e on subgraph i:
///   [src not kept] + [dst not kept]
///   + alpha * e_count[i] / (|E|/p) + beta * v_count[i] / (|V|/p).
/// Lower is better. Pure; denominators are real divisions.
double evaluate(const PartitionerState& state, const Edge& e, bid_t i,
                const EbvParams& params, const GraphTotals& totals);

/// Edge processing order: ascending by degrees[src] + degrees[dst], stable
/// (ties keep input order). Returns indices into g.edges().
std::vector<eid_t> sort_edges(const Graph& g);

/// Per-step record for auditing the greedy choices.
struct EbvStep {
    eid_t edge_index;           // index into g.edges()
    std::vector<double> scores; // evaluate() for every subgraph
    bid_t chosen;
};

/// The full greedy partitioner: processes edges in sorted order (or input
/// order with params.sort off), assigns each to a score-minimizing subgraph
/// with params.tie_break deciding equal minima, and updates state. Strictly
/// sequential. `steps`, when non-null, receives one record per edge in
/// processing order.
PartitionAssignment partition_ebv(const Graph& g, const EbvParams& params,
                                  std::vector<EbvStep>* steps = nullptr);

} // namespace vcp

#endif
