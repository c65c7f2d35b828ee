#ifndef VCP_BSP_HPP
#define VCP_BSP_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "vcp/assignment.hpp"
#include "vcp/graph.hpp"

namespace vcp {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

enum class Algo { cc, sssp, pr };

struct VertexProgram {
    Algo algo = Algo::cc;
    vid_t sssp_source = 0;  // dense vertex id
    int pr_iterations = 20;
    double pr_damping = 0.85;
};

/// One worker's share of the graph. Arcs are the directed view the
/// algorithms run on: undirected records are materialized in both
/// directions, directed records as given. Vertex ids inside arcs are local.
struct Subgraph {
    bid_t id = 0;
    std::vector<vid_t> vertices; // local -> global, ascending
    std::vector<eid_t> edge_ids; // assigned records, assignment order

    struct Arc {
        vid_t src; // local
        vid_t dst; // local
        std::int64_t weight;
    };
    std::vector<Arc> arcs;

    std::vector<std::int32_t> local_index; // global -> local, -1 if absent
    std::vector<vid_t> replicated;         // local ids with >1 holder
    std::vector<bool> is_master;           // per local vertex
};

/// All subgraphs plus the cross-subgraph replica structure. The master of
/// a vertex is its lowest-indexed holder.
struct SubgraphSet {
    std::vector<Subgraph> subgraphs;
    std::vector<std::vector<bid_t>> holders; // per global vertex, ascending
    std::vector<eid_t> out_degree;           // over the materialized arc set
    eid_t arc_count = 0;                     // doubled count for undirected input
    vid_t covered_vertices = 0;

    bool covered(vid_t v) const { return !holders[v].empty(); }
    bid_t master(vid_t v) const { return holders[v].front(); }
    std::size_t replicas(vid_t v) const { return holders[v].size(); }
};

SubgraphSet build_subgraphs(const Graph& g, const PartitionAssignment& a);

/// Per-superstep, per-worker counters of one simulated run. A message is
/// one (vertex, value) pair sent worker-to-worker; envelope batching is
/// not modeled.
struct SimulationTrace {
    bid_t p = 0;
    // indexed [worker][superstep]
    std::vector<std::vector<eid_t>> messages_sent;
    std::vector<std::vector<eid_t>> messages_received;
    std::vector<std::vector<eid_t>> compute_units; // arcs scanned locally

    std::size_t supersteps() const { return p ? messages_sent[0].size() : 0; }
    eid_t total_messages() const;
    eid_t total_compute() const;
    /// max over workers of total sent / mean over workers; 1.0 when no
    /// messages flow at all.
    double max_mean_ratio() const;
    /// Synchronization-imbalance proxy in work units (not seconds):
    /// sum over supersteps of max-min of (compute_units + messages_sent).
    eid_t sync_imbalance() const;
};

struct TraceSummary {
    std::size_t supersteps = 0;
    eid_t total_messages = 0;
    eid_t total_compute = 0;
    double max_mean_ratio = 1.0;
    eid_t sync_imbalance = 0;
};

TraceSummary trace_stats(const SimulationTrace& t);

enum class Schedule {
    sequential, // reference: workers stepped 0..p-1 in turn
    parallel,   // one task per worker per superstep; identical trace
};

/// Final per-vertex values, indexed by dense global id. Only covered
/// vertices (endpoint of at least one edge) carry a value.
struct SimResult {
    Algo algo = Algo::cc;
    std::vector<bool> covered;
    std::vector<std::int64_t> ivals; // cc: component label; sssp: distance
    std::vector<double> dvals;       // pr
};

struct SimOutput {
    SimResult result;
    SimulationTrace trace;
};

/// Runs the program to completion in lockstep supersteps (local compute to
/// convergence, buffered message exchange, barrier). CC and SSSP stop at
/// the first superstep with no messages and no local changes; PR runs
/// exactly pr_iterations supersteps. Results and trace are deterministic
/// and identical for both schedules.
SimOutput run(const Graph& g, const PartitionAssignment& a, const VertexProgram& prog,
              Schedule schedule = Schedule::sequential);
SimOutput run(const Graph& g, const SubgraphSet& subs, const VertexProgram& prog,
              Schedule schedule = Schedule::sequential);

} // namespace vcp

#endif
