#ifndef VCP_METRICS_HPP
#define VCP_METRICS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vcp/assignment.hpp"
#include "vcp/graph.hpp"

namespace vcp {

struct MetricsReport {
    bid_t p = 0;
    double edge_imbalance = 1.0;   // max|E_i| / (|E|/p)
    double vertex_imbalance = 1.0; // max|V_i| / (sum|V_i|/p)
    double replication_factor = 1.0; // sum|V_i| / |covered V|
    std::vector<std::pair<eid_t, vid_t>> per_subgraph; // (e_count, v_count)
    eid_t sum_vertex_copies = 0;   // sum|V_i|
    vid_t covered_vertices = 0;    // vertices with degree >= 1
    vid_t isolated_vertices = 0;   // degree 0, reported separately

    // Filled by attach_theorem_bounds; only meaningful for greedy results.
    std::optional<double> theorem1_bound;
    std::optional<double> theorem2_bound;
    std::optional<std::pair<bool, bool>> bounds_hold;
};

/// Exact metrics from the derived E_i / V_i sets. Pure: identical inputs
/// give bit-identical reports. Isolated vertices belong to no V_i and are
/// excluded from the replication-factor denominator.
MetricsReport compute_metrics(const Graph& g, const PartitionAssignment& a);

/// Worst-case imbalance bounds of the greedy partitioner:
///   edge:   1 + (p-1)/|E|     * (1 + floor(2|E|/(alpha*p) + (beta/alpha)|E|))
///   vertex: 1 + (p-1)/sum|V_j| * (1 + floor(2|V|/(beta*p) + (alpha/beta)|V|))
/// floor is taken after a 1e-9 guard against representation error.
std::pair<double, double> theorem_bounds(eid_t num_edges, vid_t num_vertices,
                                         eid_t sum_vi, bid_t p, double alpha,
                                         double beta);

/// Computes the bounds for (alpha, beta) and sets bounds_hold from the
/// measured imbalance factors.
void attach_theorem_bounds(MetricsReport& report, eid_t num_edges,
                           vid_t num_vertices, double alpha, double beta);

// Fixed CSV schema shared by the report files:
// algorithm,p,alpha,beta,sort,edge_imb,vertex_imb,repl_factor,t1_bound,t2_bound
// Label fields without a value for the given algorithm stay empty.
struct RunLabel {
    std::string algorithm;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<bool> sort;
};

void write_metrics_csv_header(std::ostream& out);
void write_metrics_csv_row(std::ostream& out, const RunLabel& label,
                           const MetricsReport& report);
std::string metrics_to_json(const RunLabel& label, const MetricsReport& report);

} // namespace vcp

#endif
