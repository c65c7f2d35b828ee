#include "vcp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace vcp {

namespace {

std::string fmt_double(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

MetricsReport compute_metrics(const Graph& g, const PartitionAssignment& a)
{
    a.validate(g);
    if (g.num_edges() == 0)
        throw validation_error("metrics: graph has no edges");
    MetricsReport r;
    r.p = a.p;

    const auto e_counts = a.edge_counts();
    const auto v_counts = a.vertex_counts(g);
    r.per_subgraph.reserve(a.p);
    for (bid_t i = 0; i < a.p; ++i)
        r.per_subgraph.emplace_back(e_counts[i], v_counts[i]);

    for (vid_t v = 0; v < g.num_vertices(); ++v)
        (g.degrees()[v] > 0 ? r.covered_vertices : r.isolated_vertices)++;

    const eid_t max_e = *std::max_element(e_counts.begin(), e_counts.end());
    const vid_t max_v = *std::max_element(v_counts.begin(), v_counts.end());
    for (vid_t c : v_counts)
        r.sum_vertex_copies += c;

    r.edge_imbalance =
        static_cast<double>(max_e) / (static_cast<double>(g.num_edges()) / a.p);
    r.vertex_imbalance =
        static_cast<double>(max_v) /
        (static_cast<double>(r.sum_vertex_copies) / a.p);
    r.replication_factor = static_cast<double>(r.sum_vertex_copies) /
                           static_cast<double>(r.covered_vertices);
    return r;
}

std::pair<double, double> theorem_bounds(eid_t num_edges, vid_t num_vertices,
                                         eid_t sum_vi, bid_t p, double alpha,
                                         double beta)
{
    const double e = static_cast<double>(num_edges);
    const double v = static_cast<double>(num_vertices);
    const double edge_floor = std::floor(2.0 * e / (alpha * p) + (beta / alpha) * e + 1e-9);
    const double vert_floor = std::floor(2.0 * v / (beta * p) + (alpha / beta) * v + 1e-9);
    const double t1 = 1.0 + (static_cast<double>(p - 1) / e) * (1.0 + edge_floor);
    const double t2 =
        1.0 + (static_cast<double>(p - 1) / static_cast<double>(sum_vi)) * (1.0 + vert_floor);
    return {t1, t2};
}

void attach_theorem_bounds(MetricsReport& report, eid_t num_edges, vid_t num_vertices,
                           double alpha, double beta)
{
    auto [t1, t2] = theorem_bounds(num_edges, num_vertices, report.sum_vertex_copies,
                                   report.p, alpha, beta);
    report.theorem1_bound = t1;
    report.theorem2_bound = t2;
    report.bounds_hold = {report.edge_imbalance <= t1 + 1e-9,
                          report.vertex_imbalance <= t2 + 1e-9};
}

void write_metrics_csv_header(std::ostream& out)
{
    out << "algorithm,p,alpha,beta,sort,edge_imb,vertex_imb,repl_factor,t1_bound,t2_bound\n";
}

void write_metrics_csv_row(std::ostream& out, const RunLabel& label,
                           const MetricsReport& report)
{
    out << label.algorithm << ',' << report.p << ',';
    if (label.alpha)
        out << fmt_double(*label.alpha);
    out << ',';
    if (label.beta)
        out << fmt_double(*label.beta);
    out << ',';
    if (label.sort)
        out << (*label.sort ? "true" : "false");
    out << ',' << fmt_double(report.edge_imbalance) << ','
        << fmt_double(report.vertex_imbalance) << ','
        << fmt_double(report.replication_factor) << ',';
    if (report.theorem1_bound)
        out << fmt_double(*report.theorem1_bound);
    out << ',';
    if (report.theorem2_bound)
        out << fmt_double(*report.theorem2_bound);
    out << '\n';
}

std::string metrics_to_json(const RunLabel& label, const MetricsReport& report)
{
    nlohmann::json j;
    j["algorithm"] = label.algorithm;
    j["p"] = report.p;
    if (label.alpha)
        j["alpha"] = *label.alpha;
    if (label.beta)
        j["beta"] = *label.beta;
    if (label.sort)
        j["sort"] = *label.sort;
    j["edge_imbalance"] = report.edge_imbalance;
    j["vertex_imbalance"] = report.vertex_imbalance;
    j["replication_factor"] = report.replication_factor;
    j["covered_vertices"] = report.covered_vertices;
    j["isolated_vertices"] = report.isolated_vertices;
    j["sum_vertex_copies"] = report.sum_vertex_copies;
    auto& per = j["per_subgraph"] = nlohmann::json::array();
    for (const auto& [e, v] : report.per_subgraph)
        per.push_back({{"e_count", e}, {"v_count", v}});
    if (report.theorem1_bound)
        j["theorem1_bound"] = *report.theorem1_bound;
    if (report.theorem2_bound)
        j["theorem2_bound"] = *report.theorem2_bound;
    if (report.bounds_hold) {
        j["bounds_hold"] = {{"edge", report.bounds_hold->first},
                            {"vertex", report.bounds_hold->second}};
    }
    return j.dump(2);
}

} // namespace vcp
