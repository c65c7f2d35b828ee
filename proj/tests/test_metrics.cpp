#include "doctest.h"

#include <sstream>

#include "vcp/ebv.hpp"
#include "vcp/metrics.hpp"

#include "test_util.hpp"

using namespace vcp;
using namespace vcptest;

TEST_CASE("worked-example metrics: perfect edge balance, RF 7/6")
{
    const Graph g = example6_graph();
    const PartitionAssignment a = partition_ebv(g, {2, 1.0, 1.0, true});
    const MetricsReport rep = compute_metrics(g, a);

    CHECK(rep.edge_imbalance == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.replication_factor == doctest::Approx(7.0 / 6.0).epsilon(1e-12));
    // V_0 = {A,E,F,D}, V_1 = {A,B,C}: max 4 over mean 7/2
    CHECK(rep.vertex_imbalance == doctest::Approx(4.0 / 3.5).epsilon(1e-12));
    CHECK(rep.sum_vertex_copies == 7);
    CHECK(rep.covered_vertices == 6);
    CHECK(rep.isolated_vertices == 0);
    REQUIRE(rep.per_subgraph.size() == 2);
    CHECK(rep.per_subgraph[0].first == 3);
    CHECK(rep.per_subgraph[1].first == 3);
}

TEST_CASE("p=1 gives unit metrics")
{
    const Graph g = random_graph(3, 40, 200);
    PartitionAssignment a;
    a.p = 1;
    a.part.assign(g.num_edges(), 0);
    const MetricsReport rep = compute_metrics(g, a);
    CHECK(rep.edge_imbalance == doctest::Approx(1.0));
    CHECK(rep.vertex_imbalance == doctest::Approx(1.0));
    CHECK(rep.replication_factor == doctest::Approx(1.0));
}

TEST_CASE("isolated vertices leave the replication denominator")
{
    // vertex 3 has no edges
    const Graph g(4, {{0, 1}, {1, 2}}, false);
    PartitionAssignment a;
    a.p = 2;
    a.part = {0, 1};
    const MetricsReport rep = compute_metrics(g, a);
    CHECK(rep.covered_vertices == 3);
    CHECK(rep.isolated_vertices == 1);
    // V_0={0,1}, V_1={1,2}: 4 copies over 3 covered
    CHECK(rep.replication_factor == doctest::Approx(4.0 / 3.0));
    CHECK(rep.replication_factor >= 1.0);
}

TEST_CASE("replication factor is 1 exactly when nothing is replicated")
{
    const Graph g(4, {{0, 1}, {2, 3}}, false);
    PartitionAssignment a;
    a.p = 2;
    a.part = {0, 1};
    CHECK(compute_metrics(g, a).replication_factor == doctest::Approx(1.0));
}

TEST_CASE("theorem bound formulas")
{
    // |E|=6, |V|=6, p=2, alpha=beta=1, sum|V_i|=7
    const auto [t1, t2] = theorem_bounds(6, 6, 7, 2, 1.0, 1.0);
    CHECK(t1 == doctest::Approx(1.0 + 13.0 / 6.0).epsilon(1e-12));
    // vertex: 1 + (1/7) * (1 + floor(6 + 6)) = 1 + 13/7
    CHECK(t2 == doctest::Approx(1.0 + 13.0 / 7.0).epsilon(1e-12));

    // p=1: both bounds collapse to 1
    const auto [u1, u2] = theorem_bounds(100, 50, 50, 1, 1.0, 1.0);
    CHECK(u1 == doctest::Approx(1.0));
    CHECK(u2 == doctest::Approx(1.0));

    // alpha -> large: floor argument tends to 0, edge bound -> 1 + (p-1)/|E|
    const auto [v1, v2] = theorem_bounds(1000, 500, 600, 4, 1e9, 1.0);
    CHECK(v1 == doctest::Approx(1.0 + 3.0 / 1000.0).epsilon(1e-9));
    (void)v2;
}

TEST_CASE("compute_metrics is pure")
{
    const Graph g = random_graph(5, 30, 150);
    const PartitionAssignment a = partition_ebv(g, {4, 1.0, 1.0, true});
    const MetricsReport r1 = compute_metrics(g, a);
    const MetricsReport r2 = compute_metrics(g, a);
    CHECK(r1.edge_imbalance == r2.edge_imbalance);
    CHECK(r1.vertex_imbalance == r2.vertex_imbalance);
    CHECK(r1.replication_factor == r2.replication_factor);
    CHECK(r1.per_subgraph == r2.per_subgraph);
}

TEST_CASE("empty subgraphs are legal")
{
    const Graph g(3, {{0, 1}, {1, 2}}, false);
    PartitionAssignment a;
    a.p = 4;
    a.part = {0, 0};
    const MetricsReport rep = compute_metrics(g, a);
    CHECK(rep.edge_imbalance == doctest::Approx(4.0)); // 2 edges on one of 4 parts
    CHECK(rep.per_subgraph[3].first == 0);
}

TEST_CASE("csv row layout is stable")
{
    const Graph g = example6_graph();
    const PartitionAssignment a = partition_ebv(g, {2, 1.0, 1.0, true});
    MetricsReport rep = compute_metrics(g, a);
    attach_theorem_bounds(rep, g.num_edges(), g.num_vertices(), 1.0, 1.0);

    std::ostringstream out;
    write_metrics_csv_header(out);
    RunLabel label{"ebv", 1.0, 1.0, true};
    write_metrics_csv_row(out, label, rep);
    const std::string text = out.str();
    CHECK(text.find("algorithm,p,alpha,beta,sort,edge_imb,vertex_imb,repl_factor,"
                    "t1_bound,t2_bound\n") == 0);
    CHECK(text.find("ebv,2,1,1,true,1,") != std::string::npos);

    // baselines leave ebv-only columns empty
    std::ostringstream out2;
    write_metrics_csv_row(out2, RunLabel{"dbh", {}, {}, {}}, compute_metrics(g, a));
    CHECK(out2.str().rfind("dbh,2,,,,", 0) == 0);
    CHECK(out2.str().find(",,\n") != std::string::npos);
}

TEST_CASE("assignment validation catches broken inputs")
{
    const Graph g = example6_graph();
    PartitionAssignment a;
    a.p = 2;
    a.part = {0, 0, 0};
    CHECK_THROWS_AS(a.validate(g), validation_error);
    a.part = {0, 0, 0, 1, 1, 2};
    CHECK_THROWS_AS(a.validate(g), validation_error);
    a.part = {0, 0, 0, 1, 1, 1};
    CHECK_NOTHROW(a.validate(g));
}
