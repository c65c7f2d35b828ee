#include "doctest.h"

#include <cmath>
#include <set>

#include "vcp/baselines.hpp"
#include "vcp/hashing.hpp"
#include "vcp/metrics.hpp"

#include "test_util.hpp"

using namespace vcp;
using namespace vcptest;

TEST_CASE("dbh hashes the lower-degree endpoint, src on ties")
{
    const Graph g = example6_graph();
    const BaselineParams params{4, 9, std::nullopt};
    const auto a = partition_dbh(g, params);
    const auto& deg = g.degrees();
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        const vid_t key = deg[e.dst] < deg[e.src] ? e.dst : e.src;
        CHECK(a.part[i] == hash_u64(key, params.seed) % params.p);
    }
    // edge (A,E): deg(A)=5 > deg(E)=1, so E's id decides
    CHECK(a.part[0] == hash_u64(4, params.seed) % params.p);
    // edge (B,C): equal degrees, src (B) decides
    CHECK(a.part[5] == hash_u64(1, params.seed) % params.p);
}

TEST_CASE("dbh invariant on random graphs")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Graph g = random_graph(seed, 100, 600);
        const auto a = partition_dbh(g, {8, seed, std::nullopt});
        const auto& deg = g.degrees();
        for (eid_t i = 0; i < g.num_edges(); ++i) {
            const Edge& e = g.edge(i);
            const vid_t hashed = deg[e.dst] < deg[e.src] ? e.dst : e.src;
            const vid_t other = hashed == e.src ? e.dst : e.src;
            CHECK(deg[hashed] <= deg[other]);
            CHECK(a.part[i] < 8);
        }
    }
}

TEST_CASE("dbh on a big star keeps leaves home and spreads the center")
{
    const vid_t leaves = 1000;
    std::vector<Edge> edges;
    for (vid_t l = 1; l <= leaves; ++l)
        edges.push_back({0, l});
    const Graph star(leaves + 1, std::move(edges), false);

    const bid_t p = 8;
    const auto a = partition_dbh(star, {p, 5, std::nullopt});

    // direct replica count per vertex
    std::vector<std::set<bid_t>> replicas(star.num_vertices());
    for (eid_t i = 0; i < star.num_edges(); ++i) {
        replicas[star.edge(i).src].insert(a.part[i]);
        replicas[star.edge(i).dst].insert(a.part[i]);
    }
    CHECK(replicas[0].size() <= p);
    eid_t copies = 0;
    for (const auto& r : replicas)
        copies += r.size();
    const MetricsReport rep = compute_metrics(star, a);
    CHECK(rep.replication_factor ==
          doctest::Approx(static_cast<double>(copies) / star.num_vertices()));
    // every leaf lives on exactly one subgraph
    for (vid_t l = 1; l <= leaves; ++l)
        CHECK(replicas[l].size() == 1);
}

TEST_CASE("cvc default grids")
{
    CHECK(default_cvc_grid(1) == std::pair<bid_t, bid_t>{1, 1});
    CHECK(default_cvc_grid(4) == std::pair<bid_t, bid_t>{2, 2});
    CHECK(default_cvc_grid(8) == std::pair<bid_t, bid_t>{2, 4});
    CHECK(default_cvc_grid(12) == std::pair<bid_t, bid_t>{3, 4});
    CHECK(default_cvc_grid(16) == std::pair<bid_t, bid_t>{4, 4});
    CHECK(default_cvc_grid(7) == std::pair<bid_t, bid_t>{1, 7});
}

TEST_CASE("cvc confines vertices to one row and one column")
{
    const Graph g = random_graph(4, 200, 2000);
    const bid_t p = 16; // grid (4,4)
    const auto a = partition_cvc(g, {p, 11, std::nullopt});
    CHECK(a.warnings.empty());

    const bid_t rows = 4, cols = 4;
    std::vector<std::set<bid_t>> src_rows(g.num_vertices()), dst_cols(g.num_vertices());
    std::vector<std::set<bid_t>> replicas(g.num_vertices());
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        src_rows[e.src].insert(a.part[i] / cols);
        dst_cols[e.dst].insert(a.part[i] % cols);
        replicas[e.src].insert(a.part[i]);
        replicas[e.dst].insert(a.part[i]);
    }
    for (vid_t v = 0; v < g.num_vertices(); ++v) {
        CHECK(src_rows[v].size() <= 1);
        CHECK(dst_cols[v].size() <= 1);
        CHECK(replicas[v].size() <= rows + cols - 1);
    }
}

TEST_CASE("cvc p=4 bounds replicas by rows+cols-1 = 3")
{
    const Graph g = random_graph(5, 50, 400);
    const auto a = partition_cvc(g, {4, 3, std::nullopt});
    std::vector<std::set<bid_t>> replicas(g.num_vertices());
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        replicas[g.edge(i).src].insert(a.part[i]);
        replicas[g.edge(i).dst].insert(a.part[i]);
    }
    for (const auto& r : replicas)
        CHECK(r.size() <= 3);
}

TEST_CASE("cvc prime p degenerates to (1, p) with a warning")
{
    const Graph g = random_graph(6, 20, 60);
    const auto a = partition_cvc(g, {7, 1, std::nullopt});
    REQUIRE(a.warnings.size() == 1);
    CHECK(a.warnings[0].find("(1,7)") != std::string::npos);

    // explicit grid silences the warning
    const auto b = partition_cvc(g, {7, 1, std::make_pair(7u, 1u)});
    CHECK(b.warnings.empty());
    CHECK_THROWS_AS(partition_cvc(g, {7, 1, std::make_pair(2u, 3u)}), validation_error);
}

TEST_CASE("random partition is uniform within 3 sigma (binomial model)")
{
    const eid_t m = 1000000;
    const bid_t p = 16;
    const Graph g = random_graph(7, 2000, m);
    const auto a = partition_random(g, {p, 123, std::nullopt});
    const auto counts = a.edge_counts();

    const double mean = static_cast<double>(m) / p;
    const double sigma = std::sqrt(static_cast<double>(m) * (1.0 / p) * (1.0 - 1.0 / p));
    for (eid_t c : counts)
        CHECK(std::abs(static_cast<double>(c) - mean) <= 3.0 * sigma);
}

TEST_CASE("all baselines are total, in range, deterministic; p=1 collapses")
{
    const Graph g = random_graph(8, 60, 300);
    const BaselineParams params{6, 99, std::nullopt};
    for (auto* fn : {&partition_dbh, &partition_cvc, &partition_random}) {
        const auto a = fn(g, params);
        REQUIRE(a.part.size() == g.num_edges());
        for (bid_t b : a.part)
            CHECK(b < 6);
        const auto b = fn(g, params);
        CHECK(a.part == b.part);

        const auto one = fn(g, {1, 99, std::nullopt});
        for (bid_t x : one.part)
            CHECK(x == 0);
    }
    // different seed moves at least one edge for hash-based partitioners
    const auto x = partition_random(g, {6, 1, std::nullopt});
    const auto y = partition_random(g, {6, 2, std::nullopt});
    CHECK(x.part != y.part);
}
