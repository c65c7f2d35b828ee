#include "doctest.h"

#include <cmath>
#include <map>

#include "vcp/generator.hpp"

using namespace vcp;

namespace {

// Least-squares slope of log(count) vs log(degree) over the given degree
// window, skipping empty bins.
double loglog_slope(const Graph& g, deg_t lo, deg_t hi)
{
    std::map<deg_t, std::size_t> hist;
    for (deg_t d : g.degrees())
        if (d >= lo && d <= hi)
            hist[d]++;
    REQUIRE(hist.size() >= 5);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [d, c] : hist) {
        const double x = std::log(static_cast<double>(d));
        const double y = std::log(static_cast<double>(c));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(hist.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("generator is deterministic for a fixed seed")
{
    const PowerLawSpec spec{100000, 10.0, 2.4, 7};
    const Graph a = generate_power_law(spec);
    const Graph b = generate_power_law(spec);
    REQUIRE(a.num_edges() == b.num_edges());
    CHECK(a.num_vertices() == b.num_vertices());
    bool same = true;
    for (eid_t i = 0; i < a.num_edges(); ++i)
        same = same && a.edge(i) == b.edge(i);
    CHECK(same);

    const Graph c = generate_power_law({100000, 10.0, 2.4, 8});
    bool differs = c.num_edges() != a.num_edges();
    for (eid_t i = 0; !differs && i < a.num_edges(); ++i)
        differs = !(a.edge(i) == c.edge(i));
    CHECK(differs);
}

TEST_CASE("generator rejects infeasible specs")
{
    CHECK_THROWS_AS(generate_power_law({1000, 10.0, 0.5, 1}), validation_error);
    CHECK_THROWS_AS(generate_power_law({1000, 10.0, 1.0, 1}), validation_error);
    CHECK_THROWS_AS(generate_power_law({1, 0.5, 2.4, 1}), validation_error);
    CHECK_THROWS_AS(generate_power_law({1000, 1000.0, 2.4, 1}), validation_error);
    CHECK_THROWS_AS(generate_power_law({1000, 0.0, 2.4, 1}), validation_error);
}

TEST_CASE("generated graph hits the edge budget and stays undirected")
{
    const Graph g = generate_power_law({5000, 8.0, 2.2, 3});
    CHECK(g.num_edges() == 20000);
    CHECK_FALSE(g.directed());
    for (const Edge& e : g.edges())
        CHECK(e.src != e.dst);
}

TEST_CASE("degree distribution tail slope approximates -eta")
{
    const PowerLawSpec spec{100000, 10.0, 2.4, 7};
    const Graph g = generate_power_law(spec);
    // mid-range window: avg degree up to 10x avg
    const double slope = loglog_slope(g, 10, 100);
    CHECK(slope > -2.9);
    CHECK(slope < -1.9);
}
