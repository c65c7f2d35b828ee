#include "vcp/reference.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "vcp/bsp.hpp"

namespace vcp {

std::vector<std::int64_t> reference_cc(const Graph& g)
{
    std::vector<std::vector<vid_t>> adj(g.num_vertices());
    for (const Edge& e : g.edges()) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<std::int64_t> label(g.num_vertices(), -1);
    std::vector<vid_t> queue;
    // Ascending scan: the first unlabeled vertex of a component is its
    // minimum, so flooding it labels the whole component correctly.
    for (vid_t v = 0; v < g.num_vertices(); ++v) {
        if (label[v] >= 0)
            continue;
        label[v] = v;
        queue.assign(1, v);
        while (!queue.empty()) {
            const vid_t u = queue.back();
            queue.pop_back();
            for (vid_t to : adj[u]) {
                if (label[to] < 0) {
                    label[to] = v;
                    queue.push_back(to);
                }
            }
        }
    }
    return label;
}

std::vector<std::int64_t> reference_sssp(const Graph& g, vid_t source)
{
    if (source >= g.num_vertices())
        throw validation_error("sssp: source vertex does not exist");

    // adjacency over arcs (undirected records both ways)
    std::vector<std::vector<std::pair<vid_t, std::int64_t>>> adj(g.num_vertices());
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        adj[e.src].emplace_back(e.dst, g.weight(i));
        if (!g.directed())
            adj[e.dst].emplace_back(e.src, g.weight(i));
    }

    std::vector<std::int64_t> dist(g.num_vertices(), kUnreachable);
    using Item = std::pair<std::int64_t, vid_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v])
            continue;
        for (auto [to, w] : adj[v]) {
            if (d + w < dist[to]) {
                dist[to] = d + w;
                heap.push({dist[to], to});
            }
        }
    }
    return dist;
}

std::vector<double> reference_pagerank(const Graph& g, int iterations, double damping)
{
    if (iterations < 1)
        throw validation_error("pr: iteration count must be >= 1");

    std::vector<eid_t> out_degree(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
        out_degree[e.src]++;
        if (!g.directed())
            out_degree[e.dst]++;
    }
    vid_t covered = 0;
    for (vid_t v = 0; v < g.num_vertices(); ++v)
        if (g.degrees()[v] > 0)
            covered++;

    // Dangling mass (directed sinks) is dropped, matching the simulator.
    std::vector<double> rank(g.num_vertices(), 0.0), next(g.num_vertices());
    for (vid_t v = 0; v < g.num_vertices(); ++v)
        if (g.degrees()[v] > 0)
            rank[v] = 1.0 / covered;

    const double base = (1.0 - damping) / covered;
    for (int it = 0; it < iterations; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        for (const Edge& e : g.edges()) {
            next[e.dst] += rank[e.src] / static_cast<double>(out_degree[e.src]);
            if (!g.directed())
                next[e.src] += rank[e.dst] / static_cast<double>(out_degree[e.dst]);
        }
        for (vid_t v = 0; v < g.num_vertices(); ++v)
            rank[v] = g.degrees()[v] > 0 ? base + damping * next[v] : 0.0;
    }
    return rank;
}

} // namespace vcp
