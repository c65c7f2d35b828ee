#include "vcp/graph.hpp"

#include <utility>

namespace vcp {

Graph::Graph(vid_t num_vertices, std::vector<Edge> edges, bool directed,
             std::vector<std::uint64_t> original_ids, std::vector<std::int64_t> weights)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      directed_(directed),
      original_ids_(std::move(original_ids)),
      weights_(std::move(weights))
{
    for (const Edge& e : edges_) {
        if (e.src >= num_vertices_ || e.dst >= num_vertices_)
            throw validation_error("edge endpoint out of range");
    }
    if (!original_ids_.empty() && original_ids_.size() != num_vertices_)
        throw validation_error("original-id table size mismatch");
    if (!weights_.empty() && weights_.size() != edges_.size())
        throw validation_error("weight table size mismatch");

    degrees_.assign(num_vertices_, 0);
    for (const Edge& e : edges_) {
        degrees_[e.src]++;
        if (e.dst != e.src)
            degrees_[e.dst]++;
    }
}

const std::vector<deg_t>& degree_table(const Graph& g)
{
    return g.degrees();
}

} // namespace vcp
