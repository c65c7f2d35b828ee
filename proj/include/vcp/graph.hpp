#ifndef VCP_GRAPH_HPP
#define VCP_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "vcp/types.hpp"

namespace vcp {

/// Immutable edge-list graph. Vertex ids are dense in [0, num_vertices).
/// Undirected edges are stored as single records; any doubling into two
/// opposite arcs happens downstream (simulator), never here. Safe to share
/// across threads once constructed.
class Graph {
  public:
    Graph(vid_t num_vertices, std::vector<Edge> edges, bool directed,
          std::vector<std::uint64_t> original_ids = {},
          std::vector<std::int64_t> weights = {});

    vid_t num_vertices() const { return num_vertices_; }
    eid_t num_edges() const { return static_cast<eid_t>(edges_.size()); }
    bool directed() const { return directed_; }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(eid_t i) const { return edges_[i]; }

    // degrees[v] = number of edge records incident to v (self-loops count
    // once per record).
    const std::vector<deg_t>& degrees() const { return degrees_; }

    // Original (file) id of a dense vertex; identity when the graph was
    // built programmatically.
    std::uint64_t original_id(vid_t v) const
    {
        return original_ids_.empty() ? v : original_ids_[v];
    }
    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }

    bool has_weights() const { return !weights_.empty(); }
    std::int64_t weight(eid_t i) const { return weights_.empty() ? 1 : weights_[i]; }

  private:
    vid_t num_vertices_;
    std::vector<Edge> edges_;
    bool directed_;
    std::vector<deg_t> degrees_;
    std::vector<std::uint64_t> original_ids_;
    std::vector<std::int64_t> weights_;
};

const std::vector<deg_t>& degree_table(const Graph& g);

} // namespace vcp

#endif
