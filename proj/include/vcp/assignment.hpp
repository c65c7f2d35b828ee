#ifndef VCP_ASSIGNMENT_HPP
#define VCP_ASSIGNMENT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "vcp/graph.hpp"
#include "vcp/types.hpp"

namespace vcp {

/// Vertex-cut partition result: each edge record belongs to exactly one of
/// p subgraphs. part is indexed by the graph's edge index. V_i (the vertex
/// set covered by subgraph i) is derived, not stored.
struct PartitionAssignment {
    bid_t p = 0;
    std::vector<bid_t> part;            // per edge, value in [0, p)
    std::vector<std::string> warnings;  // e.g. CVC grid degradation

    std::vector<eid_t> edge_counts() const;
    // |V_i| for each subgraph, from the covering edges.
    std::vector<vid_t> vertex_counts(const Graph& g) const;
    // Subgraph ids holding vertex v, ascending; empty for isolated vertices.
    std::vector<std::vector<bid_t>> vertex_holders(const Graph& g) const;

    // Every edge assigned, every index < p.
    void validate(const Graph& g) const;
};

/// Text format: one line per edge, "src dst part", original vertex ids,
/// edges in graph order.
void save_assignment(const Graph& g, const PartitionAssignment& a,
                     const std::filesystem::path& path);

/// Reads an assignment file back against its graph, checking that line i
/// matches edge i. num_parts == 0 infers p = max(part) + 1.
PartitionAssignment load_assignment(const Graph& g, const std::filesystem::path& path,
                                    bid_t num_parts = 0);

} // namespace vcp

#endif
