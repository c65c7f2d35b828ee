#ifndef VCP_GRAPH_IO_HPP
#define VCP_GRAPH_IO_HPP

#include <filesystem>
#include <string>

#include "vcp/graph.hpp"

namespace vcp {

struct LoaderOptions {
    bool drop_self_loops = false;
    // Drop repeated records; for undirected input (u,v) and (v,u) count as
    // the same edge. First occurrence wins.
    bool dedup = false;
};

/// Reads a whitespace edge list: one "src dst" pair per line, '#' lines
/// ignored. Vertex ids are densified in order of first appearance; the
/// original ids stay available through Graph::original_id(). Files written
/// by save_binary_cache() are detected by magic and loaded directly.
///
/// Throws parse_error (with line number) on malformed lines and
/// validation_error when no edges survive loading.
Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     const LoaderOptions& options = {});

/// Writes "src dst" lines using original ids, preserving edge order.
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// Versioned binary cache of a loaded graph (original ids included).
void save_binary_cache(const Graph& g, const std::filesystem::path& path);
Graph load_binary_cache(const std::filesystem::path& path);

} // namespace vcp

#endif
