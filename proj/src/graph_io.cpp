#include "vcp/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <set>
#include <unordered_map>
#include <utility>

namespace vcp {

namespace {

constexpr char kCacheMagic[4] = {'V', 'C', 'P', 'G'};
constexpr std::uint32_t kCacheVersion = 1;

bool parse_u64(const char*& p, const char* end, std::uint64_t& out)
{
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r'))
        ++p;
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{} || next == p)
        return false;
    p = next;
    return true;
}

bool only_whitespace(const char* p, const char* end)
{
    for (; p != end; ++p)
        if (*p != ' ' && *p != '\t' && *p != '\r')
            return false;
    return true;
}

template <typename T>
void write_raw(std::ostream& out, const T& v)
{
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_raw(std::istream& in, T& v)
{
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
}

} // namespace

Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     const LoaderOptions& options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open " + path.string());

    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() == 4 && std::memcmp(magic, kCacheMagic, 4) == 0) {
        in.close();
        return load_binary_cache(path);
    }
    in.clear();
    in.seekg(0);

    std::vector<Edge> edges;
    std::vector<std::uint64_t> original_ids;
    std::unordered_map<std::uint64_t, vid_t> remap;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen; // dedup keys
    auto densify = [&](std::uint64_t orig) {
        auto [it, inserted] = remap.try_emplace(orig, static_cast<vid_t>(original_ids.size()));
        if (inserted)
            original_ids.push_back(orig);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p != end && (*p == ' ' || *p == '\t'))
            ++p;
        if (p == end || *p == '#' || *p == '\r')
            continue;

        std::uint64_t u = 0, v = 0;
        if (!parse_u64(p, end, u) || !parse_u64(p, end, v) || !only_whitespace(p, end))
            throw parse_error("expected two integer tokens in " + path.string(), lineno);

        if (options.drop_self_loops && u == v)
            continue;
        if (options.dedup) {
            auto key = directed ? std::make_pair(u, v)
                                : std::make_pair(std::min(u, v), std::max(u, v));
            if (!seen.insert(key).second)
                continue;
        }
        edges.push_back({densify(u), densify(v)});
    }

    if (edges.empty())
        throw validation_error("no edges in " + path.string());

    const auto num_vertices = static_cast<vid_t>(original_ids.size());
    return Graph(num_vertices, std::move(edges), directed, std::move(original_ids));
}

void save_edge_list(const Graph& g, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw validation_error("cannot write " + path.string());
    for (const Edge& e : g.edges())
        out << g.original_id(e.src) << ' ' << g.original_id(e.dst) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

void save_binary_cache(const Graph& g, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw validation_error("cannot write " + path.string());
    out.write(kCacheMagic, 4);
    write_raw(out, kCacheVersion);
    write_raw(out, static_cast<std::uint8_t>(g.directed()));
    write_raw(out, static_cast<std::uint8_t>(g.has_weights()));
    write_raw(out, static_cast<std::uint64_t>(g.num_vertices()));
    write_raw(out, g.num_edges());
    for (vid_t v = 0; v < g.num_vertices(); ++v)
        write_raw(out, g.original_id(v));
    for (const Edge& e : g.edges()) {
        write_raw(out, e.src);
        write_raw(out, e.dst);
    }
    if (g.has_weights())
        for (eid_t i = 0; i < g.num_edges(); ++i)
            write_raw(out, g.weight(i));
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

Graph load_binary_cache(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open " + path.string());
    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, kCacheMagic, 4) != 0)
        throw parse_error("not a graph cache: " + path.string(), 0);
    std::uint32_t version = 0;
    read_raw(in, version);
    if (version != kCacheVersion)
        throw parse_error("unsupported cache version in " + path.string(), 0);

    std::uint8_t directed = 0, weighted = 0;
    std::uint64_t nv = 0;
    eid_t ne = 0;
    read_raw(in, directed);
    read_raw(in, weighted);
    read_raw(in, nv);
    read_raw(in, ne);

    std::vector<std::uint64_t> original_ids(nv);
    for (auto& id : original_ids)
        read_raw(in, id);
    std::vector<Edge> edges(ne);
    for (auto& e : edges) {
        read_raw(in, e.src);
        read_raw(in, e.dst);
    }
    std::vector<std::int64_t> weights;
    if (weighted) {
        weights.resize(ne);
        for (auto& w : weights)
            read_raw(in, w);
    }
    if (!in)
        throw parse_error("truncated cache: " + path.string(), 0);

    return Graph(static_cast<vid_t>(nv), std::move(edges), directed != 0,
                 std::move(original_ids), std::move(weights));
}

} // namespace vcp
