#include "vcp/assignment.hpp"

#include <charconv>
#include <fstream>

namespace vcp {

std::vector<eid_t> PartitionAssignment::edge_counts() const
{
    std::vector<eid_t> counts(p, 0);
    for (bid_t b : part)
        counts[b]++;
    return counts;
}

std::vector<vid_t> PartitionAssignment::vertex_counts(const Graph& g) const
{
    std::vector<vid_t> counts(p, 0);
    const std::size_t stride = (g.num_vertices() + 63) / 64;
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(p) * stride, 0);
    auto mark = [&](bid_t b, vid_t v) {
        std::uint64_t& word = seen[b * stride + (v >> 6)];
        const std::uint64_t bit = 1ull << (v & 63);
        if (!(word & bit)) {
            word |= bit;
            counts[b]++;
        }
    };
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        mark(part[i], g.edge(i).src);
        mark(part[i], g.edge(i).dst);
    }
    return counts;
}

std::vector<std::vector<bid_t>> PartitionAssignment::vertex_holders(const Graph& g) const
{
    std::vector<std::vector<bid_t>> holders(g.num_vertices());
    auto add = [&](vid_t v, bid_t b) {
        auto& h = holders[v];
        auto it = std::lower_bound(h.begin(), h.end(), b);
        if (it == h.end() || *it != b)
            h.insert(it, b);
    };
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        add(g.edge(i).src, part[i]);
        add(g.edge(i).dst, part[i]);
    }
    return holders;
}

void PartitionAssignment::validate(const Graph& g) const
{
    if (p == 0)
        throw validation_error("assignment has no subgraphs");
    if (part.size() != g.num_edges())
        throw validation_error("assignment does not cover every edge");
    for (bid_t b : part)
        if (b >= p)
            throw validation_error("assignment index out of range");
}

void save_assignment(const Graph& g, const PartitionAssignment& a,
                     const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw validation_error("cannot write " + path.string());
    for (eid_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edge(i);
        out << g.original_id(e.src) << ' ' << g.original_id(e.dst) << ' ' << a.part[i]
            << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

PartitionAssignment load_assignment(const Graph& g, const std::filesystem::path& path,
                                    bid_t num_parts)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open " + path.string());

    PartitionAssignment a;
    a.part.reserve(g.num_edges());
    std::string line;
    std::size_t lineno = 0;
    bid_t max_part = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::uint64_t u = 0, v = 0, b = 0;
        const char* p = line.data();
        const char* end = p + line.size();
        auto token = [&](std::uint64_t& out_val) {
            while (p != end && (*p == ' ' || *p == '\t'))
                ++p;
            auto [next, ec] = std::from_chars(p, end, out_val);
            if (ec != std::errc{} || next == p)
                throw parse_error("expected 'src dst part' in " + path.string(), lineno);
            p = next;
        };
        token(u);
        token(v);
        token(b);

        const eid_t i = a.part.size();
        if (i >= g.num_edges())
            throw validation_error("assignment has more lines than graph edges");
        const Edge& e = g.edge(i);
        if (g.original_id(e.src) != u || g.original_id(e.dst) != v)
            throw parse_error("assignment line does not match graph edge order", lineno);
        a.part.push_back(static_cast<bid_t>(b));
        max_part = std::max(max_part, static_cast<bid_t>(b));
    }
    if (a.part.size() != g.num_edges())
        throw validation_error("assignment covers " + std::to_string(a.part.size()) +
                               " of " + std::to_string(g.num_edges()) + " edges");
    a.p = num_parts ? num_parts : max_part + 1;
    a.validate(g);
    return a;
}

} // namespace vcp
