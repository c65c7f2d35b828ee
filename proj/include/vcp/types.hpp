#ifndef VCP_TYPES_HPP
#define VCP_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vcp {

using vid_t = std::uint32_t; // dense vertex id, [0, |V|)
using eid_t = std::uint64_t; // edge index / edge counts
using bid_t = std::uint32_t; // subgraph (part) id
using deg_t = std::uint32_t;

struct Edge {
    vid_t src;
    vid_t dst;
    bool operator==(const Edge&) const = default;
};

// Bad user input: infeasible parameters, missing vertices, malformed requests.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line is 1-based, 0 when not line-specific.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line)
    {
    }
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

} // namespace vcp

#endif
