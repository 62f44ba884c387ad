#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace holmc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* a partition class does not induce a connected subgraph of the connectivity edges */
struct DisconnectedClassError : Error {
    explicit DisconnectedClassError(std::uint32_t id)
        : Error("class " + std::to_string(id) + " is not connected in the connectivity graph"),
          class_id(id) {}
    std::uint32_t class_id;
};

struct InfeasibleInputError : Error {
    using Error::Error;
};

struct NoOverlapError : Error {
    NoOverlapError() : Error("trajectories share fewer than two frames") {}
};

struct DegeneratePairError : Error {
    DegeneratePairError() : Error("point pair too close to define a transform") {}
};

struct DegenerateTripleError : Error {
    DegenerateTripleError() : Error("all transitions of the triple are degenerate") {}
};

struct TooLargeError : Error {
    explicit TooLargeError(std::size_t n, std::size_t limit)
        : Error("instance has " + std::to_string(n) + " nodes, exact solver limit is " +
                std::to_string(limit)),
          node_count(n) {}
    std::size_t node_count;
};

struct ParseError : Error {
    ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
                what_),
          line(line_), column(column_) {}
    std::size_t line;
    std::size_t column;
};

} // namespace holmc
