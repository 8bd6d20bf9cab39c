#pragma once

#include <stdexcept>
#include <string>

#include "linelab/graph.hpp"

namespace linelab {

struct Graph6Error : std::runtime_error {
  std::size_t offset;  // byte offset of the offending character within the record
  Graph6Error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

// One graph6 record (no trailing newline). A leading ">>graph6<<" header is
// tolerated. Throws Graph6Error with a byte offset on malformed input.
Graph graph6_parse(const std::string& line);
std::string graph6_write(const Graph& g);

}  // namespace linelab
