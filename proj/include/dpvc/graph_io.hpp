#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dpvc/graph.hpp"

namespace dpvc {

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, const std::string &msg)
		: std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

// Text format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          (1-based, m lines)
// External index i maps to internal id i-1.

Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);

/// Writes live vertices compacted to 1..n in id order, edges sorted.
void write_graph(std::ostream &out, const Graph &g);
void write_graph_file(const std::string &path, const Graph &g);

} // namespace dpvc
