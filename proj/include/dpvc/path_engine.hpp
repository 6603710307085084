#pragma once

#include <optional>
#include <vector>

#include "dpvc/graph.hpp"

namespace dpvc {

inline constexpr int kDefaultMaxD = 8;

class RangeError : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

/// Throws RangeError unless 2 <= d <= max_d.
void check_path_order(int d, int max_d = kDefaultMaxD);

/// First d-path of `g` avoiding `forbidden`, by ascending start vertex and
/// then depth-first order over sorted neighbor lists. The returned
/// orientation always has first vertex < last vertex.
std::optional<DPath> find_d_path(const Graph &g, int d, const VertexSet &forbidden = {},
				 int max_d = kDefaultMaxD);

/// Pairwise vertex-disjoint d-paths together with their union.
struct Packing {
	int d = 0;
	std::vector<DPath> paths;
	VertexSet vertices;
};

struct PackingOutcome {
	enum class Kind { yes, no, packing };

	Kind kind = Kind::yes;
	/// Empty for `yes`; k+1 disjoint paths for `no`; the maximal packing otherwise.
	Packing packing;

	bool decided() const { return kind != Kind::packing; }
};

/// Greedy maximal packing: repeatedly add the first d-path of G \ V(P) until
/// none is left or the packing holds k+1 paths.
PackingOutcome greedy_packing(const Graph &g, int d, int k, int max_d = kDefaultMaxD);

} // namespace dpvc
