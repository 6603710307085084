#pragma once

#include <utility>
#include <vector>

#include "dpvc/graph.hpp"

namespace dpvc {

struct Matching {
	std::vector<Edge> edges;
	VertexSet covered;

	std::size_t size() const { return edges.size(); }
};

/// Maximum-cardinality matching of a general graph (Edmonds, blossom
/// contraction). Vertices are scanned in ascending id, so the result is a
/// fixed function of the input.
Matching maximum_matching(const Graph &g);

/// Graph whose matchings are exactly the matchings of G \ v with every edge
/// touching N(v): G[A u B] minus the edges inside B, where A = N(v) and
/// B = N(A) \ (A u {v}).
Graph adjacent_matching_host(const Graph &g, VertexId v);

/// A matching in G \ v whose edges each have an endpoint in N(v).
struct AdjacentMatching {
	VertexId center = 0;
	Matching matching;
	/// (a, b) per matching edge with a in N(v); the smaller id is `a` when
	/// both endpoints are neighbors of the center.
	std::vector<std::pair<VertexId, VertexId>> oriented;
};

AdjacentMatching max_adjacent_matching(const Graph &g, VertexId v);

} // namespace dpvc
