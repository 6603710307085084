#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dpvc/graph.hpp"

namespace dpvc {

class ExpansionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A' has a q-expansion Q into B' and no vertex of B' sees anything outside A'.
struct ExpansionCertificate {
	int q = 1;
	VertexSet a_side;
	VertexSet b_side;
	/// (a, b) pairs; each a in a_side appears exactly q times, each b at most once.
	std::vector<std::pair<VertexId, VertexId>> edges;
};

/// Constructive expansion lemma.
///
/// Requires (A, B) to bipartition the vertices of `bipartite`, |B| >= q|A|,
/// no isolated vertex in B and q >= 1; throws ExpansionError naming the
/// violated clause otherwise. Computes a maximum assignment where each
/// A-vertex takes up to q private B-partners; if some B-vertex stays free,
/// A' and B' are the vertices reachable from the free B-vertices by
/// alternating paths, otherwise A' = A and B' = B. The returned A' is never
/// empty.
ExpansionCertificate q_expansion(const Graph &bipartite, const VertexSet &a_side, const VertexSet &b_side, int q);

} // namespace dpvc
