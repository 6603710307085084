#pragma once

#include <optional>

#include "dpvc/graph.hpp"

namespace dpvc {

/// Exact answer for (G, k); `witness` is a cover of size <= k when yes.
struct Decision {
	bool yes = false;
	std::optional<VertexSet> witness;
};

/// Plain d-way branching on the vertices of any d-path, budget k.
Decision solve_branching(const Graph &g, int d, int k);

inline constexpr std::size_t kMinPvcVertexLimit = 22;

/// Minimum d-path vertex cover size by enumerating vertex subsets in
/// increasing size. Throws std::length_error above kMinPvcVertexLimit vertices.
int min_pvc(const Graph &g, int d);

/// True when G \ removed has no path on d vertices. Does not use the
/// path engine.
bool is_path_free_after(const Graph &g, int d, const VertexSet &removed);

} // namespace dpvc
