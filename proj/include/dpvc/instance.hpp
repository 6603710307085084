#pragma once

#include <string_view>

#include "dpvc/graph.hpp"

namespace dpvc {

enum class Verdict { undecided, yes, no };

std::string_view to_string(Verdict v);

/// A d-PVC instance: can at most k vertex deletions make `graph` P_d-free?
struct PvcInstance {
	Graph graph;
	int d = 4;
	int k = 0;
	Verdict verdict = Verdict::undecided;
};

/// Smallest instance with the given answer: the empty graph for yes,
/// k+1 disjoint d-paths for no.
Graph decided_graph(Verdict verdict, int d, int k);

/// The instance to hand on: unchanged if undecided, otherwise the
/// decided_graph() for its verdict with the same d and k.
PvcInstance as_emitted(const PvcInstance &inst);

} // namespace dpvc
