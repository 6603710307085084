#pragma once

// Exhaustive reference implementations for tests. None of these call into
// the code they check.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpvc/expansion.hpp"
#include "dpvc/graph.hpp"

namespace dpvc::testing {

using Rng = std::mt19937_64;

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi);

/// G(n, p) with vertices 0..n-1.
Graph gnp(Rng &rng, std::size_t n, double p);
/// Exactly m edges, uniform; m is clamped to n(n-1)/2.
Graph gnm(Rng &rng, std::size_t n, std::size_t m);

struct Bipartite {
	Graph graph;
	VertexSet a;
	VertexSet b;
};

/// A = 0..na-1, B = na..na+nb-1, each cross pair an edge with probability p.
/// Every B vertex is given at least one edge.
Bipartite random_bipartite(Rng &rng, std::size_t na, std::size_t nb, double p);

/// Hub 0 with degree at least (d+2)(k+1)+1 whose adjacent matchings all
/// have at most k+1 edges: matched pairs a_i - b_i with a_i ~ 0, many
/// neighbors of 0 that see only the a_i, at most one pendant on 0, and
/// random clutter among the b_i.
Graph hub_gadget(Rng &rng, int d, int k);

/// A d-path 0..d-1 with at least k+d+1 small branches hanging off it, so
/// that some path requests have many leaves. At most max_n vertices.
Graph planted_requests(Rng &rng, int d, int k, std::size_t max_n = 16);

/// Every ordered vertex sequence of length d that is a path, found by
/// trying all sequences of distinct vertices.
std::vector<std::vector<VertexId>> all_d_paths(const Graph &g, int d, const VertexSet &forbidden = {});
bool has_d_path(const Graph &g, int d, const VertexSet &forbidden = {});

bool is_matching(const Graph &g, const std::vector<Edge> &edges);
/// Largest matching, over every matching of the graph.
std::size_t brute_max_matching(const Graph &g);
/// Largest matching of G \ v whose edges each touch N(v).
std::size_t brute_max_adjacent_matching(const Graph &g, VertexId v);

/// Empty when the certificate satisfies: exact q-incidence of every A'
/// vertex, q|A'| distinct partners all in B', N(B') ⊆ A'; plus A' ⊆ A,
/// B' ⊆ B, A' non-empty and every pair an edge.
std::optional<std::string> certificate_error(const Graph &bipartite, const VertexSet &a, const VertexSet &b, int q,
					     const ExpansionCertificate &cert);

/// Whether some non-empty A' ⊆ A and B' ⊆ B admit a q-expansion with
/// N(B') ⊆ A', by enumerating A' and checking the Hall condition.
bool expansion_exists(const Graph &bipartite, const VertexSet &a, const VertexSet &b, int q);

/// Minimum vertex cover size by subset enumeration.
std::size_t brute_vertex_cover(const Graph &g);

} // namespace dpvc::testing
