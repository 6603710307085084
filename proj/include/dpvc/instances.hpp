#pragma once

#include <cstdint>

#include "dpvc/graph.hpp"

namespace dpvc {

/// Vertex Cover -> d-PVC transformation: every vertex v gets a private
/// pendant path v - v1 - ... - v(d-2). Original vertices keep their ids;
/// the pendant of vertex i occupies ids n + i(d-2) .. n + (i+1)(d-2) - 1.
/// Requires d >= 3 and a graph whose ids are 0..n-1.
Graph vc_to_dpvc(const Graph &g, int d);

/// Uniform simple graph on n vertices with exactly m edges.
Graph random_instance(std::size_t n, std::size_t m, std::uint64_t seed);

// Gadgets. Vertex 0 is the (first) center where there is one.

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// q-star: center 0, leaves 1..q.
Graph star(std::size_t q);
Graph triangle();
/// Centers 0 and 1 joined by an edge; p leaves on 0, then q leaves on 1.
Graph di_star(std::size_t p, std::size_t q);
/// q-star (q >= 2) with an extra edge between leaves 1 and 2.
Graph star_with_triangle(std::size_t q);
/// Center 0 adjacent to a_i = 2i-1, each with a private pendant b_i = 2i.
Graph pendant_matching_gadget(std::size_t count);

/// Disjoint union; ids of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace dpvc
