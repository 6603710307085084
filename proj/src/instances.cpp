#include "dpvc/instances.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpvc/path_engine.hpp"

namespace dpvc {

Graph vc_to_dpvc(const Graph &g, int d)
{
	if (d < 3)
		throw RangeError("vc_to_dpvc: d must be at least 3");
	if (g.num_vertices() != g.id_bound())
		throw GraphError("vc_to_dpvc: expects compact ids 0..n-1");

	const auto n = g.num_vertices();
	const auto tail = static_cast<std::size_t>(d - 2);
	Graph out(n + n * tail);
	for (const Edge &e : g.edges())
		out.add_edge(e.first, e.second);
	for (std::size_t v = 0; v < n; ++v) {
		auto prev = static_cast<VertexId>(v);
		for (std::size_t i = 0; i < tail; ++i) {
			const auto next = static_cast<VertexId>(n + v * tail + i);
			out.add_edge(prev, next);
			prev = next;
		}
	}
	return out;
}

Graph random_instance(std::size_t n, std::size_t m, std::uint64_t seed)
{
	const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
	if (m > pairs)
		throw std::invalid_argument("random_instance: " + std::to_string(m) + " edges impossible on " +
					    std::to_string(n) + " vertices");

	std::vector<Edge> all;
	all.reserve(pairs);
	for (VertexId u = 0; u < n; ++u)
		for (VertexId v = u + 1; v < n; ++v)
			all.emplace_back(u, v);

	// Partial Fisher-Yates; modulo draw keeps the stream identical across
	// standard libraries.
	std::mt19937_64 rng(seed);
	for (std::size_t i = 0; i < m; ++i) {
		const std::size_t j = i + static_cast<std::size_t>(rng() % (pairs - i));
		std::swap(all[i], all[j]);
	}

	Graph g(n);
	for (std::size_t i = 0; i < m; ++i)
		g.add_edge(all[i].first, all[i].second);
	return g;
}

Graph path_graph(std::size_t n)
{
	Graph g(n);
	for (VertexId v = 1; v < n; ++v)
		g.add_edge(v - 1, v);
	return g;
}

Graph cycle_graph(std::size_t n)
{
	if (n < 3)
		throw std::invalid_argument("cycle_graph: need at least 3 vertices");
	Graph g = path_graph(n);
	g.add_edge(0, static_cast<VertexId>(n - 1));
	return g;
}

Graph complete_graph(std::size_t n)
{
	Graph g(n);
	for (VertexId u = 0; u < n; ++u)
		for (VertexId v = u + 1; v < n; ++v)
			g.add_edge(u, v);
	return g;
}

Graph star(std::size_t q)
{
	Graph g(q + 1);
	for (VertexId l = 1; l <= q; ++l)
		g.add_edge(0, l);
	return g;
}

Graph triangle() { return complete_graph(3); }

Graph di_star(std::size_t p, std::size_t q)
{
	Graph g(p + q + 2);
	g.add_edge(0, 1);
	for (std::size_t i = 0; i < p; ++i)
		g.add_edge(0, static_cast<VertexId>(2 + i));
	for (std::size_t i = 0; i < q; ++i)
		g.add_edge(1, static_cast<VertexId>(2 + p + i));
	return g;
}

Graph star_with_triangle(std::size_t q)
{
	if (q < 2)
		throw std::invalid_argument("star_with_triangle: need at least 2 leaves");
	Graph g = star(q);
	g.add_edge(1, 2);
	return g;
}

Graph pendant_matching_gadget(std::size_t count)
{
	Graph g(2 * count + 1);
	for (std::size_t i = 1; i <= count; ++i) {
		const auto a = static_cast<VertexId>(2 * i - 1);
		g.add_edge(0, a);
		g.add_edge(a, a + 1);
	}
	return g;
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
	const VertexId shift = a.id_bound();
	Graph out(shift + b.id_bound());
	for (VertexId v = 0; v < shift; ++v)
		if (!a.contains(v))
			out.delete_vertex(v);
	for (VertexId v = 0; v < b.id_bound(); ++v)
		if (!b.contains(v))
			out.delete_vertex(shift + v);
	for (const Edge &e : a.edges())
		out.add_edge(e.first, e.second);
	for (const Edge &e : b.edges())
		out.add_edge(shift + e.first, shift + e.second);
	return out;
}

} // namespace dpvc
