#include "dpvc/graph.hpp"

#include <algorithm>

namespace dpvc {

Graph::Graph(std::size_t n) : alive_(n, 1), adjacency_(n), num_vertices_(n) {}

VertexId Graph::add_vertex()
{
	alive_.push_back(1);
	adjacency_.emplace_back();
	++num_vertices_;
	return static_cast<VertexId>(alive_.size() - 1);
}

void Graph::require_live(VertexId v, const char *what) const
{
	if (!contains(v))
		throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " is not in the graph");
}

void Graph::add_edge(VertexId u, VertexId v)
{
	if (u == v)
		throw GraphError("add_edge: self-loop on vertex " + std::to_string(u));
	require_live(u, "add_edge");
	require_live(v, "add_edge");

	auto &nu = adjacency_[u];
	auto it = std::lower_bound(nu.begin(), nu.end(), v);
	if (it != nu.end() && *it == v)
		return;
	nu.insert(it, v);
	auto &nv = adjacency_[v];
	nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
	++num_edges_;
}

bool Graph::has_edge(VertexId u, VertexId v) const
{
	if (!contains(u) || !contains(v))
		return false;
	const auto &nu = adjacency_[u];
	return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<VertexId> &Graph::neighbors(VertexId v) const
{
	require_live(v, "neighbors");
	return adjacency_[v];
}

void Graph::delete_edge(VertexId u, VertexId v)
{
	if (!has_edge(u, v))
		throw GraphError("delete_edge: edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not in the graph");
	auto &nu = adjacency_[u];
	nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
	auto &nv = adjacency_[v];
	nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
	--num_edges_;
}

void Graph::delete_vertex(VertexId v)
{
	require_live(v, "delete_vertex");
	for (VertexId u : adjacency_[v]) {
		auto &nu = adjacency_[u];
		nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
	}
	num_edges_ -= adjacency_[v].size();
	adjacency_[v].clear();
	adjacency_[v].shrink_to_fit();
	alive_[v] = 0;
	--num_vertices_;
}

std::vector<VertexId> Graph::vertices() const
{
	std::vector<VertexId> out;
	out.reserve(num_vertices_);
	for (VertexId v = 0; v < alive_.size(); ++v)
		if (alive_[v])
			out.push_back(v);
	return out;
}

std::vector<Edge> Graph::edges() const
{
	std::vector<Edge> out;
	out.reserve(num_edges_);
	for (VertexId u = 0; u < alive_.size(); ++u)
		for (VertexId v : adjacency_[u])
			if (u < v)
				out.emplace_back(u, v);
	return out;
}

bool Graph::operator==(const Graph &other) const
{
	if (num_vertices_ != other.num_vertices_ || num_edges_ != other.num_edges_)
		return false;
	const auto mine = vertices();
	if (mine != other.vertices())
		return false;
	for (VertexId v : mine)
		if (adjacency_[v] != other.adjacency_[v])
			return false;
	return true;
}

std::vector<VertexSet> connected_components(const Graph &g)
{
	std::vector<VertexSet> out;
	std::vector<char> seen(g.id_bound(), 0);
	std::vector<VertexId> stack;
	for (VertexId s : g.vertices()) {
		if (seen[s])
			continue;
		VertexSet comp;
		seen[s] = 1;
		stack.push_back(s);
		while (!stack.empty()) {
			VertexId u = stack.back();
			stack.pop_back();
			comp.insert(u);
			for (VertexId w : g.neighbors(u)) {
				if (!seen[w]) {
					seen[w] = 1;
					stack.push_back(w);
				}
			}
		}
		out.push_back(std::move(comp));
	}
	return out;
}

Graph induced_subgraph(const Graph &g, const VertexSet &keep)
{
	for (VertexId v : keep)
		if (!g.contains(v))
			throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " is not in the graph");
	Graph h = g;
	for (VertexId v : g.vertices())
		if (!keep.count(v))
			h.delete_vertex(v);
	return h;
}

Graph remove_vertices(const Graph &g, const VertexSet &drop)
{
	Graph h = g;
	for (VertexId v : drop)
		if (h.contains(v))
			h.delete_vertex(v);
	return h;
}

bool is_path_in(const Graph &g, const std::vector<VertexId> &path)
{
	VertexSet seen;
	for (std::size_t i = 0; i < path.size(); ++i) {
		if (!g.contains(path[i]) || !seen.insert(path[i]).second)
			return false;
		if (i > 0 && !g.has_edge(path[i - 1], path[i]))
			return false;
	}
	return true;
}

} // namespace dpvc
