#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpvc {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

/// Undirected edge, always stored with first < second.
struct Edge {
	VertexId first = 0;
	VertexId second = 0;

	Edge() = default;
	Edge(VertexId u, VertexId v) : first(u < v ? u : v), second(u < v ? v : u) {}

	auto operator<=>(const Edge &) const = default;
};

class GraphError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph with stable vertex ids.
///
/// Ids are issued in increasing order and never reused after deletion, so a
/// vertex keeps its name through any sequence of reductions. Neighbor lists
/// are kept sorted; every iteration over vertices or neighbors is in
/// ascending id order.
class Graph {
public:
	Graph() = default;

	/// Graph with vertices 0..n-1 and no edges.
	explicit Graph(std::size_t n);

	VertexId add_vertex();
	void add_edge(VertexId u, VertexId v);
	void delete_vertex(VertexId v);
	void delete_edge(VertexId u, VertexId v);

	bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }
	bool has_edge(VertexId u, VertexId v) const;

	/// Sorted neighbor list. Throws for a dead vertex.
	const std::vector<VertexId> &neighbors(VertexId v) const;
	std::size_t degree(VertexId v) const { return neighbors(v).size(); }

	std::size_t num_vertices() const { return num_vertices_; }
	std::size_t num_edges() const { return num_edges_; }

	/// One past the largest id ever issued; ids of live vertices are below it.
	VertexId id_bound() const { return static_cast<VertexId>(alive_.size()); }

	std::vector<VertexId> vertices() const;
	std::vector<Edge> edges() const;

	bool operator==(const Graph &other) const;

private:
	void require_live(VertexId v, const char *what) const;

	std::vector<char> alive_;
	std::vector<std::vector<VertexId>> adjacency_;
	std::size_t num_vertices_ = 0;
	std::size_t num_edges_ = 0;
};

/// An ordered list of distinct vertices, consecutive ones adjacent.
struct DPath {
	std::vector<VertexId> vertices;

	std::size_t size() const { return vertices.size(); }
	bool operator==(const DPath &) const = default;
};

/// Connected components ordered by their minimum vertex id.
std::vector<VertexSet> connected_components(const Graph &g);

/// G[X] with the original ids preserved.
Graph induced_subgraph(const Graph &g, const VertexSet &keep);

/// G \ X, i.e. G[V \ X].
Graph remove_vertices(const Graph &g, const VertexSet &drop);

/// True when `path` is a simple path of `g` (distinct, consecutive adjacent).
bool is_path_in(const Graph &g, const std::vector<VertexId> &path);

} // namespace dpvc
