#include "dpvc/matching.hpp"

#include <algorithm>
#include <queue>

namespace dpvc {

namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm on a compact 0..n-1 relabelling; O(V^3).
class Blossom {
public:
	explicit Blossom(std::vector<std::vector<int>> adj)
		: n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, kNone), parent_(n_),
		  base_(n_), used_(n_), in_blossom_(n_)
	{
	}

	const std::vector<int> &solve()
	{
		for (int v = 0; v < n_; ++v) {
			if (match_[v] != kNone)
				continue;
			int u = find_augmenting_path(v);
			while (u != kNone) {
				const int pv = parent_[u];
				const int next = match_[pv];
				match_[u] = pv;
				match_[pv] = u;
				u = next;
			}
		}
		return match_;
	}

private:
	int lowest_common_base(int a, int b) const
	{
		std::vector<char> seen(n_, 0);
		for (;;) {
			a = base_[a];
			seen[a] = 1;
			if (match_[a] == kNone)
				break;
			a = parent_[match_[a]];
		}
		for (;;) {
			b = base_[b];
			if (seen[b])
				return b;
			b = parent_[match_[b]];
		}
	}

	void mark_path(int v, int b, int child)
	{
		while (base_[v] != b) {
			in_blossom_[base_[v]] = 1;
			in_blossom_[base_[match_[v]]] = 1;
			parent_[v] = child;
			child = match_[v];
			v = parent_[match_[v]];
		}
	}

	int find_augmenting_path(int root)
	{
		std::fill(used_.begin(), used_.end(), 0);
		std::fill(parent_.begin(), parent_.end(), kNone);
		for (int i = 0; i < n_; ++i)
			base_[i] = i;

		std::queue<int> q;
		used_[root] = 1;
		q.push(root);
		while (!q.empty()) {
			const int v = q.front();
			q.pop();
			for (int to : adj_[v]) {
				if (base_[v] == base_[to] || match_[v] == to)
					continue;
				if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
					const int b = lowest_common_base(v, to);
					std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
					mark_path(v, b, to);
					mark_path(to, b, v);
					for (int i = 0; i < n_; ++i) {
						if (!in_blossom_[base_[i]])
							continue;
						base_[i] = b;
						if (!used_[i]) {
							used_[i] = 1;
							q.push(i);
						}
					}
				} else if (parent_[to] == kNone) {
					parent_[to] = v;
					if (match_[to] == kNone)
						return to;
					used_[match_[to]] = 1;
					q.push(match_[to]);
				}
			}
		}
		return kNone;
	}

	int n_;
	std::vector<std::vector<int>> adj_;
	std::vector<int> match_;
	std::vector<int> parent_;
	std::vector<int> base_;
	std::vector<char> used_;
	std::vector<char> in_blossom_;
};

} // namespace

Matching maximum_matching(const Graph &g)
{
	const auto ids = g.vertices();
	std::vector<int> index(g.id_bound(), kNone);
	for (std::size_t i = 0; i < ids.size(); ++i)
		index[ids[i]] = static_cast<int>(i);

	std::vector<std::vector<int>> adj(ids.size());
	for (std::size_t i = 0; i < ids.size(); ++i)
		for (VertexId w : g.neighbors(ids[i]))
			adj[i].push_back(index[w]);

	const auto mate = Blossom(std::move(adj)).solve();

	Matching out;
	for (std::size_t i = 0; i < ids.size(); ++i) {
		if (mate[i] != kNone && static_cast<int>(i) < mate[i]) {
			out.edges.emplace_back(ids[i], ids[mate[i]]);
			out.covered.insert(ids[i]);
			out.covered.insert(ids[mate[i]]);
		}
	}
	return out;
}

Graph adjacent_matching_host(const Graph &g, VertexId v)
{
	const auto &nbrs = g.neighbors(v);
	const VertexSet a_side(nbrs.begin(), nbrs.end());
	VertexSet keep = a_side;
	for (VertexId a : a_side)
		for (VertexId b : g.neighbors(a))
			if (b != v)
				keep.insert(b);

	Graph host = induced_subgraph(g, keep);
	for (const Edge &e : host.edges())
		if (!a_side.count(e.first) && !a_side.count(e.second))
			host.delete_edge(e.first, e.second);
	return host;
}

AdjacentMatching max_adjacent_matching(const Graph &g, VertexId v)
{
	AdjacentMatching out;
	out.center = v;
	out.matching = maximum_matching(adjacent_matching_host(g, v));
	for (const Edge &e : out.matching.edges) {
		// Edge stores first < second, so preferring `first` picks the smaller id.
		if (g.has_edge(v, e.first))
			out.oriented.emplace_back(e.first, e.second);
		else
			out.oriented.emplace_back(e.second, e.first);
	}
	return out;
}

} // namespace dpvc
