#include "dpvc/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dpvc/path_engine.hpp"

namespace dpvc {

namespace {

bool branch(const Graph &g, int d, int budget, VertexSet &removed)
{
	const auto path = find_d_path(g, d, removed);
	if (!path)
		return true;
	if (budget == 0)
		return false;
	for (VertexId v : path->vertices) {
		removed.insert(v);
		if (branch(g, d, budget - 1, removed))
			return true;
		removed.erase(v);
	}
	return false;
}

using Mask = std::uint32_t;

bool extend_masked(const std::vector<Mask> &adj, Mask alive, Mask used, int u, int remaining)
{
	if (remaining == 0)
		return true;
	Mask next = adj[u] & alive & ~used;
	while (next) {
		const int w = std::countr_zero(next);
		next &= next - 1;
		if (extend_masked(adj, alive, used | (Mask{1} << w), w, remaining - 1))
			return true;
	}
	return false;
}

bool has_path_masked(const std::vector<Mask> &adj, Mask alive, int d)
{
	Mask starts = alive;
	while (starts) {
		const int s = std::countr_zero(starts);
		starts &= starts - 1;
		if (extend_masked(adj, alive, Mask{1} << s, s, d - 1))
			return true;
	}
	return false;
}

bool extend_plain(const Graph &g, std::vector<char> &blocked, VertexId u, int remaining)
{
	if (remaining == 0)
		return true;
	for (VertexId w : g.neighbors(u)) {
		if (blocked[w])
			continue;
		blocked[w] = 1;
		const bool found = extend_plain(g, blocked, w, remaining - 1);
		blocked[w] = 0;
		if (found)
			return true;
	}
	return false;
}

} // namespace

Decision solve_branching(const Graph &g, int d, int k)
{
	check_path_order(d);
	if (k < 0)
		throw RangeError("k must be non-negative");
	Decision out;
	VertexSet removed;
	out.yes = branch(g, d, k, removed);
	if (out.yes)
		out.witness = std::move(removed);
	return out;
}

int min_pvc(const Graph &g, int d)
{
	if (d < 1)
		throw RangeError("min_pvc: d must be positive");
	const auto ids = g.vertices();
	const int n = static_cast<int>(ids.size());
	if (ids.size() > kMinPvcVertexLimit)
		throw std::length_error("min_pvc: " + std::to_string(n) + " vertices exceeds the enumeration limit");

	std::vector<int> index(g.id_bound(), -1);
	for (int i = 0; i < n; ++i)
		index[ids[i]] = i;
	std::vector<Mask> adj(n, 0);
	for (int i = 0; i < n; ++i)
		for (VertexId w : g.neighbors(ids[i]))
			adj[i] |= Mask{1} << index[w];

	const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
	for (int size = 0; size <= n; ++size) {
		if (size == 0) {
			if (!has_path_masked(adj, all, d))
				return 0;
			continue;
		}
		// Gosper's hack over all size-element subsets of n bits.
		Mask s = (Mask{1} << size) - 1;
		while (s <= all) {
			if (!has_path_masked(adj, all & ~s, d))
				return size;
			const Mask c = s & (~s + 1);
			const Mask r = s + c;
			if (r == 0)
				break;
			s = (((r ^ s) >> 2) / c) | r;
		}
	}
	return n;
}

bool is_path_free_after(const Graph &g, int d, const VertexSet &removed)
{
	std::vector<char> blocked(g.id_bound(), 0);
	for (VertexId v : removed)
		if (v < blocked.size())
			blocked[v] = 1;
	for (VertexId s : g.vertices()) {
		if (blocked[s])
			continue;
		blocked[s] = 1;
		const bool found = extend_plain(g, blocked, s, d - 1);
		blocked[s] = 0;
		if (found)
			return false;
	}
	return true;
}

} // namespace dpvc
