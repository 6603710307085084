#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dpvc/graph.hpp"
#include "dpvc/instance.hpp"
#include "dpvc/path_engine.hpp"
#include "dpvc/stats.hpp"

// Marking kernel for d-PVC, 3 <= d <= 8.
//
// With M the vertex set of a maximal greedy packing, G \ M has no d-path,
// so a DFS forest of G \ M has at most d-1 vertices on any root path and
// every non-tree edge joins an ancestor to a descendant. Requests (f, l)
// ask for a path of length l whose ends in M are exactly f. The kernel
// keeps G[M ∪ 𝒴], a few witness paths per resolved request, and bounded
// witness families for every sub-request, then drops everything else.

namespace dpvc {

class DfsForest {
public:
	bool contains(VertexId v) const { return v < pre_.size() && pre_[v] != kNone; }
	std::optional<VertexId> parent(VertexId v) const;
	int depth(VertexId v) const;
	const std::vector<VertexId> &children(VertexId v) const;

	/// True when u lies on the root path of v (u == v included).
	bool is_ancestor(VertexId u, VertexId v) const;
	/// anc(v): v and every vertex above it.
	VertexSet ancestors(VertexId v) const;
	/// sub(v): v and every vertex below it.
	VertexSet subtree(VertexId v) const;

	const std::vector<VertexId> &roots() const { return roots_; }
	/// All forest vertices, children after parents.
	const std::vector<VertexId> &preorder() const { return order_; }
	int max_depth() const;

private:
	friend DfsForest build_dfs_forest(const Graph &g, const VertexSet &m);
	static constexpr std::uint32_t kNone = ~std::uint32_t{0};

	std::vector<std::uint32_t> pre_;
	std::vector<std::uint32_t> last_; ///< largest preorder index in sub(v)
	std::vector<VertexId> parent_;
	std::vector<int> depth_;
	std::vector<std::vector<VertexId>> children_;
	std::vector<VertexId> roots_;
	std::vector<VertexId> order_;
};

/// DFS forest of G \ M. Roots are the minimum id of each component and
/// children are explored in ascending id order.
DfsForest build_dfs_forest(const Graph &g, const VertexSet &m);

struct Request {
	VertexSet f; ///< one or two endpoints
	int l = 1;   ///< path length in edges

	auto operator<=>(const Request &) const = default;
};

/// Paths of length l in G[H ∪ f] whose endpoints include every vertex of f,
/// in backtracking order from the smaller vertex of f. At most `limit` are
/// returned. Requires f ∩ H = ∅, |f| in {1, 2}, l >= 1.
std::vector<DPath> enumerate_paths(const Graph &g, const VertexSet &h, const Request &req, std::size_t limit);
bool satisfies(const Graph &g, const VertexSet &h, const Request &req);

struct RequestInfo {
	Request request;
	VertexSet y;                 ///< forest vertices whose subtree satisfies the request
	std::vector<VertexId> leaves; ///< leaves of F[y], ascending
	bool resolved = false;        ///< at least k+d+1 leaves
};

struct RequestAnalysis {
	std::vector<RequestInfo> requests;
	VertexSet y_union; ///< 𝒴, over unresolved requests only
	std::size_t resolved_count = 0;
};

/// Every request over M with 1 <= l <= d-1, and its set Y.
RequestAnalysis analyze_requests(const Graph &g, const VertexSet &m, const DfsForest &forest, int d, int k);

/// (C(x,2) + x)(d-1) with x = dk.
std::uint64_t request_count_bound(int d, int k);
/// 2 d^{2d}.
std::uint64_t mark2_tree_bound(int d);

struct MarkSet {
	VertexSet vertices;
	std::set<Edge> edges;

	void mark_path(const DPath &p);
	void mark_induced(const Graph &g, const VertexSet &s);
};

struct MarkCounters {
	std::uint64_t sub_requests = 0;
	std::uint64_t mark2_roots = 0;
	std::uint64_t mark2_calls = 0;    ///< logical call-tree nodes over all roots
	std::uint64_t mark2_max_tree = 0; ///< largest single call tree
	std::uint64_t saturated_sub_requests = 0; ///< q' >= 2d
	std::size_t vertices_after[3] = {0, 0, 0};
	std::size_t edges_after[3] = {0, 0, 0};
};

struct MarkResult {
	Packing packing;
	DfsForest forest;
	RequestAnalysis analysis;
	MarkSet marks;
	MarkCounters counters;
};

/// Bounded marking for one sub-request inside component C: mark a path of
/// C \ W, then recurse on W ∪ {v} for its non-g vertices, while |W| <= 2d.
/// Returns the size of the call tree rooted here. Repeated W sets are
/// visited once; their subtree sizes are still counted.
std::uint64_t mark2(const Graph &g, int d, const Request &sub, const VertexSet &c, MarkSet &out,
		    const VertexSet &w = {});

/// Runs the marking procedure on a graph whose greedy packing is `packing`.
/// Throws std::logic_error if a size invariant fails.
MarkResult mark(const Graph &g, int d, int k, const Packing &packing);

struct GeneralKernelResult {
	PvcInstance instance;
	KernelStats stats;
	std::optional<MarkResult> marking; ///< absent when the packing decided
};

/// Requires 3 <= d <= 8 and k >= 0. Vertex ids are preserved.
GeneralKernelResult kernelize_general(const PvcInstance &input);

} // namespace dpvc
