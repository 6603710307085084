#include "dpvc/kernel_general.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dpvc {

std::optional<VertexId> DfsForest::parent(VertexId v) const
{
	if (!contains(v))
		throw GraphError("DfsForest: vertex " + std::to_string(v) + " is not in the forest");
	if (parent_[v] == v)
		return std::nullopt;
	return parent_[v];
}

int DfsForest::depth(VertexId v) const
{
	if (!contains(v))
		throw GraphError("DfsForest: vertex " + std::to_string(v) + " is not in the forest");
	return depth_[v];
}

const std::vector<VertexId> &DfsForest::children(VertexId v) const
{
	if (!contains(v))
		throw GraphError("DfsForest: vertex " + std::to_string(v) + " is not in the forest");
	return children_[v];
}

bool DfsForest::is_ancestor(VertexId u, VertexId v) const
{
	return contains(u) && contains(v) && pre_[u] <= pre_[v] && pre_[v] <= last_[u];
}

VertexSet DfsForest::ancestors(VertexId v) const
{
	VertexSet out;
	for (std::optional<VertexId> u = v; u; u = parent(*u))
		out.insert(*u);
	return out;
}

VertexSet DfsForest::subtree(VertexId v) const
{
	if (!contains(v))
		throw GraphError("DfsForest: vertex " + std::to_string(v) + " is not in the forest");
	return VertexSet(order_.begin() + pre_[v], order_.begin() + last_[v] + 1);
}

int DfsForest::max_depth() const
{
	int out = 0;
	for (VertexId v : order_)
		out = std::max(out, depth_[v]);
	return out;
}

DfsForest build_dfs_forest(const Graph &g, const VertexSet &m)
{
	for (VertexId v : m)
		if (!g.contains(v))
			throw GraphError("build_dfs_forest: vertex " + std::to_string(v) + " is not in the graph");

	const std::size_t n = g.id_bound();
	DfsForest f;
	f.pre_.assign(n, DfsForest::kNone);
	f.last_.assign(n, DfsForest::kNone);
	f.parent_.assign(n, 0);
	f.depth_.assign(n, 0);
	f.children_.assign(n, {});

	auto visit = [&](VertexId v, VertexId parent, int depth) {
		f.pre_[v] = static_cast<std::uint32_t>(f.order_.size());
		f.order_.push_back(v);
		f.parent_[v] = parent;
		f.depth_[v] = depth;
	};

	std::vector<std::pair<VertexId, std::size_t>> stack;
	for (VertexId s : g.vertices()) {
		if (m.count(s) || f.contains(s))
			continue;
		f.roots_.push_back(s);
		visit(s, s, 0);
		stack.emplace_back(s, 0);
		while (!stack.empty()) {
			auto &[v, i] = stack.back();
			const auto &nbrs = g.neighbors(v);
			while (i < nbrs.size() && (m.count(nbrs[i]) || f.contains(nbrs[i])))
				++i;
			if (i == nbrs.size()) {
				f.last_[v] = static_cast<std::uint32_t>(f.order_.size() - 1);
				stack.pop_back();
				continue;
			}
			const VertexId w = nbrs[i];
			const VertexId parent = v;
			f.children_[parent].push_back(w);
			visit(w, parent, f.depth_[parent] + 1);
			stack.emplace_back(w, 0);
		}
	}
	return f;
}

namespace {

void check_request(const VertexSet &h, const Request &req)
{
	if (req.f.empty() || req.f.size() > 2)
		throw std::invalid_argument("request: f must hold one or two vertices");
	if (req.l < 1)
		throw std::invalid_argument("request: l must be at least 1");
	for (VertexId x : req.f)
		if (h.count(x))
			throw std::invalid_argument("request: vertex " + std::to_string(x) + " lies in both f and H");
}

class RequestSearch {
public:
	RequestSearch(const Graph &g, const VertexSet &h, const Request &req, std::size_t limit)
		: g_(g), req_(req), limit_(limit), in_h_(g.id_bound(), 0), used_(g.id_bound(), 0)
	{
		for (VertexId v : h)
			if (g.contains(v))
				in_h_[v] = 1;
		if (req.f.size() == 2)
			target_ = *req.f.rbegin();
	}

	std::vector<DPath> run()
	{
		const VertexId a = *req_.f.begin();
		if (!g_.contains(a) || (target_ && !g_.contains(*target_)))
			return {};
		path_.push_back(a);
		used_[a] = 1;
		extend();
		return std::move(out_);
	}

private:
	void extend()
	{
		const int edges = static_cast<int>(path_.size()) - 1;
		if (edges == req_.l) {
			out_.push_back(DPath{path_});
			return;
		}
		const bool last = edges + 1 == req_.l;
		for (VertexId w : g_.neighbors(path_.back())) {
			if (out_.size() >= limit_)
				return;
			if (used_[w])
				continue;
			const bool ok = target_ && last ? w == *target_ : in_h_[w] != 0;
			if (!ok)
				continue;
			path_.push_back(w);
			used_[w] = 1;
			extend();
			used_[w] = 0;
			path_.pop_back();
		}
	}

	const Graph &g_;
	const Request &req_;
	std::size_t limit_;
	std::optional<VertexId> target_;
	std::vector<char> in_h_;
	std::vector<char> used_;
	std::vector<VertexId> path_;
	std::vector<DPath> out_;
};

} // namespace

std::vector<DPath> enumerate_paths(const Graph &g, const VertexSet &h, const Request &req, std::size_t limit)
{
	check_request(h, req);
	if (limit == 0)
		return {};
	return RequestSearch(g, h, req, limit).run();
}

bool satisfies(const Graph &g, const VertexSet &h, const Request &req)
{
	return !enumerate_paths(g, h, req, 1).empty();
}

RequestAnalysis analyze_requests(const Graph &g, const VertexSet &m, const DfsForest &forest, int d, int k)
{
	std::vector<Request> requests;
	for (int l = 1; l <= d - 1; ++l) {
		for (auto a = m.begin(); a != m.end(); ++a) {
			requests.push_back(Request{{*a}, l});
			for (auto b = std::next(a); b != m.end(); ++b)
				requests.push_back(Request{{*a, *b}, l});
		}
	}
	std::sort(requests.begin(), requests.end());

	const auto needed = static_cast<std::size_t>(k + d + 1);
	const auto &order = forest.preorder();
	RequestAnalysis out;
	for (Request &req : requests) {
		RequestInfo info;
		info.request = std::move(req);
		for (auto it = order.rbegin(); it != order.rend(); ++it) {
			const VertexId v = *it;
			const auto &kids = forest.children(v);
			const bool child_in = std::any_of(kids.begin(), kids.end(),
							  [&](VertexId c) { return info.y.count(c) > 0; });
			if (child_in) {
				info.y.insert(v);
			} else if (satisfies(g, forest.subtree(v), info.request)) {
				info.y.insert(v);
				info.leaves.push_back(v);
			}
		}
		std::sort(info.leaves.begin(), info.leaves.end());
		info.resolved = info.leaves.size() >= needed;
		if (info.resolved)
			++out.resolved_count;
		else
			out.y_union.insert(info.y.begin(), info.y.end());
		out.requests.push_back(std::move(info));
	}
	return out;
}

std::uint64_t request_count_bound(int d, int k)
{
	const std::uint64_t x = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(k);
	return (x * (x - (x > 0 ? 1 : 0)) / 2 + x) * static_cast<std::uint64_t>(d - 1);
}

std::uint64_t mark2_tree_bound(int d)
{
	std::uint64_t p = 1;
	for (int i = 0; i < 2 * d; ++i)
		p *= static_cast<std::uint64_t>(d);
	return 2 * p;
}

void MarkSet::mark_path(const DPath &p)
{
	for (std::size_t i = 0; i < p.vertices.size(); ++i) {
		vertices.insert(p.vertices[i]);
		if (i > 0)
			edges.insert(Edge(p.vertices[i - 1], p.vertices[i]));
	}
}

void MarkSet::mark_induced(const Graph &g, const VertexSet &s)
{
	for (VertexId v : s) {
		if (!g.contains(v))
			continue;
		vertices.insert(v);
		for (VertexId u : g.neighbors(v))
			if (v < u && s.count(u))
				edges.insert(Edge(v, u));
	}
}

namespace {

class Mark2 {
public:
	Mark2(const Graph &g, int d, const Request &sub, const VertexSet &c, MarkSet &out)
		: g_(g), max_w_(static_cast<std::size_t>(2 * d)), sub_(sub), c_(c), out_(out)
	{
	}

	std::uint64_t call(const VertexSet &w)
	{
		if (auto it = memo_.find(w); it != memo_.end())
			return it->second;
		std::uint64_t size = 1;
		if (w.size() <= max_w_) {
			VertexSet h;
			std::set_difference(c_.begin(), c_.end(), w.begin(), w.end(), std::inserter(h, h.end()));
			const auto paths = enumerate_paths(g_, h, sub_, 1);
			if (!paths.empty()) {
				out_.mark_path(paths.front());
				for (VertexId v : paths.front().vertices) {
					if (sub_.f.count(v))
						continue;
					VertexSet next = w;
					next.insert(v);
					size += call(next);
				}
			}
		}
		memo_.emplace(w, size);
		return size;
	}

private:
	const Graph &g_;
	std::size_t max_w_;
	const Request &sub_;
	const VertexSet &c_;
	MarkSet &out_;
	std::map<VertexSet, std::uint64_t> memo_;
};

void record_phase(MarkCounters &c, int phase, const MarkSet &marks)
{
	c.vertices_after[phase] = marks.vertices.size();
	c.edges_after[phase] = marks.edges.size();
}

struct Leftover {
	VertexSet vertices;
	VertexSet y_neighbors; ///< N(C) ∩ 𝒴
};

} // namespace

std::uint64_t mark2(const Graph &g, int d, const Request &sub, const VertexSet &c, MarkSet &out, const VertexSet &w)
{
	return Mark2(g, d, sub, c, out).call(w);
}

MarkResult mark(const Graph &g, int d, int k, const Packing &packing)
{
	check_path_order(d);
	if (d < 3)
		throw RangeError("mark: requires d >= 3");

	MarkResult r;
	r.packing = packing;
	const VertexSet &m = packing.vertices;
	r.forest = build_dfs_forest(g, m);
	if (r.forest.max_depth() > d - 2)
		throw std::logic_error("mark: forest has a root path of " + std::to_string(r.forest.max_depth() + 1) +
				       " vertices; the packing is not maximal");
	r.analysis = analyze_requests(g, m, r.forest, d, k);
	if (r.analysis.requests.size() > request_count_bound(d, k))
		throw std::logic_error("mark: " + std::to_string(r.analysis.requests.size()) +
				       " requests exceed the bound for k = " + std::to_string(k));

	const VertexSet &ys = r.analysis.y_union;
	MarkSet &marks = r.marks;
	MarkCounters &counters = r.counters;

	VertexSet kept = m;
	kept.insert(ys.begin(), ys.end());
	marks.mark_induced(g, kept);
	record_phase(counters, 0, marks);

	const auto needed = static_cast<std::size_t>(k + d + 1);
	for (const RequestInfo &info : r.analysis.requests) {
		if (!info.resolved)
			continue;
		VertexSet used;
		for (std::size_t i = 0; i < needed; ++i) {
			const auto paths = enumerate_paths(g, r.forest.subtree(info.leaves[i]), info.request, 1);
			if (paths.empty())
				throw std::logic_error("mark: leaf " + std::to_string(info.leaves[i]) +
						       " of a resolved request has no witness path");
			for (VertexId v : paths.front().vertices)
				if (!info.request.f.count(v) && !used.insert(v).second)
					throw std::logic_error("mark: witness paths of a resolved request intersect at " +
							       std::to_string(v));
			marks.mark_path(paths.front());
		}
	}
	record_phase(counters, 1, marks);

	std::vector<Leftover> leftovers;
	for (VertexSet &comp : connected_components(remove_vertices(g, kept))) {
		Leftover lo;
		for (VertexId v : comp)
			for (VertexId u : g.neighbors(v))
				if (ys.count(u))
					lo.y_neighbors.insert(u);
		lo.vertices = std::move(comp);
		leftovers.push_back(std::move(lo));
	}

	const auto cap = static_cast<std::size_t>(2 * d);
	const std::uint64_t tree_bound = mark2_tree_bound(d);
	for (VertexId y : ys) {
		const VertexSet anc = r.forest.ancestors(y);
		std::vector<const Leftover *> eligible;
		for (const Leftover &lo : leftovers)
			if (std::includes(anc.begin(), anc.end(), lo.y_neighbors.begin(), lo.y_neighbors.end()))
				eligible.push_back(&lo);

		std::vector<VertexSet> gs;
		for (auto a = anc.begin(); a != anc.end(); ++a) {
			gs.push_back({*a});
			for (auto b = std::next(a); b != anc.end(); ++b)
				gs.push_back({*a, *b});
			for (VertexId x : m)
				gs.push_back({*a, x});
		}

		for (const VertexSet &gset : gs) {
			for (int j = 1; j <= d - 1; ++j) {
				++counters.sub_requests;
				if (eligible.empty())
					continue;
				const Request sub{gset, j};
				std::vector<const Leftover *> qualifying;
				for (const Leftover *lo : eligible)
					if (satisfies(g, lo->vertices, sub))
						qualifying.push_back(lo);
				if (qualifying.size() >= cap) {
					++counters.saturated_sub_requests;
					for (std::size_t i = 0; i < cap; ++i)
						marks.mark_path(enumerate_paths(g, qualifying[i]->vertices, sub, 1).front());
					continue;
				}
				for (const Leftover *lo : qualifying) {
					const std::uint64_t tree = mark2(g, d, sub, lo->vertices, marks);
					if (tree > tree_bound)
						throw std::logic_error("mark: Mark2 call tree of " + std::to_string(tree) +
								       " nodes exceeds " + std::to_string(tree_bound));
					++counters.mark2_roots;
					counters.mark2_calls += tree;
					counters.mark2_max_tree = std::max(counters.mark2_max_tree, tree);
				}
			}
		}
	}
	record_phase(counters, 2, marks);
	return r;
}

GeneralKernelResult kernelize_general(const PvcInstance &input)
{
	check_path_order(input.d);
	if (input.d < 3)
		throw RangeError("kernelize_general: requires 3 <= d <= " + std::to_string(kDefaultMaxD));
	if (input.k < 0)
		throw RangeError("kernelize_general: k must be non-negative");

	GeneralKernelResult result;
	result.instance = input;
	result.instance.verdict = Verdict::undecided;
	PvcInstance &inst = result.instance;
	KernelStats &stats = result.stats;

	const auto outcome = greedy_packing(input.graph, input.d, input.k);
	stats.packing_size = outcome.packing.paths.size();
	if (outcome.kind == PackingOutcome::Kind::yes) {
		inst.verdict = Verdict::yes;
	} else if (outcome.kind == PackingOutcome::Kind::no) {
		inst.verdict = Verdict::no;
	} else {
		MarkResult mr = mark(input.graph, input.d, input.k, outcome.packing);
		Graph &h = inst.graph;
		for (VertexId v : input.graph.vertices())
			if (!mr.marks.vertices.count(v))
				h.delete_vertex(v);
		for (const Edge &e : h.edges())
			if (!mr.marks.edges.count(e))
				h.delete_edge(e.first, e.second);

		const MarkCounters &c = mr.counters;
		const int depth = mr.forest.max_depth();
		auto &mk = stats.marks;
		mk["packing_vertices"] = mr.packing.vertices.size();
		mk["forest_depth"] = static_cast<std::uint64_t>(depth);
		mk["requests"] = mr.analysis.requests.size();
		mk["requests_resolved"] = mr.analysis.resolved_count;
		mk["request_bound"] = request_count_bound(input.d, input.k);
		mk["y_vertices"] = mr.analysis.y_union.size();
		mk["sub_requests"] = c.sub_requests;
		mk["sub_requests_saturated"] = c.saturated_sub_requests;
		mk["mark2_roots"] = c.mark2_roots;
		mk["mark2_calls"] = c.mark2_calls;
		mk["mark2_max_tree"] = c.mark2_max_tree;
		mk["mark2_tree_bound"] = mark2_tree_bound(input.d);
		const char *phase[] = {"phase1", "phase2", "phase3"};
		for (int i = 0; i < 3; ++i) {
			const std::size_t pv = i ? c.vertices_after[i - 1] : 0;
			const std::size_t pe = i ? c.edges_after[i - 1] : 0;
			mk[std::string(phase[i]) + "_vertices"] = c.vertices_after[i] - pv;
			mk[std::string(phase[i]) + "_edges"] = c.edges_after[i] - pe;
		}
		stats.bound_satisfied = depth <= input.d - 1 && mk["requests"] <= mk["request_bound"] &&
					c.mark2_max_tree <= mk["mark2_tree_bound"];
		result.marking = std::move(mr);
	}

	stats.method = "general";
	stats.d = input.d;
	stats.k = input.k;
	stats.k_out = inst.k;
	stats.n_in = input.graph.num_vertices();
	stats.m_in = input.graph.num_edges();
	stats.n_out = inst.graph.num_vertices();
	stats.m_out = inst.graph.num_edges();
	stats.verdict = inst.verdict;
	return result;
}

} // namespace dpvc
