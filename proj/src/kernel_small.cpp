#include "dpvc/kernel_small.hpp"

#include <algorithm>
#include <string>

#include "dpvc/expansion.hpp"

namespace dpvc {

namespace {

void require_small_d(int d, const char *what)
{
	if (d != 4 && d != 5)
		throw RangeError(std::string(what) + ": requires d in {4, 5}, got " + std::to_string(d));
}

std::size_t high_degree_threshold(int d, int k)
{
	return static_cast<std::size_t>((d + 2) * (k + 1) + 1);
}

bool dominates_edge(const Graph &g, VertexId x, VertexId a, VertexId b)
{
	return g.has_edge(x, a) && g.has_edge(x, b);
}

std::size_t unattached_limit(ComponentShape shape)
{
	switch (shape) {
	case ComponentShape::star:
		return 2;
	case ComponentShape::triangle:
		return 3;
	case ComponentShape::small:
	case ComponentShape::star_with_triangle:
	case ComponentShape::di_star:
		return 4;
	case ComponentShape::other:
		break;
	}
	return 0;
}

} // namespace

std::optional<ReductionEvent> rule_component(PvcInstance &inst)
{
	for (const VertexSet &comp : connected_components(inst.graph)) {
		if (comp.size() >= static_cast<std::size_t>(inst.d) &&
		    find_d_path(induced_subgraph(inst.graph, comp), inst.d))
			continue;
		for (VertexId v : comp)
			inst.graph.delete_vertex(v);
		return events::ComponentRemoved{comp};
	}
	return std::nullopt;
}

std::optional<ReductionEvent> rule_degree_one(PvcInstance &inst)
{
	Graph &g = inst.graph;
	for (VertexId v : g.vertices()) {
		std::vector<VertexId> pendants;
		for (VertexId x : g.neighbors(v))
			if (g.degree(x) == 1)
				pendants.push_back(x);
		if (pendants.size() < 2)
			continue;
		const VertexId x = pendants.back();
		g.delete_vertex(x);
		return events::DegreeOneTwinDeleted{x, v};
	}
	return std::nullopt;
}

std::optional<ReductionEvent> rule_matching(PvcInstance &inst)
{
	require_small_d(inst.d, "rule_matching");
	Graph &g = inst.graph;
	const auto need = static_cast<std::size_t>(inst.k) + 2;
	for (VertexId v : g.vertices()) {
		if (g.degree(v) < need)
			continue;
		const auto am = max_adjacent_matching(g, v);
		if (am.matching.size() < need)
			continue;
		g.delete_vertex(v);
		if (inst.k == 0)
			inst.verdict = Verdict::no;
		else
			--inst.k;
		return events::HighDegreeVertexDeleted{v, am.matching.size()};
	}
	return std::nullopt;
}

XPartition classify_neighbors(const PvcInstance &inst, VertexId v, const AdjacentMatching &am)
{
	const Graph &g = inst.graph;
	const VertexSet &covered = am.matching.covered;
	XPartition part;

	VertexSet x_all;
	for (VertexId x : g.neighbors(v))
		if (!covered.count(x))
			x_all.insert(x);

	for (VertexId x : x_all) {
		for (VertexId u : g.neighbors(x))
			if (u != v && !covered.count(u))
				throw ObservationViolation("neighbor " + std::to_string(x) + " of " + std::to_string(v) +
							   " has unmatched neighbor " + std::to_string(u) +
							   "; matching is not maximum");
		if (g.degree(x) == 1) {
			part.x0.insert(x);
			continue;
		}
		const bool doubled = std::any_of(am.matching.edges.begin(), am.matching.edges.end(),
						 [&](const Edge &e) { return dominates_edge(g, x, e.first, e.second); });
		(doubled ? part.x2 : part.x1).insert(x);
	}

	for (const Edge &e : am.matching.edges) {
		for (VertexId x : x_all) {
			if (!g.has_edge(x, e.first))
				continue;
			for (VertexId y : x_all)
				if (y != x && g.has_edge(y, e.second))
					throw ObservationViolation("vertices " + std::to_string(x) + " and " +
								   std::to_string(y) + " see opposite ends of matched edge {" +
								   std::to_string(e.first) + "," +
								   std::to_string(e.second) + "}");
		}
	}

	for (VertexId x : part.x1)
		for (VertexId u : g.neighbors(x))
			if (u != v)
				part.m1.insert(u);
	return part;
}

std::optional<ReductionEvent> rule_expansion(PvcInstance &inst)
{
	require_small_d(inst.d, "rule_expansion");
	Graph &g = inst.graph;
	const int d = inst.d;
	const int k = inst.k;
	const std::size_t threshold = high_degree_threshold(d, k);

	for (VertexId v : g.vertices()) {
		if (g.degree(v) < threshold)
			continue;
		const auto am = max_adjacent_matching(g, v);
		if (am.matching.size() >= static_cast<std::size_t>(k) + 2)
			throw std::logic_error("rule_expansion: instance not reduced under the matching rule");
		const auto part = classify_neighbors(inst, v, am);
		if (part.x0.size() > 1)
			throw std::logic_error("rule_expansion: instance not reduced under the degree-one rule");
		if (part.x1.empty() || part.x1.size() < static_cast<std::size_t>(d - 1) * part.m1.size())
			throw std::logic_error("rule_expansion: |X1| < (d-1)|M1| at vertex " + std::to_string(v));

		VertexSet sides = part.m1;
		sides.insert(part.x1.begin(), part.x1.end());
		Graph bipartite = induced_subgraph(g, sides);
		for (const Edge &e : bipartite.edges())
			if (part.m1.count(e.first) == part.m1.count(e.second))
				bipartite.delete_edge(e.first, e.second);

		const auto cert = q_expansion(bipartite, part.m1, part.x1, d - 1);
		const VertexId x = *cert.b_side.begin();
		g.delete_edge(x, v);
		return events::ExpansionEdgeDeleted{x, v};
	}
	return std::nullopt;
}

PvcInstance replay(PvcInstance inst, const ReductionTrace &trace)
{
	for (const auto &event : trace) {
		std::visit(
			[&](const auto &e) {
				using T = std::decay_t<decltype(e)>;
				if constexpr (std::is_same_v<T, events::ComponentRemoved>) {
					for (VertexId v : e.vertices)
						inst.graph.delete_vertex(v);
				} else if constexpr (std::is_same_v<T, events::DegreeOneTwinDeleted>) {
					inst.graph.delete_vertex(e.x);
				} else if constexpr (std::is_same_v<T, events::HighDegreeVertexDeleted>) {
					inst.graph.delete_vertex(e.v);
					if (inst.k == 0)
						inst.verdict = Verdict::no;
				} else if constexpr (std::is_same_v<T, events::ExpansionEdgeDeleted>) {
					inst.graph.delete_edge(e.x, e.v);
				} else {
					--inst.k;
				}
			},
			event);
	}
	return inst;
}

std::string_view to_string(ComponentShape shape)
{
	switch (shape) {
	case ComponentShape::star:
		return "star";
	case ComponentShape::triangle:
		return "triangle";
	case ComponentShape::small:
		return "small";
	case ComponentShape::star_with_triangle:
		return "star_with_triangle";
	case ComponentShape::di_star:
		return "di_star";
	case ComponentShape::other:
		break;
	}
	return "other";
}

namespace {

bool connected(const Graph &g) { return connected_components(g).size() == 1; }

bool has_universal_vertex(const Graph &g)
{
	const auto n = g.num_vertices();
	for (VertexId v : g.vertices())
		if (g.degree(v) + 1 == n)
			return true;
	return false;
}

} // namespace

bool is_star(const Graph &g)
{
	const auto n = g.num_vertices();
	return n >= 1 && g.num_edges() + 1 == n && has_universal_vertex(g);
}

bool is_triangle(const Graph &g) { return g.num_vertices() == 3 && g.num_edges() == 3; }

bool is_star_with_triangle(const Graph &g)
{
	const auto n = g.num_vertices();
	return n >= 3 && g.num_edges() == n && has_universal_vertex(g);
}

bool is_di_star(const Graph &g)
{
	const auto n = g.num_vertices();
	if (n < 2 || g.num_edges() + 1 != n || !connected(g))
		return false;
	// A tree whose internal vertices are at most two; in a tree those are adjacent.
	std::size_t internal = 0;
	for (VertexId v : g.vertices())
		if (g.degree(v) > 1)
			++internal;
	return internal <= 2;
}

ComponentShape classify_component(const Graph &component, int d)
{
	require_small_d(d, "classify_component");
	if (component.num_vertices() == 0 || !connected(component))
		return ComponentShape::other;
	if (d == 4) {
		if (is_triangle(component))
			return ComponentShape::triangle;
		if (is_star(component))
			return ComponentShape::star;
		return ComponentShape::other;
	}
	if (component.num_vertices() <= 4)
		return ComponentShape::small;
	if (is_star_with_triangle(component))
		return ComponentShape::star_with_triangle;
	if (is_di_star(component))
		return ComponentShape::di_star;
	return ComponentShape::other;
}

std::int64_t small_kernel_edge_bound(int d, int k)
{
	require_small_d(d, "small_kernel_edge_bound");
	const std::int64_t c = d == 4 ? 96 : 245;
	const std::int64_t kk = k;
	return c * kk * kk + c * kk;
}

SizeAudit audit_kernel_size(const PvcInstance &reduced, const Packing &packing)
{
	const Graph &g = reduced.graph;
	const VertexSet &m = packing.vertices;
	SizeAudit audit;

	for (VertexId v : g.vertices())
		audit.max_degree = std::max(audit.max_degree, g.degree(v));
	audit.degree_bound = static_cast<std::size_t>((reduced.d + 2) * (reduced.k + 1));

	for (const Edge &e : g.edges()) {
		if (m.count(e.first) || m.count(e.second))
			++audit.edges_touching_packing;
		else
			++audit.edges_outside_packing;
	}

	for (const VertexSet &comp : connected_components(remove_vertices(g, m))) {
		const auto shape = classify_component(induced_subgraph(g, comp), reduced.d);
		if (shape == ComponentShape::other)
			throw AuditError("component containing vertex " + std::to_string(*comp.begin()) +
					 " has no permitted shape for d = " + std::to_string(reduced.d));
		std::size_t unattached = 0;
		for (VertexId v : comp) {
			const auto &nbrs = g.neighbors(v);
			if (std::none_of(nbrs.begin(), nbrs.end(), [&](VertexId u) { return m.count(u) > 0; }))
				++unattached;
		}
		if (unattached == comp.size())
			throw AuditError("component containing vertex " + std::to_string(*comp.begin()) +
					 " is not attached to the packing");
		if (unattached > unattached_limit(shape))
			throw AuditError("component containing vertex " + std::to_string(*comp.begin()) + " (" +
					 std::string(to_string(shape)) + ") has " + std::to_string(unattached) +
					 " vertices without a packing neighbor");
		++audit.shapes[shape];
	}

	audit.edge_bound = small_kernel_edge_bound(reduced.d, reduced.k);
	audit.degree_bound_satisfied = audit.max_degree <= audit.degree_bound;
	audit.edge_bound_satisfied = static_cast<std::int64_t>(g.num_edges()) <= audit.edge_bound;
	return audit;
}

SmallKernelResult kernelize_small(const PvcInstance &input)
{
	require_small_d(input.d, "kernelize_small");
	if (input.k < 0)
		throw RangeError("kernelize_small: k must be non-negative");

	SmallKernelResult result;
	result.instance = input;
	result.instance.verdict = Verdict::undecided;
	PvcInstance &inst = result.instance;
	auto &firings = result.stats.rule_firings;
	for (const char *name : {"component", "degree_one", "matching", "expansion"})
		firings[name] = 0;

	while (inst.verdict == Verdict::undecided) {
		if (auto e = rule_component(inst)) {
			++firings["component"];
			result.trace.push_back(std::move(*e));
		} else if (auto e = rule_degree_one(inst)) {
			++firings["degree_one"];
			result.trace.push_back(std::move(*e));
		} else if (auto e = rule_matching(inst)) {
			++firings["matching"];
			result.trace.push_back(std::move(*e));
			if (inst.verdict == Verdict::undecided)
				result.trace.push_back(events::KDecremented{});
		} else if (auto e = rule_expansion(inst)) {
			++firings["expansion"];
			result.trace.push_back(std::move(*e));
		} else {
			break;
		}
	}

	auto &stats = result.stats;
	if (inst.verdict == Verdict::undecided) {
		if (inst.graph.num_vertices() == 0) {
			inst.verdict = Verdict::yes;
		} else {
			const auto outcome = greedy_packing(inst.graph, inst.d, inst.k);
			stats.packing_size = outcome.packing.paths.size();
			if (outcome.kind == PackingOutcome::Kind::yes)
				inst.verdict = Verdict::yes;
			else if (outcome.kind == PackingOutcome::Kind::no)
				inst.verdict = Verdict::no;
			else
				result.audit = audit_kernel_size(inst, outcome.packing);
		}
	}
	if (result.audit && !(result.audit->degree_bound_satisfied && result.audit->edge_bound_satisfied)) {
		throw std::logic_error("kernelize_small: reduced instance has maximum degree " +
				       std::to_string(result.audit->max_degree) + " and " +
				       std::to_string(inst.graph.num_edges()) + " edges, over the bounds " +
				       std::to_string(result.audit->degree_bound) + " and " +
				       std::to_string(result.audit->edge_bound));
	}

	stats.method = "small";
	stats.d = input.d;
	stats.k = input.k;
	stats.k_out = inst.k;
	stats.n_in = input.graph.num_vertices();
	stats.m_in = input.graph.num_edges();
	stats.n_out = inst.graph.num_vertices();
	stats.m_out = inst.graph.num_edges();
	stats.verdict = inst.verdict;
	if (result.audit) {
		const auto &a = *result.audit;
		stats.bound = a.edge_bound;
		stats.bound_satisfied = a.edge_bound_satisfied && a.degree_bound_satisfied;
		stats.audit["max_degree"] = a.max_degree;
		stats.audit["degree_bound"] = a.degree_bound;
		stats.audit["edges_touching_packing"] = a.edges_touching_packing;
		stats.audit["edges_outside_packing"] = a.edges_outside_packing;
		for (const auto &[shape, count] : a.shapes)
			stats.audit["shape_" + std::string(to_string(shape))] = count;
	}
	return result;
}

} // namespace dpvc
