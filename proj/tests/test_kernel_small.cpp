#include <doctest.h>

#include "brute.hpp"
#include "dpvc/instances.hpp"
#include "dpvc/kernel_small.hpp"
#include "dpvc/oracle.hpp"

using namespace dpvc;
using dpvc::testing::Rng;
using dpvc::testing::uniform;

namespace {

bool answer(const PvcInstance &inst)
{
	if (inst.verdict != Verdict::undecided)
		return inst.verdict == Verdict::yes;
	return solve_branching(inst.graph, inst.d, inst.k).yes;
}

std::size_t weight(const PvcInstance &inst) { return inst.graph.num_vertices() + inst.graph.num_edges(); }

void saturate_rules_1_to_3(PvcInstance &inst)
{
	while (inst.verdict == Verdict::undecided &&
	       (rule_component(inst) || rule_degree_one(inst) || rule_matching(inst))) {
	}
}

AdjacentMatching hand_matching(VertexId center, std::vector<std::pair<VertexId, VertexId>> pairs)
{
	AdjacentMatching am;
	am.center = center;
	am.oriented = pairs;
	for (auto [a, b] : pairs) {
		am.matching.edges.emplace_back(a, b);
		am.matching.covered.insert(a);
		am.matching.covered.insert(b);
	}
	return am;
}

// v = 0 adjacent to a1 = 1 (matched to b1 = 2) and to x = 3..8, every x
// adjacent to a1.
Graph rule4_example()
{
	Graph g(9);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	for (VertexId x = 3; x <= 8; ++x) {
		g.add_edge(0, x);
		g.add_edge(x, 1);
	}
	return g;
}

} // namespace

TEST_CASE("rule_component")
{
	PvcInstance a{disjoint_union(triangle(), path_graph(5)), 5, 1};
	const auto e = rule_component(a);
	REQUIRE(e);
	CHECK(std::get<events::ComponentRemoved>(*e).vertices == VertexSet{0, 1, 2});
	CHECK(a.graph.num_vertices() == 5);
	CHECK_FALSE(rule_component(a));

	PvcInstance p4{path_graph(4), 4, 0};
	CHECK_FALSE(rule_component(p4));

	PvcInstance iso{Graph(2), 4, 0};
	REQUIRE(rule_component(iso));
	CHECK(iso.graph.vertices() == std::vector<VertexId>{1});
	REQUIRE(rule_component(iso));
	CHECK_FALSE(rule_component(iso));
}

TEST_CASE("rule_degree_one")
{
	PvcInstance s{star(3), 4, 1};
	const auto e = rule_degree_one(s);
	REQUIRE(e);
	const auto &twin = std::get<events::DegreeOneTwinDeleted>(*e);
	CHECK(twin.x == 3);
	CHECK(twin.v == 0);
	REQUIRE(rule_degree_one(s));
	CHECK_FALSE(rule_degree_one(s));
	CHECK(s.graph.vertices() == std::vector<VertexId>{0, 1});

	PvcInstance p3{path_graph(3), 4, 0};
	REQUIRE(rule_degree_one(p3));
	CHECK(p3.graph.vertices() == std::vector<VertexId>{0, 1});

	Graph pm(6);
	pm.add_edge(0, 1);
	pm.add_edge(2, 3);
	pm.add_edge(4, 5);
	PvcInstance perfect{pm, 4, 0};
	CHECK_FALSE(rule_degree_one(perfect));
}

TEST_CASE("rule_matching")
{
	PvcInstance zero{pendant_matching_gadget(2), 5, 0};
	CHECK_FALSE(solve_branching(zero.graph, 5, 0).yes);
	const auto e = rule_matching(zero);
	REQUIRE(e);
	CHECK(std::get<events::HighDegreeVertexDeleted>(*e).v == 0);
	CHECK(std::get<events::HighDegreeVertexDeleted>(*e).matching_size == 2);
	CHECK(zero.verdict == Verdict::no);
	CHECK(zero.k == 0);

	PvcInstance one{pendant_matching_gadget(2), 5, 1};
	CHECK_FALSE(rule_matching(one));

	PvcInstance three{pendant_matching_gadget(4), 4, 2};
	REQUIRE(rule_matching(three));
	CHECK(three.k == 1);
	CHECK(three.verdict == Verdict::undecided);

	PvcInstance iso{Graph(1), 4, 0};
	CHECK_FALSE(rule_matching(iso));
	PvcInstance low{pendant_matching_gadget(3), 3, 0};
	CHECK_THROWS_AS(rule_matching(low), RangeError);
}

TEST_CASE("classify_neighbors")
{
	SUBCASE("pendant leaf")
	{
		const PvcInstance inst{star(1), 4, 0};
		const auto part = classify_neighbors(inst, 0, hand_matching(0, {}));
		CHECK(part.x0 == VertexSet{1});
		CHECK(part.x1.empty());
		CHECK(part.x2.empty());
	}

	Graph g(4);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(0, 3);
	g.add_edge(3, 1);
	SUBCASE("one matched endpoint")
	{
		const auto part = classify_neighbors(PvcInstance{g, 4, 0}, 0, hand_matching(0, {{1, 2}}));
		CHECK(part.x1 == VertexSet{3});
		CHECK(part.m1 == VertexSet{1});
		CHECK(part.x0.empty());
		CHECK(part.x2.empty());
	}
	SUBCASE("both endpoints")
	{
		g.add_edge(3, 2);
		const auto part = classify_neighbors(PvcInstance{g, 4, 0}, 0, hand_matching(0, {{1, 2}}));
		CHECK(part.x2 == VertexSet{3});
		CHECK(part.x1.empty());
		CHECK(part.m1.empty());
	}
	SUBCASE("non-maximum matchings are caught")
	{
		CHECK_THROWS_AS(classify_neighbors(PvcInstance{g, 4, 0}, 0, hand_matching(0, {})), ObservationViolation);
		Graph h(5);
		for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 1}, {4, 2}})
			h.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
		CHECK_THROWS_AS(classify_neighbors(PvcInstance{h, 4, 0}, 0, hand_matching(0, {{1, 2}})),
				ObservationViolation);
	}
}

TEST_CASE("rule_expansion")
{
	PvcInstance inst{rule4_example(), 4, 0};
	const bool before = answer(inst);
	const auto e = rule_expansion(inst);
	REQUIRE(e);
	const auto &del = std::get<events::ExpansionEdgeDeleted>(*e);
	CHECK(del.v == 0);
	CHECK(del.x >= 3);
	CHECK(inst.graph.num_edges() == 13);
	CHECK(answer(inst) == before);

	PvcInstance low{star(6), 4, 0};
	CHECK_FALSE(rule_expansion(low));

	PvcInstance unreduced{pendant_matching_gadget(8), 4, 0};
	CHECK_THROWS_AS(rule_expansion(unreduced), std::logic_error);
}

TEST_CASE("each rule preserves the answer where it fires")
{
	Rng rng(707);
	std::size_t fired[4] = {0, 0, 0, 0};
	for (int i = 0; i < 8000 && std::min({fired[0], fired[1], fired[2], fired[3]}) < 500; ++i) {
		const int d = static_cast<int>(uniform(rng, 4, 5));
		PvcInstance base;
		if (i % 2) {
			const int k = static_cast<int>(uniform(rng, 0, 1));
			base = PvcInstance{testing::hub_gadget(rng, d, k), d, k};
		} else {
			base = PvcInstance{testing::gnm(rng, uniform(rng, 1, 14), uniform(rng, 0, 25)), d,
					   static_cast<int>(uniform(rng, 0, 3))};
		}
		const bool truth = answer(base);

		using Rule = std::optional<ReductionEvent> (*)(PvcInstance &);
		const Rule rules[3] = {rule_component, rule_degree_one, rule_matching};
		for (int r = 0; r < 3; ++r) {
			PvcInstance copy = base;
			if (!rules[r](copy))
				continue;
			++fired[r];
			CHECK(weight(copy) < weight(base));
			REQUIRE(answer(copy) == truth);
		}

		PvcInstance reduced = base;
		saturate_rules_1_to_3(reduced);
		if (reduced.verdict != Verdict::undecided)
			continue;
		const bool reduced_truth = answer(reduced);
		REQUIRE(reduced_truth == truth);
		const std::size_t w = weight(reduced);
		if (!rule_expansion(reduced))
			continue;
		++fired[3];
		CHECK(weight(reduced) == w - 1);
		REQUIRE(answer(reduced) == truth);
	}
	CHECK(fired[0] >= 500);
	CHECK(fired[1] >= 500);
	CHECK(fired[2] >= 500);
	CHECK(fired[3] >= 500);
}

TEST_CASE("shapes")
{
	CHECK(classify_component(triangle(), 4) == ComponentShape::triangle);
	CHECK(classify_component(star(5), 4) == ComponentShape::star);
	CHECK(classify_component(star(0), 4) == ComponentShape::star);
	CHECK(classify_component(path_graph(4), 4) == ComponentShape::other);
	CHECK(classify_component(di_star(2, 2), 5) == ComponentShape::di_star);
	CHECK(classify_component(star_with_triangle(4), 5) == ComponentShape::star_with_triangle);
	CHECK(classify_component(path_graph(4), 5) == ComponentShape::small);
	CHECK(classify_component(complete_graph(4), 5) == ComponentShape::small);
	CHECK(classify_component(star(6), 5) == ComponentShape::di_star);
	CHECK(classify_component(path_graph(5), 5) == ComponentShape::other);
	CHECK(classify_component(Graph(2), 5) == ComponentShape::other);
	CHECK_THROWS_AS(classify_component(triangle(), 3), RangeError);
	CHECK(to_string(ComponentShape::star_with_triangle) == "star_with_triangle");
}

TEST_CASE("every connected P_d-free graph on few vertices has an allowed shape")
{
	Rng rng(708);
	int seen = 0;
	for (int i = 0; i < 3000; ++i) {
		const int d = static_cast<int>(uniform(rng, 4, 5));
		const Graph g = testing::gnp(rng, uniform(rng, 1, 9), 0.4);
		if (connected_components(g).size() != 1 || testing::has_d_path(g, d))
			continue;
		++seen;
		REQUIRE(classify_component(g, d) != ComponentShape::other);
	}
	CHECK(seen > 300);
}

TEST_CASE("audit_kernel_size")
{
	CHECK(small_kernel_edge_bound(4, 0) == 0);
	CHECK(small_kernel_edge_bound(4, 2) == 96 * 4 + 96 * 2);
	CHECK(small_kernel_edge_bound(5, 3) == 245 * 9 + 245 * 3);

	// P4 packed, with a triangle and a 2-star hanging off it
	Graph g = disjoint_union(disjoint_union(path_graph(4), triangle()), star(2));
	g.add_edge(0, 4);
	g.add_edge(3, 7);
	const auto packing = greedy_packing(g, 4, 1);
	REQUIRE(packing.kind == PackingOutcome::Kind::packing);
	REQUIRE(packing.packing.vertices == VertexSet{0, 1, 2, 3});
	const PvcInstance inst{g, 4, 1};
	const SizeAudit audit = audit_kernel_size(inst, packing.packing);
	CHECK(audit.max_degree == 3);
	CHECK(audit.degree_bound == 12);
	CHECK(audit.edges_touching_packing == 5);
	CHECK(audit.edges_outside_packing == 5);
	CHECK(audit.shapes.at(ComponentShape::triangle) == 1);
	CHECK(audit.shapes.at(ComponentShape::star) == 1);
	CHECK(audit.edge_bound_satisfied);
	CHECK(audit.degree_bound_satisfied);

	Packing partial;
	partial.d = 4;
	partial.paths.push_back(DPath{{0, 1, 2, 3}});
	partial.vertices = {0, 1, 2, 3};
	const PvcInstance with_cycle{disjoint_union(path_graph(4), cycle_graph(4)), 4, 1};
	CHECK_THROWS_AS(audit_kernel_size(with_cycle, partial), AuditError);
	const PvcInstance detached{disjoint_union(path_graph(4), star(2)), 4, 1};
	CHECK_THROWS_AS(audit_kernel_size(detached, partial), AuditError);
	Graph wide = disjoint_union(path_graph(4), star(3));
	wide.add_edge(0, 4);
	CHECK_THROWS_AS(audit_kernel_size(PvcInstance{wide, 4, 1}, partial), AuditError);
}

TEST_CASE("kernelize_small examples")
{
	const auto empty = kernelize_small(PvcInstance{Graph(5), 4, 0});
	CHECK(empty.instance.verdict == Verdict::yes);
	CHECK(empty.instance.graph.num_vertices() == 0);
	CHECK(empty.stats.verdict == Verdict::yes);

	for (int d = 4; d <= 5; ++d) {
		const Graph p = path_graph(static_cast<std::size_t>(d));
		const auto r = kernelize_small(PvcInstance{p, d, 0});
		CHECK(r.instance.verdict == Verdict::no);
		CHECK(as_emitted(r.instance).graph == p);
	}

	const auto gadget = kernelize_small(PvcInstance{pendant_matching_gadget(2), 5, 0});
	CHECK(gadget.instance.verdict == Verdict::no);

	CHECK_THROWS_AS(kernelize_small(PvcInstance{path_graph(3), 3, 0}), RangeError);
	CHECK_THROWS_AS(kernelize_small(PvcInstance{path_graph(3), 4, -1}), RangeError);
}

TEST_CASE("kernelize_small on random and hub instances")
{
	Rng rng(709);
	int undecided = 0;
	for (int i = 0; i < 600; ++i) {
		const int d = static_cast<int>(uniform(rng, 4, 5));
		PvcInstance in;
		if (i % 2) {
			const int k = static_cast<int>(uniform(rng, 0, 1));
			in = PvcInstance{testing::hub_gadget(rng, d, k), d, k};
		} else {
			in = PvcInstance{testing::gnm(rng, uniform(rng, 1, 14), uniform(rng, 0, 25)), d,
					 static_cast<int>(uniform(rng, 0, 3))};
		}
		const auto r = kernelize_small(in);
		REQUIRE(answer(in) == answer(as_emitted(r.instance)));
		REQUIRE(answer(in) == answer(r.instance));

		const PvcInstance replayed = replay(in, r.trace);
		CHECK(replayed.graph == r.instance.graph);
		CHECK(replayed.k == r.instance.k);

		CHECK(r.stats.n_out == r.instance.graph.num_vertices());
		CHECK(r.stats.m_out == r.instance.graph.num_edges());
		std::size_t total = 0;
		for (const auto &[name, count] : r.stats.rule_firings)
			total += count;
		std::size_t non_k = 0;
		for (const auto &ev : r.trace)
			non_k += !std::holds_alternative<events::KDecremented>(ev);
		CHECK(total == non_k);

		if (r.instance.verdict != Verdict::undecided)
			continue;
		++undecided;
		REQUIRE(r.audit);
		CHECK(r.stats.bound_satisfied);
		for (VertexId v : r.instance.graph.vertices())
			CHECK(r.instance.graph.degree(v) <=
			      static_cast<std::size_t>((d + 2) * (r.instance.k + 1)));
		CHECK(static_cast<std::int64_t>(r.instance.graph.num_edges()) <=
		      small_kernel_edge_bound(d, r.instance.k));
		PvcInstance again = r.instance;
		CHECK_FALSE(rule_component(again));
	}
	CHECK(undecided > 50);
}
