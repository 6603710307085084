#include <doctest.h>

#include "brute.hpp"
#include "dpvc/instances.hpp"
#include "dpvc/matching.hpp"

using namespace dpvc;
using dpvc::testing::Rng;
using dpvc::testing::uniform;

namespace {

void check_matching(const Graph &g, const Matching &m)
{
	REQUIRE(testing::is_matching(g, m.edges));
	VertexSet covered;
	for (const Edge &e : m.edges) {
		covered.insert(e.first);
		covered.insert(e.second);
	}
	CHECK(covered == m.covered);
}

// Triangle 1-2-3 sits inside the odd cycle 2-4-5-3, which sits inside
// 4-6-7-5; stems at 0 and 8 force augmentations through both levels.
Graph nested_blossoms()
{
	Graph g(10);
	const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 5}, {5, 3},
					     {4, 6}, {6, 7}, {7, 5}, {7, 8}, {8, 9}};
	for (auto [u, v] : edges)
		g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
	return g;
}

} // namespace

TEST_CASE("maximum_matching examples")
{
	const Matching p4 = maximum_matching(path_graph(4));
	CHECK(p4.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
	CHECK(maximum_matching(triangle()).size() == 1);
	CHECK(maximum_matching(Graph()).size() == 0);
	for (std::size_t n = 3; n <= 11; n += 2)
		CHECK(maximum_matching(cycle_graph(n)).size() == n / 2);
	const Graph nested = nested_blossoms();
	CHECK(maximum_matching(nested).size() == 5);
	CHECK(testing::brute_max_matching(nested) == 5);
	Graph bare = nested;
	bare.delete_vertex(9);
	CHECK(maximum_matching(bare).size() == 4);
}

TEST_CASE("maximum_matching agrees with exhaustive search")
{
	Rng rng(303);
	for (int i = 0; i < 1500; ++i) {
		const std::size_t n = uniform(rng, 0, 12);
		const Graph g = testing::gnp(rng, n, 0.1 + 0.5 * static_cast<double>(uniform(rng, 0, 10)) / 10.0);
		const Matching m = maximum_matching(g);
		check_matching(g, m);
		REQUIRE(m.size() == testing::brute_max_matching(g));
		CHECK(maximum_matching(g).edges == m.edges);
	}
}

TEST_CASE("blossoms on odd cycles with tails")
{
	Rng rng(304);
	for (int i = 0; i < 300; ++i) {
		Graph g = cycle_graph(2 * uniform(rng, 1, 4) + 1);
		const std::size_t extra = uniform(rng, 1, 4);
		for (std::size_t j = 0; j < extra; ++j) {
			const auto vs = g.vertices();
			const VertexId anchor = vs[uniform(rng, 0, vs.size() - 1)];
			g.add_edge(anchor, g.add_vertex());
		}
		REQUIRE(maximum_matching(g).size() == testing::brute_max_matching(g));
	}
}

TEST_CASE("adjacent_matching_host")
{
	SUBCASE("star center")
	{
		const Graph h = adjacent_matching_host(star(3), 0);
		CHECK(h.num_vertices() == 3);
		CHECK(h.num_edges() == 0);
		CHECK_FALSE(h.contains(0));
	}
	SUBCASE("v-a-b-c path drops b-c")
	{
		const Graph h = adjacent_matching_host(path_graph(4), 0);
		CHECK(h.vertices() == std::vector<VertexId>{1, 2});
		CHECK(h.edges() == std::vector<Edge>{Edge(1, 2)});
	}
	SUBCASE("triangle through v plus a pendant")
	{
		Graph g = triangle();
		const VertexId b = g.add_vertex();
		g.add_edge(1, b);
		const Graph h = adjacent_matching_host(g, 0);
		CHECK(h.edges() == std::vector<Edge>{Edge(1, 2), Edge(1, b)});
	}
	SUBCASE("edges inside B are removed")
	{
		Graph g(5);
		g.add_edge(0, 1);
		g.add_edge(1, 2);
		g.add_edge(1, 3);
		g.add_edge(2, 3);
		g.add_edge(3, 4);
		const Graph h = adjacent_matching_host(g, 0);
		CHECK(h.edges() == std::vector<Edge>{Edge(1, 2), Edge(1, 3)});
	}
	CHECK_THROWS_AS(adjacent_matching_host(Graph(1), 3), GraphError);
}

TEST_CASE("max_adjacent_matching examples")
{
	CHECK(max_adjacent_matching(Graph(1), 0).matching.size() == 0);

	const Graph gadget = pendant_matching_gadget(2);
	const auto am = max_adjacent_matching(gadget, 0);
	CHECK(am.center == 0);
	CHECK(am.matching.size() == 2);
	using P = std::pair<VertexId, VertexId>;
	CHECK(am.oriented == std::vector<P>{{1, 2}, {3, 4}});

	const auto tri = max_adjacent_matching(triangle(), 0);
	REQUIRE(tri.oriented.size() == 1);
	CHECK(tri.oriented[0] == P{1, 2});
}

TEST_CASE("max_adjacent_matching agrees with exhaustive search")
{
	Rng rng(305);
	for (int i = 0; i < 1000; ++i) {
		const Graph g = testing::gnp(rng, uniform(rng, 1, 10), 0.3);
		const VertexId v = static_cast<VertexId>(uniform(rng, 0, g.num_vertices() - 1));
		const auto am = max_adjacent_matching(g, v);
		check_matching(g, am.matching);
		REQUIRE(am.matching.size() == testing::brute_max_adjacent_matching(g, v));
		CHECK(am.matching.size() == maximum_matching(adjacent_matching_host(g, v)).size());
		CHECK_FALSE(am.matching.covered.count(v));
		REQUIRE(am.oriented.size() == am.matching.size());
		for (const auto &[a, b] : am.oriented) {
			CHECK(g.has_edge(v, a));
			CHECK(g.has_edge(a, b));
			if (g.has_edge(v, b))
				CHECK(a < b);
		}
	}
}
