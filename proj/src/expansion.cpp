#include "dpvc/expansion.hpp"

#include <deque>
#include <optional>
#include <string>

namespace dpvc {

namespace {

void check_preconditions(const Graph &g, const VertexSet &a_side, const VertexSet &b_side, int q)
{
	if (q < 1)
		throw ExpansionError("q_expansion: q must be at least 1");
	for (VertexId a : a_side) {
		if (b_side.count(a))
			throw ExpansionError("q_expansion: A and B overlap in vertex " + std::to_string(a));
		if (!g.contains(a))
			throw ExpansionError("q_expansion: A-vertex " + std::to_string(a) + " not in graph");
	}
	for (VertexId b : b_side)
		if (!g.contains(b))
			throw ExpansionError("q_expansion: B-vertex " + std::to_string(b) + " not in graph");
	if (a_side.size() + b_side.size() != g.num_vertices())
		throw ExpansionError("q_expansion: A and B do not cover the vertex set");
	for (const Edge &e : g.edges()) {
		if (a_side.count(e.first) == a_side.count(e.second))
			throw ExpansionError("q_expansion: edge {" + std::to_string(e.first) + "," +
					     std::to_string(e.second) + "} does not cross the bipartition");
	}
	if (b_side.size() < static_cast<std::size_t>(q) * a_side.size())
		throw ExpansionError("q_expansion: |B| < q|A|");
	for (VertexId b : b_side)
		if (g.degree(b) == 0)
			throw ExpansionError("q_expansion: B-vertex " + std::to_string(b) + " is isolated");
}

// Kuhn-style augmentation where every A-vertex owns up to q B-vertices.
class Assignment {
public:
	Assignment(const Graph &g, int q) : g_(g), q_(q), owner_(g.id_bound()), load_(g.id_bound(), 0) {}

	void run(const VertexSet &a_side)
	{
		for (VertexId a : a_side) {
			for (int copy = 0; copy < q_; ++copy) {
				visited_.assign(g_.id_bound(), 0);
				if (!augment(a))
					break;
				++load_[a];
			}
		}
	}

	const std::optional<VertexId> &owner(VertexId b) const { return owner_[b]; }
	int load(VertexId a) const { return load_[a]; }

private:
	bool augment(VertexId a)
	{
		for (VertexId b : g_.neighbors(a)) {
			if (visited_[b])
				continue;
			visited_[b] = 1;
			if (!owner_[b] || augment(*owner_[b])) {
				owner_[b] = a;
				return true;
			}
		}
		return false;
	}

	const Graph &g_;
	int q_;
	std::vector<std::optional<VertexId>> owner_;
	std::vector<int> load_;
	std::vector<char> visited_;
};

} // namespace

ExpansionCertificate q_expansion(const Graph &g, const VertexSet &a_side, const VertexSet &b_side, int q)
{
	check_preconditions(g, a_side, b_side, q);

	Assignment assignment(g, q);
	assignment.run(a_side);

	ExpansionCertificate cert;
	cert.q = q;

	std::deque<VertexId> queue;
	for (VertexId b : b_side) {
		if (!assignment.owner(b)) {
			cert.b_side.insert(b);
			queue.push_back(b);
		}
	}

	if (queue.empty()) {
		cert.a_side = a_side;
		cert.b_side = b_side;
	} else {
		// Alternating reachability: free B -> any A-neighbor -> B-vertices it owns.
		while (!queue.empty()) {
			const VertexId b = queue.front();
			queue.pop_front();
			for (VertexId a : g.neighbors(b)) {
				if (!cert.a_side.insert(a).second)
					continue;
				for (VertexId owned : g.neighbors(a)) {
					if (assignment.owner(owned) == a && cert.b_side.insert(owned).second)
						queue.push_back(owned);
				}
			}
		}
	}

	for (VertexId b : cert.b_side) {
		const auto &owner = assignment.owner(b);
		if (owner && cert.a_side.count(*owner))
			cert.edges.emplace_back(*owner, b);
	}

	if (cert.a_side.empty())
		throw std::logic_error("q_expansion: empty A' under satisfied preconditions");
	for (VertexId a : cert.a_side)
		if (assignment.load(a) != q)
			throw std::logic_error("q_expansion: A'-vertex " + std::to_string(a) + " is not saturated");
	return cert;
}

} // namespace dpvc
