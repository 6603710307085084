#include "dpvc/path_engine.hpp"

#include <string>

namespace dpvc {

namespace {

class PathSearch {
public:
	PathSearch(const Graph &g, int d, const VertexSet &forbidden)
		: g_(g), d_(static_cast<std::size_t>(d)), blocked_(g.id_bound(), 0)
	{
		for (VertexId v : forbidden)
			if (v < blocked_.size())
				blocked_[v] = 1;
	}

	std::optional<DPath> run()
	{
		for (VertexId s : g_.vertices()) {
			if (blocked_[s])
				continue;
			stack_.assign(1, s);
			blocked_[s] = 1;
			const bool found = extend(s);
			blocked_[s] = 0;
			if (found)
				return DPath{stack_};
		}
		return std::nullopt;
	}

private:
	bool extend(VertexId u)
	{
		if (stack_.size() == d_)
			return true;
		for (VertexId w : g_.neighbors(u)) {
			if (blocked_[w])
				continue;
			blocked_[w] = 1;
			stack_.push_back(w);
			if (extend(w)) {
				blocked_[w] = 0;
				return true;
			}
			stack_.pop_back();
			blocked_[w] = 0;
		}
		return false;
	}

	const Graph &g_;
	std::size_t d_;
	std::vector<char> blocked_;
	std::vector<VertexId> stack_;
};

} // namespace

void check_path_order(int d, int max_d)
{
	if (d < 2 || d > max_d)
		throw RangeError("d = " + std::to_string(d) + " outside supported range 2.." + std::to_string(max_d));
}

std::optional<DPath> find_d_path(const Graph &g, int d, const VertexSet &forbidden, int max_d)
{
	check_path_order(d, max_d);
	return PathSearch(g, d, forbidden).run();
}

PackingOutcome greedy_packing(const Graph &g, int d, int k, int max_d)
{
	check_path_order(d, max_d);
	if (k < 0)
		throw RangeError("k must be non-negative");

	PackingOutcome out;
	out.packing.d = d;
	auto &packing = out.packing;
	while (packing.paths.size() <= static_cast<std::size_t>(k)) {
		auto path = find_d_path(g, d, packing.vertices, max_d);
		if (!path)
			break;
		packing.vertices.insert(path->vertices.begin(), path->vertices.end());
		packing.paths.push_back(std::move(*path));
	}

	if (packing.paths.empty())
		out.kind = PackingOutcome::Kind::yes;
	else if (packing.paths.size() >= static_cast<std::size_t>(k) + 1)
		out.kind = PackingOutcome::Kind::no;
	else
		out.kind = PackingOutcome::Kind::packing;
	return out;
}

} // namespace dpvc
