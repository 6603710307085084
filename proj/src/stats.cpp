#include "dpvc/stats.hpp"

#include "dpvc/instances.hpp"

namespace dpvc {

std::string_view to_string(Verdict v)
{
	switch (v) {
	case Verdict::yes:
		return "yes";
	case Verdict::no:
		return "no";
	case Verdict::undecided:
		break;
	}
	return "none";
}

Graph decided_graph(Verdict verdict, int d, int k)
{
	Graph g;
	if (verdict != Verdict::no)
		return g;
	for (int i = 0; i <= k; ++i)
		g = disjoint_union(g, path_graph(static_cast<std::size_t>(d)));
	return g;
}

PvcInstance as_emitted(const PvcInstance &inst)
{
	if (inst.verdict == Verdict::undecided)
		return inst;
	const int k = inst.k < 0 ? 0 : inst.k;
	return PvcInstance{decided_graph(inst.verdict, inst.d, k), inst.d, k, inst.verdict};
}

nlohmann::json to_json(const KernelStats &s)
{
	nlohmann::json j;
	j["method"] = s.method;
	j["d"] = s.d;
	j["k"] = s.k;
	j["k_out"] = s.k_out;
	j["n_in"] = s.n_in;
	j["m_in"] = s.m_in;
	j["n_out"] = s.n_out;
	j["m_out"] = s.m_out;
	j["decided"] = std::string(to_string(s.verdict));
	j["packing_size"] = s.packing_size;
	j["bound"] = s.bound ? nlohmann::json(*s.bound) : nlohmann::json(nullptr);
	j["bound_satisfied"] = s.bound_satisfied;
	j["rule_firings"] = s.rule_firings;
	j["audit"] = s.audit;
	j["marks"] = s.marks;
	return j;
}

} // namespace dpvc
