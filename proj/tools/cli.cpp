#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpvc/graph_io.hpp"
#include "dpvc/instances.hpp"
#include "dpvc/kernel_general.hpp"
#include "dpvc/kernel_small.hpp"
#include "dpvc/oracle.hpp"

namespace dpvc::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct KernelRun {
	PvcInstance instance;
	KernelStats stats;
};

std::string resolve_method(const std::string &method, int d)
{
	if (method == "auto")
		return d == 4 || d == 5 ? "small" : "general";
	if (method != "small" && method != "general")
		throw UsageError("unknown method '" + method + "' (small, general or auto)");
	return method;
}

KernelRun kernelize(const PvcInstance &in, const std::string &method)
{
	if (resolve_method(method, in.d) == "small") {
		auto r = kernelize_small(in);
		return {std::move(r.instance), std::move(r.stats)};
	}
	auto r = kernelize_general(in);
	return {std::move(r.instance), std::move(r.stats)};
}

int verdict_exit(Verdict v)
{
	switch (v) {
	case Verdict::yes:
		return kExitYes;
	case Verdict::no:
		return kExitNo;
	case Verdict::undecided:
		break;
	}
	return kExitOk;
}

void check_k(int k)
{
	if (k < 0)
		throw RangeError("k must be non-negative, got " + std::to_string(k));
}

void write_graph_to(const std::string &path, const Graph &g, std::ostream &out)
{
	if (path.empty() || path == "-")
		write_graph(out, g);
	else
		write_graph_file(path, g);
}

void write_json(const std::string &path, const nlohmann::json &j)
{
	std::ofstream f(path);
	if (!f)
		throw std::runtime_error("cannot write " + path);
	f << j.dump(2) << '\n';
}

std::string format_set(const VertexSet &s)
{
	std::ostringstream os;
	bool first = true;
	for (VertexId v : s) {
		os << (first ? "" : " ") << v + 1;
		first = false;
	}
	return os.str();
}

struct KernelizeArgs {
	int d = 4;
	int k = 0;
	std::string method = "auto";
	std::string input;
	std::string output;
	std::string stats;
};

int cmd_kernelize(const KernelizeArgs &a, std::ostream &out)
{
	check_k(a.k);
	PvcInstance in{read_graph_file(a.input), a.d, a.k};
	const KernelRun run = kernelize(in, a.method);
	write_graph_to(a.output, as_emitted(run.instance).graph, out);
	if (!a.stats.empty())
		write_json(a.stats, to_json(run.stats));
	return verdict_exit(run.instance.verdict);
}

struct SolveArgs {
	int d = 4;
	int k = 0;
	std::string input;
};

int cmd_solve(const SolveArgs &a, std::ostream &out)
{
	check_k(a.k);
	check_path_order(a.d);
	const Graph g = read_graph_file(a.input);
	const Decision dec = solve_branching(g, a.d, a.k);
	if (!dec.yes) {
		out << "NO\n";
		return kExitNo;
	}
	out << "YES\nwitness: " << format_set(*dec.witness) << '\n';
	return kExitYes;
}

struct VerifyArgs {
	int d = 4;
	int kmax = 2;
	std::size_t n = 12;
	std::size_t count = 100;
	std::uint64_t seed = 1;
	std::string method = "auto";
};

int cmd_verify(const VerifyArgs &a, std::ostream &out)
{
	check_k(a.kmax);
	check_path_order(a.d);
	resolve_method(a.method, a.d);
	if (a.n == 0)
		throw UsageError("--n must be positive");

	std::mt19937_64 rng(a.seed);
	const std::size_t max_m = std::min(a.n * (a.n - 1) / 2, 2 * a.n);
	std::size_t agreed = 0;
	out << "# index seed n m k kernel_n kernel_m decided oracle_in oracle_out agree\n";
	for (std::size_t i = 0; i < a.count; ++i) {
		const std::uint64_t seed = rng();
		const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_m)(rng);
		const int k = std::uniform_int_distribution<int>(0, a.kmax)(rng);
		const PvcInstance in{random_instance(a.n, m, seed), a.d, k};
		const KernelRun run = kernelize(in, a.method);
		const PvcInstance emitted = as_emitted(run.instance);
		const bool before = solve_branching(in.graph, a.d, k).yes;
		const bool after = solve_branching(emitted.graph, a.d, emitted.k).yes;
		const bool agree = before == after;
		agreed += agree;
		out << i << ' ' << seed << ' ' << a.n << ' ' << m << ' ' << k << ' ' << emitted.graph.num_vertices()
		    << ' ' << emitted.graph.num_edges() << ' ' << to_string(run.instance.verdict) << ' '
		    << (before ? "yes" : "no") << ' ' << (after ? "yes" : "no") << ' ' << (agree ? "ok" : "MISMATCH")
		    << '\n';
	}
	out << "agreed " << agreed << '/' << a.count << '\n';
	return agreed == a.count ? kExitOk : kExitFailed;
}

struct AuditArgs {
	int d = 4;
	int k = 0;
	std::string input;
};

int cmd_audit(const AuditArgs &a, std::ostream &out, std::ostream &err)
{
	check_k(a.k);
	if (a.d != 4 && a.d != 5)
		throw RangeError("audit requires d in {4, 5}");
	const PvcInstance inst{read_graph_file(a.input), a.d, a.k};
	const auto outcome = greedy_packing(inst.graph, a.d, a.k);
	if (outcome.kind == PackingOutcome::Kind::yes) {
		out << "decided: yes\n";
		return kExitYes;
	}
	if (outcome.kind == PackingOutcome::Kind::no) {
		out << "decided: no\n";
		return kExitNo;
	}
	SizeAudit audit;
	try {
		audit = audit_kernel_size(inst, outcome.packing);
	} catch (const AuditError &e) {
		err << "audit failed: " << e.what() << '\n';
		return kExitFailed;
	}
	nlohmann::json j;
	j["packing_size"] = outcome.packing.paths.size();
	j["max_degree"] = audit.max_degree;
	j["degree_bound"] = audit.degree_bound;
	j["edges"] = inst.graph.num_edges();
	j["edge_bound"] = audit.edge_bound;
	j["edges_touching_packing"] = audit.edges_touching_packing;
	j["edges_outside_packing"] = audit.edges_outside_packing;
	j["degree_bound_satisfied"] = audit.degree_bound_satisfied;
	j["edge_bound_satisfied"] = audit.edge_bound_satisfied;
	for (const auto &[shape, count] : audit.shapes)
		j["shapes"][std::string(to_string(shape))] = count;
	out << j.dump(2) << '\n';
	return audit.degree_bound_satisfied && audit.edge_bound_satisfied ? kExitOk : kExitFailed;
}

struct GenArgs {
	std::size_t n = 10;
	std::size_t m = 15;
	std::uint64_t seed = 1;
	std::size_t p = 2;
	std::size_t q = 3;
	int d = 4;
	std::string input;
	std::string output;
};

Graph generate(const std::string &kind, const GenArgs &a)
{
	if (kind == "random")
		return random_instance(a.n, a.m, a.seed);
	if (kind == "star")
		return star(a.q);
	if (kind == "distar")
		return di_star(a.p, a.q);
	if (kind == "star-triangle")
		return star_with_triangle(a.q);
	if (kind == "triangle")
		return triangle();
	if (kind == "path")
		return path_graph(a.n);
	if (kind == "cycle")
		return cycle_graph(a.n);
	if (kind == "complete")
		return complete_graph(a.n);
	if (kind == "pendant-matching")
		return pendant_matching_gadget(a.q);
	if (kind == "vc-transform") {
		if (a.input.empty())
			throw UsageError("vc-transform needs --in FILE");
		return vc_to_dpvc(read_graph_file(a.input), a.d);
	}
	throw UsageError("unknown generator '" + kind + "'");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Kernels and exact solvers for d-path vertex cover", "dpvc"};
	app.require_subcommand(1);

	KernelizeArgs ka;
	auto *kz = app.add_subcommand("kernelize", "Reduce an instance; exit 0 kernel written, 10 yes, 20 no");
	kz->add_option("--d", ka.d, "path order")->required();
	kz->add_option("--k", ka.k, "budget")->required();
	kz->add_option("--method", ka.method, "small, general or auto")->capture_default_str();
	kz->add_option("input", ka.input, "graph file")->required();
	kz->add_option("-o,--output", ka.output, "kernel file ('-' for stdout)")->required();
	kz->add_option("--stats", ka.stats, "statistics JSON file");

	SolveArgs sa;
	auto *sv = app.add_subcommand("solve", "Exact decision by branching; exit 10 yes, 20 no");
	sv->add_option("--d", sa.d)->required();
	sv->add_option("--k", sa.k)->required();
	sv->add_option("input", sa.input)->required();

	VerifyArgs va;
	auto *vf = app.add_subcommand("verify", "Kernelize random instances and compare exact answers");
	vf->add_option("--d", va.d)->required();
	vf->add_option("--kmax", va.kmax)->required();
	vf->add_option("--n", va.n)->required();
	vf->add_option("--count", va.count)->required();
	vf->add_option("--seed", va.seed)->required();
	vf->add_option("--method", va.method)->capture_default_str();

	AuditArgs aa;
	auto *au = app.add_subcommand("audit", "Size and structure audit of a reduced instance");
	au->add_option("--d", aa.d)->required();
	au->add_option("--k", aa.k)->required();
	au->add_option("input", aa.input)->required();

	GenArgs ga;
	std::string kind;
	auto *gn = app.add_subcommand("gen", "Write a generated instance");
	gn->add_option("kind", kind,
		       "random, star, distar, star-triangle, triangle, path, cycle, complete, "
		       "pendant-matching or vc-transform")
		->required();
	gn->add_option("--n", ga.n)->capture_default_str();
	gn->add_option("--m", ga.m)->capture_default_str();
	gn->add_option("--seed", ga.seed)->capture_default_str();
	gn->add_option("--p", ga.p)->capture_default_str();
	gn->add_option("--q", ga.q)->capture_default_str();
	gn->add_option("--d", ga.d)->capture_default_str();
	gn->add_option("--in", ga.input, "input graph for vc-transform");
	gn->add_option("-o,--output", ga.output, "output file (default stdout)");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try {
		if (kz->parsed())
			return cmd_kernelize(ka, out);
		if (sv->parsed())
			return cmd_solve(sa, out);
		if (vf->parsed())
			return cmd_verify(va, out);
		if (au->parsed())
			return cmd_audit(aa, out, err);
		write_graph_to(ga.output, generate(kind, ga), out);
		return kExitOk;
	} catch (const ParseError &e) {
		err << "error: malformed graph file: " << e.what() << '\n';
	} catch (const std::logic_error &e) {
		err << "error: " << e.what() << '\n';
	} catch (const std::runtime_error &e) {
		err << "error: " << e.what() << '\n';
	}
	return kExitUsage;
}

} // namespace dpvc::cli
