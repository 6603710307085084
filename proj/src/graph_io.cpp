#include "dpvc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dpvc {

namespace {

long long parse_index(std::istringstream &ss, std::size_t line, const char *what)
{
	long long x = 0;
	if (!(ss >> x))
		throw ParseError(line, std::string("expected integer ") + what);
	return x;
}

} // namespace

Graph read_graph(std::istream &in)
{
	Graph g;
	bool have_header = false;
	long long declared_edges = 0;
	long long seen_edges = 0;
	std::string text;
	std::size_t line = 0;

	while (std::getline(in, text)) {
		++line;
		if (!text.empty() && text.back() == '\r')
			text.pop_back();
		std::istringstream ss(text);
		std::string tag;
		if (!(ss >> tag) || tag == "c")
			continue;

		if (tag == "p") {
			if (have_header)
				throw ParseError(line, "duplicate header");
			std::string kind;
			if (!(ss >> kind) || kind != "edge")
				throw ParseError(line, "header must be 'p edge <n> <m>'");
			long long n = parse_index(ss, line, "vertex count");
			declared_edges = parse_index(ss, line, "edge count");
			if (n < 0 || declared_edges < 0)
				throw ParseError(line, "negative count in header");
			g = Graph(static_cast<std::size_t>(n));
			have_header = true;
		} else if (tag == "e") {
			if (!have_header)
				throw ParseError(line, "edge before header");
			long long u = parse_index(ss, line, "endpoint");
			long long v = parse_index(ss, line, "endpoint");
			const auto n = static_cast<long long>(g.num_vertices());
			if (u < 1 || v < 1 || u > n || v > n)
				throw ParseError(line, "endpoint out of range 1.." + std::to_string(n));
			if (u == v)
				throw ParseError(line, "self-loop");
			g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
			++seen_edges;
		} else {
			throw ParseError(line, "unknown line type '" + tag + "'");
		}
		std::string trailing;
		if (ss >> trailing)
			throw ParseError(line, "unexpected trailing token '" + trailing + "'");
	}
	if (!have_header)
		throw ParseError(line, "missing 'p edge' header");
	if (seen_edges != declared_edges)
		throw ParseError(line, "header declares " + std::to_string(declared_edges) + " edges, found " +
					       std::to_string(seen_edges));
	return g;
}

Graph read_graph_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g)
{
	std::vector<VertexId> index(g.id_bound(), 0);
	VertexId next = 1;
	for (VertexId v : g.vertices())
		index[v] = next++;
	out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
	for (const Edge &e : g.edges())
		out << "e " << index[e.first] << ' ' << index[e.second] << '\n';
}

void write_graph_file(const std::string &path, const Graph &g)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	write_graph(out, g);
}

} // namespace dpvc
