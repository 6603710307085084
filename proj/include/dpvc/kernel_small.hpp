#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "dpvc/graph.hpp"
#include "dpvc/instance.hpp"
#include "dpvc/matching.hpp"
#include "dpvc/path_engine.hpp"
#include "dpvc/stats.hpp"

// Quadratic-edge kernels for 4-PVC and 5-PVC.
//
// Four reduction rules, applied exhaustively in the order listed with a
// restart after every change:
//   1. remove a connected component without a d-path;
//   2. of two pendant vertices on the same neighbor, delete one;
//   3. delete a vertex with an adjacent matching of size >= k+2, k -= 1;
//   4. for a vertex of degree >= (d+2)(k+1)+1, delete one edge to a
//      neighbor that a (d-1)-expansion shows to be replaceable.
// A reduced instance has maximum degree (d+2)(k+1) and at most
// 96k^2+96k (d=4) or 245k^2+245k (d=5) edges.

namespace dpvc {

namespace events {

struct ComponentRemoved {
	VertexSet vertices;
};

struct DegreeOneTwinDeleted {
	VertexId x = 0; ///< deleted pendant
	VertexId v = 0; ///< shared neighbor
};

struct HighDegreeVertexDeleted {
	VertexId v = 0;
	std::size_t matching_size = 0;
};

struct ExpansionEdgeDeleted {
	VertexId x = 0;
	VertexId v = 0;
};

struct KDecremented {};

} // namespace events

using ReductionEvent = std::variant<events::ComponentRemoved, events::DegreeOneTwinDeleted,
				    events::HighDegreeVertexDeleted, events::ExpansionEdgeDeleted, events::KDecremented>;
using ReductionTrace = std::vector<ReductionEvent>;

/// Re-applies a trace to the instance it was produced from.
PvcInstance replay(PvcInstance instance, const ReductionTrace &trace);

/// Thrown when a structural fact that holds for a maximum adjacent matching
/// is violated, i.e. the caller passed a non-maximum matching.
class ObservationViolation : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

/// Neighbors of v not covered by the matching, split by how they attach.
struct XPartition {
	VertexSet x0; ///< N(x) = {v}
	VertexSet x1; ///< the rest
	VertexSet x2; ///< sees both endpoints of some matching edge
	VertexSet m1; ///< matched vertices adjacent to x1
};

std::optional<ReductionEvent> rule_component(PvcInstance &inst);
std::optional<ReductionEvent> rule_degree_one(PvcInstance &inst);
/// With k = 0 the vertex is deleted and the instance is flagged NO.
std::optional<ReductionEvent> rule_matching(PvcInstance &inst);
XPartition classify_neighbors(const PvcInstance &inst, VertexId v, const AdjacentMatching &am);
/// Requires an instance reduced under rules 2 and 3 (std::logic_error otherwise).
std::optional<ReductionEvent> rule_expansion(PvcInstance &inst);

enum class ComponentShape { star, triangle, small, star_with_triangle, di_star, other };

std::string_view to_string(ComponentShape shape);

bool is_star(const Graph &g);
bool is_triangle(const Graph &g);
bool is_star_with_triangle(const Graph &g);
bool is_di_star(const Graph &g);

/// Shape of a connected d-path-free graph: star/triangle for d = 4;
/// small (<= 4 vertices), star_with_triangle or di_star for d = 5.
/// Returns `other` when none applies.
ComponentShape classify_component(const Graph &component, int d);

class AuditError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

struct SizeAudit {
	std::size_t max_degree = 0;
	std::size_t degree_bound = 0;
	std::size_t edges_touching_packing = 0;
	std::size_t edges_outside_packing = 0;
	std::int64_t edge_bound = 0;
	std::map<ComponentShape, std::size_t> shapes;
	bool degree_bound_satisfied = true;
	bool edge_bound_satisfied = true;
};

/// Edge bound for a reduced instance: 96k^2+96k (d=4), 245k^2+245k (d=5).
std::int64_t small_kernel_edge_bound(int d, int k);

/// Classifies every component of G \ V(packing) and counts edges. Throws
/// AuditError if a component matches no allowed shape or has more vertices
/// without a packing neighbor than the shape permits.
SizeAudit audit_kernel_size(const PvcInstance &reduced, const Packing &packing);

struct SmallKernelResult {
	PvcInstance instance;
	ReductionTrace trace;
	KernelStats stats;
	std::optional<SizeAudit> audit;
};

/// Exhaustive rules 1-4, then a greedy packing on the result. Throws
/// std::logic_error if an undecided result breaks the degree or edge bound.
/// The returned instance is the reduced one; if a rule or the packing
/// settled the answer its verdict is set (see as_emitted()).
SmallKernelResult kernelize_small(const PvcInstance &input);

} // namespace dpvc
