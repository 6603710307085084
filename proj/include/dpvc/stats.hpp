#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "dpvc/instance.hpp"

namespace dpvc {

/// Flat record describing one kernelization run.
struct KernelStats {
	std::string method;
	int d = 0;
	int k = 0;
	int k_out = 0;
	std::size_t n_in = 0;
	std::size_t m_in = 0;
	std::size_t n_out = 0;
	std::size_t m_out = 0;
	Verdict verdict = Verdict::undecided;
	std::size_t packing_size = 0;
	/// Edge bound for the output, when the method has a closed-form one.
	std::optional<std::int64_t> bound;
	bool bound_satisfied = true;
	std::map<std::string, std::size_t> rule_firings;
	std::map<std::string, std::size_t> audit;
	std::map<std::string, std::uint64_t> marks;
};

nlohmann::json to_json(const KernelStats &stats);

} // namespace dpvc
