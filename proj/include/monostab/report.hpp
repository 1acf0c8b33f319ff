#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monostab/stability.hpp"

namespace monostab::report {

using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& I);
Json to_json(const MonomialPrime& p, const VariableContext& ctx);
Json to_json(const AssSet& ass, const VariableContext& ctx);
Json to_json(const std::vector<IrreducibleComponent>& comps, const VariableContext& ctx);
Json to_json(const VReport& v, const VariableContext& ctx);
Json to_json(const StabilityEstimate& s, const VariableContext& ctx);
Json to_json(const PowerProfile& profile);
Json to_json(const InequalityReport& r, const VariableContext& ctx);

// "5k-1", "2k", "k+3"
std::string format_line(const Line& line);

// Aligned per-k table: k, generators, components, |Ass|, v, v - alpha*k, Ass.
std::string profile_table(const PowerProfile& profile);
std::string profile_csv(const PowerProfile& profile);

// Left-aligned columns separated by two spaces.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace monostab::report
