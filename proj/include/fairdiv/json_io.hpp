#pragma once

#include <string>

#include <json.hpp>

#include "fairdiv/core.hpp"
#include "fairdiv/sequences.hpp"

namespace fairdiv {

// Document formats (all indices 1-based on the wire):
//   instance    {"agents": N, "objects": M, "weights": [[w, ...], ...]}
//               where w is a nonnegative integer or a string "p/q" / "p.q";
//               non-integer JSON numbers are rejected, exactness first.
//   allocation  {"shares": [[...], ...]}
//   sequence    {"picks": [...]}
// Parse failures throw ParseError naming the offending field or cell.

Instance instance_from_json(const nlohmann::json& doc);
Instance parse_instance(const std::string& text);
nlohmann::ordered_json instance_to_json(const Instance& instance);

Allocation allocation_from_json(const nlohmann::json& doc, const Instance& instance);
Allocation parse_allocation(const std::string& text, const Instance& instance);
nlohmann::ordered_json allocation_to_json(const Allocation& allocation);

Sequence sequence_from_json(const nlohmann::json& doc, const Instance& instance);
Sequence parse_sequence(const std::string& text, const Instance& instance);
nlohmann::ordered_json sequence_to_json(const Sequence& sequence);

// {"edges": [{"sequence": [...], "allocation": [[...]]}, ...]}
nlohmann::ordered_json relation_to_json(const GenerationRelation& relation);

}  // namespace fairdiv
