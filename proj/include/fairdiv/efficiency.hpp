#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

// Ordered coarsest to finest: NS < SnP < PO.
enum class EfficiencyLevel {
    NonSequenceable,
    SequenceableNotPareto,
    ParetoOptimal,
};

std::string_view to_string(EfficiencyLevel level);  // "NS" / "SnP" / "PO"

// a dominates b: no agent worse off, at least one strictly better.
bool dominates(const Instance& instance, const Allocation& a, const Allocation& b);

// Exhaustive scan of all N^M allocations (CapacityError past 10^6).
bool is_pareto_optimal(const Instance& instance, const Allocation& allocation);

// agents[k]'s best remaining object is objects[k], held by agents[k+1]
// (cyclically). Rotating every objects[k] to agents[k] strictly improves
// each agent on the cycle.
struct TradingCycle {
    std::vector<Agent> agents;
    std::vector<Object> objects;
};

// For a non-sequenceable allocation, walks the frustrated residual domain
// from its lowest-indexed holder, following best-object edges until an agent
// repeats, and applies the cycle. The result strictly dominates the input,
// which proves non-sequenceable allocations are never Pareto-optimal.
// Returns nullopt iff the allocation is sequenceable. The cycle is reported
// rotated so the lowest-indexed agent comes first.
std::optional<std::pair<TradingCycle, Allocation>> trading_cycle_improvement(
    const Instance& instance, const Allocation& allocation);

EfficiencyLevel efficiency_level(const Instance& instance,
                                 const Allocation& allocation);

// Pareto flag for every allocation, indexed by its rank in the
// for_each_assignment order. One pass of utility collection plus a
// maximal-front sweep over ranks; agrees with is_pareto_optimal pointwise
// (tests enforce it) but amortizes the scan over the whole space.
std::vector<char> pareto_optimal_flags(const Instance& instance);

}  // namespace fairdiv
