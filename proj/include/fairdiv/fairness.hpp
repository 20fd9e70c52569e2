#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

// Ordered weakest to strongest. Every level implies all levels below it for
// additive weights; the scale degenerates gracefully when a stronger notion
// fails.
enum class FairnessLevel {
    None,
    MaxminShare,    // "MFS"
    Proportional,   // "PFS"
    MinmaxShare,    // "mFS"
    EnvyFree,       // "EF"
    Ceei,           // "CEEI"
};

std::string_view to_string(FairnessLevel level);

// Nobody values another share strictly above her own.
bool is_envy_free(const Instance& instance, const Allocation& allocation);

// 1/N of the agent's value for everything.
Rational proportional_share(const Instance& instance, Agent agent);
bool satisfies_proportionality(const Instance& instance, const Allocation& allocation);

// Best worst-share (maxmin) and worst best-share (minmax) over all N-share
// labeled partitions of the objects, valued by this agent alone. Empty
// shares are allowed in the partitions. Exhaustive over N^M partitions,
// CapacityError past 10^6.
Rational maxmin_share(const Instance& instance, Agent agent);
Rational minmax_share(const Instance& instance, Agent agent);

bool satisfies_maxmin_share(const Instance& instance, const Allocation& allocation);
bool satisfies_minmax_share(const Instance& instance, const Allocation& allocation);

struct ShareThresholds {
    Rational maxmin;
    Rational proportional;
    Rational minmax;
};

// All agents' thresholds out of a single sweep of the partition space.
std::vector<ShareThresholds> share_thresholds(const Instance& instance);

// Deciding the top level needs a pricing engine; callers inject it so this
// module stays below that machinery in the dependency order.
using CeeiPredicate =
    std::function<bool(const Instance&, const Allocation&)>;

FairnessLevel fairness_level(const Instance& instance, const Allocation& allocation,
                             const CeeiPredicate& is_ceei);

}  // namespace fairdiv
