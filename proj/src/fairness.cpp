#include "fairdiv/fairness.hpp"

#include <stdexcept>

namespace fairdiv {

std::string_view to_string(FairnessLevel level) {
    switch (level) {
        case FairnessLevel::None: return "none";
        case FairnessLevel::MaxminShare: return "MFS";
        case FairnessLevel::Proportional: return "PFS";
        case FairnessLevel::MinmaxShare: return "mFS";
        case FairnessLevel::EnvyFree: return "EF";
        case FairnessLevel::Ceei: return "CEEI";
    }
    throw std::invalid_argument("bad fairness level");
}

bool is_envy_free(const Instance& instance, const Allocation& allocation) {
    const int n = instance.num_agents();
    if (allocation.num_agents() != n || allocation.num_objects() != instance.num_objects())
        throw std::invalid_argument("allocation does not match the instance");
    for (Agent i = 0; i < n; ++i) {
        Rational own = utility(instance, i, allocation.share(i));
        for (Agent j = 0; j < n; ++j)
            if (j != i && utility(instance, i, allocation.share(j)) > own) return false;
    }
    return true;
}

Rational proportional_share(const Instance& instance, Agent agent) {
    Rational total(0);
    for (Object l = 0; l < instance.num_objects(); ++l)
        total += instance.weight(agent, l);
    return total / instance.num_agents();
}

bool satisfies_proportionality(const Instance& instance, const Allocation& allocation) {
    for (Agent i = 0; i < instance.num_agents(); ++i)
        if (utility(instance, i, allocation.share(i)) < proportional_share(instance, i))
            return false;
    return true;
}

namespace {

// One partition-space sweep valued by every agent at once. For each labeled
// partition and each agent, feed that agent's worst and best share value
// into her running maxmin / minmax.
std::vector<ShareThresholds> sweep_thresholds(const Instance& instance) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    allocation_space_size(n, m);

    std::vector<ShareThresholds> out(static_cast<std::size_t>(n));
    for (Agent i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)].proportional = proportional_share(instance, i);

    // bucket[i][j]: agent i's value of share j under the current partition.
    std::vector<std::vector<Rational>> bucket(
        static_cast<std::size_t>(n),
        std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    bool first = true;
    for_each_assignment(n, m, [&](std::span<const Agent> owner_of) {
        for (auto& row : bucket)
            for (auto& v : row) v = 0;
        for (std::size_t l = 0; l < owner_of.size(); ++l)
            for (Agent i = 0; i < n; ++i)
                bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(owner_of[l])] +=
                    instance.weight(i, static_cast<Object>(l));
        for (Agent i = 0; i < n; ++i) {
            const auto& row = bucket[static_cast<std::size_t>(i)];
            const Rational* worst = &row[0];
            const Rational* best_v = &row[0];
            for (int j = 1; j < n; ++j) {
                if (row[static_cast<std::size_t>(j)] < *worst)
                    worst = &row[static_cast<std::size_t>(j)];
                if (row[static_cast<std::size_t>(j)] > *best_v)
                    best_v = &row[static_cast<std::size_t>(j)];
            }
            auto& t = out[static_cast<std::size_t>(i)];
            if (first || *worst > t.maxmin) t.maxmin = *worst;
            if (first || *best_v < t.minmax) t.minmax = *best_v;
        }
        first = false;
    });
    return out;
}

}  // namespace

std::vector<ShareThresholds> share_thresholds(const Instance& instance) {
    return sweep_thresholds(instance);
}

Rational maxmin_share(const Instance& instance, Agent agent) {
    if (agent < 0 || agent >= instance.num_agents())
        throw std::out_of_range("agent index out of range");
    return sweep_thresholds(instance)[static_cast<std::size_t>(agent)].maxmin;
}

Rational minmax_share(const Instance& instance, Agent agent) {
    if (agent < 0 || agent >= instance.num_agents())
        throw std::out_of_range("agent index out of range");
    return sweep_thresholds(instance)[static_cast<std::size_t>(agent)].minmax;
}

bool satisfies_maxmin_share(const Instance& instance, const Allocation& allocation) {
    auto thresholds = share_thresholds(instance);
    for (Agent i = 0; i < instance.num_agents(); ++i)
        if (utility(instance, i, allocation.share(i)) <
            thresholds[static_cast<std::size_t>(i)].maxmin)
            return false;
    return true;
}

bool satisfies_minmax_share(const Instance& instance, const Allocation& allocation) {
    auto thresholds = share_thresholds(instance);
    for (Agent i = 0; i < instance.num_agents(); ++i)
        if (utility(instance, i, allocation.share(i)) <
            thresholds[static_cast<std::size_t>(i)].minmax)
            return false;
    return true;
}

FairnessLevel fairness_level(const Instance& instance, const Allocation& allocation,
                             const CeeiPredicate& is_ceei) {
    if (is_envy_free(instance, allocation)) {
        if (is_ceei && is_ceei(instance, allocation)) return FairnessLevel::Ceei;
        return FairnessLevel::EnvyFree;
    }
    auto thresholds = share_thresholds(instance);
    bool maxmin_ok = true, prop_ok = true, minmax_ok = true;
    for (Agent i = 0; i < instance.num_agents(); ++i) {
        Rational own = utility(instance, i, allocation.share(i));
        const auto& t = thresholds[static_cast<std::size_t>(i)];
        if (own < t.maxmin) maxmin_ok = false;
        if (own < t.proportional) prop_ok = false;
        if (own < t.minmax) minmax_ok = false;
    }
    if (minmax_ok) return FairnessLevel::MinmaxShare;
    if (prop_ok) return FairnessLevel::Proportional;
    if (maxmin_ok) return FairnessLevel::MaxminShare;
    return FairnessLevel::None;
}

}  // namespace fairdiv
