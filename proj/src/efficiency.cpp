#include "fairdiv/efficiency.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fairdiv/sequences.hpp"

namespace fairdiv {

std::string_view to_string(EfficiencyLevel level) {
    switch (level) {
        case EfficiencyLevel::NonSequenceable: return "NS";
        case EfficiencyLevel::SequenceableNotPareto: return "SnP";
        case EfficiencyLevel::ParetoOptimal: return "PO";
    }
    throw std::invalid_argument("bad efficiency level");
}

namespace {

std::vector<Rational> utility_profile(const Instance& instance,
                                      const Allocation& allocation) {
    std::vector<Rational> u;
    u.reserve(static_cast<std::size_t>(instance.num_agents()));
    for (Agent i = 0; i < instance.num_agents(); ++i)
        u.push_back(utility(instance, i, allocation.share(i)));
    return u;
}

bool dominates_profile(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

}  // namespace

bool dominates(const Instance& instance, const Allocation& a, const Allocation& b) {
    return dominates_profile(utility_profile(instance, a), utility_profile(instance, b));
}

bool is_pareto_optimal(const Instance& instance, const Allocation& allocation) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    if (allocation.num_agents() != n || allocation.num_objects() != m)
        throw std::invalid_argument("allocation does not match the instance");
    allocation_space_size(n, m);

    std::vector<Rational> mine = utility_profile(instance, allocation);
    bool dominated = false;
    for_each_assignment(n, m, [&](std::span<const Agent> owner_of) {
        if (dominated) return;
        std::vector<Rational> u(static_cast<std::size_t>(n), Rational(0));
        for (std::size_t l = 0; l < owner_of.size(); ++l)
            u[static_cast<std::size_t>(owner_of[l])] +=
                instance.weight(owner_of[l], static_cast<Object>(l));
        if (dominates_profile(u, mine)) dominated = true;
    });
    return !dominated;
}

std::optional<std::pair<TradingCycle, Allocation>> trading_cycle_improvement(
    const Instance& instance, const Allocation& allocation) {
    SequencingResult seq = sequence_or_witness(instance, allocation);
    if (seq.sequence.has_value()) return std::nullopt;
    const std::vector<Object>& domain = seq.frustrated_domain;

    std::vector<Agent> owner_of = allocation.to_assignment();

    // Start at the lowest-indexed agent holding anything in the residual;
    // frustration means everything she holds there is non-top for her.
    Agent start = -1;
    for (Object l : domain) {
        Agent holder = owner_of[static_cast<std::size_t>(l)];
        if (start < 0 || holder < start) start = holder;
    }

    std::vector<Agent> path_agents;
    std::vector<Object> path_objects;
    std::vector<int> position(static_cast<std::size_t>(instance.num_agents()), -1);
    Agent current = start;
    int cycle_from = -1;
    for (;;) {
        if (position[static_cast<std::size_t>(current)] >= 0) {
            cycle_from = position[static_cast<std::size_t>(current)];
            break;
        }
        position[static_cast<std::size_t>(current)] =
            static_cast<int>(path_agents.size());
        Object top = best(instance, current, domain).front();
        path_agents.push_back(current);
        path_objects.push_back(top);
        current = owner_of[static_cast<std::size_t>(top)];
    }

    TradingCycle cycle;
    cycle.agents.assign(path_agents.begin() + cycle_from, path_agents.end());
    cycle.objects.assign(path_objects.begin() + cycle_from, path_objects.end());

    // Canonical rotation: lowest agent first.
    std::size_t k = cycle.agents.size();
    std::size_t rot = static_cast<std::size_t>(
        std::min_element(cycle.agents.begin(), cycle.agents.end()) -
        cycle.agents.begin());
    std::rotate(cycle.agents.begin(), cycle.agents.begin() + rot, cycle.agents.end());
    std::rotate(cycle.objects.begin(), cycle.objects.begin() + rot, cycle.objects.end());

    for (std::size_t j = 0; j < k; ++j)
        owner_of[static_cast<std::size_t>(cycle.objects[j])] = cycle.agents[j];
    Allocation improved = Allocation::from_assignment(instance.num_agents(), owner_of);
    return std::make_pair(std::move(cycle), std::move(improved));
}

EfficiencyLevel efficiency_level(const Instance& instance,
                                 const Allocation& allocation) {
    if (!is_sequenceable(instance, allocation))
        return EfficiencyLevel::NonSequenceable;
    return is_pareto_optimal(instance, allocation)
               ? EfficiencyLevel::ParetoOptimal
               : EfficiencyLevel::SequenceableNotPareto;
}

std::vector<char> pareto_optimal_flags(const Instance& instance) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    const std::int64_t count = allocation_space_size(n, m);

    // Utilities repeat heavily across assignments, so intern each agent's
    // share value on sight and rank the distinct values afterwards. Dominance
    // checks then run on small integers.
    std::vector<std::map<Rational, int>> interned(static_cast<std::size_t>(n));
    std::vector<int> ids(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));

    std::vector<Rational> u(static_cast<std::size_t>(n), Rational(0));
    std::size_t cursor = 0;
    for_each_assignment(n, m, [&](std::span<const Agent> owner_of) {
        for (auto& v : u) v = 0;
        for (std::size_t l = 0; l < owner_of.size(); ++l)
            u[static_cast<std::size_t>(owner_of[l])] +=
                instance.weight(owner_of[l], static_cast<Object>(l));
        for (int i = 0; i < n; ++i) {
            auto& table = interned[static_cast<std::size_t>(i)];
            auto it = table.emplace(u[static_cast<std::size_t>(i)],
                                    static_cast<int>(table.size())).first;
            ids[cursor++] = it->second;
        }
    });

    // id -> rank (ascending value order) per agent.
    std::vector<std::vector<int>> rank_of(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& table = interned[static_cast<std::size_t>(i)];
        auto& ranks = rank_of[static_cast<std::size_t>(i)];
        ranks.resize(table.size());
        int next = 0;
        for (auto& [value, id] : table) ranks[static_cast<std::size_t>(id)] = next++;
    }
    for (std::size_t s = 0; s < static_cast<std::size_t>(count); ++s)
        for (int i = 0; i < n; ++i)
            ids[s * n + i] = rank_of[static_cast<std::size_t>(i)][
                static_cast<std::size_t>(ids[s * n + i])];

    // Distinct rank profiles, most promising first: anything dominating a
    // profile has a strictly larger rank sum, so a profile only needs to be
    // checked against already-accepted front members.
    std::vector<std::size_t> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    auto profile_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(ids.begin() + a * n, ids.begin() + (a + 1) * n,
                                            ids.begin() + b * n, ids.begin() + (b + 1) * n);
    };
    std::sort(order.begin(), order.end(), profile_less);
    std::vector<std::size_t> distinct;
    for (std::size_t s : order)
        if (distinct.empty() || profile_less(distinct.back(), s)) distinct.push_back(s);

    std::stable_sort(distinct.begin(), distinct.end(), [&](std::size_t a, std::size_t b) {
        long sa = std::accumulate(ids.begin() + a * n, ids.begin() + (a + 1) * n, 0L);
        long sb = std::accumulate(ids.begin() + b * n, ids.begin() + (b + 1) * n, 0L);
        return sa > sb;
    });

    std::vector<std::size_t> front;
    for (std::size_t s : distinct) {
        bool dominated = false;
        for (std::size_t f : front) {
            bool ge = true, strict = false;
            for (int i = 0; i < n; ++i) {
                int a = ids[f * n + i], b = ids[s * n + i];
                if (a < b) { ge = false; break; }
                if (a > b) strict = true;
            }
            if (ge && strict) { dominated = true; break; }
        }
        if (!dominated) front.push_back(s);
    }

    std::sort(front.begin(), front.end(), profile_less);
    std::vector<char> flags(static_cast<std::size_t>(count), 0);
    for (std::size_t s = 0; s < static_cast<std::size_t>(count); ++s) {
        auto it = std::lower_bound(front.begin(), front.end(), s, profile_less);
        flags[s] = (it != front.end() && !profile_less(s, *it)) ? 1 : 0;
    }
    return flags;
}

}  // namespace fairdiv
