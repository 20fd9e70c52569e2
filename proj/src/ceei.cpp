#include "fairdiv/ceei.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "fairdiv/sequences.hpp"

namespace fairdiv {

namespace {

void check_bundle_capacity(int num_objects, const char* what) {
    if (num_objects > 20)
        throw CapacityError(std::string(what) + " enumerates 2^M bundles; M = " +
                            std::to_string(num_objects) + " exceeds 20");
}

}  // namespace

std::vector<Share> better_bundles(const Instance& instance,
                                  const Allocation& allocation, Agent agent) {
    const int m = instance.num_objects();
    check_bundle_capacity(m, "better_bundles");
    if (allocation.num_agents() != instance.num_agents() ||
        allocation.num_objects() != m)
        throw std::invalid_argument("allocation does not match the instance");

    // Subset sums of the agent's row, indexed by bundle mask.
    std::vector<Rational> value(std::size_t(1) << m);
    for (std::size_t mask = 1; mask < value.size(); ++mask) {
        unsigned low = static_cast<unsigned>(std::countr_zero(mask));
        value[mask] = value[mask & (mask - 1)] + instance.weight(agent, static_cast<Object>(low));
    }
    Rational own = utility(instance, agent, allocation.share(agent));

    std::vector<Share> out;
    for (std::size_t mask = 1; mask < value.size(); ++mask) {
        if (value[mask] <= own) continue;
        bool minimal = true;
        for (unsigned rest = static_cast<unsigned>(mask); rest && minimal;
             rest &= rest - 1) {
            std::size_t without = mask ^ (rest & (0u - rest));
            if (value[without] > own) minimal = false;
        }
        if (!minimal) continue;
        Share bundle;
        for (int l = 0; l < m; ++l)
            if (mask & (std::size_t(1) << l)) bundle.push_back(l);
        out.push_back(std::move(bundle));
    }
    return out;
}

ReducedSystem reduced_system(const Instance& instance, const Allocation& allocation) {
    ReducedSystem system;
    system.affordable = allocation.shares();
    std::set<Share> merged;
    for (Agent i = 0; i < instance.num_agents(); ++i)
        for (Share& bundle : better_bundles(instance, allocation, i))
            merged.insert(std::move(bundle));
    system.better.assign(merged.begin(), merged.end());
    return system;
}

std::vector<lp::LinearConstraint> system_constraints(const ReducedSystem& system,
                                                     int num_objects) {
    const std::size_t n_vars = static_cast<std::size_t>(num_objects) + 1;  // p' and d
    const std::size_t d_var = static_cast<std::size_t>(num_objects);
    std::vector<lp::LinearConstraint> constraints;

    auto bundle_row = [&](const Share& bundle, lp::Relation relation, Rational bound) {
        lp::LinearConstraint c;
        c.coefficients.assign(n_vars, Rational(0));
        for (Object l : bundle) c.coefficients[static_cast<std::size_t>(l)] = 1;
        c.coefficients[d_var] = -1;
        c.relation = relation;
        c.bound = std::move(bound);
        constraints.push_back(std::move(c));
    };

    for (int l = 0; l < num_objects; ++l)
        bundle_row({static_cast<Object>(l)}, lp::Relation::LessEq, Rational(0));
    for (const Share& share : system.affordable)
        bundle_row(share, lp::Relation::LessEq, Rational(0));
    for (const Share& bundle : system.better)
        bundle_row(bundle, lp::Relation::GreaterEq, Rational(1));
    return constraints;
}

bool verify_ceei(const Instance& instance, const Allocation& allocation,
                 const PriceVector& prices) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    check_bundle_capacity(m, "verify_ceei");
    if (static_cast<int>(prices.prices.size()) != m)
        throw std::invalid_argument("expected one price per object");
    for (const Rational& p : prices.prices)
        if (p < 0 || p > 1) return false;

    for (Agent i = 0; i < n; ++i) {
        Rational own = utility(instance, i, allocation.share(i));
        Rational own_cost(0);
        for (Object l : allocation.share(i))
            own_cost += prices.prices[static_cast<std::size_t>(l)];
        if (own_cost > 1) return false;

        // Gray-code walk over all bundles, one weight and one price away
        // from the previous bundle each step.
        Rational value(0), cost(0);
        std::size_t mask = 0;
        for (std::size_t k = 1; k < (std::size_t(1) << m); ++k) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(k));
            std::size_t flipped = std::size_t(1) << bit;
            mask ^= flipped;
            if (mask & flipped) {
                value += instance.weight(i, static_cast<Object>(bit));
                cost += prices.prices[bit];
            } else {
                value -= instance.weight(i, static_cast<Object>(bit));
                cost -= prices.prices[bit];
            }
            if (value > own && cost <= 1) return false;
        }
    }
    return true;
}

std::optional<PriceVector> ceei_test(const Instance& instance,
                                     const Allocation& allocation) {
    if (!is_envy_free(instance, allocation)) return std::nullopt;
    if (!is_sequenceable(instance, allocation)) return std::nullopt;

    const int m = instance.num_objects();
    ReducedSystem system = reduced_system(instance, allocation);

    PriceVector result;
    if (system.better.empty()) {
        // No agent can do better at any prices; free everything.
        result.prices.assign(static_cast<std::size_t>(m), Rational(0));
    } else {
        std::vector<int> nonneg(static_cast<std::size_t>(m) + 1);
        for (std::size_t v = 0; v < nonneg.size(); ++v) nonneg[v] = static_cast<int>(v);
        lp::FeasibilityResult lp_result =
            lp::feasible(system_constraints(system, m), nonneg);
        if (!lp_result.feasible()) return std::nullopt;

        const std::vector<Rational>& witness = *lp_result.witness;
        const Rational& d = witness[static_cast<std::size_t>(m)];
        // d = 0 would force p' = 0 on the allocated objects and contradict
        // the better-bundle rows, which demand >= d + 1 = 1.
        if (d <= 0) throw std::logic_error("degenerate scaling in price recovery");
        result.prices.reserve(static_cast<std::size_t>(m));
        for (int l = 0; l < m; ++l)
            result.prices.push_back(witness[static_cast<std::size_t>(l)] / d);
    }

    if (!verify_ceei(instance, allocation, result))
        throw std::logic_error("recovered prices fail the equilibrium check");
    return result;
}

FairnessLevel full_fairness_level(const Instance& instance,
                                  const Allocation& allocation) {
    return fairness_level(instance, allocation,
                          [](const Instance& inst, const Allocation& alloc) {
                              return ceei_test(inst, alloc).has_value();
                          });
}

}  // namespace fairdiv
