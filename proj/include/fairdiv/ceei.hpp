#pragma once

#include <optional>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/lp.hpp"

namespace fairdiv {

struct PriceVector {
    std::vector<Rational> prices;  // one per object, each in [0, 1]
};

// Inclusion-minimal bundles this agent strictly prefers to her share. With
// nonnegative additive weights a bundle is minimal iff dropping any single
// object already sinks it to the share's value or below, so the 2^M scan
// (M <= 20, CapacityError past that) tests only single-object removals.
std::vector<Share> better_bundles(const Instance& instance,
                                  const Allocation& allocation, Agent agent);

// Equilibrium prices exist iff this system has a solution over p' >= 0,
// d >= 0:
//     p'_l           <= d      every object        (price cap, p = p'/d <= 1)
//     sum p'[share]  <= d      every agent         (budget feasibility)
//     sum p'[bundle] >= d + 1  every better bundle (strictly unaffordable)
// It is the strict-inequality pricing system scaled by a common denominator
// d, which turns "cost > 1" into the closed "cost >= d+1" and makes the
// whole thing plain LP feasibility. Better-bundle rows beyond the
// inclusion-minimal ones are implied (prices are nonnegative) and dropped.
struct ReducedSystem {
    std::vector<Share> affordable;  // agent shares, agent order
    std::vector<Share> better;      // deduplicated union, lexicographic
};

ReducedSystem reduced_system(const Instance& instance, const Allocation& allocation);

// The system above as constraints over variables p'_0..p'_{M-1}, d.
std::vector<lp::LinearConstraint> system_constraints(const ReducedSystem& system,
                                                     int num_objects);

// Decides whether the allocation is a competitive equilibrium with equal
// incomes and returns witnessing prices. Short-circuits on two necessary
// conditions before pricing: an equilibrium allocation is envy-free (another
// agent's share is affordable at her budget, so it cannot beat a
// utility-maximal affordable share) and sequenceable. Returned prices are
// re-verified against the definition; failure there is a bug, not a result.
std::optional<PriceVector> ceei_test(const Instance& instance,
                                     const Allocation& allocation);

// Direct check of the definition at given prices: everything priced in
// [0,1], every share affordable at budget 1, every strictly better bundle
// strictly unaffordable. Scans all 2^M bundles per agent (M <= 20).
bool verify_ceei(const Instance& instance, const Allocation& allocation,
                 const PriceVector& prices);

// fairness_level with ceei_test plugged in.
FairnessLevel full_fairness_level(const Instance& instance,
                                  const Allocation& allocation);

}  // namespace fairdiv
