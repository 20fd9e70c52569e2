#include <doctest.h>

#include <algorithm>

#include "fairdiv/efficiency.hpp"
#include "fairdiv/sequences.hpp"
#include "test_util.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_CASE("dominance needs a strict improvement somewhere") {
    Instance inst = inst_2x3_plain();
    Allocation weak = make_allocation(inst, {{1}, {2, 3}});     // utilities (5, 3)
    Allocation strong = make_allocation(inst, {{2, 3}, {1}});   // utilities (6, 8)
    CHECK(dominates(inst, strong, weak));
    CHECK_FALSE(dominates(inst, weak, strong));
    CHECK_FALSE(dominates(inst, weak, weak));
    CHECK(utility(inst, 0, strong.share(0)) == 6);
    CHECK(utility(inst, 1, strong.share(1)) == 8);
}

TEST_CASE("pareto check by exhaustive scan") {
    Instance inst = inst_2x3_plain();
    CHECK_FALSE(is_pareto_optimal(inst, make_allocation(inst, {{1}, {2, 3}})));
    CHECK(is_pareto_optimal(inst, make_allocation(inst, {{2, 3}, {1}})));
    CHECK(is_pareto_optimal(inst, make_allocation(inst, {{1, 2, 3}, {}})));
    CHECK(efficiency_level(inst, make_allocation(inst, {{1}, {2, 3}})) ==
          EfficiencyLevel::SequenceableNotPareto);
    CHECK(efficiency_level(inst, make_allocation(inst, {{2, 3}, {1}})) ==
          EfficiencyLevel::ParetoOptimal);
}

TEST_CASE("level names") {
    CHECK(to_string(EfficiencyLevel::NonSequenceable) == "NS");
    CHECK(to_string(EfficiencyLevel::SequenceableNotPareto) == "SnP");
    CHECK(to_string(EfficiencyLevel::ParetoOptimal) == "PO");
}

TEST_CASE("trading cycle repairs a blocked three-agent allocation") {
    Instance inst = inst_3x5();
    Allocation blocked = make_allocation(inst, {{3, 5}, {1, 4}, {2}});
    CHECK(efficiency_level(inst, blocked) == EfficiencyLevel::NonSequenceable);

    auto improvement = trading_cycle_improvement(inst, blocked);
    REQUIRE(improvement.has_value());
    const auto& [cycle, improved] = *improvement;
    CHECK(cycle.agents == std::vector<Agent>{0, 1});
    CHECK(cycle.objects == std::vector<Object>{3, 2});  // objects 4 and 3
    CHECK(improved == make_allocation(inst, {{4, 5}, {1, 3}, {2}}));
    CHECK(dominates(inst, improved, blocked));

    // Sequenceable input: nothing to repair.
    CHECK_FALSE(trading_cycle_improvement(inst, improved).has_value());
}

TEST_CASE("trading cycles are structurally sound on random blocked allocations") {
    int repaired = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = random_instance(3, 5, seed, GeneratorModel::Uniform, 9);
        for (const Allocation& a : all_allocations(inst)) {
            if (is_sequenceable(inst, a)) continue;
            auto improvement = trading_cycle_improvement(inst, a);
            REQUIRE(improvement.has_value());
            const auto& [cycle, improved] = *improvement;
            ++repaired;

            REQUIRE(cycle.agents.size() >= 2);
            REQUIRE(cycle.agents.size() == cycle.objects.size());
            std::vector<Agent> owner_of = a.to_assignment();
            std::size_t k = cycle.agents.size();
            for (std::size_t j = 0; j < k; ++j) {
                // objects[j] moves from the next agent on the cycle to agents[j],
                // and the move is a strict gain for the receiver.
                CHECK(owner_of[static_cast<std::size_t>(cycle.objects[j])] ==
                      cycle.agents[(j + 1) % k]);
                CHECK(inst.weight(cycle.agents[j], cycle.objects[j]) >
                      inst.weight(cycle.agents[j],
                                  cycle.objects[(j + k - 1) % k]));
            }
            CHECK(dominates(inst, improved, a));
        }
    }
    CHECK(repaired > 50);
}

TEST_CASE("pareto optimal allocations are sequenceable") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        Instance inst = random_instance(2, 4, seed, GeneratorModel::Uniform, 7);
        for (const Allocation& a : all_allocations(inst))
            if (is_pareto_optimal(inst, a)) CHECK(is_sequenceable(inst, a));
    }
}

TEST_CASE("batched pareto flags match the direct check") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        Instance inst = random_instance(3, 4, seed, GeneratorModel::Uniform, 6);
        std::vector<char> flags = pareto_optimal_flags(inst);
        std::size_t rank = 0;
        for (const Allocation& a : all_allocations(inst)) {
            CHECK(static_cast<bool>(flags[rank]) == is_pareto_optimal(inst, a));
            ++rank;
        }
        CHECK(rank == flags.size());
    }
}

TEST_CASE("a dominating allocation always exists for non-pareto inputs") {
    Instance inst = inst_2x4();
    for (const Allocation& a : all_allocations(inst)) {
        if (is_pareto_optimal(inst, a)) continue;
        bool found = false;
        for (const Allocation& b : all_allocations(inst))
            if (dominates(inst, b, a)) {
                found = true;
                break;
            }
        CHECK(found);
    }
}
