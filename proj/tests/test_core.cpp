#include <doctest.h>

#include <algorithm>
#include <set>

#include "fairdiv/core.hpp"
#include "test_util.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_CASE("instance construction validates shape and sign") {
    CHECK_THROWS_AS(Instance(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 0, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(2, 2, {{Rational(1), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 2, {{Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Instance(1, 2, {{Rational(1), Rational(-1)}}), std::invalid_argument);
    Instance ok(1, 2, {{Rational(0), Rational(5)}});
    CHECK(ok.weight(0, 1) == 5);
    CHECK_THROWS_AS(ok.weight(1, 0), std::out_of_range);
    CHECK_THROWS_AS(ok.weight(0, 2), std::out_of_range);
}

TEST_CASE("allocations partition the full object set") {
    Instance inst = inst_2x3_ties();
    Allocation a = make_allocation(inst, {{1, 3}, {2}});
    CHECK(a.share(0) == Share{0, 2});
    CHECK(a.share(1) == Share{1});
    CHECK(a.to_assignment() == std::vector<Agent>{0, 1, 0});
    CHECK(Allocation::from_assignment(2, std::vector<Agent>{0, 1, 0}) == a);

    CHECK_THROWS_AS(Allocation(2, 3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(Allocation(2, 3, {{0}, {2}}), std::invalid_argument);        // hole
    CHECK_THROWS_AS(Allocation(2, 3, {{0, 0, 1}, {2}}), std::invalid_argument);  // dup
    CHECK_THROWS_AS(Allocation(2, 3, {{0, 1, 3}, {2}}), std::invalid_argument);  // range
}

TEST_CASE("restriction keeps owners and drops the rest") {
    Instance inst = inst_3x5();
    Allocation a = make_allocation(inst, {{3, 5}, {1, 4}, {2}});
    std::vector<Object> domain{2, 3, 4};  // objects 3, 4, 5
    SubAllocation sub = a.restricted_to(domain);
    CHECK(sub.share(0) == Share{2, 4});
    CHECK(sub.share(1) == Share{3});
    CHECK(sub.share(2).empty());
    CHECK(sub.domain() == domain);
}

TEST_CASE("utility is additive over disjoint shares") {
    Instance inst = random_instance(3, 6, 17);
    for (Agent i = 0; i < 3; ++i) {
        Rational whole = utility(inst, i, Share{0, 1, 2, 3, 4, 5});
        Rational split = utility(inst, i, Share{0, 2, 4}) + utility(inst, i, Share{1, 3, 5});
        CHECK(whole == split);
    }
    CHECK(utility(inst, 0, Share{}) == 0);
}

TEST_CASE("best returns the exact argmax set") {
    Instance inst = inst_2x3_ties();
    std::vector<Object> pool{0, 1, 2};
    CHECK(best(inst, 0, pool) == std::vector<Object>{0});
    CHECK(best(inst, 1, pool) == std::vector<Object>{0, 2});  // tie at weight 5
    std::vector<Object> rest{1, 2};
    CHECK(best(inst, 1, rest) == std::vector<Object>{2});
    CHECK_THROWS_AS(best(inst, 0, std::vector<Object>{}), std::domain_error);
}

TEST_CASE("frustration holds exactly when nobody holds a top object") {
    Instance inst = inst_2x3_opposed();
    // Agent 1 holds 2 and 3 (her weak objects), agent 2 holds 1 (hers).
    SubAllocation swapped(2, {{1, 2}, {0}});
    CHECK(is_frustrating(inst, swapped));
    SubAllocation natural(2, {{0}, {1, 2}});
    CHECK_FALSE(is_frustrating(inst, natural));
    // Only object 2 in play: its holder tops it by default.
    SubAllocation tiny(2, {{1}, {}});
    CHECK_FALSE(is_frustrating(inst, tiny));
    CHECK_THROWS_AS(is_frustrating(inst, SubAllocation(2, {{}, {}})), std::domain_error);
}

TEST_CASE("strictness predicates") {
    CHECK(strict_on_objects(inst_2x4()));
    CHECK_FALSE(strict_on_objects(inst_2x3_ties()));  // agent 2 ties 5 = 5

    // 1 + 2 = 3 breaks share strictness while objects stay strict.
    Instance shares_collide = make_instance({{1, 2, 3}});
    CHECK(strict_on_objects(shares_collide));
    CHECK_FALSE(strict_on_shares(shares_collide));

    Instance shares_strict = make_instance({{1, 2, 4}, {1, 10, 100}});
    CHECK(strict_on_shares(shares_strict));

    // Strict on shares forces strict on objects: singletons are shares too.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = random_instance(2, 5, seed, GeneratorModel::Uniform, 12);
        if (strict_on_shares(inst)) CHECK(strict_on_objects(inst));
    }
}

TEST_CASE("strict_on_shares matches a direct subset-sum scan") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Instance inst = random_instance(2, 6, seed, GeneratorModel::Uniform, 9);
        bool expected = true;
        for (Agent i = 0; i < inst.num_agents() && expected; ++i) {
            std::set<Rational> sums;
            for (unsigned mask = 0; mask < 64u; ++mask) {
                Rational sum(0);
                for (int l = 0; l < 6; ++l)
                    if (mask & (1u << l)) sum += inst.weight(i, l);
                if (!sums.insert(sum).second) expected = false;
            }
        }
        CHECK(strict_on_shares(inst) == expected);
    }
}

TEST_CASE("same_order finds a witness exactly when one exists") {
    CHECK_FALSE(same_order(inst_2x3_opposed()).has_value());
    CHECK_FALSE(same_order(inst_2x4()).has_value());

    Instance aligned = make_instance({{4, 3, 2, 1}, {8, 6, 4, 2}, {9, 9, 1, 0}});
    auto order = same_order(aligned);
    REQUIRE(order.has_value());
    // Witness must be non-increasing for every agent.
    for (std::size_t k = 1; k < order->size(); ++k)
        for (Agent i = 0; i < aligned.num_agents(); ++i)
            CHECK(aligned.weight(i, (*order)[k - 1]) >= aligned.weight(i, (*order)[k]));

    // Brute-force cross-check on tiny instances: try all object permutations.
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        Instance inst = random_instance(2, 4, seed, GeneratorModel::Uniform, 3);
        std::vector<Object> perm{0, 1, 2, 3};
        bool expected = false;
        do {
            bool ok = true;
            for (std::size_t k = 1; k < perm.size() && ok; ++k)
                for (Agent i = 0; i < inst.num_agents(); ++i)
                    if (inst.weight(i, perm[k - 1]) < inst.weight(i, perm[k])) {
                        ok = false;
                        break;
                    }
            if (ok) expected = true;
        } while (!expected && std::next_permutation(perm.begin(), perm.end()));
        CHECK(same_order(inst).has_value() == expected);
    }
}

TEST_CASE("assignment enumeration is lexicographic and complete") {
    std::vector<std::vector<Agent>> seen;
    for_each_assignment(2, 3, [&](std::span<const Agent> owner_of) {
        seen.emplace_back(owner_of.begin(), owner_of.end());
    });
    CHECK(seen.size() == 8);
    CHECK(seen.front() == std::vector<Agent>{0, 0, 0});
    CHECK(seen[1] == std::vector<Agent>{0, 0, 1});
    CHECK(seen.back() == std::vector<Agent>{1, 1, 1});
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    CHECK(allocation_space_size(3, 5) == 243);
    CHECK(allocation_space_size(1, 4) == 1);
    CHECK_THROWS_AS(allocation_space_size(3, 13), CapacityError);
    CHECK_THROWS_AS(strict_on_shares(random_instance(1, 26, 1)), CapacityError);
}
