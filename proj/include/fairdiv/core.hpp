#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

// Agents and objects are 0-based everywhere inside the library. The JSON
// documents and the CLI speak 1-based; json_io does the shifting.
using Agent = int;
using Object = int;

// A share is a strictly increasing list of object indices. Empty is fine.
using Share = std::vector<Object>;

struct Sequence {
    std::vector<Agent> picks;

    bool operator==(const Sequence&) const = default;
};

// An additive instance: N agents, M objects, nonnegative rational weights.
class Instance {
public:
    Instance(int num_agents, int num_objects,
             std::vector<std::vector<Rational>> weights);

    int num_agents() const { return num_agents_; }
    int num_objects() const { return num_objects_; }

    // Range-checked; throws std::out_of_range.
    const Rational& weight(Agent agent, Object object) const;

    const std::vector<std::vector<Rational>>& weights() const { return weights_; }

private:
    int num_agents_;
    int num_objects_;
    std::vector<std::vector<Rational>> weights_;
};

// One share per agent over some subset of the objects; shares are pairwise
// disjoint and their union is the domain. Construction sorts each share and
// rejects duplicates, overlaps and out-of-range indices.
class SubAllocation {
public:
    SubAllocation(int num_agents, std::vector<Share> shares);

    int num_agents() const { return static_cast<int>(shares_.size()); }
    const Share& share(Agent agent) const;
    const std::vector<Share>& shares() const { return shares_; }

    // Sorted union of all shares.
    const std::vector<Object>& domain() const { return domain_; }

private:
    std::vector<Share> shares_;
    std::vector<Object> domain_;
};

// A full allocation: the domain is exactly {0, ..., num_objects-1}.
class Allocation {
public:
    Allocation(int num_agents, int num_objects, std::vector<Share> shares);

    // owner_of[l] = agent holding object l.
    static Allocation from_assignment(int num_agents,
                                      std::span<const Agent> owner_of);
    std::vector<Agent> to_assignment() const;

    int num_agents() const { return sub_.num_agents(); }
    int num_objects() const { return num_objects_; }
    const Share& share(Agent agent) const { return sub_.share(agent); }
    const std::vector<Share>& shares() const { return sub_.shares(); }
    const SubAllocation& as_sub_allocation() const { return sub_; }

    // Drops every object outside `domain`; shares keep their owners.
    SubAllocation restricted_to(std::span<const Object> domain) const;

    bool operator==(const Allocation& other) const {
        return sub_.shares() == other.sub_.shares();
    }
    // Lexicographic on the shares, so containers of allocations sort the way
    // the external edge lists are required to.
    bool operator<(const Allocation& other) const {
        return sub_.shares() < other.sub_.shares();
    }

private:
    Allocation(int num_objects, SubAllocation sub);

    int num_objects_;
    SubAllocation sub_;
};

// Sum of the agent's weights over the share, under her own valuation.
Rational utility(const Instance& instance, Agent agent, const Share& share);

// Objects of `pool` maximizing the agent's weight, in increasing index
// order. Pool must be nonempty (std::domain_error otherwise).
std::vector<Object> best(const Instance& instance, Agent agent,
                         std::span<const Object> pool);

// True iff no agent with a nonempty share holds one of her best objects of
// the domain. Empty domain is a domain_error: frustration is only defined
// for nonempty sub-allocations.
bool is_frustrating(const Instance& instance, const SubAllocation& sub);

// No two objects tie for any single agent.
bool strict_on_objects(const Instance& instance);

// All 2^M share values are distinct for every agent. Enumeration is guarded
// at num_objects <= 25 (CapacityError).
bool strict_on_shares(const Instance& instance);

// If every agent ranks the objects identically (ties allowed within an
// agent as long as a common non-increasing order exists), returns one such
// order, best object first. Otherwise nullopt.
std::optional<std::vector<Object>> same_order(const Instance& instance);

// N^M, or CapacityError when it exceeds `limit`.
std::int64_t allocation_space_size(int num_agents, int num_objects,
                                   std::int64_t limit = 1'000'000);

// Visits every owner vector in lexicographic order (owner_of[M-1] moving
// fastest): fn(std::span<const Agent> owner_of). An allocation's rank in
// this order is sum owner_of[l] * N^(M-1-l).
template <class Fn>
void for_each_assignment(int num_agents, int num_objects, Fn&& fn) {
    std::vector<Agent> owner_of(static_cast<std::size_t>(num_objects), 0);
    std::span<const Agent> view(owner_of);
    for (;;) {
        fn(view);
        int pos = num_objects - 1;
        while (pos >= 0 && owner_of[pos] == num_agents - 1) {
            owner_of[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
        ++owner_of[pos];
    }
}

}  // namespace fairdiv
