#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

// All allocations a picking sequence can generate when every pick is
// sincere: at step t the agent sequence.picks[t] takes some remaining object
// she values most. Ties branch; the result is deduplicated and sorted.
// Output size can grow exponentially in the amount of tying, so callers
// enumerating many sequences should hold instances to the N^M guard.
std::vector<Allocation> execute_sequence(const Instance& instance,
                                         const Sequence& sequence);

struct SequencingResult {
    // Present iff the allocation is sequenceable.
    std::optional<Sequence> sequence;
    // On failure: the residual domain O' on which the restriction of the
    // allocation is frustrating. Empty on success.
    std::vector<Object> frustrated_domain;
};

// Greedy sequencing: repeatedly find an agent holding one of her best
// remaining objects, emit her, remove that object. Deterministic tie-breaks:
// lowest agent index, then lowest object index. Runs in O(N M^2) weight
// comparisons. If the loop starves with objects left, that residual is a
// frustrating sub-allocation and the allocation is not sequenceable.
SequencingResult sequence_or_witness(const Instance& instance,
                                     const Allocation& allocation);

bool is_sequenceable(const Instance& instance, const Allocation& allocation);
std::optional<Sequence> sequence_of(const Instance& instance,
                                    const Allocation& allocation);

// Independent oracle for the same property: scans all 2^M - 1 nonempty
// domains for a frustrating restriction. Guarded at M <= 20.
bool has_frustrating_restriction(const Instance& instance,
                                 const Allocation& allocation);

// The full generation relation: every sequence paired with every allocation
// it can generate. Sequences come out in lexicographic order, allocations
// sorted within each sequence. Guarded by N^M <= 10^6 sequences.
struct GenerationRelation {
    std::vector<std::pair<Sequence, Allocation>> edges;
};

GenerationRelation enumerate_relation(const Instance& instance);

}  // namespace fairdiv
