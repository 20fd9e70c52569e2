#include "fairdiv/sequences.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fairdiv {

namespace {

void validate_sequence(const Instance& instance, const Sequence& sequence) {
    if (static_cast<int>(sequence.picks.size()) != instance.num_objects())
        throw std::invalid_argument("sequence has " + std::to_string(sequence.picks.size()) +
                                    " picks, expected " +
                                    std::to_string(instance.num_objects()));
    for (Agent a : sequence.picks)
        if (a < 0 || a >= instance.num_agents())
            throw std::out_of_range("agent index " + std::to_string(a) + " out of range");
}

// Depth-first over the Choose branches. owner_of doubles as the state key:
// it pins both the assignment so far and the remaining pool, so a revisited
// vector can be pruned no matter which pick order produced it.
struct Executor {
    const Instance& instance;
    const Sequence& sequence;
    std::vector<signed char> owner_of;
    std::set<std::vector<signed char>> seen;
    std::set<std::vector<Agent>> results;

    void run(int step) {
        if (step == instance.num_objects()) {
            results.emplace(owner_of.begin(), owner_of.end());
            return;
        }
        if (!seen.insert(owner_of).second) return;
        Agent picker = sequence.picks[static_cast<std::size_t>(step)];
        const Rational* top = nullptr;
        for (Object l = 0; l < instance.num_objects(); ++l) {
            if (owner_of[static_cast<std::size_t>(l)] >= 0) continue;
            const Rational& w = instance.weight(picker, l);
            if (top == nullptr || w > *top) top = &w;
        }
        for (Object l = 0; l < instance.num_objects(); ++l) {
            if (owner_of[static_cast<std::size_t>(l)] >= 0) continue;
            if (instance.weight(picker, l) != *top) continue;
            owner_of[static_cast<std::size_t>(l)] = static_cast<signed char>(picker);
            run(step + 1);
            owner_of[static_cast<std::size_t>(l)] = -1;
        }
    }
};

}  // namespace

std::vector<Allocation> execute_sequence(const Instance& instance,
                                         const Sequence& sequence) {
    validate_sequence(instance, sequence);
    Executor exec{instance, sequence,
                  std::vector<signed char>(static_cast<std::size_t>(instance.num_objects()), -1),
                  {}, {}};
    exec.run(0);
    std::vector<Allocation> out;
    out.reserve(exec.results.size());
    for (const auto& owner_of : exec.results)
        out.push_back(Allocation::from_assignment(instance.num_agents(), owner_of));
    std::sort(out.begin(), out.end());
    return out;
}

SequencingResult sequence_or_witness(const Instance& instance,
                                     const Allocation& allocation) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    if (allocation.num_agents() != n || allocation.num_objects() != m)
        throw std::invalid_argument("allocation does not match the instance");

    std::vector<Agent> owner_of = allocation.to_assignment();
    std::vector<char> remaining(static_cast<std::size_t>(m), 1);
    Sequence sequence;
    sequence.picks.reserve(static_cast<std::size_t>(m));

    for (int step = 0; step < m; ++step) {
        int picked = -1;
        for (Agent i = 0; i < n && picked < 0; ++i) {
            const Rational* top = nullptr;
            for (Object l = 0; l < m; ++l) {
                if (!remaining[static_cast<std::size_t>(l)]) continue;
                const Rational& w = instance.weight(i, l);
                if (top == nullptr || w > *top) top = &w;
            }
            for (Object l = 0; l < m; ++l) {
                if (!remaining[static_cast<std::size_t>(l)]) continue;
                if (owner_of[static_cast<std::size_t>(l)] != i) continue;
                if (instance.weight(i, l) == *top) {
                    sequence.picks.push_back(i);
                    picked = l;
                    break;
                }
            }
        }
        if (picked < 0) {
            SequencingResult result;
            for (Object l = 0; l < m; ++l)
                if (remaining[static_cast<std::size_t>(l)])
                    result.frustrated_domain.push_back(l);
            return result;
        }
        remaining[static_cast<std::size_t>(picked)] = 0;
    }
    return {std::move(sequence), {}};
}

bool is_sequenceable(const Instance& instance, const Allocation& allocation) {
    return sequence_or_witness(instance, allocation).sequence.has_value();
}

std::optional<Sequence> sequence_of(const Instance& instance,
                                    const Allocation& allocation) {
    return sequence_or_witness(instance, allocation).sequence;
}

bool has_frustrating_restriction(const Instance& instance,
                                 const Allocation& allocation) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    if (m > 20)
        throw CapacityError("frustrating-restriction scan enumerates 2^M domains; M = " +
                            std::to_string(m) + " exceeds 20");
    std::vector<Agent> owner_of = allocation.to_assignment();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        bool frustrating = true;
        for (Agent i = 0; i < n && frustrating; ++i) {
            const Rational* top = nullptr;
            for (Object l = 0; l < m; ++l) {
                if (!(mask & (1u << l))) continue;
                const Rational& w = instance.weight(i, l);
                if (top == nullptr || w > *top) top = &w;
            }
            // Agents holding nothing of the domain are vacuously fine.
            for (Object l = 0; l < m; ++l) {
                if (!(mask & (1u << l))) continue;
                if (owner_of[static_cast<std::size_t>(l)] != i) continue;
                if (instance.weight(i, l) == *top) {
                    frustrating = false;
                    break;
                }
            }
        }
        if (frustrating) return true;
    }
    return false;
}

GenerationRelation enumerate_relation(const Instance& instance) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    allocation_space_size(n, m);  // same N^M bound for the sequence space

    GenerationRelation relation;
    std::vector<Agent> picks(static_cast<std::size_t>(m), 0);
    for (;;) {
        Sequence sequence{picks};
        for (Allocation& a : execute_sequence(instance, sequence))
            relation.edges.emplace_back(sequence, std::move(a));
        int pos = m - 1;
        while (pos >= 0 && picks[static_cast<std::size_t>(pos)] == n - 1) {
            picks[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++picks[static_cast<std::size_t>(pos)];
    }
    return relation;
}

}  // namespace fairdiv
