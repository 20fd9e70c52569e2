#include "fairdiv/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fairdiv {

namespace {

std::string cell(int row, int col) {
    // 1-based in messages, matching the external documents.
    return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

}  // namespace

Instance::Instance(int num_agents, int num_objects,
                   std::vector<std::vector<Rational>> weights)
    : num_agents_(num_agents), num_objects_(num_objects), weights_(std::move(weights)) {
    if (num_agents_ < 1) throw std::invalid_argument("instance needs at least one agent");
    if (num_objects_ < 1) throw std::invalid_argument("instance needs at least one object");
    if (static_cast<int>(weights_.size()) != num_agents_)
        throw std::invalid_argument("weight matrix has " + std::to_string(weights_.size()) +
                                    " rows, expected " + std::to_string(num_agents_));
    for (int i = 0; i < num_agents_; ++i) {
        if (static_cast<int>(weights_[i].size()) != num_objects_)
            throw std::invalid_argument("weight row " + std::to_string(i + 1) + " has " +
                                        std::to_string(weights_[i].size()) + " entries, expected " +
                                        std::to_string(num_objects_));
        for (int l = 0; l < num_objects_; ++l)
            if (weights_[i][l] < 0)
                throw std::invalid_argument("negative weight at " + cell(i, l));
    }
}

const Rational& Instance::weight(Agent agent, Object object) const {
    if (agent < 0 || agent >= num_agents_)
        throw std::out_of_range("agent index " + std::to_string(agent) + " out of range");
    if (object < 0 || object >= num_objects_)
        throw std::out_of_range("object index " + std::to_string(object) + " out of range");
    return weights_[agent][object];
}

SubAllocation::SubAllocation(int num_agents, std::vector<Share> shares)
    : shares_(std::move(shares)) {
    if (num_agents < 1) throw std::invalid_argument("need at least one agent");
    if (static_cast<int>(shares_.size()) != num_agents)
        throw std::invalid_argument("expected " + std::to_string(num_agents) + " shares, got " +
                                    std::to_string(shares_.size()));
    for (auto& share : shares_) {
        std::sort(share.begin(), share.end());
        for (std::size_t k = 0; k < share.size(); ++k) {
            if (share[k] < 0)
                throw std::invalid_argument("negative object index in share");
            if (k > 0 && share[k] == share[k - 1])
                throw std::invalid_argument("object " + std::to_string(share[k] + 1) +
                                            " listed twice in one share");
        }
        domain_.insert(domain_.end(), share.begin(), share.end());
    }
    std::sort(domain_.begin(), domain_.end());
    for (std::size_t k = 1; k < domain_.size(); ++k)
        if (domain_[k] == domain_[k - 1])
            throw std::invalid_argument("object " + std::to_string(domain_[k] + 1) +
                                        " assigned to two agents");
}

const Share& SubAllocation::share(Agent agent) const {
    if (agent < 0 || agent >= num_agents())
        throw std::out_of_range("agent index " + std::to_string(agent) + " out of range");
    return shares_[static_cast<std::size_t>(agent)];
}

Allocation::Allocation(int num_objects, SubAllocation sub)
    : num_objects_(num_objects), sub_(std::move(sub)) {}

Allocation::Allocation(int num_agents, int num_objects, std::vector<Share> shares)
    : num_objects_(num_objects), sub_(num_agents, std::move(shares)) {
    const auto& dom = sub_.domain();
    if (static_cast<int>(dom.size()) != num_objects)
        throw std::invalid_argument("allocation covers " + std::to_string(dom.size()) +
                                    " objects, expected " + std::to_string(num_objects));
    // Domain is sorted and duplicate-free, so size M forces {0,...,M-1}
    // unless some index escapes the range.
    if (!dom.empty() && (dom.front() != 0 || dom.back() != num_objects - 1))
        throw std::invalid_argument("allocation object indices must cover 1.." +
                                    std::to_string(num_objects));
}

Allocation Allocation::from_assignment(int num_agents, std::span<const Agent> owner_of) {
    std::vector<Share> shares(static_cast<std::size_t>(num_agents));
    for (std::size_t l = 0; l < owner_of.size(); ++l) {
        Agent a = owner_of[l];
        if (a < 0 || a >= num_agents)
            throw std::out_of_range("owner " + std::to_string(a) + " out of range");
        shares[static_cast<std::size_t>(a)].push_back(static_cast<Object>(l));
    }
    return Allocation(static_cast<int>(owner_of.size()),
                      SubAllocation(num_agents, std::move(shares)));
}

std::vector<Agent> Allocation::to_assignment() const {
    std::vector<Agent> owner_of(static_cast<std::size_t>(num_objects_), -1);
    for (Agent a = 0; a < num_agents(); ++a)
        for (Object l : share(a)) owner_of[static_cast<std::size_t>(l)] = a;
    return owner_of;
}

SubAllocation Allocation::restricted_to(std::span<const Object> domain) const {
    std::vector<char> keep(static_cast<std::size_t>(num_objects_), 0);
    for (Object l : domain) {
        if (l < 0 || l >= num_objects_)
            throw std::out_of_range("object index " + std::to_string(l) + " out of range");
        keep[static_cast<std::size_t>(l)] = 1;
    }
    std::vector<Share> shares;
    shares.reserve(static_cast<std::size_t>(num_agents()));
    for (const Share& s : sub_.shares()) {
        Share restricted;
        for (Object l : s)
            if (keep[static_cast<std::size_t>(l)]) restricted.push_back(l);
        shares.push_back(std::move(restricted));
    }
    return SubAllocation(num_agents(), std::move(shares));
}

Rational utility(const Instance& instance, Agent agent, const Share& share) {
    Rational total(0);
    for (Object l : share) total += instance.weight(agent, l);
    return total;
}

std::vector<Object> best(const Instance& instance, Agent agent,
                         std::span<const Object> pool) {
    if (pool.empty()) throw std::domain_error("best object of an empty pool");
    const Rational* top = &instance.weight(agent, pool[0]);
    for (Object l : pool.subspan(1)) {
        const Rational& w = instance.weight(agent, l);
        if (w > *top) top = &w;
    }
    std::vector<Object> result;
    for (Object l : pool)
        if (instance.weight(agent, l) == *top) result.push_back(l);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_frustrating(const Instance& instance, const SubAllocation& sub) {
    if (sub.domain().empty())
        throw std::domain_error("frustration is undefined on an empty domain");
    for (Agent i = 0; i < sub.num_agents(); ++i) {
        const Share& mine = sub.share(i);
        if (mine.empty()) continue;
        const Rational* top = nullptr;
        for (Object l : sub.domain()) {
            const Rational& w = instance.weight(i, l);
            if (top == nullptr || w > *top) top = &w;
        }
        for (Object l : mine)
            if (instance.weight(i, l) == *top) return false;
    }
    return true;
}

bool strict_on_objects(const Instance& instance) {
    for (Agent i = 0; i < instance.num_agents(); ++i) {
        std::vector<Rational> row = instance.weights()[static_cast<std::size_t>(i)];
        std::sort(row.begin(), row.end());
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k] == row[k - 1]) return false;
    }
    return true;
}

namespace {

// Row scaled by the lcm of its denominators, so subset sums are integers.
std::vector<mpz_class> scaled_row(const Instance& instance, Agent i) {
    mpz_class lcm(1);
    for (Object l = 0; l < instance.num_objects(); ++l)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                instance.weight(i, l).get_den().get_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(static_cast<std::size_t>(instance.num_objects()));
    for (Object l = 0; l < instance.num_objects(); ++l) {
        const Rational& w = instance.weight(i, l);
        scaled.push_back(w.get_num() * (lcm / w.get_den()));
    }
    return scaled;
}

template <class Int>
bool subset_sums_distinct(const std::vector<Int>& w) {
    const std::size_t m = w.size();
    std::vector<Int> sums(std::size_t(1) << m);
    sums[0] = Int(0);
    for (std::size_t s = 1; s < sums.size(); ++s) {
        unsigned low = static_cast<unsigned>(std::countr_zero(s));
        sums[s] = sums[s & (s - 1)] + w[low];
    }
    std::sort(sums.begin(), sums.end());
    for (std::size_t k = 1; k < sums.size(); ++k)
        if (sums[k] == sums[k - 1]) return false;
    return true;
}

}  // namespace

bool strict_on_shares(const Instance& instance) {
    const int m = instance.num_objects();
    if (m > 25)
        throw CapacityError("strict_on_shares enumerates 2^M share values; M = " +
                            std::to_string(m) + " exceeds 25");
    for (Agent i = 0; i < instance.num_agents(); ++i) {
        std::vector<mpz_class> scaled = scaled_row(instance, i);
        mpz_class total(0);
        for (const auto& v : scaled) total += v;
        if (total.fits_slong_p()) {
            std::vector<long> small(scaled.size());
            for (std::size_t k = 0; k < scaled.size(); ++k) small[k] = scaled[k].get_si();
            if (!subset_sums_distinct(small)) return false;
        } else {
            if (!subset_sums_distinct(scaled)) return false;
        }
    }
    return true;
}

std::optional<std::vector<Object>> same_order(const Instance& instance) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    std::vector<Object> order(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) order[static_cast<std::size_t>(l)] = l;
    // Lexicographically descending weight columns. If a common order exists
    // the columns form a chain under componentwise >=, and sorting a chain
    // lexicographically sorts it componentwise; verification below is then
    // exact, not heuristic.
    std::sort(order.begin(), order.end(), [&](Object a, Object b) {
        for (Agent i = 0; i < n; ++i) {
            int c = cmp(instance.weight(i, a), instance.weight(i, b));
            if (c != 0) return c > 0;
        }
        return a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k)
        for (Agent i = 0; i < n; ++i)
            if (instance.weight(i, order[k - 1]) < instance.weight(i, order[k]))
                return std::nullopt;
    return order;
}

std::int64_t allocation_space_size(int num_agents, int num_objects, std::int64_t limit) {
    if (num_agents < 1 || num_objects < 0)
        throw std::invalid_argument("bad dimensions");
    std::int64_t size = 1;
    for (int k = 0; k < num_objects; ++k) {
        if (size > limit / num_agents)
            throw CapacityError("allocation space " + std::to_string(num_agents) + "^" +
                                std::to_string(num_objects) + " exceeds limit " +
                                std::to_string(limit));
        size *= num_agents;
    }
    if (size > limit)
        throw CapacityError("allocation space " + std::to_string(num_agents) + "^" +
                            std::to_string(num_objects) + " exceeds limit " +
                            std::to_string(limit));
    return size;
}

}  // namespace fairdiv
