#include "fairdiv/experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fairdiv/ceei.hpp"
#include "fairdiv/sequences.hpp"

namespace fairdiv {

namespace {

void validate(const GeneratorConfig& config) {
    if (config.num_agents < 1) throw std::invalid_argument("need at least one agent");
    if (config.num_objects < 1) throw std::invalid_argument("need at least one object");
    if (config.uniform_lo < 0 || config.uniform_lo > config.uniform_hi)
        throw std::invalid_argument("bad uniform weight range");
    if (config.center_lo < 0 || config.center_lo > config.center_hi)
        throw std::invalid_argument("bad center range");
    if (!(config.noise >= 0) || !std::isfinite(config.noise))
        throw std::invalid_argument("noise must be finite and nonnegative");
}

// Unbiased integer on [lo, hi] by rejection; drawing count varies, the
// stream does not.
long bounded_int(std::mt19937_64& rng, long lo, long hi) {
    unsigned long long range = static_cast<unsigned long long>(hi - lo) + 1;
    unsigned long long cutoff =
        std::numeric_limits<unsigned long long>::max() -
        std::numeric_limits<unsigned long long>::max() % range;
    unsigned long long draw;
    do {
        draw = rng();
    } while (draw >= cutoff);
    return lo + static_cast<long>(draw % range);
}

// Box-Muller, cosine branch only: exactly two draws per variate keeps the
// stream layout independent of the values drawn.
double standard_normal(std::mt19937_64& rng) {
    double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;          // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
    validate(config);
    std::mt19937_64 rng(config.seed);
    const int n = config.num_agents;
    const int m = config.num_objects;
    std::vector<std::vector<Rational>> weights(
        static_cast<std::size_t>(n),
        std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));

    if (config.model == GeneratorModel::Uniform) {
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < m; ++l)
                weights[i][l] = Rational(bounded_int(rng, config.uniform_lo, config.uniform_hi));
    } else {
        std::vector<long> centers(static_cast<std::size_t>(m));
        for (int l = 0; l < m; ++l)
            centers[l] = bounded_int(rng, config.center_lo, config.center_hi);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < m; ++l) {
                double center = static_cast<double>(centers[l]);
                double drawn = center + config.noise * center * standard_normal(rng);
                long w = std::lround(drawn);
                weights[i][l] = Rational(w < 0 ? 0 : w);
            }
    }
    return Instance(n, m, std::move(weights));
}

std::uint64_t nth_seed(std::uint64_t master, int index) {
    // splitmix64: k-th output is mix(seed + (k+1) * golden gamma).
    std::uint64_t z = master +
                      (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

long long ClassificationGrid::total() const {
    long long sum = 0;
    for (const auto& row : counts)
        for (long long cell : row) sum += cell;
    return sum;
}

ClassificationGrid& ClassificationGrid::operator+=(const ClassificationGrid& other) {
    for (std::size_t e = 0; e < counts.size(); ++e)
        for (std::size_t f = 0; f < counts[e].size(); ++f)
            counts[e][f] += other.counts[e][f];
    return *this;
}

ClassificationGrid classify_all(const Instance& instance) {
    const int n = instance.num_agents();
    const int m = instance.num_objects();
    allocation_space_size(n, m);

    std::vector<char> pareto = pareto_optimal_flags(instance);
    std::vector<ShareThresholds> thresholds = share_thresholds(instance);

    ClassificationGrid grid;
    std::size_t rank = 0;
    for_each_assignment(n, m, [&](std::span<const Agent> owner_of) {
        Allocation allocation = Allocation::from_assignment(n, owner_of);

        bool sequenceable = is_sequenceable(instance, allocation);
        EfficiencyLevel efficiency =
            !sequenceable ? EfficiencyLevel::NonSequenceable
            : pareto[rank] ? EfficiencyLevel::ParetoOptimal
                           : EfficiencyLevel::SequenceableNotPareto;

        FairnessLevel fairness = FairnessLevel::None;
        if (is_envy_free(instance, allocation)) {
            fairness = sequenceable && ceei_test(instance, allocation).has_value()
                           ? FairnessLevel::Ceei
                           : FairnessLevel::EnvyFree;
        } else {
            bool maxmin_ok = true, prop_ok = true, minmax_ok = true;
            for (Agent i = 0; i < n; ++i) {
                Rational own = utility(instance, i, allocation.share(i));
                const auto& t = thresholds[static_cast<std::size_t>(i)];
                if (own < t.maxmin) maxmin_ok = false;
                if (own < t.proportional) prop_ok = false;
                if (own < t.minmax) minmax_ok = false;
            }
            fairness = minmax_ok ? FairnessLevel::MinmaxShare
                       : prop_ok ? FairnessLevel::Proportional
                       : maxmin_ok ? FairnessLevel::MaxminShare
                                   : FairnessLevel::None;
        }

        grid.at(efficiency, fairness) += 1;
        ++rank;
    });
    return grid;
}

ExperimentReport run_experiment(const GeneratorConfig& config, int num_instances) {
    if (num_instances < 1) throw std::invalid_argument("need at least one instance");
    validate(config);
    ExperimentReport report;
    report.config = config;
    report.per_instance.reserve(static_cast<std::size_t>(num_instances));
    for (int k = 0; k < num_instances; ++k) {
        GeneratorConfig instance_config = config;
        instance_config.seed = nth_seed(config.seed, k);
        ClassificationGrid grid = classify_all(generate_instance(instance_config));
        report.totals += grid;
        report.per_instance.push_back(grid);
    }
    return report;
}

namespace {

constexpr std::array<EfficiencyLevel, kNumEfficiencyLevels> kEfficiencyOrder = {
    EfficiencyLevel::NonSequenceable,
    EfficiencyLevel::SequenceableNotPareto,
    EfficiencyLevel::ParetoOptimal,
};
constexpr std::array<FairnessLevel, kNumFairnessLevels> kFairnessOrder = {
    FairnessLevel::None,       FairnessLevel::MaxminShare, FairnessLevel::Proportional,
    FairnessLevel::MinmaxShare, FairnessLevel::EnvyFree,   FairnessLevel::Ceei,
};

nlohmann::ordered_json grid_json(const ClassificationGrid& grid) {
    nlohmann::ordered_json out;
    for (EfficiencyLevel e : kEfficiencyOrder) {
        nlohmann::ordered_json row;
        for (FairnessLevel f : kFairnessOrder)
            row[std::string(to_string(f))] = grid.at(e, f);
        out[std::string(to_string(e))] = std::move(row);
    }
    return out;
}

}  // namespace

std::string report_csv(const ExperimentReport& report) {
    std::string out = "instance_id,efficiency,fairness,count\n";
    for (std::size_t k = 0; k < report.per_instance.size(); ++k)
        for (EfficiencyLevel e : kEfficiencyOrder)
            for (FairnessLevel f : kFairnessOrder) {
                out += std::to_string(k + 1);
                out += ',';
                out += to_string(e);
                out += ',';
                out += to_string(f);
                out += ',';
                out += std::to_string(report.per_instance[k].at(e, f));
                out += '\n';
            }
    return out;
}

nlohmann::ordered_json report_json(const ExperimentReport& report) {
    nlohmann::ordered_json out;
    out["config"] = {
        {"model", report.config.model == GeneratorModel::Uniform ? "uniform" : "gaussian"},
        {"agents", report.config.num_agents},
        {"objects", report.config.num_objects},
        {"seed", report.config.seed},
        {"instances", report.per_instance.size()},
    };
    if (report.config.model == GeneratorModel::Uniform) {
        out["config"]["uniform_lo"] = report.config.uniform_lo;
        out["config"]["uniform_hi"] = report.config.uniform_hi;
    } else {
        out["config"]["center_lo"] = report.config.center_lo;
        out["config"]["center_hi"] = report.config.center_hi;
        out["config"]["noise"] = report.config.noise;
    }
    out["totals"] = grid_json(report.totals);
    nlohmann::ordered_json per;
    for (std::size_t k = 0; k < report.per_instance.size(); ++k) {
        nlohmann::ordered_json entry;
        entry["instance_id"] = k + 1;
        entry["grid"] = grid_json(report.per_instance[k]);
        per.push_back(std::move(entry));
    }
    out["per_instance"] = std::move(per);
    return out;
}

}  // namespace fairdiv
