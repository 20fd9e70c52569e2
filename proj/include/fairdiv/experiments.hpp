#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairdiv/core.hpp"
#include "fairdiv/efficiency.hpp"
#include "fairdiv/fairness.hpp"

namespace fairdiv {

enum class GeneratorModel { Uniform, Gaussian };

// Both models draw from a seeded mt19937_64 through rejection-sampled
// bounded integers (and, for the gaussian model, a fixed two-draw Box-Muller
// transform per weight), so a seed pins the instance on any platform.
struct GeneratorConfig {
    GeneratorModel model = GeneratorModel::Uniform;
    int num_agents = 2;
    int num_objects = 4;
    std::uint64_t seed = 0;

    // uniform: integer weights on [uniform_lo, uniform_hi]
    int uniform_lo = 1;
    int uniform_hi = 100;

    // gaussian: integer per-object centers on [center_lo, center_hi], then
    // weight(i, l) = round(normal(center_l, noise * center_l)), clamped at 0
    int center_lo = 10;
    int center_hi = 100;
    double noise = 0.1;
};

Instance generate_instance(const GeneratorConfig& config);

// k-th element of the splitmix64 stream started at `master`; used to give
// every instance of a run its own independent, individually reproducible
// seed.
std::uint64_t nth_seed(std::uint64_t master, int index);

inline constexpr int kNumEfficiencyLevels = 3;
inline constexpr int kNumFairnessLevels = 6;

struct ClassificationGrid {
    // counts[efficiency][fairness]
    std::array<std::array<long long, kNumFairnessLevels>, kNumEfficiencyLevels> counts{};

    long long& at(EfficiencyLevel e, FairnessLevel f) {
        return counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
    }
    long long at(EfficiencyLevel e, FairnessLevel f) const {
        return counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
    }
    long long total() const;
    ClassificationGrid& operator+=(const ClassificationGrid& other);
};

// Places every one of the N^M allocations (CapacityError past 10^6) in the
// efficiency x fairness grid. Pareto flags come from the batched front
// computation; fairness thresholds from one partition sweep; the CEEI column
// prices each envy-free sequenceable candidate.
ClassificationGrid classify_all(const Instance& instance);

struct ExperimentReport {
    GeneratorConfig config;
    std::vector<ClassificationGrid> per_instance;
    ClassificationGrid totals;
};

ExperimentReport run_experiment(const GeneratorConfig& config, int num_instances);

// Long-form CSV: instance_id,efficiency,fairness,count with a header row,
// all 18 cells per instance, instances 1-based.
std::string report_csv(const ExperimentReport& report);

nlohmann::ordered_json report_json(const ExperimentReport& report);

}  // namespace fairdiv
