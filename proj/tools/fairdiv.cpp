// Command-line front end: analyze an allocation, execute a picking sequence,
// test for equilibrium prices, dump the generation relation, or run a
// classification experiment. Exit codes: 0 success, 1 internal error, 2 bad
// input, 3 instance too large for an exhaustive procedure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdiv/ceei.hpp"
#include "fairdiv/core.hpp"
#include "fairdiv/efficiency.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/experiments.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/sequences.hpp"

using namespace fairdiv;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string render_share(const Share& share) {
    std::string out = "{";
    for (std::size_t k = 0; k < share.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(share[k] + 1);
    }
    return out + "}";
}

std::string render_allocation(const Allocation& allocation) {
    std::string out = "<";
    for (Agent i = 0; i < allocation.num_agents(); ++i) {
        if (i) out += ",";
        out += render_share(allocation.share(i));
    }
    return out + ">";
}

std::string render_sequence(const Sequence& sequence) {
    std::string out = "<";
    for (std::size_t k = 0; k < sequence.picks.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(sequence.picks[k] + 1);
    }
    return out + ">";
}

std::string render_objects(const std::vector<Object>& objects) {
    std::string out = "{";
    for (std::size_t k = 0; k < objects.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(objects[k] + 1);
    }
    return out + "}";
}

// Same convention as instance weights on the wire: plain integer when it is
// one, fraction string otherwise.
ordered_json rational_json(const Rational& value) {
    if (value.get_den() == 1 && value.get_num().fits_slong_p())
        return ordered_json(value.get_num().get_si());
    return ordered_json(to_fraction_string(value));
}

// Lexicographically first allocation that dominates `allocation`, if any.
// Only consulted for sequenceable-but-dominated inputs; non-sequenceable
// ones get their dominator from the trading cycle instead.
std::optional<Allocation> find_dominator(const Instance& inst,
                                         const Allocation& allocation) {
    allocation_space_size(inst.num_agents(), inst.num_objects());
    std::optional<Allocation> found;
    for_each_assignment(inst.num_agents(), inst.num_objects(),
                        [&](std::span<const Agent> owner_of) {
                            if (found) return;
                            Allocation candidate =
                                Allocation::from_assignment(inst.num_agents(), owner_of);
                            if (dominates(inst, candidate, allocation))
                                found = std::move(candidate);
                        });
    return found;
}

void print_prices(const PriceVector& prices) {
    std::cout << "prices:";
    for (const Rational& p : prices.prices)
        std::cout << " " << to_fraction_string(p);
    std::cout << "\nprices (decimal):";
    for (const Rational& p : prices.prices)
        std::cout << " " << to_decimal_string(p);
    std::cout << "\n";
}

void attach_prices(ordered_json& out, const PriceVector& prices) {
    ordered_json exact = ordered_json::array();
    ordered_json decimal = ordered_json::array();
    for (const Rational& p : prices.prices) {
        exact.push_back(rational_json(p));
        decimal.push_back(to_decimal_string(p));
    }
    out["prices"] = std::move(exact);
    out["prices_decimal"] = std::move(decimal);
}

int cmd_analyze(const std::string& instance_path, const std::string& allocation_path,
                const std::string& format) {
    Instance inst = parse_instance(read_file(instance_path));
    Allocation alloc = parse_allocation(read_file(allocation_path), inst);

    std::optional<PriceVector> prices = ceei_test(inst, alloc);
    FairnessLevel fairness = fairness_level(
        inst, alloc,
        [&](const Instance&, const Allocation&) { return prices.has_value(); });
    EfficiencyLevel efficiency = efficiency_level(inst, alloc);
    SequencingResult sequencing = sequence_or_witness(inst, alloc);
    auto improvement = trading_cycle_improvement(inst, alloc);
    std::optional<Allocation> dominator;
    if (improvement)
        dominator = improvement->second;
    else if (efficiency == EfficiencyLevel::SequenceableNotPareto)
        dominator = find_dominator(inst, alloc);

    if (format == "json") {
        ordered_json out;
        out["agents"] = inst.num_agents();
        out["objects"] = inst.num_objects();
        ordered_json utilities = ordered_json::array();
        for (Agent i = 0; i < inst.num_agents(); ++i)
            utilities.push_back(rational_json(utility(inst, i, alloc.share(i))));
        out["utilities"] = std::move(utilities);
        out["efficiency"] = to_string(efficiency);
        out["fairness"] = to_string(fairness);
        if (sequencing.sequence) {
            out["sequence"] = sequence_to_json(*sequencing.sequence)["picks"];
        } else {
            ordered_json domain = ordered_json::array();
            for (Object l : sequencing.frustrated_domain) domain.push_back(l + 1);
            out["frustrating_domain"] = std::move(domain);
        }
        if (improvement) {
            const auto& cycle = improvement->first;
            ordered_json cycle_json;
            cycle_json["agents"] = ordered_json::array();
            cycle_json["objects"] = ordered_json::array();
            for (Agent i : cycle.agents) cycle_json["agents"].push_back(i + 1);
            for (Object l : cycle.objects) cycle_json["objects"].push_back(l + 1);
            out["trading_cycle"] = std::move(cycle_json);
        }
        if (dominator)
            out["dominating_allocation"] = allocation_to_json(*dominator)["shares"];
        if (prices) attach_prices(out, *prices);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "agents: " << inst.num_agents()
              << ", objects: " << inst.num_objects() << "\n";
    std::cout << "allocation: " << render_allocation(alloc) << "\n";
    std::cout << "utilities:";
    for (Agent i = 0; i < inst.num_agents(); ++i)
        std::cout << " " << to_fraction_string(utility(inst, i, alloc.share(i)));
    std::cout << "\n";
    std::cout << "efficiency: " << to_string(efficiency) << "\n";
    std::cout << "fairness: " << to_string(fairness) << "\n";
    if (sequencing.sequence) {
        std::cout << "sequence: " << render_sequence(*sequencing.sequence) << "\n";
    } else {
        std::cout << "not sequenceable; frustrating domain: "
                  << render_objects(sequencing.frustrated_domain) << "\n";
    }
    if (improvement) {
        const auto& cycle = improvement->first;
        std::cout << "trading cycle:";
        for (std::size_t k = 0; k < cycle.agents.size(); ++k) {
            Agent holder = cycle.agents[(k + 1) % cycle.agents.size()];
            std::cout << (k ? ";" : "") << " agent " << cycle.agents[k] + 1
                      << " takes object " << cycle.objects[k] + 1 << " from agent "
                      << holder + 1;
        }
        std::cout << "\n";
    }
    if (dominator)
        std::cout << "dominating allocation: " << render_allocation(*dominator) << "\n";
    if (prices) print_prices(*prices);
    return 0;
}

int cmd_sequence(const std::string& instance_path, const std::string& sequence_path,
                 const std::string& format) {
    Instance inst = parse_instance(read_file(instance_path));
    Sequence seq = parse_sequence(read_file(sequence_path), inst);
    std::vector<Allocation> allocations = execute_sequence(inst, seq);

    if (format == "json") {
        ordered_json out;
        out["sequence"] = sequence_to_json(seq)["picks"];
        out["allocations"] = ordered_json::array();
        for (const Allocation& a : allocations)
            out["allocations"].push_back(allocation_to_json(a)["shares"]);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const Allocation& a : allocations)
        std::cout << render_allocation(a) << "\n";
    return 0;
}

int cmd_ceei(const std::string& instance_path, const std::string& allocation_path,
             const std::string& format) {
    Instance inst = parse_instance(read_file(instance_path));
    Allocation alloc = parse_allocation(read_file(allocation_path), inst);
    std::optional<PriceVector> prices = ceei_test(inst, alloc);

    if (format == "json") {
        ordered_json out;
        out["ceei"] = prices.has_value();
        if (prices) attach_prices(out, *prices);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (prices) {
        print_prices(*prices);
    } else {
        std::cout << "not CEEI\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& instance_path, const std::string& format) {
    Instance inst = parse_instance(read_file(instance_path));
    GenerationRelation relation = enumerate_relation(inst);

    if (format == "json") {
        std::cout << relation_to_json(relation).dump(2) << "\n";
        return 0;
    }
    for (const auto& [seq, alloc] : relation.edges)
        std::cout << render_sequence(seq) << " -> " << render_allocation(alloc) << "\n";
    return 0;
}

GeneratorConfig config_from_json(const nlohmann::json& doc, int& num_instances) {
    if (!doc.is_object()) throw ParseError("experiment config must be a JSON object");
    GeneratorConfig config;
    if (doc.contains("model")) {
        std::string model = doc["model"].is_string() ? doc["model"].get<std::string>() : "";
        if (model == "uniform") config.model = GeneratorModel::Uniform;
        else if (model == "gaussian") config.model = GeneratorModel::Gaussian;
        else throw ParseError("model must be \"uniform\" or \"gaussian\"");
    }
    auto read_int = [&](const char* key, int& slot) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_number_integer())
            throw ParseError(std::string(key) + " must be an integer");
        slot = doc[key].get<int>();
    };
    read_int("agents", config.num_agents);
    read_int("objects", config.num_objects);
    read_int("uniform_lo", config.uniform_lo);
    read_int("uniform_hi", config.uniform_hi);
    read_int("center_lo", config.center_lo);
    read_int("center_hi", config.center_hi);
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer() || doc["seed"].get<std::int64_t>() < 0)
            throw ParseError("seed must be a nonnegative integer");
        config.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("noise")) {
        if (!doc["noise"].is_number()) throw ParseError("noise must be a number");
        config.noise = doc["noise"].get<double>();
    }
    if (doc.contains("instances")) {
        if (!doc["instances"].is_number_integer())
            throw ParseError("instances must be an integer");
        num_instances = doc["instances"].get<int>();
    }
    return config;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   const std::string& format, std::optional<std::uint64_t> seed) {
    nlohmann::json doc = nlohmann::json::parse(read_file(config_path), nullptr, false);
    if (doc.is_discarded())
        throw ParseError("config \"" + config_path + "\" is not valid JSON");
    int num_instances = 10;
    GeneratorConfig config = config_from_json(doc, num_instances);
    if (seed) config.seed = *seed;

    ExperimentReport report = run_experiment(config, num_instances);

    std::filesystem::create_directories(out_dir);
    std::filesystem::path base(out_dir);
    {
        std::ofstream csv(base / "report.csv", std::ios::binary);
        csv << report_csv(report);
    }
    {
        std::ofstream json_file(base / "report.json", std::ios::binary);
        json_file << report_json(report).dump(2) << "\n";
    }

    if (format == "json") {
        std::cout << report_json(report).dump(2) << "\n";
        return 0;
    }
    std::cout << "instances: " << report.per_instance.size()
              << ", allocations per instance: "
              << report.totals.total() / static_cast<long long>(report.per_instance.size())
              << "\n";
    std::cout << "totals (rows NS/SnP/PO, columns none/MFS/PFS/mFS/EF/CEEI):\n";
    for (EfficiencyLevel e : {EfficiencyLevel::NonSequenceable,
                              EfficiencyLevel::SequenceableNotPareto,
                              EfficiencyLevel::ParetoOptimal}) {
        std::cout << "  " << to_string(e) << ":";
        for (FairnessLevel f : {FairnessLevel::None, FairnessLevel::MaxminShare,
                                FairnessLevel::Proportional, FairnessLevel::MinmaxShare,
                                FairnessLevel::EnvyFree, FairnessLevel::Ceei})
            std::cout << " " << report.totals.at(e, f);
        std::cout << "\n";
    }
    std::cout << "reports written to " << (base / "report.csv").string() << " and "
              << (base / "report.json").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair division of indivisible goods: sequences, efficiency, "
                 "fairness, equilibrium prices"};
    app.require_subcommand(1);

    std::string instance_path, allocation_path, sequence_path, config_path;
    std::string format = "text";
    std::string out_dir = ".";
    std::uint64_t seed_value = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "classify an allocation end to end");
    analyze->add_option("--instance", instance_path, "instance JSON file")->required();
    analyze->add_option("--allocation", allocation_path, "allocation JSON file")->required();
    add_format(analyze);

    CLI::App* sequence =
        app.add_subcommand("sequence", "execute a picking sequence");
    sequence->add_option("--instance", instance_path, "instance JSON file")->required();
    sequence->add_option("--sequence", sequence_path, "sequence JSON file")->required();
    add_format(sequence);

    CLI::App* ceei = app.add_subcommand("ceei", "equilibrium prices or \"not CEEI\"");
    ceei->add_option("--instance", instance_path, "instance JSON file")->required();
    ceei->add_option("--allocation", allocation_path, "allocation JSON file")->required();
    add_format(ceei);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "dump the sequence/allocation relation");
    enumerate->add_option("--instance", instance_path, "instance JSON file")->required();
    add_format(enumerate);

    CLI::App* experiment =
        app.add_subcommand("experiment", "run a classification experiment");
    experiment->add_option("config", config_path, "experiment config JSON file")->required();
    CLI::Option* seed_opt =
        experiment->add_option("--seed", seed_value, "override the config seed");
    experiment->add_option("--out-dir", out_dir, "directory for report files")
        ->capture_default_str();
    add_format(experiment);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(instance_path, allocation_path, format);
        if (*sequence) return cmd_sequence(instance_path, sequence_path, format);
        if (*ceei) return cmd_ceei(instance_path, allocation_path, format);
        if (*enumerate) return cmd_enumerate(instance_path, format);
        if (*experiment)
            return cmd_experiment(config_path, out_dir, format,
                                  seed_opt->count() ? std::optional<std::uint64_t>(seed_value)
                                                    : std::nullopt);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
