#include "gb/bench/plan.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gb/baselines/dga.hpp"
#include "gb/baselines/ea.hpp"
#include "gb/baselines/esa.hpp"
#include "gb/baselines/ga.hpp"
#include "gb/core/errors.hpp"
#include "gb/goldenball/golden_ball.hpp"
#include "gb/instances/load.hpp"
#include "gb/richvrp/acvrp.hpp"

namespace gb::bench {

using nlohmann::json;

std::string AlgorithmSpec::display() const {
    if (!label.empty()) return label;
    if (id == "gb" && teams > 0 && players_per_team > 0) {
        return "gb-tn" + std::to_string(teams) + "-pt" + std::to_string(players_per_team);
    }
    return id;
}

BenchPlan BenchPlan::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid plan JSON: ") + e.what());
    }
    BenchPlan plan;
    try {
        for (const auto& inst : j.at("instances")) plan.instances.push_back(inst.get<std::string>());
        for (const auto& alg : j.at("algorithms")) {
            AlgorithmSpec spec;
            if (alg.is_string()) {
                spec.id = alg.get<std::string>();
            } else {
                spec.id = alg.at("id");
                spec.teams = alg.value("teams", 0);
                spec.players_per_team = alg.value("players_per_team", 0);
                spec.max_evaluations = alg.value("max_evaluations", std::uint64_t{0});
                spec.label = alg.value("label", std::string{});
            }
            plan.algorithms.push_back(std::move(spec));
        }
        plan.runs = j.value("runs", 10);
        plan.seed_base = j.value("seed_base", std::uint64_t{1});
        plan.output_dir = j.value("output_dir", std::string{"bench-out"});
        plan.parallelism = j.value("parallelism", 1);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("plan schema violation: ") + e.what());
    }
    plan.validate();
    return plan;
}

BenchPlan BenchPlan::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open plan file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void BenchPlan::validate() const {
    if (instances.empty()) throw ValidationError("plan lists no instances");
    if (algorithms.empty()) throw ValidationError("plan lists no algorithms");
    if (runs < 1) throw ValidationError("runs must be >= 1");
    if (parallelism < 1) throw ValidationError("parallelism must be >= 1");
    for (const auto& alg : algorithms) {
        static const std::array<std::string, 7> known{"gb",   "ga1", "ga2", "dga1",
                                                      "dga2", "ea",  "esa"};
        if (std::find(known.begin(), known.end(), alg.id) == known.end()) {
            throw ValidationError("unknown algorithm id '" + alg.id + "'");
        }
    }
}

Runner make_runner(const AlgorithmSpec& spec) {
    const std::string label = spec.display();
    auto relabel = [label](RunRecord r) {
        r.algorithm = label;
        return r;
    };
    if (spec.id == "gb") {
        engine::GbConfig config;
        if (spec.teams > 0) config.teams = spec.teams;
        if (spec.players_per_team > 0) config.players_per_team = spec.players_per_team;
        config.max_evaluations = spec.max_evaluations;
        return [config, relabel](const Problem& p, std::uint64_t seed) {
            return relabel(engine::gb_run(p, config, seed));
        };
    }
    if (spec.id == "ga1" || spec.id == "ga2") {
        const bool first = spec.id == "ga1";
        const std::uint64_t cap = spec.max_evaluations;
        return [first, cap, relabel](const Problem& p, std::uint64_t seed) {
            auto config = first ? baselines::ga1_config(p) : baselines::ga2_config(p);
            config.max_evaluations = cap;
            return relabel(baselines::ga_run(p, config, seed));
        };
    }
    if (spec.id == "dga1" || spec.id == "dga2") {
        const bool first = spec.id == "dga1";
        const std::uint64_t cap = spec.max_evaluations;
        return [first, cap, relabel](const Problem& p, std::uint64_t seed) {
            auto config = first ? baselines::dga1_config(p) : baselines::dga2_config(p);
            config.max_evaluations = cap;
            return relabel(baselines::dga_run(p, config, seed));
        };
    }
    if (spec.id == "ea") {
        return [relabel](const Problem& p, std::uint64_t seed) {
            return relabel(baselines::ea_run(p, seed));
        };
    }
    if (spec.id == "esa") {
        return [relabel](const Problem& p, std::uint64_t seed) {
            return relabel(baselines::esa_run(p, seed));
        };
    }
    throw ValidationError("unknown algorithm id '" + spec.id + "'");
}

namespace {

std::vector<std::array<double, 2>> load_coords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coordinate file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid coordinate JSON: ") + e.what());
    }
    std::vector<std::array<double, 2>> coords;
    for (const auto& c : j) coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    return coords;
}

}  // namespace

std::shared_ptr<Problem> resolve_instance(const std::string& ref) {
    if (ref.rfind("acvrp:", 0) == 0) {
        // acvrp:<name>:<coords.json>[:<seed>]
        const auto rest = ref.substr(6);
        const auto c1 = rest.find(':');
        if (c1 == std::string::npos) {
            throw ValidationError("acvrp ref needs acvrp:<name>:<coords.json>[:<seed>]");
        }
        const std::string name = rest.substr(0, c1);
        const auto c2 = rest.find(':', c1 + 1);
        const std::string coords_path =
            c2 == std::string::npos ? rest.substr(c1 + 1) : rest.substr(c1 + 1, c2 - c1 - 1);
        const std::uint64_t seed =
            c2 == std::string::npos ? 7 : std::stoull(rest.substr(c2 + 1));
        const auto spec = richvrp::acvrp_spec_by_name(name);
        if (!spec) throw ValidationError("unknown acvrp benchmark instance '" + name + "'");
        return std::make_shared<richvrp::AcVrpInstance>(
            richvrp::generate_acvrp(load_coords(coords_path), *spec, seed));
    }
    return io::load_problem(ref);
}

std::uint64_t trial_seed(std::uint64_t seed_base, const std::string& algorithm,
                         const std::string& instance, int trial) {
    std::uint64_t h = splitmix64(seed_base);
    h = splitmix64(h ^ fnv1a(algorithm));
    h = splitmix64(h ^ fnv1a(instance));
    h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

}  // namespace gb::bench
