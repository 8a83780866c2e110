#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gb/bench/plan.hpp"
#include "gb/bench/report.hpp"
#include "gb/bench/runner.hpp"
#include "gb/core/errors.hpp"
#include "gb/instances/instance_json.hpp"
#include "gb/instances/tsplib.hpp"
#include "gb/richvrp/acvrp.hpp"
#include "gb/richvrp/matspspd.hpp"

namespace {

int run_command(const std::string& plan_path, const std::string& out_dir, std::uint64_t seed,
                int parallel) {
    auto plan = gb::bench::BenchPlan::from_file(plan_path);
    if (!out_dir.empty()) plan.output_dir = out_dir;
    if (seed != 0) plan.seed_base = seed;
    if (parallel > 0) plan.parallelism = parallel;
    const auto result = gb::bench::run_plan(plan, std::cout);
    std::cout << result.records.size() << " runs written to " << plan.output_dir << "/runs.csv\n";
    return result.errors.empty() ? 0 : 2;
}

int compare_command(const std::string& results_path, const std::string& control,
                    const std::string& out_dir) {
    const auto records = gb::bench::read_records_csv(results_path);
    const auto report = gb::bench::compare(records, control);
    std::cout << report.to_text(control);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream csv(out_dir + "/compare.csv");
        csv << report.to_csv();
        std::ofstream txt(out_dir + "/compare.txt");
        txt << report.to_text(control);
        std::cout << "report written to " << out_dir << "/compare.{csv,txt}\n";
    }
    return 0;
}

int generate_acvrp_command(const std::string& name, const std::string& coords_path,
                           std::uint64_t seed, const std::string& out_path) {
    const auto problem =
        gb::bench::resolve_instance("acvrp:" + name + ":" + coords_path + ":" + std::to_string(seed));
    gb::io::save_instance_file(*problem, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int generate_matspspd_command(const std::string& atsp_path, const std::string& out_path) {
    const auto atsp = gb::io::load_tsplib_file(atsp_path);
    const auto instance = gb::richvrp::generate_matspspd(atsp);
    gb::io::save_instance_file(instance, out_path);
    std::cout << "wrote " << out_path << " (k=" << instance.vehicles()
              << ", qmax=" << instance.max_route_len() << ")\n";
    return 0;
}

int parse_command(const std::string& tsplib_path, const std::string& out_path) {
    const auto instance = gb::io::load_tsplib_file(tsplib_path);
    gb::io::save_instance_file(instance, out_path);
    std::cout << "wrote " << out_path << " (n=" << instance.size() << ", "
              << (instance.symmetric() ? "symmetric" : "asymmetric") << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golden-ball solver benchmark harness"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a benchmark plan");
    std::string plan_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int parallel = 0;
    run->add_option("--plan", plan_path, "plan JSON file")->required();
    run->add_option("--out", out_dir, "output directory (overrides the plan)");
    run->add_option("--seed", seed, "seed base (overrides the plan)");
    run->add_option("--parallel", parallel, "worker threads (overrides the plan)");

    auto* cmp = app.add_subcommand("compare", "statistical comparison of a result CSV");
    std::string results_path;
    std::string control = "gb";
    std::string cmp_out;
    cmp->add_option("--results", results_path, "runs.csv produced by `run`")->required();
    cmp->add_option("--control", control, "control algorithm label");
    cmp->add_option("--out", cmp_out, "directory for compare.{csv,txt}");

    auto* teams = app.add_subcommand("teams-study", "compare team-count splits of a 48-player population");
    std::vector<std::string> team_instances;
    int team_runs = 10;
    std::uint64_t team_seed = 1;
    teams->add_option("--instances", team_instances, "instance references")->required();
    teams->add_option("--runs", team_runs, "runs per version and instance");
    teams->add_option("--seed", team_seed, "seed base");

    auto* gen = app.add_subcommand("generate", "instance generators");
    gen->require_subcommand(1);
    auto* gen_ac = gen->add_subcommand("acvrp", "clustered pickup-and-delivery benchmark instance");
    std::string ac_name;
    std::string ac_coords;
    std::uint64_t ac_seed = 7;
    std::string ac_out = "acvrp.json";
    gen_ac->add_option("--name", ac_name, "catalogue name, e.g. Osaba_50_1_2")->required();
    gen_ac->add_option("--coords", ac_coords, "coordinate JSON (depot + 100 customers)")->required();
    gen_ac->add_option("--seed", ac_seed, "forbidden-arc seed");
    gen_ac->add_option("--out", ac_out, "output instance file");
    auto* gen_ma = gen->add_subcommand("matspspd", "multi-route instance from an ATSP file");
    std::string ma_atsp;
    std::string ma_out = "matspspd.json";
    gen_ma->add_option("--atsp", ma_atsp, "TSPLIB ATSP file")->required();
    gen_ma->add_option("--out", ma_out, "output instance file");

    auto* parse = app.add_subcommand("parse", "convert TSPLIB to the JSON schema");
    std::string parse_in;
    std::string parse_out = "instance.json";
    parse->add_option("--tsplib", parse_in, "TSPLIB .tsp/.atsp file")->required();
    parse->add_option("--out", parse_out, "output instance file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(plan_path, out_dir, seed, parallel);
        if (cmp->parsed()) return compare_command(results_path, control, cmp_out);
        if (teams->parsed()) {
            std::cout << gb::bench::teams_study(team_instances, team_runs, team_seed, std::cout);
            return 0;
        }
        if (gen->parsed()) {
            if (gen_ac->parsed()) return generate_acvrp_command(ac_name, ac_coords, ac_seed, ac_out);
            if (gen_ma->parsed()) return generate_matspspd_command(ma_atsp, ma_out);
        }
        if (parse->parsed()) return parse_command(parse_in, parse_out);
    } catch (const gb::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const gb::ParseError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const gb::Error& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
