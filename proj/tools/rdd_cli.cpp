// Command-line front end: run experiments, replay manifests, render reports,
// run the accuracy-model simulator, and generate benchmark instances.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdd/rdd.hpp"

namespace {

using nlohmann::json;

rdd::PromptAssets load_assets(const std::string& dir) {
    return dir.empty() ? rdd::load_packaged_assets() : rdd::load_assets_from_dir(dir);
}

std::vector<int> parse_levels(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw rdd::Error("cannot open " + out_path + " for writing");
    out << text;
}

rdd::ShapeNode shape_from_json(const json& j) {
    rdd::ShapeNode n;
    n.class_tag = j.value("class", "c");
    n.difficulty = j.value("n", 1);
    n.is_unit = j.value("unit", true);
    for (const auto& c : j.value("children", json::array())) n.children.push_back(shape_from_json(c));
    if (!n.children.empty()) n.is_unit = false;
    return n;
}

struct RunFlags {
    std::string task = "letter_concat";
    std::string levels = "5,10,20,50,70,90";
    int count = 100;
    std::uint64_t seed = 1;
    std::string method = "rdd-cot";
    std::string regime = "generic";
    int width = 4;
    int max_depth = 3;
    int parallelism = 1;
    int retries = 1;
    int max_tokens = 1024;
    bool no_recovery = false;
    int k = 5;
    std::string backend = "oracle";
    double fault_decompose = 0.0, fault_unit = 0.0, fault_merge = 0.0;
    std::uint64_t fault_seed = 1;
    std::string out;
    std::string assets_dir;
    std::string config_file;
};

rdd::ExperimentConfig build_experiment_config(const RunFlags& f, const CLI::App* cmd) {
    rdd::ExperimentConfig cfg;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) throw rdd::ConfigError("cannot read config file " + f.config_file);
        json j = json::parse(in);
        cfg = rdd::experiment_config_from_json(j);
    }
    auto given = [cmd](const std::string& flag) { return cmd->count(flag) > 0; };
    if (f.config_file.empty() || given("--task")) cfg.task = rdd::task_from_string(f.task);
    if (f.config_file.empty() || given("--levels")) cfg.levels = parse_levels(f.levels);
    if (f.config_file.empty() || given("--count")) cfg.count = f.count;
    if (f.config_file.empty() || given("--seed")) cfg.seed = f.seed;
    if (f.config_file.empty() || given("--method"))
        cfg.method = rdd::method_from_string(f.method);
    if (f.config_file.empty() || given("--regime"))
        cfg.regime = f.regime == "task-specific" || f.regime == "task_specific"
                         ? rdd::ExampleRegime::TaskSpecific
                         : rdd::ExampleRegime::Generic;
    if (f.config_file.empty() || given("--width")) cfg.scheduler.width = f.width;
    if (f.config_file.empty() || given("--max-depth")) cfg.scheduler.max_depth = f.max_depth;
    if (f.config_file.empty() || given("--parallelism"))
        cfg.scheduler.parallelism = f.parallelism;
    if (f.config_file.empty() || given("--retries"))
        cfg.scheduler.decompose_retries = f.retries;
    if (f.config_file.empty() || given("--max-tokens")) cfg.scheduler.max_tokens = f.max_tokens;
    if (given("--no-recovery")) cfg.scheduler.recovery_sentence_enabled = false;
    if (f.config_file.empty() || given("--k")) cfg.sc_samples = f.k;
    return cfg;
}

int cmd_run(const RunFlags& f, const CLI::App* cmd) {
    rdd::PromptAssets assets = load_assets(f.assets_dir);
    rdd::ExperimentConfig cfg = build_experiment_config(f, cmd);

    std::unique_ptr<rdd::Backend> base;
    if (f.backend == "oracle") {
        rdd::OraclePolicy policy;
        policy.width = cfg.scheduler.width;
        base = std::make_unique<rdd::OracleBackend>(policy);
    } else if (f.backend == "remote") {
        base = std::make_unique<rdd::HttpChatBackend>(rdd::remote_config_from_env());
    } else {
        throw rdd::ConfigError("unknown backend: " + f.backend);
    }
    std::unique_ptr<rdd::FaultInjectionBackend> fault;
    rdd::Backend* backend = base.get();
    if (f.fault_decompose > 0 || f.fault_unit > 0 || f.fault_merge > 0) {
        fault = std::make_unique<rdd::FaultInjectionBackend>(
            *base, rdd::FaultRates{f.fault_decompose, f.fault_unit, f.fault_merge},
            f.fault_seed);
        backend = fault.get();
    }

    std::optional<std::filesystem::path> out_path;
    if (!f.out.empty()) out_path = f.out;
    rdd::RunManifest manifest = rdd::run_experiment(cfg, *backend, assets, out_path);
    std::cout << rdd::render_report(manifest, rdd::ReportFormat::Table);
    if (out_path) std::cout << "manifest written to " << out_path->string() << "\n";
    int failures = 0;
    for (const auto& rec : manifest.instances) failures += rec.error.empty() ? 0 : 1;
    if (failures) std::cerr << failures << " instance(s) failed; see the manifest\n";
    return 0;
}

int cmd_replay(const std::string& manifest_path, bool strict, const std::string& assets_dir) {
    rdd::PromptAssets assets = load_assets(assets_dir);
    rdd::RunManifest manifest = rdd::read_manifest(manifest_path);
    auto deviations = rdd::verify_replay(manifest, assets, strict);
    if (deviations.empty()) {
        std::cout << "replay ok: " << manifest.instances.size()
                  << " instance(s) reproduced identically\n";
        return 0;
    }
    for (const auto& d : deviations)
        std::cerr << "instance " << d.index << ": " << d.field << " diverged\n  recorded: "
                  << d.original << "\n  replayed: " << d.replayed << "\n";
    return 2;
}

int cmd_report(const std::string& manifest_path, const std::string& format, int instance,
               const std::string& out) {
    rdd::RunManifest manifest = rdd::read_manifest(manifest_path);
    std::string text =
        rdd::render_report(manifest, rdd::report_format_from_string(format), instance);
    write_output(text, out);
    return 0;
}

int cmd_simulate(const std::string& task, int n0, const std::string& shape_file, double phi_d,
                 double phi_u, double phi_m, long trials, std::uint64_t seed, double rho,
                 int width, int unit_threshold, int max_depth, int threads) {
    rdd::ShapeNode shape;
    if (!shape_file.empty()) {
        std::ifstream in(shape_file);
        if (!in) throw rdd::ConfigError("cannot read shape file " + shape_file);
        shape = shape_from_json(json::parse(in));
    } else {
        rdd::OraclePolicy policy;
        policy.width = width;
        policy.unit_threshold = unit_threshold;
        shape = rdd::predicted_shape(rdd::task_from_string(task), n0, policy, max_depth);
    }
    rdd::validate_shape(shape);
    auto acc = rdd::StepAccuracies::constant(phi_d, phi_u, phi_m);
    double closed = rdd::closed_form_accuracy(shape, acc);
    rdd::SimulationOptions options;
    options.correlated_rho = rho;
    options.threads = threads;
    auto est = rdd::simulate_accuracy(shape, acc, trials, seed, options);
    auto report = rdd::check_improvement_conditions(shape, acc, shape.class_tag, shape.difficulty);

    std::cout << "closed_form " << std::setprecision(12) << closed << "\n";
    std::cout << "monte_carlo " << est.estimate << " stderr " << est.standard_error << " trials "
              << est.trials << "\n";
    double deviation = std::abs(est.estimate - closed);
    std::cout << "deviation " << deviation << " ("
              << (est.standard_error > 0 ? deviation / est.standard_error : 0.0)
              << " standard errors"
              << (rho > 0 ? ", correlated failures enabled" : "") << ")\n";
    std::cout << "condition_decompose_merge " << (report.decompose_merge_ok ? "holds" : "fails")
              << " (" << report.root_decompose_merge << " vs " << report.root_unit_rate << ")\n";
    std::cout << "condition_unit_gain " << (report.unit_gain_ok ? "holds" : "fails");
    if (!report.violations.empty()) {
        std::cout << "; weak unit nodes:";
        for (const auto& v : report.violations) std::cout << " " << v.path;
    }
    std::cout << "\n";
    return 0;
}

int cmd_generate(const std::string& task, int n0, int count, std::uint64_t seed,
                 const std::string& out) {
    auto instances = rdd::generate_instances(rdd::task_from_string(task), n0, count, seed);
    if (out.empty()) {
        for (const auto& inst : instances) std::cout << rdd::instance_to_json(inst).dump() << "\n";
    } else {
        rdd::write_instances_jsonl(out, instances);
        std::cout << instances.size() << " instance(s) written to " << out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive decomposition engine and experiment harness"};
    app.require_subcommand(1);

    // run
    RunFlags rf;
    CLI::App* run = app.add_subcommand("run", "Run a benchmark sweep");
    run->add_option("--task", rf.task, "letter_concat | length_reversal");
    run->add_option("--levels", rf.levels, "comma-separated difficulty levels");
    run->add_option("--count", rf.count, "instances per level");
    run->add_option("--seed", rf.seed, "instance generation seed");
    run->add_option("--method", rf.method, "rdd-cot | rdd-ltm | cot-sc | ltm-sc");
    run->add_option("--regime", rf.regime, "generic | task-specific");
    run->add_option("--width", rf.width, "max sub-problems per decomposition");
    run->add_option("--max-depth", rf.max_depth, "decomposition depth limit");
    run->add_option("--parallelism", rf.parallelism, "concurrent instances");
    run->add_option("--retries", rf.retries, "decomposition re-prompts before forcing unit");
    run->add_option("--max-tokens", rf.max_tokens, "completion token limit");
    run->add_flag("--no-recovery", rf.no_recovery, "drop the merge recovery sentence");
    run->add_option("--k", rf.k, "self-consistency sample count");
    run->add_option("--backend", rf.backend, "oracle | remote");
    run->add_option("--fault-decompose", rf.fault_decompose, "decompose corruption rate");
    run->add_option("--fault-unit", rf.fault_unit, "unit corruption rate");
    run->add_option("--fault-merge", rf.fault_merge, "merge corruption rate");
    run->add_option("--fault-seed", rf.fault_seed, "fault injector seed");
    run->add_option("--out", rf.out, "manifest output file (jsonl)");
    run->add_option("--assets", rf.assets_dir, "custom prompt-assets directory");
    run->add_option("--config", rf.config_file, "json config file; flags override");

    // replay
    std::string replay_manifest, replay_assets;
    bool replay_strict = false;
    CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest against its own records");
    replay->add_option("--manifest", replay_manifest, "manifest file")->required();
    replay->add_flag("--strict", replay_strict, "require byte-identical prompts");
    replay->add_option("--assets", replay_assets, "custom prompt-assets directory");

    // report
    std::string report_manifest, report_format = "table", report_out;
    int report_instance = -1;
    CLI::App* report = app.add_subcommand("report", "Render a manifest report");
    report->add_option("--manifest", report_manifest, "manifest file")->required();
    report->add_option("--format", report_format, "table | csv | json | dot");
    report->add_option("--instance", report_instance, "instance index (dot format)");
    report->add_option("--out", report_out, "output file (default stdout)");

    // simulate
    std::string sim_task = "letter_concat", sim_shape;
    int sim_n0 = 50, sim_width = 4, sim_threshold = 5, sim_depth = 3, sim_threads = 1;
    double sim_d = 1.0, sim_u = 0.95, sim_m = 1.0, sim_rho = 0.0;
    long sim_trials = 100000;
    std::uint64_t sim_seed = 1;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Closed-form and Monte-Carlo accuracy for a decomposition shape");
    simulate->add_option("--task", sim_task, "benchmark whose induced shape to use");
    simulate->add_option("--n0", sim_n0, "difficulty of the root instance");
    simulate->add_option("--shape", sim_shape, "shape json file (overrides --task/--n0)");
    simulate->add_option("--phi-d", sim_d, "decomposition success rate");
    simulate->add_option("--phi-u", sim_u, "unit-solving success rate");
    simulate->add_option("--phi-m", sim_m, "merging success rate");
    simulate->add_option("--trials", sim_trials, "simulation trials");
    simulate->add_option("--seed", sim_seed, "simulation seed");
    simulate->add_option("--rho", sim_rho, "correlated-failure mixture weight");
    simulate->add_option("--width", sim_width, "policy width");
    simulate->add_option("--unit-threshold", sim_threshold, "policy unit threshold");
    simulate->add_option("--max-depth", sim_depth, "depth limit");
    simulate->add_option("--threads", sim_threads, "simulation threads");

    // generate
    std::string gen_task = "letter_concat", gen_out;
    int gen_n0 = 5, gen_count = 100;
    std::uint64_t gen_seed = 1;
    CLI::App* generate = app.add_subcommand("generate", "Generate benchmark instances");
    generate->add_option("--task", gen_task, "letter_concat | length_reversal");
    generate->add_option("--n0", gen_n0, "difficulty (list length)");
    generate->add_option("--count", gen_count, "number of instances");
    generate->add_option("--seed", gen_seed, "generation seed");
    generate->add_option("--out", gen_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(rf, run);
        if (replay->parsed()) return cmd_replay(replay_manifest, replay_strict, replay_assets);
        if (report->parsed())
            return cmd_report(report_manifest, report_format, report_instance, report_out);
        if (simulate->parsed())
            return cmd_simulate(sim_task, sim_n0, sim_shape, sim_d, sim_u, sim_m, sim_trials,
                                sim_seed, sim_rho, sim_width, sim_threshold, sim_depth,
                                sim_threads);
        if (generate->parsed()) return cmd_generate(gen_task, gen_n0, gen_count, gen_seed, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
