#pragma once

// Experiment harness: sweeps a benchmark over difficulty levels with one of
// the four methods, persists a replayable manifest, and renders reports.

#include <atomic>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rdd/manifest.hpp"

namespace rdd {

enum class Method { RddCot, RddLtm, CotSc, LtmSc };

inline const char* method_label(Method m) {
    switch (m) {
        case Method::RddCot: return "RDD+CoT";
        case Method::RddLtm: return "RDD+LtM";
        case Method::CotSc: return "CoT+SC";
        case Method::LtmSc: return "LtM+SC";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::RddCot: return "rdd-cot";
        case Method::RddLtm: return "rdd-ltm";
        case Method::CotSc: return "cot-sc";
        case Method::LtmSc: return "ltm-sc";
    }
    return "?";
}

inline Method method_from_string(const std::string& s) {
    if (s == "rdd-cot") return Method::RddCot;
    if (s == "rdd-ltm") return Method::RddLtm;
    if (s == "cot-sc") return Method::CotSc;
    if (s == "ltm-sc") return Method::LtmSc;
    throw ConfigError("unknown method: " + s);
}

inline bool is_rdd(Method m) { return m == Method::RddCot || m == Method::RddLtm; }

inline UnitMethod unit_method_of(Method m) {
    return (m == Method::RddLtm || m == Method::LtmSc) ? UnitMethod::LtM : UnitMethod::CoT;
}

struct ExperimentConfig {
    Task task = Task::LetterConcat;
    std::vector<int> levels;
    int count = 100;
    std::uint64_t seed = 1;
    Method method = Method::RddCot;
    ExampleRegime regime = ExampleRegime::Generic;
    SchedulerConfig scheduler;
    int sc_samples = 5;
};

inline nlohmann::json experiment_config_to_json(const ExperimentConfig& c) {
    return nlohmann::json{
        {"task", to_string(c.task)},
        {"levels", c.levels},
        {"count", c.count},
        {"seed", c.seed},
        {"method", to_string(c.method)},
        {"regime", to_string(c.regime)},
        {"sc_samples", c.sc_samples},
        {"scheduler",
         {{"width", c.scheduler.width},
          {"max_depth", c.scheduler.max_depth},
          {"recovery_sentence_enabled", c.scheduler.recovery_sentence_enabled},
          {"parallelism", c.scheduler.parallelism},
          {"decompose_retries", c.scheduler.decompose_retries},
          {"max_tokens", c.scheduler.max_tokens}}}};
}

inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.task = task_from_string(j.at("task").get<std::string>());
    c.levels = j.at("levels").get<std::vector<int>>();
    c.count = j.value("count", 100);
    c.seed = j.value("seed", std::uint64_t{1});
    c.method = method_from_string(j.at("method").get<std::string>());
    c.regime = j.value("regime", std::string("generic")) == "task_specific"
                   ? ExampleRegime::TaskSpecific
                   : ExampleRegime::Generic;
    c.sc_samples = j.value("sc_samples", 5);
    if (j.contains("scheduler")) {
        const auto& s = j["scheduler"];
        c.scheduler.width = s.value("width", 4);
        c.scheduler.max_depth = s.value("max_depth", 3);
        c.scheduler.recovery_sentence_enabled = s.value("recovery_sentence_enabled", true);
        c.scheduler.parallelism = s.value("parallelism", 1);
        c.scheduler.decompose_retries = s.value("decompose_retries", 1);
        c.scheduler.max_tokens = s.value("max_tokens", 1024);
    }
    return c;
}

// Scheduler settings implied by the experiment: the benchmark picks the
// decomposition mode and the method picks the unit style.
inline SchedulerConfig resolved_scheduler_config(const ExperimentConfig& c) {
    SchedulerConfig s = c.scheduler;
    s.mode = c.task == Task::LengthReversal ? DecompositionMode::WithDependencies
                                            : DecompositionMode::Independent;
    s.unit_method = unit_method_of(c.method);
    s.regime = c.regime;
    return s;
}

namespace detail {

struct LevelBucket {
    int n0 = 0;
    int count = 0;
    int correct = 0;
    ResourceReport resources;
    std::vector<ScoredRun> scored_runs;  // decomposition methods only
};

inline InstanceRecord run_one_instance(const BenchmarkInstance& inst, int index,
                                       const ExperimentConfig& cfg, Backend& backend,
                                       const PromptAssets& assets, int forced_parallelism) {
    InstanceRecord rec;
    rec.index = index;
    rec.instance = inst;
    try {
        if (is_rdd(cfg.method)) {
            SchedulerConfig scfg = resolved_scheduler_config(cfg);
            scfg.parallelism = forced_parallelism;
            Scheduler scheduler(backend, scfg, assets);
            SolveResult r = scheduler.solve(inst.description);
            tag_benchmark_nodes(r.graph);
            assign_verdicts(r.trace, r.graph, scfg.mode);
            rec.answer = r.solution;
            rec.score = score_answer(r.solution, inst);
            rec.calls = calls_from_trace(r.trace);
            rec.graph = graph_to_json(r.graph);
            rec.diagnostics = r.diagnostics;
        } else {
            VoteConfig vote;
            vote.k = cfg.sc_samples;
            vote.max_tokens = cfg.scheduler.max_tokens;
            ScResult r = self_consistency_solve(inst.description, unit_method_of(cfg.method),
                                                backend, vote, assets, cfg.regime);
            rec.answer = r.answer;
            rec.score = score_answer(r.answer, inst);
            rec.calls = calls_from_sc(r);
            rec.diagnostics = r.diagnostics;
        }
    } catch (const SolveError& e) {
        rec.error = e.what();
        rec.calls = calls_from_trace(e.trace());
        rec.graph = graph_to_json(e.graph());
        rec.diagnostics = e.diagnostics();
        rec.answer.clear();
        rec.score = 0;
    } catch (const Error& e) {
        rec.error = e.what();
        rec.answer.clear();
        rec.score = 0;
    }
    rec.resources = resources_from_calls(rec.calls);
    return rec;
}

inline nlohmann::json step_accuracies_to_json(const EmpiricalStepAccuracies& e) {
    return nlohmann::json{{"phi_d", e.decompose_rate},
                          {"phi_m", e.merge_rate},
                          {"phi_u", e.unit_rate},
                          {"phi_rdd", e.end_to_end_rate},
                          {"decompose_steps", e.decompose_total},
                          {"unit_steps", e.unit_total},
                          {"merge_steps", e.merge_total},
                          {"recovery_runs", e.recovery_runs}};
}

} // namespace detail

// Runs the configured sweep. Instances run concurrently on up to
// `scheduler.parallelism` sweep workers (each instance solved sequentially,
// so the backend sees at most that many calls in flight and manifests stay
// deterministic); per-instance failures are recorded without aborting.
inline RunManifest run_experiment(const ExperimentConfig& cfg, Backend& backend,
                                  const PromptAssets& assets,
                                  const std::optional<std::filesystem::path>& out_path = {}) {
    if (cfg.levels.empty()) throw ConfigError("experiment needs at least one difficulty level");
    if (cfg.count < 1) throw ConfigError("count must be >= 1");
    // fail early on invalid template/regime combinations
    SchedulerConfig resolved = resolved_scheduler_config(cfg);
    make_suite(assets, resolved.mode, resolved.regime, resolved.unit_method);

    RunManifest manifest;
    manifest.config = experiment_config_to_json(cfg);
    manifest.created_at = now_iso8601();

    std::optional<ManifestWriter> writer;
    if (out_path) {
        writer.emplace(*out_path);
        writer->meta(manifest.config, manifest.created_at);
    }

    std::vector<BenchmarkInstance> all;
    for (int n0 : cfg.levels)
        for (BenchmarkInstance& inst : generate_instances(cfg.task, n0, cfg.count, cfg.seed))
            all.push_back(std::move(inst));

    manifest.instances.resize(all.size());
    const int workers = std::max(1, cfg.scheduler.parallelism);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= all.size()) break;
            InstanceRecord rec = detail::run_one_instance(all[i], static_cast<int>(i), cfg,
                                                          backend, assets, 1);
            if (writer) writer->instance(rec);
            manifest.instances[i] = std::move(rec);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // per-level summary
    std::map<int, detail::LevelBucket> buckets;
    for (std::size_t i = 0; i < manifest.instances.size(); ++i) {
        const InstanceRecord& rec = manifest.instances[i];
        detail::LevelBucket& b = buckets[rec.instance.difficulty];
        b.n0 = rec.instance.difficulty;
        b.count += 1;
        b.correct += rec.score;
        b.resources += rec.resources;
        if (is_rdd(cfg.method) && rec.error.empty()) {
            ScoredRun run;
            for (const CallRecord& c : rec.calls) {
                TraceEvent ev;
                if (c.step == "decompose") ev.step = TraceStep::Decompose;
                else if (c.step == "unit_solve") ev.step = TraceStep::UnitSolve;
                else if (c.step == "merge") ev.step = TraceStep::Merge;
                else ev.step = TraceStep::Substitute;
                ev.node = ProblemId(c.node);
                ev.completion = c.completion;
                ev.verdict = c.verdict == "correct"
                                 ? Verdict::Correct
                                 : (c.verdict == "incorrect" ? Verdict::Incorrect
                                                             : Verdict::Unknown);
                run.events.push_back(std::move(ev));
            }
            run.root_score = rec.score;
            b.scored_runs.push_back(std::move(run));
        }
    }

    nlohmann::json levels = nlohmann::json::array();
    ResourceReport totals;
    int total_correct = 0, total_count = 0;
    for (auto& [n0, b] : buckets) {
        nlohmann::json level{{"n0", n0},
                             {"count", b.count},
                             {"correct", b.correct},
                             {"accuracy", static_cast<double>(b.correct) / b.count},
                             {"resources", resources_to_json(b.resources)}};
        if (!b.scored_runs.empty())
            level["step_accuracies"] =
                detail::step_accuracies_to_json(estimate_step_accuracies(b.scored_runs));
        levels.push_back(std::move(level));
        totals += b.resources;
        total_correct += b.correct;
        total_count += b.count;
    }
    manifest.summary = nlohmann::json{
        {"method", method_label(cfg.method)},
        {"task", to_string(cfg.task)},
        {"levels", std::move(levels)},
        {"totals",
         {{"count", total_count},
          {"correct", total_correct},
          {"accuracy", total_count ? static_cast<double>(total_correct) / total_count : 0.0},
          {"resources", resources_to_json(totals)}}}};
    if (writer) writer->summary(manifest.summary);
    return manifest;
}

// --- replay ---------------------------------------------------------------------

struct ReplayDeviation {
    int index = 0;
    std::string field;
    std::string original;
    std::string replayed;
};

// Re-runs every recorded instance against its own recorded completions and
// compares answers and scores byte for byte.
inline std::vector<ReplayDeviation> verify_replay(const RunManifest& manifest,
                                                  const PromptAssets& assets,
                                                  bool strict = false) {
    ExperimentConfig cfg = experiment_config_from_json(manifest.config);
    std::vector<ReplayDeviation> deviations;
    for (const InstanceRecord& rec : manifest.instances) {
        if (!rec.error.empty()) continue;
        ReplayBackend replay = replay_backend_for(rec, strict);
        InstanceRecord redone =
            detail::run_one_instance(rec.instance, rec.index, cfg, replay, assets, 1);
        if (!redone.error.empty())
            deviations.push_back({rec.index, "error", "", redone.error});
        else if (redone.answer != rec.answer)
            deviations.push_back({rec.index, "answer", rec.answer, redone.answer});
        else if (redone.score != rec.score)
            deviations.push_back({rec.index, "score", std::to_string(rec.score),
                                  std::to_string(redone.score)});
    }
    return deviations;
}

// --- reports --------------------------------------------------------------------

enum class ReportFormat { Table, Csv, Json, Dot };

inline ReportFormat report_format_from_string(const std::string& s) {
    if (s == "table") return ReportFormat::Table;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json") return ReportFormat::Json;
    if (s == "dot") return ReportFormat::Dot;
    throw ConfigError("unknown report format: " + s);
}

inline std::string render_report(const RunManifest& manifest, ReportFormat format,
                                 int instance_index = -1) {
    const nlohmann::json& summary = manifest.summary;
    switch (format) {
        case ReportFormat::Csv: {
            std::ostringstream out;
            out << "Method,n0,Accuracy,Time,Calls,ContextTokens,OutputTokens\n";
            for (const auto& level : summary.value("levels", nlohmann::json::array())) {
                const auto& res = level.at("resources");
                out << summary.value("method", "?") << "," << level.at("n0").get<int>() << ","
                    << std::fixed << std::setprecision(4) << level.at("accuracy").get<double>()
                    << "," << std::setprecision(3)
                    << static_cast<double>(res.value("wall_time_us", 0LL)) / 1e6 << ","
                    << res.value("calls", 0L) << "," << res.value("context_tokens", 0LL) << ","
                    << res.value("output_tokens", 0LL) << "\n";
            }
            return out.str();
        }
        case ReportFormat::Json: {
            nlohmann::json j{{"config", manifest.config},
                             {"summary", manifest.summary},
                             {"artifact_version", manifest.artifact_version}};
            return j.dump(2) + "\n";
        }
        case ReportFormat::Table: {
            std::ostringstream out;
            out << "Method: " << summary.value("method", "?") << "  Task: "
                << summary.value("task", "?") << "\n\n";
            out << std::left << std::setw(8) << "n0" << std::setw(10) << "accuracy"
                << std::setw(10) << "calls" << std::setw(16) << "ctx_tokens" << std::setw(14)
                << "out_tokens" << "\n";
            for (const auto& level : summary.value("levels", nlohmann::json::array())) {
                const auto& res = level.at("resources");
                out << std::left << std::setw(8) << level.at("n0").get<int>() << std::setw(10)
                    << std::fixed << std::setprecision(4) << level.at("accuracy").get<double>()
                    << std::setw(10) << res.value("calls", 0L) << std::setw(16)
                    << res.value("context_tokens", 0LL) << std::setw(14)
                    << res.value("output_tokens", 0LL) << "\n";
            }
            bool any_steps = false;
            for (const auto& level : summary.value("levels", nlohmann::json::array()))
                if (level.contains("step_accuracies")) any_steps = true;
            if (any_steps) {
                out << "\n" << std::left << std::setw(8) << "n0" << std::setw(10) << "phi_d"
                    << std::setw(10) << "phi_m" << std::setw(10) << "phi_u" << std::setw(10)
                    << "phi_rdd" << std::setw(10) << "recovery" << "\n";
                for (const auto& level : summary.value("levels", nlohmann::json::array())) {
                    if (!level.contains("step_accuracies")) continue;
                    const auto& st = level["step_accuracies"];
                    out << std::left << std::setw(8) << level.at("n0").get<int>() << std::fixed
                        << std::setprecision(4) << std::setw(10)
                        << st.value("phi_d", 1.0) << std::setw(10) << st.value("phi_m", 1.0)
                        << std::setw(10) << st.value("phi_u", 1.0) << std::setw(10)
                        << st.value("phi_rdd", 0.0) << std::setw(10)
                        << st.value("recovery_runs", 0L) << "\n";
                }
            }
            return out.str();
        }
        case ReportFormat::Dot: {
            for (const InstanceRecord& rec : manifest.instances) {
                if (rec.index != instance_index) continue;
                if (rec.graph.is_null())
                    throw UnknownInstanceIdError("instance " + std::to_string(instance_index) +
                                                 " has no decomposition graph");
                return graph_from_json(rec.graph).to_dot();
            }
            throw UnknownInstanceIdError("no instance with index " +
                                         std::to_string(instance_index));
        }
    }
    throw ConfigError("unhandled report format");
}

} // namespace rdd
