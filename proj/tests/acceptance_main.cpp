// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs entirely against the deterministic backends.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "rdd/rdd.hpp"

using namespace rdd;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++failures;
}

const PromptAssets& assets() {
    static PromptAssets a = load_packaged_assets();
    return a;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- criterion 1

void criterion_1_oracle_end_to_end() {
    auto start = std::chrono::steady_clock::now();
    OracleBackend oracle;
    long solved = 0, total = 0;

    ExperimentConfig lc;
    lc.task = Task::LetterConcat;
    lc.levels = {5, 10, 20, 50, 70, 90};
    lc.count = 100;
    lc.seed = 20250101;
    lc.method = Method::RddLtm;
    lc.regime = ExampleRegime::TaskSpecific;
    RunManifest m1 = run_experiment(lc, oracle, assets());
    for (const auto& rec : m1.instances) {
        ++total;
        solved += rec.score;
    }

    ExperimentConfig lr;
    lr.task = Task::LengthReversal;
    lr.levels = {3, 5, 7, 10, 15, 20};
    lr.count = 100;
    lr.seed = 20250102;
    lr.method = Method::RddCot;
    lr.regime = ExampleRegime::Generic;
    RunManifest m2 = run_experiment(lr, oracle, assets());
    for (const auto& rec : m2.instances) {
        ++total;
        solved += rec.score;
    }

    double secs = seconds_since(start);
    std::ostringstream detail;
    detail << solved << "/" << total << " instances solved across both benchmarks in "
           << std::fixed << std::setprecision(1) << secs << "s";
    report(1, "oracle end-to-end over all difficulty levels",
           solved == total && total == 1200 && secs < 30.0, detail.str());
}

// ---------------------------------------------------------------- criterion 2

// Exhaustive outcome enumeration, independent of the closed-form recursion.
void collect_rates_for_enum(const ShapeNode& node, const StepAccuracies& acc,
                            std::vector<double>& out) {
    auto clamp = [](double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); };
    if (node.is_unit) {
        out.push_back(clamp(acc.unit(node.class_tag, node.difficulty)));
        return;
    }
    out.push_back(clamp(acc.decompose(node.class_tag, node.difficulty)));
    out.push_back(clamp(acc.merge(node.class_tag, node.difficulty)));
    for (const ShapeNode& c : node.children) collect_rates_for_enum(c, acc, out);
}

double enumerate_success_probability(const ShapeNode& shape, const StepAccuracies& acc) {
    std::vector<double> rates;
    collect_rates_for_enum(shape, acc, rates);
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << rates.size()); ++mask) {
        double p = 1.0;
        bool all = true;
        for (std::size_t i = 0; i < rates.size(); ++i) {
            bool ok = mask & (1ULL << i);
            p *= ok ? rates[i] : 1.0 - rates[i];
            all &= ok;
        }
        if (all) total += p;
    }
    return total;
}

ShapeNode random_shape(std::mt19937_64& rng, int max_steps) {
    int budget = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_steps));
    auto gen = [&rng](auto&& self, int depth, int& left) -> ShapeNode {
        ShapeNode n;
        n.class_tag = "c" + std::to_string(rng() % 3);
        n.difficulty = 1 + static_cast<int>(rng() % 90);
        if (depth >= 3 || left < 3 || rng() % 2 == 0) {
            n.is_unit = true;
            left -= 1;
            return n;
        }
        n.is_unit = false;
        left -= 2;
        n.children.push_back(self(self, depth + 1, left));
        while (left >= 1 && n.children.size() < 4 && rng() % 2 == 0)
            n.children.push_back(self(self, depth + 1, left));
        return n;
    };
    return gen(gen, 0, budget);
}

StepAccuracies hashed_accuracies(std::uint64_t seed) {
    auto value = [seed](std::uint64_t salt, const std::string& c, int n) {
        std::uint64_t h = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
        for (char ch : c) h = h * 1099511628211ULL + static_cast<unsigned char>(ch);
        h = h * 1099511628211ULL + static_cast<std::uint64_t>(n);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<double>(h % 10000) / 9999.0;
    };
    return StepAccuracies{[value](const std::string& c, int n) { return value(1, c, n); },
                          [value](const std::string& c, int n) { return value(2, c, n); },
                          [value](const std::string& c, int n) { return value(3, c, n); }};
}

void criterion_2_model_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(240808);
    double worst_gap = 0.0;
    bool enum_ok = true;
    for (int i = 0; i < 200; ++i) {
        ShapeNode shape = random_shape(rng, 10);
        StepAccuracies acc = hashed_accuracies(rng());
        double closed = closed_form_accuracy(shape, acc);
        double enumerated = enumerate_success_probability(shape, acc);
        worst_gap = std::max(worst_gap, std::abs(closed - enumerated));
        enum_ok &= std::abs(closed - enumerated) <= 1e-12;
    }

    bool mc_ok = true;
    int mc_checked = 0;
    for (int i = 0; i < 50; ++i) {
        ShapeNode shape = random_shape(rng, 10);
        StepAccuracies acc = hashed_accuracies(rng());
        double closed = closed_form_accuracy(shape, acc);
        auto est = simulate_accuracy(shape, acc, 100000, 5000 + static_cast<std::uint64_t>(i));
        // standard error taken at the known true rate, which stays valid when
        // the sampled fraction is 0 or 1
        double sigma = std::sqrt(closed * (1.0 - closed) / 100000.0);
        ++mc_checked;
        mc_ok &= std::abs(est.estimate - closed) <= 3.0 * sigma;
    }
    double secs = seconds_since(start);
    std::ostringstream detail;
    detail << "enumeration gap max " << std::scientific << std::setprecision(2) << worst_gap
           << " over 200 shapes; " << mc_checked
           << " simulations within 3 standard errors; " << std::fixed << std::setprecision(1)
           << secs << "s";
    report(2, "closed form matches enumeration and simulation", enum_ok && mc_ok && secs < 60.0,
           detail.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_3_theorem_checkers() {
    std::mt19937_64 rng(777001);
    int failing_cases = 0, counterexamples = 0;
    for (int i = 0; i < 1000; ++i) {
        ShapeNode shape = random_shape(rng, 10);
        StepAccuracies acc = hashed_accuracies(rng());
        auto rep = check_improvement_conditions(shape, acc, shape.class_tag, shape.difficulty);
        if (rep.decompose_merge_ok && rep.unit_gain_ok) continue;
        ++failing_cases;
        if (closed_form_accuracy(shape, acc) > rep.root_unit_rate + 1e-15) ++counterexamples;
    }
    std::ostringstream detail;
    detail << failing_cases << " failing-condition cases, " << counterexamples
           << " counterexamples";
    report(3, "failed conditions always bound the composed accuracy",
           counterexamples == 0 && failing_cases > 100, detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion_4_scheduler_conformance() {
    std::vector<std::string> words{"cow", "banana", "castle"};
    std::vector<RecordedTurn> turns{
        {"", "- [P-1] " + render_length_list(words) + "\n- [P-2] " + render_reverse_list("{P-1}"),
         {}},
        {"", "This is a unit problem.", {}},
        {"", "<ANSWER>\"3 6 6\"</ANSWER>", {}},
        {"", "This is a unit problem.", {}},
        {"", "<ANSWER>\"6 6 3\"</ANSWER>", {}},
        {"", "The reversed list is <ANSWER>\"6 6 3\"</ANSWER>.", {}},
    };
    ReplayBackend replay(turns);
    SchedulerConfig cfg;
    cfg.mode = DecompositionMode::WithDependencies;
    cfg.regime = ExampleRegime::Generic;
    Scheduler scheduler(replay, cfg, assets());
    SolveResult r = scheduler.solve(render_length_reversal(words));

    std::vector<std::pair<TraceStep, std::string>> expected{
        {TraceStep::Decompose, "ROOT"}, {TraceStep::Decompose, "P-1"},
        {TraceStep::UnitSolve, "P-1"},  {TraceStep::Substitute, "P-2"},
        {TraceStep::Decompose, "P-2"},  {TraceStep::UnitSolve, "P-2"},
        {TraceStep::Merge, "ROOT"},
    };
    bool order_ok = r.trace.size() == expected.size();
    for (std::size_t i = 0; order_ok && i < expected.size(); ++i)
        order_ok = r.trace[i].step == expected[i].first &&
                   r.trace[i].node.local() == expected[i].second;
    bool solution_ok = r.solution == "6 6 3";

    // cycle injection, both through a cyclic proposal and through the
    // traversal's visited set
    bool proposal_cycle = false;
    try {
        std::vector<RecordedTurn> cyclic{
            {"", "- [P-1] use {P-2} first\n- [P-2] use {P-1} first", {}}};
        ReplayBackend cyclic_replay(cyclic);
        Scheduler s(cyclic_replay, cfg, assets());
        s.solve("anything");
    } catch (const SolveError& e) {
        proposal_cycle = std::string(e.what()).find("cyclic") != std::string::npos;
    }
    bool visited_cycle = false;
    try {
        OracleBackend oracle;
        Scheduler s(oracle, cfg, assets());
        s.load_graph(DecompositionGraph("x"));
        std::set<ProblemId> visited{ProblemId::root()};
        s.schedule_dfs(ProblemId::root(), visited);
    } catch (const CycleError&) {
        visited_cycle = true;
    }

    std::ostringstream detail;
    detail << (order_ok ? "event order reproduced" : "event order diverged") << "; final '"
           << r.solution << "'; cycle errors " << (proposal_cycle && visited_cycle ? "raised"
                                                                                   : "missing");
    report(4, "dependency transcript replay and cycle injection",
           order_ok && solution_ok && proposal_cycle && visited_cycle, detail.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion_5_error_replays() {
    SchedulerConfig lc_cfg;
    lc_cfg.mode = DecompositionMode::Independent;
    lc_cfg.regime = ExampleRegime::TaskSpecific;
    lc_cfg.unit_method = UnitMethod::LtM;

    // propagation: a unit mistake in the second partition carries to the root
    std::vector<std::string> words{"Gladys", "Rathav", "Miya", "Olga", "Dong", "Wilson"};
    BenchmarkInstance inst;
    inst.task = Task::LetterConcat;
    inst.words = words;
    inst.index = 1;
    inst.description = render_letter_concat(words, 1);
    inst.ground_truth = solve_ground_truth(inst);  // "l a i l o i"

    std::vector<std::string> part1{"Gladys", "Rathav", "Miya", "Olga"};
    std::vector<std::string> part2{"Dong", "Wilson"};
    std::vector<RecordedTurn> propagation{
        {"", "- " + render_letter_concat(part1, 1) + "\n- " + render_letter_concat(part2, 1), {}},
        {"", "This is a unit problem.", {}},
        {"", "This is a unit problem.", {}},
        {"", "<ANSWER>\"l a i l\"</ANSWER>", {}},
        {"", "<ANSWER>\"o x\"</ANSWER>", {}},
        {"", "<ANSWER>\"l a i l o x\"</ANSWER>", {}},
    };
    ReplayBackend prop_replay(propagation);
    Scheduler prop_scheduler(prop_replay, lc_cfg, assets());
    SolveResult prop = prop_scheduler.solve(inst.description);
    tag_benchmark_nodes(prop.graph);
    assign_verdicts(prop.trace, prop.graph, lc_cfg.mode);
    int prop_score = score_answer(prop.solution, inst);
    bool child_incorrect = false;
    for (const auto& ev : prop.trace)
        if (ev.step == TraceStep::UnitSolve && ev.node.local() == "P-2")
            child_incorrect = ev.verdict == Verdict::Incorrect;
    std::vector<ScoredRun> prop_runs{{prop.trace, prop_score}};
    auto prop_est = estimate_step_accuracies(prop_runs);
    bool propagation_ok = prop_score == 0 && child_incorrect && prop_est.recovery_runs == 0;

    // recovery: a missing-data decomposition breaks a child, the root merge
    // solves the problem directly anyway
    SchedulerConfig lr_cfg;
    lr_cfg.mode = DecompositionMode::WithDependencies;
    lr_cfg.regime = ExampleRegime::Generic;
    std::vector<std::string> rwords{"cow", "banana", "castle"};
    BenchmarkInstance rinst;
    rinst.task = Task::LengthReversal;
    rinst.words = rwords;
    rinst.description = render_length_reversal(rwords);
    rinst.ground_truth = solve_ground_truth(rinst);  // "6 6 3"

    std::vector<RecordedTurn> recovery{
        {"",
         "- [P-1] " + render_length_list(rwords) +
             "\n- [P-2] Reverse the order of the items in the following space-separated list: ",
         {}},
        {"", "This is a unit problem.", {}},
        {"", "This is a unit problem.", {}},
        {"", "<ANSWER>\"3 6 6\"</ANSWER>", {}},
        {"", "<ANSWER>\"\"</ANSWER>", {}},
        {"",
         "The second sub-problem is missing its input data, so I will solve the problem "
         "directly. The lengths are 3, 6 and 6; reversing them gives <ANSWER>\"6 6 3\"</ANSWER>.",
         {}},
    };
    ReplayBackend rec_replay(recovery);
    Scheduler rec_scheduler(rec_replay, lr_cfg, assets());
    SolveResult rec = rec_scheduler.solve(rinst.description);
    tag_benchmark_nodes(rec.graph);
    assign_verdicts(rec.trace, rec.graph, lr_cfg.mode);
    int rec_score = score_answer(rec.solution, rinst);
    bool rec_child_incorrect = false;
    for (const auto& ev : rec.trace)
        if (ev.step == TraceStep::UnitSolve && ev.node.local() == "P-2" &&
            ev.verdict == Verdict::Incorrect)
            rec_child_incorrect = true;
    std::vector<ScoredRun> rec_runs{{rec.trace, rec_score}};
    auto rec_est = estimate_step_accuracies(rec_runs);
    bool recovery_ok = rec_score == 1 && rec_child_incorrect && rec_est.recovery_runs == 1;

    std::ostringstream detail;
    detail << "propagation: root " << (prop_score ? "correct" : "incorrect")
           << ", child incorrect " << (child_incorrect ? "yes" : "no")
           << "; recovery: root " << (rec_score ? "correct" : "incorrect") << ", "
           << rec_est.recovery_runs << " recovery event(s)";
    report(5, "error propagation and recovery replays", propagation_ok && recovery_ok,
           detail.str());
}

// ---------------------------------------------------------------- criterion 6

struct ExpectedShot {
    bool unit;
    int subs;
    std::vector<std::set<std::string>> deps;  // dependency sets per sub (dep sets only)
};

void criterion_6_parser_conformance() {
    bool loaded = true;
    std::string failure;
    try {
        (void)assets();
    } catch (const Error& e) {
        loaded = false;
        failure = e.what();
    }

    int cases = 0, ok_cases = 0;
    auto check_set = [&](const std::string& name, DecompositionMode mode,
                         const std::vector<ExpectedShot>& expected) {
        const ExampleSet& set = assets().set(name);
        if (set.shots.size() != expected.size()) {
            failure = name + ": unexpected shot count";
            return;
        }
        for (std::size_t i = 0; i < set.shots.size(); ++i) {
            ++cases;
            try {
                auto r = parse_decomposition(set.shots[i].target, mode, 4);
                const ExpectedShot& e = expected[i];
                bool good = r.unit_problem == e.unit &&
                            static_cast<int>(r.subs.size()) == (e.unit ? 0 : e.subs);
                if (good && !e.deps.empty()) {
                    for (std::size_t s = 0; s < r.subs.size(); ++s)
                        good &= r.subs[s].dep_refs == e.deps[s];
                }
                if (good) ++ok_cases;
                else failure = name + " shot " + std::to_string(i);
            } catch (const Error& err) {
                failure = name + " shot " + std::to_string(i) + ": " + err.what();
            }
        }
    };

    check_set("letter_concat_decompose", DecompositionMode::Independent,
              {{true, 0, {}}, {false, 2, {}}, {false, 3, {}}, {true, 0, {}}, {false, 4, {}}});
    check_set("generic_decompose", DecompositionMode::Independent,
              {{true, 0, {}},
               {false, 2, {}},
               {true, 0, {}},
               {false, 2, {}},
               {true, 0, {}},
               {false, 3, {}},
               {true, 0, {}},
               {false, 2, {}}});
    check_set("generic_decompose_deps", DecompositionMode::WithDependencies,
              {{true, 0, {}},
               {false, 3, {{}, {"P-1"}, {"P-2"}}},
               {false, 3, {{}, {}, {"P-1", "P-2"}}},
               {false, 2, {{}, {}}},
               {true, 0, {}},
               {false, 2, {{}, {}}},
               {false, 2, {{}, {"P-1"}}},
               {true, 0, {}}});

    // partition shots of the letter-concat set must reassemble their inputs
    const ExampleSet& lc = assets().set("letter_concat_decompose");
    for (const Shot& shot : lc.shots) {
        auto input = parse_problem_text(shot.input);
        if (!input) continue;
        auto r = parse_decomposition(shot.target, DecompositionMode::Independent, 4);
        if (r.unit_problem) continue;
        ++cases;
        std::vector<std::string> words;
        bool good = true;
        for (const auto& sub : r.subs) {
            auto p = parse_problem_text(sub.description);
            good &= p.has_value() && p->index == input->index;
            if (p) words.insert(words.end(), p->words.begin(), p->words.end());
        }
        if (good && words == input->words) ++ok_cases;
        else failure = "letter_concat_decompose reassembly";
    }

    std::ostringstream detail;
    detail << ok_cases << "/" << cases << " packaged decomposition cases reproduced";
    if (!failure.empty()) detail << "; first failure: " << failure;
    report(6, "assets load and every packaged decomposition parses", loaded && cases == 24 &&
               ok_cases == cases, detail.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion_7_compute_matching() {
    std::mt19937_64 rng(19);
    bool property_ok = true;
    for (int i = 0; i < 500; ++i) {
        std::int64_t ctx = static_cast<std::int64_t>(rng() % 5000000);
        std::int64_t out = static_cast<std::int64_t>(rng() % 5000000);
        ResourceReport r;
        r.context_tokens = ctx;
        r.output_tokens = out;
        // independent integer-arithmetic route
        long double expected = static_cast<long double>(ctx) + 3.0L * out;
        property_ok &= r.matched_cost() == static_cast<double>(expected);
    }
    ResourceReport table_row;  // published CoT+SC row at the lowest difficulty
    table_row.context_tokens = 1249529;
    table_row.output_tokens = 84656;
    bool row_ok = table_row.matched_cost() == 1503497.0;

    ResourceReport per_sample;
    per_sample.context_tokens = 300;
    ResourceReport target;
    target.context_tokens = 1400;
    bool k_ok = match_compute(per_sample, target).k_recommendation == 5;

    std::ostringstream detail;
    detail << "cost formula exact on 500 random reports; published row gives "
           << std::fixed << std::setprecision(0) << table_row.matched_cost();
    report(7, "compute matching reproduces the cost formula", property_ok && row_ok && k_ok,
           detail.str());
}

// ---------------------------------------------------------------- criterion 8

void criterion_8_transition_points() {
    // digitized end-to-end series from the error-analysis tables, with stored
    // baseline curves consistent with the published transition statements
    std::map<int, double> specific_rdd{{5, 0.98}, {10, 0.91}, {20, 0.85},
                                       {50, 0.80}, {70, 0.84}, {90, 0.45}};
    std::map<int, double> specific_baseline{{5, 1.00}, {10, 0.95}, {20, 0.90},
                                            {50, 0.55}, {70, 0.30}, {90, 0.05}};
    auto t1 = find_transition_point(specific_rdd, specific_baseline, "letter_concat");

    std::map<int, double> generic_rdd{{5, 0.93}, {10, 0.85}, {20, 0.71},
                                      {50, 0.42}, {70, 0.28}, {90, 0.11}};
    std::map<int, double> generic_baseline{{5, 0.97}, {10, 0.90}, {20, 0.60},
                                           {50, 0.15}, {70, 0.05}, {90, 0.01}};
    auto t2 = find_transition_point(generic_rdd, generic_baseline, "letter_concat");

    bool ok = t1 && t1->n_low == 20 && t1->n_high == 50 && t2 && t2->n_low == 10 &&
              t2->n_high == 20;
    std::ostringstream detail;
    if (t1 && t2)
        detail << "task-specific bracket (" << t1->n_low << ", " << t1->n_high
               << "), generic bracket (" << t2->n_low << ", " << t2->n_high << ")";
    else
        detail << "bracket missing";
    report(8, "transition brackets match the published statements", ok, detail.str());
}

// ---------------------------------------------------------------- criterion 9

class PluralityComparator : public Backend {
public:
    explicit PluralityComparator(std::vector<std::string> all) : all_(std::move(all)) {}
    std::string name() const override { return "plurality"; }
    Completion complete(const CompletionRequest& r) override {
        auto pp = parse_prompt_problem(r.prompt, PromptKind::Vote);
        const std::string &a = pp.candidates.at(0), &b = pp.candidates.at(1);
        bool first = count(a) != count(b) ? count(a) > count(b) : a <= b;
        return Completion{first ? "<ANSWER>1</ANSWER>" : "<ANSWER>2</ANSWER>", {}};
    }

private:
    long count(const std::string& x) const { return std::count(all_.begin(), all_.end(), x); }
    std::vector<std::string> all_;
};

void criterion_9_voting() {
    const std::vector<std::string> symbols{"A", "B", "C"};
    long cases = 0, matched = 0;
    for (int len = 1; len <= 6; ++len) {
        long total = 1;
        for (int i = 0; i < len; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
            std::vector<std::string> candidates;
            long c = code;
            for (int i = 0; i < len; ++i) {
                candidates.push_back(symbols[c % 3]);
                c /= 3;
            }
            // brute-force plurality with the comparator's tie-break
            std::string expected;
            long best = -1;
            for (const std::string& x : candidates) {
                long n = std::count(candidates.begin(), candidates.end(), x);
                if (n > best || (n == best && x < expected)) {
                    expected = x;
                    best = n;
                }
            }
            PluralityComparator cmp(candidates);
            std::string got = binary_search_vote(candidates, "pick one", cmp, assets());
            ++cases;
            matched += got == expected;
        }
    }
    std::ostringstream detail;
    detail << matched << "/" << cases << " candidate lists returned the plurality answer";
    report(9, "tournament voting equals plurality under an exact-match comparator",
           cases == 1092 && matched == cases, detail.str());
}

// ---------------------------------------------------------------- criterion 10

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10_determinism_replay() {
    OracleBackend oracle;
    ExperimentConfig cfg;
    cfg.task = Task::LetterConcat;
    cfg.levels = {5, 20};
    cfg.count = 10;
    cfg.seed = 424242;
    cfg.method = Method::RddLtm;
    cfg.regime = ExampleRegime::TaskSpecific;

    fs::path f1 = fs::temp_directory_path() / "rdd_acceptance_m1.jsonl";
    fs::path f2 = fs::temp_directory_path() / "rdd_acceptance_m2.jsonl";
    RunManifest m1 = run_experiment(cfg, oracle, assets(), f1);
    RunManifest m2 = run_experiment(cfg, oracle, assets(), f2);

    auto strip = [](std::string text) {
        return std::regex_replace(text, std::regex("\"created_at\":\"[^\"]*\""),
                                  "\"created_at\":\"T\"");
    };
    bool bytes_ok = strip(slurp(f1)) == strip(slurp(f2));

    RunManifest loaded = read_manifest(f1);
    auto deviations = verify_replay(loaded, assets());
    bool replay_ok = deviations.empty();
    bool answers_ok = loaded.instances.size() == m1.instances.size();
    for (std::size_t i = 0; answers_ok && i < loaded.instances.size(); ++i)
        answers_ok = loaded.instances[i].answer == m2.instances[i].answer &&
                     loaded.instances[i].score == m2.instances[i].score;

    // the SC baseline replays identically as well
    cfg.method = Method::CotSc;
    cfg.regime = ExampleRegime::Generic;
    cfg.count = 5;
    RunManifest sc = run_experiment(cfg, oracle, assets());
    bool sc_replay_ok = verify_replay(sc, assets(), true).empty();

    fs::remove(f1);
    fs::remove(f2);
    std::ostringstream detail;
    detail << (bytes_ok ? "manifests byte-identical modulo timestamp" : "manifest bytes differ")
           << "; " << deviations.size() << " replay deviation(s); strict SC replay "
           << (sc_replay_ok ? "ok" : "diverged");
    report(10, "manifests are deterministic and replay to identical answers",
           bytes_ok && replay_ok && answers_ok && sc_replay_ok, detail.str());
}

} // namespace

int main() {
    criterion_1_oracle_end_to_end();
    criterion_2_model_equivalence();
    criterion_3_theorem_checkers();
    criterion_4_scheduler_conformance();
    criterion_5_error_replays();
    criterion_6_parser_conformance();
    criterion_7_compute_matching();
    criterion_8_transition_points();
    criterion_9_voting();
    criterion_10_determinism_replay();
    if (failures) {
        std::printf("%d criterion failure(s)\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
