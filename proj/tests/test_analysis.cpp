#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "rdd/analysis.hpp"
#include "rdd/fault.hpp"
#include "rdd/oracle.hpp"

using namespace rdd;

namespace {

ShapeNode unit(const std::string& c, int n) { return ShapeNode{c, n, true, {}}; }

ShapeNode composite(const std::string& c, int n, std::vector<ShapeNode> children) {
    return ShapeNode{c, n, false, std::move(children)};
}

// Step-probability collection + exhaustive outcome enumeration, written in
// the test as the independent oracle for the closed form: sum the probability
// of every all-correct outcome vector over the 2^S combinations.
void oracle_collect(const ShapeNode& node, const StepAccuracies& acc, std::vector<double>& out) {
    auto clamp = [](double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); };
    if (node.is_unit) {
        out.push_back(clamp(acc.unit(node.class_tag, node.difficulty)));
    } else {
        out.push_back(clamp(acc.decompose(node.class_tag, node.difficulty)));
        out.push_back(clamp(acc.merge(node.class_tag, node.difficulty)));
        for (const ShapeNode& c : node.children) oracle_collect(c, acc, out);
    }
}

double enumeration_oracle(const ShapeNode& shape, const StepAccuracies& acc) {
    std::vector<double> rates;
    oracle_collect(shape, acc, rates);
    const std::size_t steps = rates.size();
    REQUIRE(steps <= 20);
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << steps); ++mask) {
        double p = 1.0;
        bool all_correct = true;
        for (std::size_t i = 0; i < steps; ++i) {
            bool ok = mask & (1ULL << i);
            p *= ok ? rates[i] : 1.0 - rates[i];
            all_correct &= ok;
        }
        if (all_correct) total += p;
    }
    return total;
}

int count_steps(const ShapeNode& n) {
    int s = n.is_unit ? 1 : 2;
    for (const auto& c : n.children) s += count_steps(c);
    return s;
}

ShapeNode random_shape(std::mt19937_64& rng, int max_steps) {
    int budget = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_steps));
    auto gen = [&rng](auto&& self, int depth, int& steps_left) -> ShapeNode {
        ShapeNode n;
        n.class_tag = "c" + std::to_string(rng() % 3);
        n.difficulty = 1 + static_cast<int>(rng() % 50);
        bool can_compose = depth < 3 && steps_left >= 3;
        if (!can_compose || rng() % 2 == 0) {
            n.is_unit = true;
            steps_left -= 1;
            return n;
        }
        n.is_unit = false;
        steps_left -= 2;
        n.children.push_back(self(self, depth + 1, steps_left));
        while (steps_left >= 1 && n.children.size() < 4 && rng() % 2 == 0)
            n.children.push_back(self(self, depth + 1, steps_left));
        return n;
    };
    return gen(gen, 0, budget);
}

// Accuracy functions drawn per (class, difficulty) from a seeded hash.
StepAccuracies random_accuracies(std::uint64_t seed) {
    auto value = [seed](std::uint64_t salt, const std::string& c, int n) {
        std::uint64_t h = seed ^ salt;
        for (char ch : c) h = h * 1099511628211ULL + static_cast<unsigned char>(ch);
        h = h * 1099511628211ULL + static_cast<std::uint64_t>(n);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<double>(h % 10000) / 9999.0;
    };
    return StepAccuracies{
        [value](const std::string& c, int n) { return value(1, c, n); },
        [value](const std::string& c, int n) { return value(2, c, n); },
        [value](const std::string& c, int n) { return value(3, c, n); }};
}

} // namespace

TEST_CASE("closed form: products of ones stay one") {
    auto acc = StepAccuracies::constant(1.0, 1.0, 1.0);
    CHECK(closed_form_accuracy(unit("c", 5), acc) == 1.0);
    CHECK(closed_form_accuracy(
              composite("c", 10, {unit("c", 5), composite("c", 5, {unit("c", 2), unit("c", 3)})}),
              acc) == 1.0);
}

TEST_CASE("closed form: two unit children worked example") {
    auto acc = StepAccuracies::constant(0.9, 0.95, 0.9);
    ShapeNode shape = composite("c", 10, {unit("c", 5), unit("c", 5)});
    CHECK(closed_form_accuracy(shape, acc) == Approx(0.731025).epsilon(1e-12));
}

TEST_CASE("closed form: unit root returns the unit rate") {
    auto acc = StepAccuracies::constant(0.1, 0.42, 0.2);
    CHECK(closed_form_accuracy(unit("c", 3), acc) == Approx(0.42).margin(1e-15));
}

TEST_CASE("closed form: three-step chain of halves") {
    auto acc = StepAccuracies::constant(0.5, 0.5, 0.5);
    ShapeNode chain = composite("c", 2, {unit("c", 1)});
    CHECK(closed_form_accuracy(chain, acc) == Approx(0.125).epsilon(1e-12));
}

TEST_CASE("closed form agrees with exhaustive enumeration on random shapes") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        ShapeNode shape = random_shape(rng, 10);
        REQUIRE(count_steps(shape) <= 10);
        validate_shape(shape);
        StepAccuracies acc = random_accuracies(rng());
        double closed = closed_form_accuracy(shape, acc);
        double enumerated = enumeration_oracle(shape, acc);
        CHECK(closed == Approx(enumerated).margin(1e-12));
    }
}

TEST_CASE("improvement conditions on the worked examples") {
    ShapeNode shape = composite("root", 10, {unit("leaf", 5), unit("leaf", 5)});
    SECTION("both conditions hold") {
        StepAccuracies acc{[](const std::string&, int) { return 1.0; },
                           [](const std::string& c, int) { return c == "root" ? 0.5 : 0.9; },
                           [](const std::string&, int) { return 1.0; }};
        auto report = check_improvement_conditions(shape, acc, "root", 10);
        CHECK(report.decompose_merge_ok);
        CHECK(report.unit_gain_ok);
        CHECK(report.violations.empty());
    }
    SECTION("boundary equality fails the strict inequality") {
        StepAccuracies acc{[](const std::string&, int) { return 0.5; },
                           [](const std::string& c, int) { return c == "root" ? 0.25 : 0.9; },
                           [](const std::string&, int) { return 0.5; }};
        auto report = check_improvement_conditions(shape, acc, "root", 10);
        CHECK_FALSE(report.decompose_merge_ok);  // 0.5 * 0.5 == 0.25 exactly
        CHECK(report.unit_gain_ok);
    }
    SECTION("a weak unit node is reported") {
        StepAccuracies acc{[](const std::string&, int) { return 1.0; },
                           [](const std::string& c, int) { return c == "root" ? 0.5 : 0.4; },
                           [](const std::string&, int) { return 1.0; }};
        auto report = check_improvement_conditions(shape, acc, "root", 10);
        CHECK_FALSE(report.unit_gain_ok);
        CHECK(report.violations.size() == 2);
        CHECK(report.violations[0].path == "ROOT/1");
    }
}

TEST_CASE("failed conditions bound the composed accuracy by the root rate") {
    std::mt19937_64 rng(31337);
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        ShapeNode shape = random_shape(rng, 10);
        StepAccuracies acc = random_accuracies(rng());
        auto report = check_improvement_conditions(shape, acc, shape.class_tag, shape.difficulty);
        if (report.decompose_merge_ok && report.unit_gain_ok) continue;
        ++checked;
        double composed = closed_form_accuracy(shape, acc);
        CHECK(composed <= report.root_unit_rate + 1e-15);
    }
    CHECK(checked > 100);  // the sample actually exercises failing cases
}

TEST_CASE("monte carlo: certainty gives estimate one with zero error") {
    auto acc = StepAccuracies::constant(1.0, 1.0, 1.0);
    ShapeNode shape = composite("c", 10, {unit("c", 5), unit("c", 5)});
    auto est = simulate_accuracy(shape, acc, 1000, 7);
    CHECK(est.estimate == 1.0);
    CHECK(est.standard_error == 0.0);
}

TEST_CASE("monte carlo converges to the closed form") {
    auto acc = StepAccuracies::constant(0.9, 0.95, 0.9);
    ShapeNode shape = composite("c", 10, {unit("c", 5), unit("c", 5)});
    auto est = simulate_accuracy(shape, acc, 1000000, 99);
    CHECK(std::abs(est.estimate - 0.731025) <= 3.0 * est.standard_error);

    auto half = StepAccuracies::constant(0.5, 0.5, 0.5);
    ShapeNode chain = composite("c", 2, {unit("c", 1)});
    auto est2 = simulate_accuracy(chain, half, 100000, 100);
    CHECK(std::abs(est2.estimate - 0.125) <= 3.0 * est2.standard_error);
}

TEST_CASE("monte carlo is deterministic per seed and thread count") {
    auto acc = StepAccuracies::constant(0.8, 0.9, 0.85);
    ShapeNode shape = composite("c", 9, {unit("c", 3), unit("c", 3), unit("c", 3)});
    auto a = simulate_accuracy(shape, acc, 20000, 5);
    auto b = simulate_accuracy(shape, acc, 20000, 5);
    SimulationOptions threaded;
    threaded.threads = 4;
    auto c = simulate_accuracy(shape, acc, 20000, 5, threaded);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    auto d = simulate_accuracy(shape, acc, 20000, 6);
    CHECK(a.estimate != d.estimate);  // different substreams
}

TEST_CASE("monte carlo meta-test: within three standard errors on most seeds") {
    auto acc = StepAccuracies::constant(0.9, 0.95, 0.9);
    ShapeNode shape = composite("c", 10, {unit("c", 5), unit("c", 5)});
    const double closed = closed_form_accuracy(shape, acc);
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto est = simulate_accuracy(shape, acc, 10000, seed);
        if (std::abs(est.estimate - closed) <= 3.0 * est.standard_error) ++within;
    }
    CHECK(within >= 99);
}

TEST_CASE("comonotone failures deviate from the independent model") {
    // with fully correlated draws the run succeeds iff the single uniform
    // clears every step, i.e. with probability min(rates)
    auto acc = StepAccuracies::constant(0.9, 0.95, 0.6);
    ShapeNode shape = composite("c", 10, {unit("c", 5), unit("c", 5)});
    SimulationOptions correlated;
    correlated.correlated_rho = 1.0;
    auto est = simulate_accuracy(shape, acc, 100000, 11, correlated);
    CHECK(std::abs(est.estimate - 0.6) <= 3.0 * est.standard_error);
    // the correlated estimate sits well above the independent closed form
    CHECK(est.estimate > closed_form_accuracy(shape, acc) + 3.0 * est.standard_error);
}

TEST_CASE("invalid shapes and arguments are rejected") {
    ShapeNode bad_unit = unit("c", 1);
    bad_unit.children.push_back(unit("c", 1));
    CHECK_THROWS_AS(validate_shape(bad_unit), AnalysisError);
    ShapeNode bad_composite = composite("c", 2, {});
    CHECK_THROWS_AS(validate_shape(bad_composite), AnalysisError);
    CHECK_THROWS_AS(
        simulate_accuracy(unit("c", 1), StepAccuracies::constant(1, 1, 1), 0, 1),
        AnalysisError);
}

TEST_CASE("oracle runs score perfectly") {
    static PromptAssets assets = load_packaged_assets();
    OracleBackend oracle;
    SchedulerConfig cfg;
    cfg.mode = DecompositionMode::Independent;
    cfg.regime = ExampleRegime::TaskSpecific;
    cfg.unit_method = UnitMethod::LtM;

    std::vector<ScoredRun> runs;
    for (const auto& inst : generate_instances(Task::LetterConcat, 9, 5, 606)) {
        SolveResult r = solve(inst.description, oracle, cfg, assets);
        tag_benchmark_nodes(r.graph);
        assign_verdicts(r.trace, r.graph, cfg.mode);
        runs.push_back(ScoredRun{r.trace, score_answer(r.solution, inst)});
    }
    auto est = estimate_step_accuracies(runs);
    CHECK(est.decompose_rate == 1.0);
    CHECK(est.unit_rate == 1.0);
    CHECK(est.merge_rate == 1.0);
    CHECK(est.end_to_end_rate == 1.0);
    CHECK(est.recovery_runs == 0);
    CHECK(est.decompose_total > 0);
    CHECK(est.unit_total > 0);
    CHECK(est.merge_total > 0);
}

TEST_CASE("fault injection shows up in the unit rate at the injected level") {
    static PromptAssets assets = load_packaged_assets();
    OracleBackend oracle;
    FaultInjectionBackend fault(oracle, FaultRates{0, 0.2, 0}, 20240202);
    SchedulerConfig cfg;
    cfg.mode = DecompositionMode::Independent;
    cfg.regime = ExampleRegime::TaskSpecific;
    cfg.unit_method = UnitMethod::LtM;

    std::vector<ScoredRun> runs;
    for (const auto& inst : generate_instances(Task::LetterConcat, 4, 600, 11)) {
        SolveResult r = solve(inst.description, oracle, cfg, assets);
        // replay through the fault injector by re-running; single-unit roots
        SolveResult f = solve(inst.description, fault, cfg, assets);
        (void)r;
        tag_benchmark_nodes(f.graph);
        assign_verdicts(f.trace, f.graph, cfg.mode);
        runs.push_back(ScoredRun{f.trace, score_answer(f.solution, inst)});
    }
    auto est = estimate_step_accuracies(runs);
    CHECK(est.unit_total == 600);
    CHECK(std::abs(est.unit_rate - 0.8) < 0.05);  // 3 sigma ~= 0.049
    CHECK(est.end_to_end_rate == Approx(est.unit_rate));
    CHECK(est.recovery_runs == 0);
}

TEST_CASE("missing verdicts are reported") {
    ScoredRun run;
    TraceEvent ev;
    ev.step = TraceStep::UnitSolve;
    ev.node = ProblemId::root();
    run.events.push_back(ev);
    std::vector<ScoredRun> runs{run};
    CHECK_THROWS_AS(estimate_step_accuracies(runs), MissingVerdictsError);
}

TEST_CASE("recovery counting: correct root despite a wrong child") {
    ScoredRun run;
    run.root_score = 1;
    TraceEvent child;
    child.step = TraceStep::UnitSolve;
    child.node = ProblemId::root().child("P-2");
    child.verdict = Verdict::Incorrect;
    TraceEvent root_merge;
    root_merge.step = TraceStep::Merge;
    root_merge.node = ProblemId::root();
    root_merge.verdict = Verdict::Correct;
    run.events = {child, root_merge};
    std::vector<ScoredRun> runs{run, run};
    runs[1].root_score = 0;  // propagation, not recovery
    auto est = estimate_step_accuracies(runs);
    CHECK(est.recovery_runs == 1);
    CHECK(est.runs == 2);
    CHECK(est.runs_correct == 1);
}

TEST_CASE("transition point: worked example brackets (10, 20)") {
    std::map<int, double> series{{5, .9}, {10, .8}, {20, .85}, {50, .8}};
    std::map<int, double> baseline{{5, .95}, {10, .9}, {20, .8}, {50, .5}};
    auto t = find_transition_point(series, baseline, "demo");
    REQUIRE(t.has_value());
    CHECK(t->n_low == 10);
    CHECK(t->n_high == 20);
    CHECK(t->task == "demo");
    CHECK(series.at(t->n_high) >= baseline.at(t->n_high));
    CHECK(series.at(t->n_low) < baseline.at(t->n_low));
}

TEST_CASE("transition point: none when never reached or unbracketable") {
    std::map<int, double> below{{5, .1}, {10, .1}, {20, .1}};
    std::map<int, double> base{{5, .9}, {10, .8}, {20, .7}};
    CHECK_FALSE(find_transition_point(below, base).has_value());
    // already at or above the baseline on the whole grid: no bracket exists
    std::map<int, double> above{{5, .95}, {10, .85}, {20, .75}};
    CHECK_FALSE(find_transition_point(above, base).has_value());
}

TEST_CASE("transition point: non-sustained crossings are skipped") {
    std::map<int, double> series{{5, .5}, {10, .9}, {20, .5}, {50, .9}, {70, .9}};
    std::map<int, double> base{{5, .8}, {10, .8}, {20, .8}, {50, .8}, {70, .8}};
    auto t = find_transition_point(series, base);
    REQUIRE(t.has_value());
    CHECK(t->n_low == 20);
    CHECK(t->n_high == 50);
}

TEST_CASE("transition point: grid mismatch is an error") {
    std::map<int, double> a{{5, .5}, {10, .9}};
    std::map<int, double> b{{5, .8}};
    CHECK_THROWS_AS(find_transition_point(a, b), GridMismatchError);
    std::map<int, double> c{{5, .8}, {15, .9}};
    CHECK_THROWS_AS(find_transition_point(a, c), GridMismatchError);
}

TEST_CASE("digitized error-analysis series bracket the published transitions") {
    // end-to-end accuracies per difficulty, task-specific and generic settings
    std::map<int, double> specific_rdd{{5, 0.98}, {10, 0.91}, {20, 0.85},
                                       {50, 0.80}, {70, 0.84}, {90, 0.45}};
    std::map<int, double> specific_baseline{{5, 1.00}, {10, 0.95}, {20, 0.90},
                                            {50, 0.55}, {70, 0.30}, {90, 0.05}};
    auto t1 = find_transition_point(specific_rdd, specific_baseline, "letter_concat");
    REQUIRE(t1.has_value());
    CHECK(t1->n_low == 20);
    CHECK(t1->n_high == 50);

    std::map<int, double> generic_rdd{{5, 0.93}, {10, 0.85}, {20, 0.71},
                                      {50, 0.42}, {70, 0.28}, {90, 0.11}};
    std::map<int, double> generic_baseline{{5, 0.97}, {10, 0.90}, {20, 0.60},
                                           {50, 0.15}, {70, 0.05}, {90, 0.01}};
    auto t2 = find_transition_point(generic_rdd, generic_baseline, "letter_concat");
    REQUIRE(t2.has_value());
    CHECK(t2->n_low == 10);
    CHECK(t2->n_high == 20);
}

TEST_CASE("matched cost and compute matching") {
    ResourceReport r;
    r.context_tokens = 100;
    r.output_tokens = 50;
    CHECK(r.matched_cost() == 250.0);

    SECTION("linearity") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            ResourceReport a;
            a.context_tokens = static_cast<std::int64_t>(rng() % 1000000);
            a.output_tokens = static_cast<std::int64_t>(rng() % 1000000);
            ResourceReport doubled = a;
            doubled.context_tokens *= 2;
            doubled.output_tokens *= 2;
            CHECK(doubled.matched_cost() == Approx(2.0 * a.matched_cost()));
            CHECK(a.matched_cost() ==
                  Approx(static_cast<double>(a.context_tokens) + 3.0 * a.output_tokens));
        }
    }
    SECTION("equal reports give ratio one") {
        auto m = match_compute(r, r);
        CHECK(m.ratio == Approx(1.0));
        CHECK(m.k_recommendation == 1);
    }
    SECTION("sample count recommendation is the covering ceiling") {
        ResourceReport base;
        base.context_tokens = 300;  // per-sample matched cost 300
        ResourceReport target;
        target.context_tokens = 1400;
        auto m = match_compute(base, target);
        CHECK(m.k_recommendation == 5);
        ResourceReport exact;
        exact.context_tokens = 1200;
        CHECK(match_compute(base, exact).k_recommendation == 4);
    }
}

TEST_CASE("resources accumulate over traces") {
    std::vector<TraceEvent> trace(3);
    for (int i = 0; i < 3; ++i) {
        trace[i].usage.context_tokens = 10 * (i + 1);
        trace[i].usage.output_tokens = i + 1;
        trace[i].usage.call_count = 1;
    }
    trace[1].step = TraceStep::Substitute;
    trace[1].usage.call_count = 0;
    auto r = resources_of(trace);
    CHECK(r.calls == 2);
    CHECK(r.context_tokens == 60);
    CHECK(r.output_tokens == 6);
}

TEST_CASE("predicted shapes match the graphs the oracle actually builds") {
    static PromptAssets assets = load_packaged_assets();
    OracleBackend oracle;
    OraclePolicy policy;

    SchedulerConfig lc;
    lc.mode = DecompositionMode::Independent;
    lc.regime = ExampleRegime::TaskSpecific;
    lc.unit_method = UnitMethod::LtM;
    for (int n0 : {1, 5, 9, 20, 50, 90}) {
        auto inst = generate_instances(Task::LetterConcat, n0, 1, 1000 + n0)[0];
        SolveResult r = solve(inst.description, oracle, lc, assets);
        tag_benchmark_nodes(r.graph);
        CHECK(shape_from_graph(r.graph) ==
              predicted_shape(Task::LetterConcat, n0, policy, lc.max_depth));
    }

    SchedulerConfig lr;
    lr.mode = DecompositionMode::WithDependencies;
    lr.regime = ExampleRegime::Generic;
    lr.unit_method = UnitMethod::CoT;
    for (int n0 : {3, 7, 15, 20}) {
        auto inst = generate_instances(Task::LengthReversal, n0, 1, 2000 + n0)[0];
        SolveResult r = solve(inst.description, oracle, lr, assets);
        tag_benchmark_nodes(r.graph);
        CHECK(shape_from_graph(r.graph) ==
              predicted_shape(Task::LengthReversal, n0, policy, lr.max_depth));
    }
}
