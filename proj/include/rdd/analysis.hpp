#pragma once

// Accuracy model and trace analytics: the closed-form composed success rate
// of a decomposition shape, the improvement-condition checkers, a Monte-Carlo
// simulator for the same model, empirical step-accuracy estimation from
// scored traces, transition-point detection, and resource accounting with
// compute matching.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdd/benchmarks.hpp"
#include "rdd/errors.hpp"
#include "rdd/graph.hpp"
#include "rdd/oracle.hpp"
#include "rdd/scheduler.hpp"

namespace rdd {

// One node of an idealized decomposition shape: (class, difficulty) plus the
// unit/composite classification. Leaves are unit, internal nodes composite.
struct ShapeNode {
    std::string class_tag;
    int difficulty = 0;
    bool is_unit = true;
    std::vector<ShapeNode> children;

    bool operator==(const ShapeNode&) const = default;
};

// Per-step success-rate functions over (class, difficulty); outputs are
// clamped to [0, 1] wherever they are evaluated.
struct StepAccuracies {
    std::function<double(const std::string&, int)> decompose;
    std::function<double(const std::string&, int)> unit;
    std::function<double(const std::string&, int)> merge;

    static StepAccuracies constant(double d, double u, double m) {
        return StepAccuracies{[d](const std::string&, int) { return d; },
                              [u](const std::string&, int) { return u; },
                              [m](const std::string&, int) { return m; }};
    }
};

namespace detail {

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

} // namespace detail

inline void validate_shape(const ShapeNode& node) {
    if (node.is_unit && !node.children.empty())
        throw AnalysisError("unit shape node has children");
    if (!node.is_unit && node.children.empty())
        throw AnalysisError("composite shape node has no children");
    for (const ShapeNode& c : node.children) validate_shape(c);
}

// Composed success probability of solving the shape: a unit node succeeds
// with its unit rate; a composite node requires its decomposition and merge
// to succeed along with every child subtree.
inline double closed_form_accuracy(const ShapeNode& node, const StepAccuracies& acc) {
    if (node.is_unit) return detail::clamp01(acc.unit(node.class_tag, node.difficulty));
    double p = detail::clamp01(acc.decompose(node.class_tag, node.difficulty)) *
               detail::clamp01(acc.merge(node.class_tag, node.difficulty));
    for (const ShapeNode& c : node.children) p *= closed_form_accuracy(c, acc);
    return p;
}

// --- improvement conditions ---------------------------------------------------

struct ConditionViolation {
    std::string path;  // "ROOT/2/1"-style index path into the shape
    std::string class_tag;
    int difficulty = 0;
    double unit_rate = 0.0;
};

struct ConditionReport {
    bool decompose_merge_ok = false;  // decompose * merge beats direct solving at the root
    bool unit_gain_ok = false;        // every unit node beats the root's direct rate, strictly
    double root_unit_rate = 0.0;
    double root_decompose_merge = 0.0;
    std::vector<ConditionViolation> violations;
};

namespace detail {

inline void collect_unit_violations(const ShapeNode& node, const StepAccuracies& acc,
                                    double root_unit, const std::string& path, bool is_root,
                                    std::vector<ConditionViolation>& out) {
    if (node.is_unit && !is_root) {
        double u = clamp01(acc.unit(node.class_tag, node.difficulty));
        if (!(u > root_unit))
            out.push_back(ConditionViolation{path, node.class_tag, node.difficulty, u});
    }
    for (std::size_t i = 0; i < node.children.size(); ++i)
        collect_unit_violations(node.children[i], acc, root_unit,
                                path + "/" + std::to_string(i + 1), false, out);
}

} // namespace detail

// Checks the two necessary conditions for decomposition to beat direct
// solving at the root. The unit-gain condition ranges over the unit nodes of
// the shape: those are exactly the unit rates that enter the composed
// product, so failing either condition bounds the composed accuracy by the
// root's direct rate.
inline ConditionReport check_improvement_conditions(const ShapeNode& shape,
                                                    const StepAccuracies& acc,
                                                    const std::string& root_class,
                                                    int root_difficulty) {
    ConditionReport report;
    report.root_unit_rate = detail::clamp01(acc.unit(root_class, root_difficulty));
    report.root_decompose_merge = detail::clamp01(acc.decompose(root_class, root_difficulty)) *
                                  detail::clamp01(acc.merge(root_class, root_difficulty));
    report.decompose_merge_ok = report.root_decompose_merge > report.root_unit_rate;
    detail::collect_unit_violations(shape, acc, report.root_unit_rate, "ROOT", true,
                                    report.violations);
    report.unit_gain_ok = report.violations.empty();
    return report;
}

// --- Monte-Carlo validation ---------------------------------------------------

struct SimulationOptions {
    // Probability that a trial draws one shared uniform for all steps
    // (comonotone failures) instead of independent per-step draws. 0 matches
    // the independence assumption of the closed form.
    double correlated_rho = 0.0;
    int threads = 1;
};

struct SimulationEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    long trials = 0;
};

namespace detail {

inline void collect_step_rates(const ShapeNode& node, const StepAccuracies& acc,
                               std::vector<double>& rates) {
    if (node.is_unit) {
        rates.push_back(clamp01(acc.unit(node.class_tag, node.difficulty)));
        return;
    }
    rates.push_back(clamp01(acc.decompose(node.class_tag, node.difficulty)));
    rates.push_back(clamp01(acc.merge(node.class_tag, node.difficulty)));
    for (const ShapeNode& c : node.children) collect_step_rates(c, acc, rates);
}

} // namespace detail

// Simulates each step as a Bernoulli success; a trial succeeds iff every step
// on the recursive evaluation succeeds. Per-trial substreams are derived from
// the seed, so results do not depend on the thread count.
inline SimulationEstimate simulate_accuracy(const ShapeNode& shape, const StepAccuracies& acc,
                                            long trials, std::uint64_t seed,
                                            const SimulationOptions& options = {}) {
    if (trials < 1) throw AnalysisError("trials must be >= 1");
    std::vector<double> rates;
    detail::collect_step_rates(shape, acc, rates);

    // Per-trial substream keyed off a well-mixed base so that nearby seeds do
    // not produce permutations of the same stream set.
    const std::uint64_t stream_base = detail::splitmix64(seed);
    auto run_range = [&rates, stream_base, &options](long from, long to) {
        long successes = 0;
        for (long t = from; t < to; ++t) {
            std::mt19937_64 rng(detail::splitmix64(stream_base + static_cast<std::uint64_t>(t)));
            std::uniform_real_distribution<double> uniform(0.0, 1.0);
            bool comonotone = options.correlated_rho > 0.0 && uniform(rng) < options.correlated_rho;
            bool ok = true;
            if (comonotone) {
                double u = uniform(rng);
                for (double r : rates)
                    if (u >= r) {
                        ok = false;
                        break;
                    }
            } else {
                for (double r : rates)
                    if (uniform(rng) >= r) {
                        ok = false;
                        break;
                    }
            }
            if (ok) ++successes;
        }
        return successes;
    };

    long successes = 0;
    int threads = std::max(1, options.threads);
    if (threads == 1) {
        successes = run_range(0, trials);
    } else {
        std::vector<std::future<long>> futures;
        long chunk = (trials + threads - 1) / threads;
        for (int i = 0; i < threads; ++i) {
            long from = i * chunk;
            long to = std::min(trials, from + chunk);
            if (from >= to) break;
            futures.push_back(std::async(std::launch::async, run_range, from, to));
        }
        for (auto& f : futures) successes += f.get();
    }

    SimulationEstimate est;
    est.trials = trials;
    est.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    est.standard_error =
        std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    return est;
}

// --- shapes from graphs and from the oracle policy ----------------------------

// Fills class/difficulty tags on benchmark nodes from their descriptions.
inline void tag_benchmark_nodes(DecompositionGraph& graph) {
    for (const ProblemId& id : graph.ids()) {
        ProblemNode& node = graph.at(id);
        if (auto parsed = parse_problem_text(node.description)) {
            node.class_tag = class_tag_of(parsed->kind);
            node.difficulty_tag = static_cast<int>(parsed->kind == ProblemKind::ReverseList
                                                       ? parsed->items.size()
                                                       : parsed->words.size());
        }
    }
}

inline ShapeNode shape_from_graph(const DecompositionGraph& graph, const ProblemId& id) {
    const ProblemNode& node = graph.at(id);
    ShapeNode s;
    s.class_tag = node.class_tag.value_or("unknown");
    s.difficulty = node.difficulty_tag.value_or(0);
    s.is_unit = node.kind != NodeKind::Composite;
    for (const ProblemId& c : node.children) s.children.push_back(shape_from_graph(graph, c));
    return s;
}

inline ShapeNode shape_from_graph(const DecompositionGraph& graph) {
    return shape_from_graph(graph, graph.root());
}

namespace detail {

inline ShapeNode predicted_shape_node(ProblemKind kind, int len, int depth,
                                      const OraclePolicy& policy, int max_depth) {
    ShapeNode node;
    node.class_tag = class_tag_of(kind);
    node.difficulty = len;
    bool forced_unit = depth >= max_depth;
    switch (kind) {
        case ProblemKind::ReverseList:
            node.is_unit = true;
            break;
        case ProblemKind::LengthReversal:
            if (forced_unit || len <= policy.unit_threshold) {
                node.is_unit = true;
            } else {
                node.is_unit = false;
                node.children.push_back(predicted_shape_node(ProblemKind::LengthList, len,
                                                             depth + 1, policy, max_depth));
                node.children.push_back(predicted_shape_node(ProblemKind::ReverseList, len,
                                                             depth + 1, policy, max_depth));
            }
            break;
        case ProblemKind::LetterConcat:
        case ProblemKind::LengthList:
            if (forced_unit || len <= policy.unit_threshold) {
                node.is_unit = true;
            } else {
                node.is_unit = false;
                for (int size : partition_sizes(len, policy.width))
                    node.children.push_back(
                        predicted_shape_node(kind, size, depth + 1, policy, max_depth));
            }
            break;
    }
    return node;
}

} // namespace detail

// The decomposition shape the oracle policy induces on a benchmark instance
// of the given difficulty.
inline ShapeNode predicted_shape(Task task, int n0, const OraclePolicy& policy, int max_depth) {
    ProblemKind kind =
        task == Task::LetterConcat ? ProblemKind::LetterConcat : ProblemKind::LengthReversal;
    return detail::predicted_shape_node(kind, n0, 0, policy, max_depth);
}

// --- step verdicts and empirical accuracies ------------------------------------

namespace detail {

// A decomposition is correct when its pieces reassemble the parent instance
// with the transformation preserved.
inline bool decomposition_reassembles(const std::string& parent_description,
                                      const DecompositionResult& parsed) {
    auto parent = parse_problem_text(parent_description);
    if (!parent) return false;
    switch (parent->kind) {
        case ProblemKind::LetterConcat:
        case ProblemKind::LengthList: {
            std::vector<std::string> words;
            for (const ParsedSub& sub : parsed.subs) {
                auto p = parse_problem_text(sub.description);
                if (!p || p->kind != parent->kind) return false;
                if (parent->kind == ProblemKind::LetterConcat && p->index != parent->index)
                    return false;
                words.insert(words.end(), p->words.begin(), p->words.end());
            }
            return words == parent->words;
        }
        case ProblemKind::LengthReversal: {
            if (parsed.subs.size() != 2) return false;
            const ParsedSub& lengths = parsed.subs[0];
            const ParsedSub& reverse = parsed.subs[1];
            auto p1 = parse_problem_text(lengths.description);
            if (!p1 || p1->kind != ProblemKind::LengthList || p1->words != parent->words)
                return false;
            if (!lengths.id || reverse.dep_refs != std::set<std::string>{*lengths.id})
                return false;
            return reverse.description.rfind("Reverse the order of the items", 0) == 0;
        }
        case ProblemKind::ReverseList:
            return false;  // never decomposed by the benchmarks
    }
    return false;
}

} // namespace detail

// Scores every decomposition / unit / merge event of a finished run in place.
// Unit and merge outputs are compared against the ground truth of the node's
// own (resolved) instance; events on nodes whose description is not a
// recognizable instance are marked incorrect.
inline void assign_verdicts(std::vector<TraceEvent>& trace, const DecompositionGraph& graph,
                            DecompositionMode mode) {
    for (TraceEvent& ev : trace) {
        switch (ev.step) {
            case TraceStep::Substitute:
                break;
            case TraceStep::Decompose: {
                DecompositionResult parsed;
                try {
                    parsed = parse_decomposition(ev.completion, mode, 0);
                } catch (const ParseError&) {
                    ev.verdict = Verdict::Incorrect;
                    break;
                }
                if (parsed.unit_problem) {
                    ev.verdict = Verdict::Correct;
                    break;
                }
                const std::string& desc = graph.at(ev.node).description;
                ev.verdict = detail::decomposition_reassembles(desc, parsed) ? Verdict::Correct
                                                                             : Verdict::Incorrect;
                break;
            }
            case TraceStep::UnitSolve:
            case TraceStep::Merge: {
                auto parsed = parse_problem_text(graph.at(ev.node).description);
                if (!parsed) {
                    ev.verdict = Verdict::Incorrect;
                    break;
                }
                std::string expected = normalize_answer(ground_truth_of(*parsed));
                std::string actual = normalize_answer(extract_answer(ev.completion).text);
                ev.verdict = actual == expected ? Verdict::Correct : Verdict::Incorrect;
                break;
            }
        }
    }
}

struct ScoredRun {
    std::vector<TraceEvent> events;
    int root_score = 0;  // exact match of the final answer
};

struct EmpiricalStepAccuracies {
    double decompose_rate = 1.0;
    double unit_rate = 1.0;
    double merge_rate = 1.0;
    double end_to_end_rate = 0.0;
    long decompose_total = 0, decompose_correct = 0;
    long unit_total = 0, unit_correct = 0;
    long merge_total = 0, merge_correct = 0;
    long runs = 0, runs_correct = 0;
    long recovery_runs = 0;  // root correct despite an incorrect non-root step
};

// Pools per-step success fractions over all nodes of all runs. Rates with an
// empty pool stay at 1.0 (vacuous); counts expose the denominators.
inline EmpiricalStepAccuracies estimate_step_accuracies(std::span<const ScoredRun> runs) {
    EmpiricalStepAccuracies out;
    for (const ScoredRun& run : runs) {
        ++out.runs;
        out.runs_correct += run.root_score ? 1 : 0;
        bool child_error = false;
        for (const TraceEvent& ev : run.events) {
            if (ev.step == TraceStep::Substitute) continue;
            if (ev.verdict == Verdict::Unknown)
                throw MissingVerdictsError("trace event without a verdict (node " +
                                           ev.node.str() + ")");
            bool correct = ev.verdict == Verdict::Correct;
            switch (ev.step) {
                case TraceStep::Decompose:
                    ++out.decompose_total;
                    out.decompose_correct += correct;
                    break;
                case TraceStep::UnitSolve:
                    ++out.unit_total;
                    out.unit_correct += correct;
                    break;
                case TraceStep::Merge:
                    ++out.merge_total;
                    out.merge_correct += correct;
                    break;
                default:
                    break;
            }
            if (!correct && !ev.node.is_root() &&
                (ev.step == TraceStep::UnitSolve || ev.step == TraceStep::Merge))
                child_error = true;
        }
        if (run.root_score && child_error) ++out.recovery_runs;
    }
    if (out.decompose_total)
        out.decompose_rate =
            static_cast<double>(out.decompose_correct) / static_cast<double>(out.decompose_total);
    if (out.unit_total)
        out.unit_rate = static_cast<double>(out.unit_correct) / static_cast<double>(out.unit_total);
    if (out.merge_total)
        out.merge_rate =
            static_cast<double>(out.merge_correct) / static_cast<double>(out.merge_total);
    if (out.runs)
        out.end_to_end_rate =
            static_cast<double>(out.runs_correct) / static_cast<double>(out.runs);
    return out;
}

// --- transition points ----------------------------------------------------------

struct TransitionPoint {
    std::string task;
    int n_low = 0;   // last difficulty where the baseline still wins
    int n_high = 0;  // first difficulty of the sustained crossover
};

// First bracketing pair (n_low, n_high) of consecutive grid difficulties
// where the first series becomes >= the second and stays >= for the rest of
// the grid. No bracket exists when the crossover never happens or happened
// before the first grid point.
inline std::optional<TransitionPoint> find_transition_point(
    const std::map<int, double>& series, const std::map<int, double>& baseline,
    const std::string& task = {}) {
    if (series.size() != baseline.size())
        throw GridMismatchError("difficulty grids differ in size");
    std::vector<int> grid;
    for (const auto& [n, v] : series) {
        if (!baseline.count(n))
            throw GridMismatchError("difficulty " + std::to_string(n) + " missing from baseline");
        grid.push_back(n);
    }
    auto suffix_holds = [&](std::size_t from) {
        for (std::size_t k = from; k < grid.size(); ++k)
            if (series.at(grid[k]) < baseline.at(grid[k])) return false;
        return true;
    };
    for (std::size_t j = 1; j < grid.size(); ++j) {
        if (series.at(grid[j]) >= baseline.at(grid[j]) && suffix_holds(j) &&
            series.at(grid[j - 1]) < baseline.at(grid[j - 1]))
            return TransitionPoint{task, grid[j - 1], grid[j]};
    }
    return std::nullopt;
}

// --- resource accounting ---------------------------------------------------------

struct ResourceReport {
    long calls = 0;
    std::int64_t context_tokens = 0;
    std::int64_t output_tokens = 0;
    std::chrono::microseconds wall_time{0};

    double matched_cost() const {
        return static_cast<double>(context_tokens) + 3.0 * static_cast<double>(output_tokens);
    }

    ResourceReport& operator+=(const ResourceReport& o) {
        calls += o.calls;
        context_tokens += o.context_tokens;
        output_tokens += o.output_tokens;
        wall_time += o.wall_time;
        return *this;
    }
};

inline ResourceReport resources_of(std::span<const TraceEvent> trace) {
    ResourceReport r;
    for (const TraceEvent& ev : trace) {
        r.calls += ev.usage.call_count;
        r.context_tokens += ev.usage.context_tokens;
        r.output_tokens += ev.usage.output_tokens;
        r.wall_time += ev.usage.latency;
    }
    return r;
}

struct ComputeMatch {
    double ratio = 1.0;        // target cost over baseline per-sample cost
    int k_recommendation = 1;  // smallest sample count whose cost reaches the target
};

inline ComputeMatch match_compute(const ResourceReport& baseline_per_sample,
                                  const ResourceReport& target) {
    ComputeMatch m;
    double base = baseline_per_sample.matched_cost();
    double cost = target.matched_cost();
    if (base <= 0.0) {
        m.ratio = cost <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
        m.k_recommendation = 1;
        return m;
    }
    m.ratio = cost / base;
    m.k_recommendation = std::max(1, static_cast<int>(std::ceil(cost / base)));
    return m;
}

} // namespace rdd
