#pragma once

// Execution engine: expands the decomposition graph breadth-first (recursing
// into dependencies before dependents), then solves depth-first, unit-solving
// leaves and merging children upward until the root solution is produced.

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <set>
#include <string>
#include <vector>

#include "rdd/backend.hpp"
#include "rdd/errors.hpp"
#include "rdd/graph.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompts.hpp"

namespace rdd {

enum class TraceStep { Decompose, UnitSolve, Merge, Substitute };
enum class Verdict { Correct, Incorrect, Unknown };

inline const char* to_string(TraceStep s) {
    switch (s) {
        case TraceStep::Decompose: return "decompose";
        case TraceStep::UnitSolve: return "unit_solve";
        case TraceStep::Merge: return "merge";
        case TraceStep::Substitute: return "substitute";
    }
    return "?";
}

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Correct: return "correct";
        case Verdict::Incorrect: return "incorrect";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

struct TraceEvent {
    TraceStep step = TraceStep::Decompose;
    ProblemId node;
    std::string prompt;      // for Substitute: the description before substitution
    std::string completion;  // for Substitute: the description after substitution
    UsageRecord usage;
    Verdict verdict = Verdict::Unknown;  // set by scoring, never by the engine
};

struct SchedulerConfig {
    int width = 4;
    int max_depth = 3;
    DecompositionMode mode = DecompositionMode::Independent;
    bool recovery_sentence_enabled = true;
    int parallelism = 1;
    int decompose_retries = 1;  // re-prompts at temperature 0 before forcing unit
    UnitMethod unit_method = UnitMethod::CoT;
    ExampleRegime regime = ExampleRegime::Generic;
    double decompose_temperature = 0.0;
    double unit_temperature = 0.0;
    double merge_temperature = 0.0;
    int max_tokens = 1024;
};

struct SolveResult {
    std::string solution;
    DecompositionGraph graph;
    std::vector<TraceEvent> trace;
    std::vector<std::string> diagnostics;
};

// Raised by solve(): carries the partial graph and trace for analysis.
class SolveError : public Error {
public:
    SolveError(const std::string& msg, ProblemId node, DecompositionGraph graph,
               std::vector<TraceEvent> trace, std::vector<std::string> diagnostics)
        : Error(msg),
          node_(std::move(node)),
          graph_(std::move(graph)),
          trace_(std::move(trace)),
          diagnostics_(std::move(diagnostics)) {}

    const ProblemId& node() const { return node_; }
    const DecompositionGraph& graph() const { return graph_; }
    const std::vector<TraceEvent>& trace() const { return trace_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    ProblemId node_;
    DecompositionGraph graph_;
    std::vector<TraceEvent> trace_;
    std::vector<std::string> diagnostics_;
};

class Scheduler {
public:
    Scheduler(Backend& backend, SchedulerConfig config, const PromptAssets& assets)
        : backend_(backend),
          cfg_(config),
          suite_(make_suite(assets, config.mode, config.regime, config.unit_method)),
          slots_(std::max(1, config.parallelism)) {
        if (cfg_.width < 1) throw ConfigError("width must be >= 1");
        if (cfg_.max_depth < 1) throw ConfigError("max_depth must be >= 1");
        for (double t : {cfg_.decompose_temperature, cfg_.unit_temperature,
                         cfg_.merge_temperature})
            if (t < 0.0 || t > 2.0) throw ConfigError("temperature out of [0, 2]");
        if (cfg_.max_tokens < 1) throw ConfigError("max_tokens must be >= 1");
        if (!cfg_.recovery_sentence_enabled)
            suite_.merge = without_recovery_sentence(suite_.merge);
    }

    // Full pipeline on a fresh graph; the usual entry point.
    SolveResult solve(const std::string& root_description) {
        if (detail::trim(root_description).empty())
            throw ConfigError("root description must be non-empty");
        reset(root_description);
        try {
            schedule_bfs(graph_.root());
            std::set<ProblemId> visited;
            std::string solution = cfg_.parallelism > 1
                                       ? dfs_parallel(graph_.root(), {})
                                       : schedule_dfs(graph_.root(), visited);
            return SolveResult{std::move(solution), graph_, trace_, diagnostics_};
        } catch (const Error& e) {
            ProblemId at = current();
            if (graph_.contains(at) && graph_.at(at).status != NodeStatus::Solved)
                graph_.set_failed(at);
            throw SolveError(std::string(e.what()) + " (node " + at.str() + ")", at, graph_,
                             trace_, diagnostics_);
        }
    }

    // Breadth-first expansion. Dependencies of a node are fully scheduled
    // (expanded and solved) before the node itself is decomposed; each
    // recursive invocation owns its queue.
    void schedule_bfs(const ProblemId& root) {
        prepare_description(root);
        expand_node(root);
        std::deque<ProblemId> unsolved(graph_.at(root).children.begin(),
                                       graph_.at(root).children.end());
        while (!unsolved.empty()) {
            ProblemId next = unsolved.front();
            unsolved.pop_front();
            prepare_description(next);  // schedules and solves dependencies first
            expand_node(next);
            for (const ProblemId& c : graph_.at(next).children) unsolved.push_back(c);
        }
    }

    // Depth-first solving in postorder; tolerates undecomposed nodes by
    // decomposing them on the way down. `visited` accumulates the nodes seen
    // on this traversal and triggers the cycle error on re-entry.
    std::string schedule_dfs(const ProblemId& id, std::set<ProblemId>& visited) {
        if (visited.count(id)) throw CycleError("node revisited during traversal: " + id.str());
        visited.insert(id);
        set_current(id);
        if (graph_.at(id).status == NodeStatus::Solved) return *graph_.at(id).solution;
        prepare_description(id);
        if (graph_.at(id).kind == NodeKind::Unknown) expand_node(id);

        const std::vector<ProblemId> children = graph_.at(id).children;
        for (const ProblemId& child : children) schedule_dfs(child, visited);

        std::string solution = graph_.at(id).kind == NodeKind::Composite ? merge_node(id)
                                                                         : unit_solve(id);
        graph_.set_solved(id, solution);
        set_current(id);
        return solution;
    }

    DecompositionGraph& graph() { return graph_; }
    const std::vector<TraceEvent>& trace() const { return trace_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }
    const PromptSuite& suite() const { return suite_; }

    // Installs an existing graph (e.g. a partially built one) for direct use
    // of schedule_bfs / schedule_dfs.
    void load_graph(DecompositionGraph g) {
        graph_ = std::move(g);
        trace_.clear();
        diagnostics_.clear();
        forced_unit_.clear();
        resolving_.clear();
        set_current(graph_.root());
    }

private:
    void reset(const std::string& root_description) {
        load_graph(DecompositionGraph(root_description));
    }

    Completion call_backend(const CompletionRequest& request) {
        slots_.acquire();
        struct Release {
            std::counting_semaphore<>& s;
            ~Release() { s.release(); }
        } release{slots_};
        return backend_.complete(request);
    }

    void record(TraceEvent event) {
        std::lock_guard lock(trace_mutex_);
        trace_.push_back(std::move(event));
    }

    void diagnose(std::string msg) {
        std::lock_guard lock(trace_mutex_);
        diagnostics_.push_back(std::move(msg));
    }

    void set_current(const ProblemId& id) {
        std::lock_guard lock(trace_mutex_);
        current_node_ = id;
    }

    ProblemId current() {
        std::lock_guard lock(trace_mutex_);
        return current_node_;
    }

    // Resolves "{P-k}" placeholders in the node's description: schedules and
    // solves each referenced sibling, then substitutes its solution in place.
    // Recorded as a Substitute event so traces show the resolved wording.
    void prepare_description(const ProblemId& id) {
        std::string description;
        {
            std::lock_guard lock(graph_mutex_);
            description = graph_.at(id).description;
        }
        auto refs = find_placeholders(description);
        if (refs.empty()) return;
        set_current(id);

        auto parent = id.parent();
        if (!parent)
            throw UnresolvedDependencyError("root description cannot reference dependencies");

        {
            std::lock_guard lock(graph_mutex_);
            if (graph_.at(id).status == NodeStatus::Pending)
                graph_.at(id).status = NodeStatus::Blocked;
        }

        // Numeric-aware order: P-2 before P-10.
        std::vector<std::string> ordered(refs.begin(), refs.end());
        std::sort(ordered.begin(), ordered.end(), [](const std::string& a, const std::string& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });

        std::map<std::string, std::string> solutions;
        for (const std::string& ref : ordered) {
            ProblemId dep = parent->child(ref);
            if (!graph_.contains(dep))
                throw UnresolvedDependencyError("placeholder {" + ref + "} in " + id.str() +
                                                " has no matching sibling");
            ensure_scheduled(dep);
            if (forced_unit_.count(dep))
                diagnose("dependency " + dep.str() + " of " + id.str() +
                         " was forced unit by the depth limit");
            std::lock_guard lock(graph_mutex_);
            solutions[ref] = *graph_.at(dep).solution;
        }

        std::string resolved = substitute_dependencies(description, solutions);
        TraceEvent ev;
        ev.step = TraceStep::Substitute;
        ev.node = id;
        ev.prompt = description;
        ev.completion = resolved;
        record(std::move(ev));
        {
            std::lock_guard lock(graph_mutex_);
            ProblemNode& node = graph_.at(id);
            node.description = resolved;
            if (node.status == NodeStatus::Blocked)
                node.status = node.kind == NodeKind::Composite ? NodeStatus::Decomposed
                                                               : NodeStatus::Pending;
        }
    }

    // Recursive full scheduling of a dependency: its own breadth-first
    // expansion followed by depth-first solving.
    void ensure_scheduled(const ProblemId& id) {
        {
            std::lock_guard lock(graph_mutex_);
            if (graph_.at(id).status == NodeStatus::Solved) return;
        }
        if (!resolving_.insert(id.str()).second)
            throw CycleError("dependency cycle through " + id.str());
        struct Erase {
            std::set<std::string>& set;
            std::string key;
            ~Erase() { set.erase(key); }
        } erase{resolving_, id.str()};
        schedule_bfs(id);
        std::set<ProblemId> visited;
        schedule_dfs(id, visited);
    }

    // One decomposition (with the retry budget) or a forced unit at the depth
    // cap. No-op when the node kind is already known.
    void expand_node(const ProblemId& id) {
        {
            std::lock_guard lock(graph_mutex_);
            const ProblemNode& node = graph_.at(id);
            if (node.kind != NodeKind::Unknown) return;
            if (node.depth >= cfg_.max_depth) {
                graph_.at(id).kind = NodeKind::Unit;
                forced_unit_.insert(id);
                return;
            }
        }
        set_current(id);
        std::string description;
        {
            std::lock_guard lock(graph_mutex_);
            description = graph_.at(id).description;
        }
        const std::string prompt =
            render(suite_.decompose, suite_.decompose_examples, description, cfg_.width);
        const int attempts = 1 + std::max(0, cfg_.decompose_retries);
        for (int attempt = 0; attempt < attempts; ++attempt) {
            CompletionRequest req{prompt,
                                  attempt == 0 ? cfg_.decompose_temperature : 0.0,
                                  cfg_.max_tokens,
                                  {}};
            Completion completion = call_backend(req);
            TraceEvent ev;
            ev.step = TraceStep::Decompose;
            ev.node = id;
            ev.prompt = prompt;
            ev.completion = completion.text;
            ev.usage = completion.usage;
            record(std::move(ev));
            try {
                DecompositionResult parsed =
                    parse_decomposition(completion.text, cfg_.mode, cfg_.width);
                if (parsed.unit_problem) {
                    std::lock_guard lock(graph_mutex_);
                    graph_.at(id).kind = NodeKind::Unit;
                    return;
                }
                std::vector<SubProblemSpec> specs;
                for (std::size_t i = 0; i < parsed.subs.size(); ++i) {
                    const ParsedSub& sub = parsed.subs[i];
                    specs.push_back(SubProblemSpec{
                        sub.id.value_or("P-" + std::to_string(i + 1)), sub.description,
                        sub.dep_refs});
                }
                check_proposal_acyclic(id, specs);
                std::lock_guard lock(graph_mutex_);
                graph_.add_decomposition(id, specs, cfg_.width);
                return;
            } catch (const CycleError&) {
                throw;  // a cyclic proposal is an error, not a retry
            } catch (const ParseError& e) {
                diagnose("decomposition attempt " + std::to_string(attempt + 1) + " for " +
                         id.str() + " rejected: " + e.what());
            } catch (const GraphError& e) {
                diagnose("decomposition attempt " + std::to_string(attempt + 1) + " for " +
                         id.str() + " rejected: " + e.what());
            }
        }
        {
            std::lock_guard lock(graph_mutex_);
            graph_.at(id).kind = NodeKind::Unit;
        }
        diagnose("no well-formed decomposition for " + id.str() + " after " +
                 std::to_string(attempts) + " attempts; treating it as a unit problem");
    }

    // Sibling dependencies of one proposal must form a DAG before insertion.
    void check_proposal_acyclic(const ProblemId& parent,
                                const std::vector<SubProblemSpec>& specs) const {
        std::map<std::string, const std::set<std::string>*> adj;
        for (const SubProblemSpec& s : specs) adj[s.local_id] = &s.dependencies;
        std::map<std::string, int> color;
        auto visit = [&](auto&& self, const std::string& v) -> bool {
            color[v] = 1;
            auto it = adj.find(v);
            if (it != adj.end()) {
                for (const std::string& dep : *it->second) {
                    if (!adj.count(dep)) continue;
                    if (color[dep] == 1) return false;
                    if (color[dep] == 0 && !self(self, dep)) return false;
                }
            }
            color[v] = 2;
            return true;
        };
        for (const SubProblemSpec& s : specs)
            if (color[s.local_id] == 0 && !visit(visit, s.local_id))
                throw CycleError("cyclic dependencies in the decomposition of " + parent.str());
    }

    std::string unit_solve(const ProblemId& id) {
        set_current(id);
        std::string description;
        {
            std::lock_guard lock(graph_mutex_);
            description = graph_.at(id).description;
        }
        const std::string prompt =
            render(suite_.unit, suite_.unit_examples, description, cfg_.width);
        Completion completion =
            call_backend({prompt, cfg_.unit_temperature, cfg_.max_tokens, {}});
        TraceEvent ev;
        ev.step = TraceStep::UnitSolve;
        ev.node = id;
        ev.prompt = prompt;
        ev.completion = completion.text;
        ev.usage = completion.usage;
        record(std::move(ev));
        ExtractedAnswer answer = extract_answer(completion.text);
        if (answer.malformed_tags)
            diagnose("malformed answer tags in the unit completion for " + id.str());
        return answer.text;
    }

    std::string merge_node(const ProblemId& id) {
        set_current(id);
        std::string description;
        std::vector<SubSolution> subs;
        {
            std::lock_guard lock(graph_mutex_);
            const ProblemNode& node = graph_.at(id);
            description = node.description;
            for (const ProblemId& child : node.children) {
                const ProblemNode& c = graph_.at(child);
                if (!c.solution)
                    throw Error("merge of " + id.str() + " before child " + child.str() +
                                " was solved");
                subs.push_back(SubSolution{c.description, *c.solution});
            }
        }
        const std::string prompt =
            render(suite_.merge, suite_.merge_examples, description, cfg_.width, subs);
        Completion completion =
            call_backend({prompt, cfg_.merge_temperature, cfg_.max_tokens, {}});
        TraceEvent ev;
        ev.step = TraceStep::Merge;
        ev.node = id;
        ev.prompt = prompt;
        ev.completion = completion.text;
        ev.usage = completion.usage;
        record(std::move(ev));
        ExtractedAnswer answer = extract_answer(completion.text);
        if (answer.malformed_tags)
            diagnose("malformed answer tags in the merge completion for " + id.str());
        return answer.text;
    }

    // Parallel variant of the depth-first phase: sibling subtrees run as
    // concurrent tasks; the semaphore keeps at most `parallelism` backend
    // calls in flight. `visited` is copied per branch (equivalent on a tree).
    std::string dfs_parallel(const ProblemId& id, std::set<ProblemId> visited) {
        if (visited.count(id)) throw CycleError("node revisited during traversal: " + id.str());
        visited.insert(id);
        {
            std::lock_guard lock(graph_mutex_);
            if (graph_.at(id).status == NodeStatus::Solved) return *graph_.at(id).solution;
        }
        {
            // Dependency resolution and late decomposition are serialized;
            // in the common path both are no-ops after schedule_bfs.
            std::lock_guard lock(schedule_mutex_);
            prepare_description(id);
            bool unknown;
            {
                std::lock_guard g(graph_mutex_);
                unknown = graph_.at(id).kind == NodeKind::Unknown;
            }
            if (unknown) expand_node(id);
        }
        std::vector<ProblemId> children;
        NodeKind kind;
        {
            std::lock_guard lock(graph_mutex_);
            children = graph_.at(id).children;
            kind = graph_.at(id).kind;
        }
        if (kind == NodeKind::Composite) {
            std::vector<std::future<std::string>> futures;
            futures.reserve(children.size());
            for (const ProblemId& child : children)
                futures.push_back(std::async(std::launch::async, [this, child, visited] {
                    return dfs_parallel(child, visited);
                }));
            std::exception_ptr first_error;
            for (auto& f : futures) {
                try {
                    f.get();
                } catch (...) {
                    if (!first_error) first_error = std::current_exception();
                }
            }
            if (first_error) std::rethrow_exception(first_error);
        }
        std::string solution = kind == NodeKind::Composite ? merge_node(id) : unit_solve(id);
        {
            std::lock_guard lock(graph_mutex_);
            graph_.set_solved(id, solution);
        }
        return solution;
    }

    Backend& backend_;
    SchedulerConfig cfg_;
    PromptSuite suite_;
    DecompositionGraph graph_;
    std::vector<TraceEvent> trace_;
    std::vector<std::string> diagnostics_;
    std::set<ProblemId> forced_unit_;
    std::set<std::string> resolving_;
    ProblemId current_node_ = ProblemId::root();
    std::counting_semaphore<> slots_;
    std::mutex graph_mutex_;
    std::mutex trace_mutex_;
    std::mutex schedule_mutex_;
};

inline SolveResult solve(const std::string& root_description, Backend& backend,
                         const SchedulerConfig& config, const PromptAssets& assets) {
    Scheduler scheduler(backend, config, assets);
    return scheduler.solve(root_description);
}

} // namespace rdd
