#pragma once

// Replayable run records: every backend call of every instance is persisted
// as an append-only line-delimited file that survives interruption and feeds
// the replay backend byte-for-byte.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdd/analysis.hpp"
#include "rdd/benchmarks.hpp"
#include "rdd/graph.hpp"
#include "rdd/replay.hpp"
#include "rdd/scheduler.hpp"
#include "rdd/self_consistency.hpp"

namespace rdd {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// One backend interaction (or substitution) in manifest form. Scheduler steps
// keep their enum names; self-consistency calls use "sample" and "vote".
struct CallRecord {
    std::string step;
    std::string node;  // empty for self-consistency records
    std::string prompt;
    std::string completion;
    UsageRecord usage;
    std::string verdict;  // empty when unscored

    bool is_backend_call() const { return step != "substitute"; }
};

struct InstanceRecord {
    int index = 0;
    BenchmarkInstance instance;
    std::string answer;
    int score = 0;
    ResourceReport resources;
    std::vector<CallRecord> calls;
    nlohmann::json graph;  // snapshot for decomposition runs; null otherwise
    std::vector<std::string> diagnostics;
    std::string error;  // nonempty when this instance failed
};

struct RunManifest {
    nlohmann::json config;
    std::string artifact_version{kArtifactVersion};
    std::string created_at;
    std::vector<InstanceRecord> instances;
    nlohmann::json summary;
};

// --- json conversions --------------------------------------------------------

inline nlohmann::json usage_to_json(const UsageRecord& u) {
    return nlohmann::json{{"context_tokens", u.context_tokens},
                          {"output_tokens", u.output_tokens},
                          {"latency_us", u.latency.count()},
                          {"calls", u.call_count}};
}

inline UsageRecord usage_from_json(const nlohmann::json& j) {
    UsageRecord u;
    u.context_tokens = j.value("context_tokens", 0);
    u.output_tokens = j.value("output_tokens", 0);
    u.latency = std::chrono::microseconds(j.value("latency_us", 0LL));
    u.call_count = j.value("calls", 0);
    return u;
}

inline nlohmann::json graph_to_json(const DecompositionGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const ProblemId& id : g.ids()) {
        const ProblemNode& n = g.at(id);
        nlohmann::json node{{"id", id.str()},
                            {"description", n.description},
                            {"kind", to_string(n.kind)},
                            {"status", to_string(n.status)},
                            {"depth", n.depth}};
        if (n.solution) node["solution"] = *n.solution;
        nlohmann::json children = nlohmann::json::array();
        for (const ProblemId& c : n.children) children.push_back(c.str());
        node["children"] = std::move(children);
        nlohmann::json deps = nlohmann::json::array();
        for (const ProblemId& d : n.dependencies) deps.push_back(d.str());
        node["dependencies"] = std::move(deps);
        if (n.class_tag) node["class"] = *n.class_tag;
        if (n.difficulty_tag) node["n"] = *n.difficulty_tag;
        nodes.push_back(std::move(node));
    }
    return nlohmann::json{{"root", g.root().str()}, {"nodes", std::move(nodes)}};
}

namespace detail {

inline NodeKind kind_from_string(const std::string& s) {
    if (s == "unit") return NodeKind::Unit;
    if (s == "composite") return NodeKind::Composite;
    return NodeKind::Unknown;
}

inline NodeStatus status_from_string(const std::string& s) {
    if (s == "decomposed") return NodeStatus::Decomposed;
    if (s == "blocked") return NodeStatus::Blocked;
    if (s == "solved") return NodeStatus::Solved;
    if (s == "failed") return NodeStatus::Failed;
    return NodeStatus::Pending;
}

} // namespace detail

inline DecompositionGraph graph_from_json(const nlohmann::json& j) {
    // Rebuild nodes directly; the snapshot already passed construction-time
    // validation when it was produced.
    std::map<std::string, nlohmann::json> by_id;
    for (const auto& node : j.at("nodes")) by_id[node.at("id").get<std::string>()] = node;

    const std::string root_id = j.at("root").get<std::string>();
    DecompositionGraph g(by_id.at(root_id).value("description", ""));

    // Insert children level by level via add_decomposition to honor the
    // construction invariants, then restore statuses and solutions.
    auto add_children = [&](auto&& self, const std::string& id) -> void {
        const nlohmann::json& node = by_id.at(id);
        auto children = node.at("children").get<std::vector<std::string>>();
        if (!children.empty()) {
            std::vector<SubProblemSpec> specs;
            for (const std::string& child : children) {
                const nlohmann::json& cj = by_id.at(child);
                SubProblemSpec spec;
                spec.local_id = ProblemId(child).local();
                spec.description = cj.value("description", "");
                for (const auto& dep : cj.at("dependencies"))
                    spec.dependencies.insert(ProblemId(dep.get<std::string>()).local());
                specs.push_back(std::move(spec));
            }
            g.add_decomposition(ProblemId(id), specs, 0);
            for (const std::string& child : children) self(self, child);
        }
    };
    add_children(add_children, root_id);

    for (const auto& [id, node] : by_id) {
        ProblemNode& n = g.at(ProblemId(id));
        n.kind = detail::kind_from_string(node.value("kind", "unknown"));
        n.status = detail::status_from_string(node.value("status", "pending"));
        if (node.contains("solution")) n.solution = node["solution"].get<std::string>();
        if (node.contains("class")) n.class_tag = node["class"].get<std::string>();
        if (node.contains("n")) n.difficulty_tag = node["n"].get<int>();
        n.description = node.value("description", "");
    }
    return g;
}

inline nlohmann::json call_to_json(const CallRecord& c) {
    nlohmann::json j{{"step", c.step},
                     {"prompt", c.prompt},
                     {"completion", c.completion},
                     {"usage", usage_to_json(c.usage)}};
    if (!c.node.empty()) j["node"] = c.node;
    if (!c.verdict.empty()) j["verdict"] = c.verdict;
    return j;
}

inline CallRecord call_from_json(const nlohmann::json& j) {
    CallRecord c;
    c.step = j.at("step").get<std::string>();
    c.node = j.value("node", "");
    c.prompt = j.value("prompt", "");
    c.completion = j.value("completion", "");
    if (j.contains("usage")) c.usage = usage_from_json(j["usage"]);
    c.verdict = j.value("verdict", "");
    return c;
}

inline nlohmann::json resources_to_json(const ResourceReport& r) {
    return nlohmann::json{{"calls", r.calls},
                          {"context_tokens", r.context_tokens},
                          {"output_tokens", r.output_tokens},
                          {"wall_time_us", r.wall_time.count()},
                          {"matched_cost", r.matched_cost()}};
}

inline ResourceReport resources_from_json(const nlohmann::json& j) {
    ResourceReport r;
    r.calls = j.value("calls", 0L);
    r.context_tokens = j.value("context_tokens", 0LL);
    r.output_tokens = j.value("output_tokens", 0LL);
    r.wall_time = std::chrono::microseconds(j.value("wall_time_us", 0LL));
    return r;
}

inline nlohmann::json instance_record_to_json(const InstanceRecord& rec) {
    nlohmann::json j{{"type", "instance"},
                     {"index", rec.index},
                     {"instance", instance_to_json(rec.instance)},
                     {"answer", rec.answer},
                     {"score", rec.score},
                     {"resources", resources_to_json(rec.resources)}};
    nlohmann::json calls = nlohmann::json::array();
    for (const CallRecord& c : rec.calls) calls.push_back(call_to_json(c));
    j["calls"] = std::move(calls);
    if (!rec.graph.is_null()) j["graph"] = rec.graph;
    if (!rec.diagnostics.empty()) j["diagnostics"] = rec.diagnostics;
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

inline InstanceRecord instance_record_from_json(const nlohmann::json& j) {
    InstanceRecord rec;
    rec.index = j.at("index").get<int>();
    rec.instance = instance_from_json(j.at("instance"));
    rec.answer = j.value("answer", "");
    rec.score = j.value("score", 0);
    if (j.contains("resources")) rec.resources = resources_from_json(j["resources"]);
    for (const auto& c : j.value("calls", nlohmann::json::array()))
        rec.calls.push_back(call_from_json(c));
    if (j.contains("graph")) rec.graph = j["graph"];
    if (j.contains("diagnostics"))
        rec.diagnostics = j["diagnostics"].get<std::vector<std::string>>();
    rec.error = j.value("error", "");
    return rec;
}

// --- append-only writer --------------------------------------------------------

inline std::string now_iso8601() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Serializes manifest lines to disk as instances finish. Out-of-order
// completions are buffered and flushed in index order, so files produced by
// concurrent sweeps stay deterministic.
class ManifestWriter {
public:
    explicit ManifestWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw Error("cannot open " + path.string() + " for writing");
    }

    void meta(const nlohmann::json& config, const std::string& created_at) {
        std::lock_guard lock(mutex_);
        nlohmann::json j{{"type", "meta"},
                         {"artifact_version", std::string(kArtifactVersion)},
                         {"created_at", created_at},
                         {"config", config}};
        out_ << j.dump() << "\n";
        out_.flush();
    }

    void instance(const InstanceRecord& rec) {
        std::lock_guard lock(mutex_);
        pending_[rec.index] = instance_record_to_json(rec).dump();
        while (!pending_.empty() && pending_.begin()->first == next_) {
            out_ << pending_.begin()->second << "\n";
            pending_.erase(pending_.begin());
            ++next_;
        }
        out_.flush();
    }

    void summary(const nlohmann::json& s) {
        std::lock_guard lock(mutex_);
        nlohmann::json j{{"type", "summary"}, {"summary", s}};
        out_ << j.dump() << "\n";
        out_.flush();
    }

private:
    std::ofstream out_;
    std::mutex mutex_;
    std::map<int, std::string> pending_;
    int next_ = 0;
};

inline void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
    ManifestWriter writer(path);
    writer.meta(m.config, m.created_at);
    for (const InstanceRecord& rec : m.instances) writer.instance(rec);
    writer.summary(m.summary);
}

inline RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    RunManifest m;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        const std::string type = j.value("type", "");
        if (type == "meta") {
            m.config = j.value("config", nlohmann::json::object());
            m.artifact_version = j.value("artifact_version", "");
            m.created_at = j.value("created_at", "");
        } else if (type == "instance") {
            m.instances.push_back(instance_record_from_json(j));
        } else if (type == "summary") {
            m.summary = j.value("summary", nlohmann::json::object());
        }
    }
    return m;
}

// Replay source for one recorded instance: its backend calls, in order.
inline ReplayBackend replay_backend_for(const InstanceRecord& rec, bool strict = false) {
    std::vector<RecordedTurn> turns;
    for (const CallRecord& c : rec.calls) {
        if (!c.is_backend_call()) continue;
        turns.push_back(RecordedTurn{c.prompt, c.completion, c.usage});
    }
    return ReplayBackend(std::move(turns), strict);
}

// --- converters from live run state ---------------------------------------------

inline std::vector<CallRecord> calls_from_trace(const std::vector<TraceEvent>& trace) {
    std::vector<CallRecord> out;
    out.reserve(trace.size());
    for (const TraceEvent& ev : trace) {
        CallRecord c;
        c.step = to_string(ev.step);
        c.node = ev.node.str();
        c.prompt = ev.prompt;
        c.completion = ev.completion;
        c.usage = ev.usage;
        if (ev.verdict != Verdict::Unknown) c.verdict = to_string(ev.verdict);
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<CallRecord> calls_from_sc(const ScResult& r) {
    std::vector<CallRecord> out;
    for (const ScSample& s : r.samples) {
        CallRecord c;
        c.step = "sample";
        c.prompt = s.prompt;
        c.completion = s.completion;
        c.usage = s.usage;
        out.push_back(std::move(c));
    }
    for (const VoteRecord& v : r.votes) {
        CallRecord c;
        c.step = "vote";
        c.prompt = v.prompt;
        c.completion = v.completion;
        c.usage = v.usage;
        out.push_back(std::move(c));
    }
    return out;
}

inline ResourceReport resources_from_calls(const std::vector<CallRecord>& calls) {
    ResourceReport r;
    for (const CallRecord& c : calls) {
        r.calls += c.usage.call_count;
        r.context_tokens += c.usage.context_tokens;
        r.output_tokens += c.usage.output_tokens;
        r.wall_time += c.usage.latency;
    }
    return r;
}

} // namespace rdd
