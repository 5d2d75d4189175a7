#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/errors.hpp"

namespace rdd {

// Node identifier. Local identifiers follow the "P-<k>" grammar and are only
// unique within one sibling set; the stored value is the full path from the
// reserved root ("ROOT", "ROOT/P-1", "ROOT/P-1/P-2", ...) which is unique
// across the whole graph.
class ProblemId {
public:
    ProblemId() = default;
    explicit ProblemId(std::string path) : path_(std::move(path)) {}

    static ProblemId root() { return ProblemId(std::string(kRootName)); }

    ProblemId child(std::string_view local_id) const {
        std::string p = path_;
        p += '/';
        p += local_id;
        return ProblemId(std::move(p));
    }

    const std::string& str() const { return path_; }
    bool is_root() const { return path_ == kRootName; }

    // Last path segment ("P-3" for "ROOT/P-1/P-3"; "ROOT" for the root).
    std::string local() const {
        auto pos = path_.rfind('/');
        return pos == std::string::npos ? path_ : path_.substr(pos + 1);
    }

    // Path of the parent node; empty for the root.
    std::optional<ProblemId> parent() const {
        auto pos = path_.rfind('/');
        if (pos == std::string::npos) return std::nullopt;
        return ProblemId(path_.substr(0, pos));
    }

    bool empty() const { return path_.empty(); }

    auto operator<=>(const ProblemId&) const = default;

    static constexpr std::string_view kRootName = "ROOT";

private:
    std::string path_;
};

// "P-" followed by one or more digits, first digit nonzero.
inline bool is_valid_local_id(std::string_view s) {
    if (s.size() < 3 || s[0] != 'P' || s[1] != '-') return false;
    if (s[2] == '0') return false;
    return std::all_of(s.begin() + 2, s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

enum class NodeKind { Unknown, Unit, Composite };
enum class NodeStatus { Pending, Decomposed, Blocked, Solved, Failed };

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Unknown: return "unknown";
        case NodeKind::Unit: return "unit";
        case NodeKind::Composite: return "composite";
    }
    return "?";
}

inline const char* to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::Pending: return "pending";
        case NodeStatus::Decomposed: return "decomposed";
        case NodeStatus::Blocked: return "blocked";
        case NodeStatus::Solved: return "solved";
        case NodeStatus::Failed: return "failed";
    }
    return "?";
}

struct ProblemNode {
    ProblemId id;
    std::string description;
    NodeKind kind = NodeKind::Unknown;
    NodeStatus status = NodeStatus::Pending;
    std::optional<std::string> solution;
    std::vector<ProblemId> children;   // ordered as listed by the decomposition
    std::set<ProblemId> dependencies;  // same-parent siblings this node's description references
    int depth = 0;
    std::optional<std::string> class_tag;
    std::optional<int> difficulty_tag;
};

// One proposed sub-problem, addressed by local id; dependencies are local ids
// of siblings from the same proposal.
struct SubProblemSpec {
    std::string local_id;
    std::string description;
    std::set<std::string> dependencies;
};

// Rooted decomposition DAG: children edges form a tree, sibling dependency
// edges make it a DAG. Mutation is single-writer (callers serialize).
class DecompositionGraph {
public:
    DecompositionGraph() : DecompositionGraph(std::string()) {}

    explicit DecompositionGraph(std::string root_description) : root_(ProblemId::root()) {
        ProblemNode root;
        root.id = root_;
        root.description = std::move(root_description);
        nodes_.emplace(root_.str(), std::move(root));
    }

    const ProblemId& root() const { return root_; }
    std::size_t size() const { return nodes_.size(); }
    bool contains(const ProblemId& id) const { return nodes_.count(id.str()) != 0; }

    const ProblemNode& at(const ProblemId& id) const {
        auto it = nodes_.find(id.str());
        if (it == nodes_.end()) throw UnknownNodeError("unknown node: " + id.str());
        return it->second;
    }

    ProblemNode& at(const ProblemId& id) {
        auto it = nodes_.find(id.str());
        if (it == nodes_.end()) throw UnknownNodeError("unknown node: " + id.str());
        return it->second;
    }

    // Deterministic (path-sorted) id listing.
    std::vector<ProblemId> ids() const {
        std::vector<ProblemId> out;
        out.reserve(nodes_.size());
        for (const auto& [path, node] : nodes_) out.emplace_back(path);
        return out;
    }

    // Attach one parsed decomposition under `parent`. Children are appended in
    // listed order; local dependency ids are resolved against the new sibling
    // set. Rejects structural violations before mutating.
    void add_decomposition(const ProblemId& parent_id, const std::vector<SubProblemSpec>& subs,
                           int width_limit) {
        ProblemNode& parent = at(parent_id);
        if (parent.kind == NodeKind::Unit)
            throw GraphError("cannot decompose unit node " + parent_id.str());
        if (subs.empty())
            throw MalformedDecompositionError("decomposition of " + parent_id.str() +
                                              " proposes zero sub-problems");
        if (width_limit >= 1 && static_cast<int>(subs.size()) > width_limit)
            throw WidthExceededError("decomposition of " + parent_id.str() + " proposes " +
                                     std::to_string(subs.size()) + " sub-problems, width limit " +
                                     std::to_string(width_limit));

        std::set<std::string> sibling_ids;
        for (const ProblemId& c : parent.children) sibling_ids.insert(c.local());

        std::set<std::string> new_ids;
        for (const SubProblemSpec& sub : subs) {
            if (!is_valid_local_id(sub.local_id))
                throw GraphError("invalid sub-problem id '" + sub.local_id + "'");
            if (!new_ids.insert(sub.local_id).second || sibling_ids.count(sub.local_id))
                throw DuplicateIdError("duplicate sub-problem id '" + sub.local_id + "' under " +
                                       parent_id.str());
            if (sub.description.empty())
                throw MalformedDecompositionError("empty sub-problem description for '" +
                                                  sub.local_id + "'");
        }
        for (const SubProblemSpec& sub : subs) {
            for (const std::string& dep : sub.dependencies) {
                if (dep == sub.local_id)
                    throw SelfDependencyError("sub-problem '" + sub.local_id +
                                              "' depends on itself");
                if (!new_ids.count(dep))
                    throw DanglingDependencyError("sub-problem '" + sub.local_id +
                                                  "' references '" + dep +
                                                  "' which is not in the proposed list");
            }
        }

        for (const SubProblemSpec& sub : subs) {
            ProblemNode node;
            node.id = parent_id.child(sub.local_id);
            node.description = sub.description;
            node.depth = parent.depth + 1;
            for (const std::string& dep : sub.dependencies)
                node.dependencies.insert(parent_id.child(dep));
            parent.children.push_back(node.id);
            nodes_.emplace(node.id.str(), std::move(node));
        }
        parent.kind = NodeKind::Composite;
        if (parent.status == NodeStatus::Pending) parent.status = NodeStatus::Decomposed;
    }

    // Cycle diagnosis over children + dependency edges. Returns the first
    // cycle found as an id path, or nullopt when the graph is acyclic.
    std::optional<std::vector<ProblemId>> find_cycle() const {
        enum class Color { White, Gray, Black };
        std::map<std::string, Color> color;
        std::vector<ProblemId> stack;
        std::optional<std::vector<ProblemId>> cycle;

        auto edges = [&](const ProblemNode& n) {
            std::vector<ProblemId> out(n.children.begin(), n.children.end());
            out.insert(out.end(), n.dependencies.begin(), n.dependencies.end());
            return out;
        };

        // Iterative DFS keeping the gray path for cycle extraction.
        struct Frame {
            ProblemId id;
            std::vector<ProblemId> next;
            std::size_t pos = 0;
        };
        for (const auto& [path, start] : nodes_) {
            if (color[path] != Color::White) continue;
            std::vector<Frame> frames;
            frames.push_back({ProblemId(path), edges(start), 0});
            color[path] = Color::Gray;
            stack.assign(1, ProblemId(path));
            while (!frames.empty() && !cycle) {
                Frame& f = frames.back();
                if (f.pos < f.next.size()) {
                    ProblemId to = f.next[f.pos++];
                    if (!contains(to)) continue;  // dangling ids reported by audit()
                    Color c = color[to.str()];
                    if (c == Color::Gray) {
                        auto it = std::find(stack.begin(), stack.end(), to);
                        cycle.emplace(it, stack.end());
                    } else if (c == Color::White) {
                        color[to.str()] = Color::Gray;
                        stack.push_back(to);
                        frames.push_back({to, edges(at(to)), 0});
                    }
                } else {
                    color[f.id.str()] = Color::Black;
                    stack.pop_back();
                    frames.pop_back();
                }
            }
            if (cycle) return cycle;
        }
        return std::nullopt;
    }

    void set_solved(const ProblemId& id, std::string solution) {
        ProblemNode& n = at(id);
        n.solution = std::move(solution);
        n.status = NodeStatus::Solved;
    }

    void set_failed(const ProblemId& id) {
        ProblemNode& n = at(id);
        n.solution.reset();
        n.status = NodeStatus::Failed;
    }

    // Structural invariant audit; returns human-readable violations.
    std::vector<std::string> audit() const {
        std::vector<std::string> bad;
        for (const auto& [path, n] : nodes_) {
            if ((n.status == NodeStatus::Solved) != n.solution.has_value())
                bad.push_back(path + ": solved status and solution presence disagree");
            if (n.kind == NodeKind::Unit && !n.children.empty())
                bad.push_back(path + ": unit node has children");
            auto parent = n.id.parent();
            for (const ProblemId& dep : n.dependencies) {
                if (!contains(dep)) {
                    bad.push_back(path + ": dangling dependency " + dep.str());
                    continue;
                }
                if (!parent || dep.parent() != parent)
                    bad.push_back(path + ": dependency " + dep.str() + " is not a sibling");
            }
            for (const ProblemId& c : n.children) {
                if (!contains(c)) {
                    bad.push_back(path + ": dangling child " + c.str());
                    continue;
                }
                if (at(c).depth != n.depth + 1)
                    bad.push_back(c.str() + ": depth is not parent depth + 1");
            }
            if (n.kind == NodeKind::Composite && n.status == NodeStatus::Solved) {
                for (const ProblemId& c : n.children)
                    if (contains(c) && at(c).status != NodeStatus::Solved)
                        bad.push_back(path + ": solved composite with unsolved child " + c.str());
            }
        }
        if (auto cyc = find_cycle()) {
            std::string msg = "cycle:";
            for (const ProblemId& id : *cyc) msg += " " + id.str();
            bad.push_back(msg);
        }
        return bad;
    }

    // Deterministic DOT rendering: solid child edges, dashed dependency edges,
    // fill color by solved/unsolved/failed.
    std::string to_dot() const {
        std::string out = "digraph decomposition {\n  node [shape=box, style=filled];\n";
        for (const auto& [path, n] : nodes_) {
            out += "  \"" + dot_escape(path) + "\" [label=\"" + dot_escape(dot_label(n)) +
                   "\", fillcolor=" + dot_color(n.status) + "];\n";
        }
        for (const auto& [path, n] : nodes_) {
            for (const ProblemId& c : n.children)
                out += "  \"" + dot_escape(path) + "\" -> \"" + dot_escape(c.str()) + "\";\n";
        }
        for (const auto& [path, n] : nodes_) {
            for (const ProblemId& dep : n.dependencies)
                out += "  \"" + dot_escape(dep.str()) + "\" -> \"" + dot_escape(path) +
                       "\" [style=dashed];\n";
        }
        out += "}\n";
        return out;
    }

private:
    static std::string dot_label(const ProblemNode& n) {
        std::string label = n.id.local();
        if (!n.description.empty()) {
            std::string desc = n.description.substr(0, 48);
            if (n.description.size() > 48) desc += "...";
            label += "\n" + desc;
        }
        return label;
    }

    static const char* dot_color(NodeStatus s) {
        switch (s) {
            case NodeStatus::Solved: return "palegreen";
            case NodeStatus::Failed: return "lightcoral";
            default: return "lightgray";
        }
    }

    static std::string dot_escape(std::string_view s) {
        std::string out;
        out.reserve(s.size());
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            out += c;
        }
        return out;
    }

    ProblemId root_;
    std::map<std::string, ProblemNode> nodes_;
};

} // namespace rdd
