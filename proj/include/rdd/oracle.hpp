#pragma once

// Deterministic benchmark oracle: decomposes by the fixed partition rule and
// answers unit/merge prompts from the ground-truth solvers. It consumes the
// same rendered prompts a remote model would see and produces completions in
// the same textual formats, so the whole pipeline can run against it.

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/backend.hpp"
#include "rdd/benchmarks.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompts.hpp"

namespace rdd {

struct OraclePolicy {
    int width = 4;
    int unit_threshold = 5;  // lists up to this length are declared unit
};

// Contiguous partition sizes for a list of `len` under a branching cap of
// `width`: chunks of exactly `width` while ceil(len/width) fits the cap,
// otherwise `width` near-equal parts (longer parts last).
inline std::vector<int> partition_sizes(int len, int width) {
    std::vector<int> sizes;
    int k = (len + width - 1) / width;
    if (k <= width) {
        int rem = len;
        while (rem > 0) {
            int s = std::min(width, rem);
            sizes.push_back(s);
            rem -= s;
        }
    } else {
        int base = len / width;
        int extra = len % width;
        for (int i = 0; i < width - extra; ++i) sizes.push_back(base);
        for (int i = 0; i < extra; ++i) sizes.push_back(base + 1);
    }
    return sizes;
}

enum class OracleActionKind { Unit, Split, Answer };

struct OracleAction {
    OracleActionKind kind = OracleActionKind::Unit;
    std::vector<std::string> sub_descriptions;  // Split; ids are assigned positionally
    std::string answer;                         // Answer
};

// Decomposition/unit decision for one problem description. `dependency_mode`
// mirrors which decomposition prompt is in play: the reversal task needs a
// dependency chain and is declared unit when dependencies cannot be expressed.
inline OracleAction oracle_policy(const std::string& description, const OraclePolicy& policy,
                                  PromptKind asked = PromptKind::Decompose,
                                  bool dependency_mode = true) {
    auto parsed = parse_problem_text(description);
    if (!parsed)
        throw UnparsableBenchmarkProblemError("oracle cannot parse problem: " +
                                              description.substr(0, 120));
    if (asked == PromptKind::Unit)
        return OracleAction{OracleActionKind::Answer, {}, ground_truth_of(*parsed)};

    OracleAction action;
    const int len = static_cast<int>(parsed->kind == ProblemKind::ReverseList
                                         ? parsed->items.size()
                                         : parsed->words.size());
    switch (parsed->kind) {
        case ProblemKind::ReverseList:
            action.kind = OracleActionKind::Unit;
            break;
        case ProblemKind::LengthReversal:
            if (len <= policy.unit_threshold || !dependency_mode) {
                action.kind = OracleActionKind::Unit;
            } else {
                action.kind = OracleActionKind::Split;
                action.sub_descriptions.push_back(render_length_list(parsed->words));
                action.sub_descriptions.push_back(render_reverse_list("{P-1}"));
            }
            break;
        case ProblemKind::LetterConcat:
        case ProblemKind::LengthList: {
            if (len <= policy.unit_threshold) {
                action.kind = OracleActionKind::Unit;
                break;
            }
            action.kind = OracleActionKind::Split;
            std::size_t offset = 0;
            for (int size : partition_sizes(len, policy.width)) {
                std::span<const std::string> chunk(parsed->words.data() + offset,
                                                   static_cast<std::size_t>(size));
                action.sub_descriptions.push_back(
                    parsed->kind == ProblemKind::LetterConcat
                        ? render_letter_concat(chunk, parsed->index)
                        : render_length_list(chunk));
                offset += static_cast<std::size_t>(size);
            }
            break;
        }
    }
    return action;
}

// Mechanical merge of sub-solutions: partition-style parents concatenate the
// pieces in order; the reversal chain's answer is its final sub-solution.
// Mistakes in sub-solutions are reproduced, not repaired.
inline std::string oracle_merge(const std::string& parent_description,
                                const std::vector<SubSolution>& subsolutions) {
    auto parsed = parse_problem_text(parent_description);
    if (!parsed)
        throw UnparsableBenchmarkProblemError("oracle cannot parse merge parent: " +
                                              parent_description.substr(0, 120));
    if (subsolutions.empty())
        throw UnparsableBenchmarkProblemError("merge prompt carries no sub-solutions");
    if (parsed->kind == ProblemKind::LengthReversal)
        return normalize_answer(subsolutions.back().solution);
    std::string out;
    for (const SubSolution& s : subsolutions) {
        std::string piece = normalize_answer(s.solution);
        if (piece.empty()) continue;
        if (!out.empty()) out += ' ';
        out += piece;
    }
    return out;
}

// --- prompt-side parsing ----------------------------------------------------

struct PromptProblem {
    std::string problem;
    std::vector<SubSolution> subsolutions;  // merge prompts
    std::vector<std::string> candidates;    // vote prompts
};

namespace detail {

inline std::string line_at(std::string_view text, std::size_t pos) {
    auto end = text.find('\n', pos);
    return std::string(text.substr(pos, end == std::string_view::npos ? end : end - pos));
}

} // namespace detail

// Recovers the problem block from a rendered prompt: the text after the last
// "Problem:" label (or the "## Problem" section for vote prompts), split into
// the problem line plus any sub-solution/candidate bullets.
inline PromptProblem parse_prompt_problem(const std::string& prompt, PromptKind kind) {
    PromptProblem out;
    std::size_t start;
    if (kind == PromptKind::Vote) {
        auto sec = prompt.rfind("## Problem\n\n");
        if (sec == std::string::npos) throw ProtocolError("vote prompt lacks a problem section");
        start = sec + 12;
    } else {
        auto label = prompt.rfind("\nProblem: ");
        if (label == std::string::npos) throw ProtocolError("prompt lacks a problem line");
        start = label + 10;
    }
    out.problem = detail::line_at(prompt, start);
    std::size_t pos = start + out.problem.size();

    while (pos < prompt.size() && prompt[pos] == '\n') {
        std::string line = detail::line_at(prompt, pos + 1);
        if (line.rfind("- ", 0) != 0) break;
        pos += 1 + line.size();
        if (kind == PromptKind::Merge) {
            auto head = line.find(": ");
            if (head == std::string::npos) continue;
            std::string rest = line.substr(head + 2);
            auto tail = rest.rfind(" Sub-solution ");
            if (tail == std::string::npos) continue;
            auto colon = rest.find(": ", tail);
            if (colon == std::string::npos) continue;
            out.subsolutions.push_back(
                SubSolution{rdd::detail::trim(rest.substr(0, tail)), rest.substr(colon + 2)});
        } else if (kind == PromptKind::Vote) {
            auto colon = line.find(": ");
            if (colon == std::string::npos) continue;
            out.candidates.push_back(line.substr(colon + 2));
        }
    }
    return out;
}

class OracleBackend : public Backend {
public:
    explicit OracleBackend(OraclePolicy policy = {}) : policy_(policy) {}

    std::string name() const override { return "oracle"; }

    Completion complete(const CompletionRequest& request) override {
        check_request(request);
        const PromptKind kind = classify_prompt(request.prompt);
        std::string text;
        switch (kind) {
            case PromptKind::Decompose: {
                auto pp = parse_prompt_problem(request.prompt, kind);
                bool deps = is_dependency_prompt(request.prompt);
                OracleAction action =
                    oracle_policy(pp.problem, policy_, PromptKind::Decompose, deps);
                if (action.kind == OracleActionKind::Unit) {
                    text = "This is a unit problem.";
                } else {
                    for (std::size_t i = 0; i < action.sub_descriptions.size(); ++i) {
                        if (i) text += "\n";
                        text += "- ";
                        if (deps) text += "[P-" + std::to_string(i + 1) + "] ";
                        text += action.sub_descriptions[i];
                    }
                }
                break;
            }
            case PromptKind::Merge: {
                auto pp = parse_prompt_problem(request.prompt, kind);
                text = "Combining the sub-solutions in order gives the answer <ANSWER>\"" +
                       oracle_merge(pp.problem, pp.subsolutions) + "\"</ANSWER>.";
                break;
            }
            case PromptKind::Vote: {
                auto pp = parse_prompt_problem(request.prompt, kind);
                std::string choice = "1";
                if (auto parsed = parse_problem_text(pp.problem)) {
                    std::string gt = normalize_answer(ground_truth_of(*parsed));
                    for (std::size_t i = 0; i < pp.candidates.size(); ++i) {
                        if (normalize_answer(pp.candidates[i]) == gt) {
                            choice = std::to_string(i + 1);
                            break;
                        }
                    }
                }
                text = "The most consistent candidate is <ANSWER>" + choice + "</ANSWER>.";
                break;
            }
            case PromptKind::Unit: {
                auto pp = parse_prompt_problem(request.prompt, kind);
                OracleAction action = oracle_policy(pp.problem, policy_, PromptKind::Unit);
                text = "Let's think step by step. The answer is <ANSWER>\"" + action.answer +
                       "\"</ANSWER>.";
                break;
            }
        }
        Completion c;
        c.text = std::move(text);
        c.usage.context_tokens = approx_token_count(request.prompt);
        c.usage.output_tokens = approx_token_count(c.text);
        c.usage.call_count = 1;
        return c;
    }

    const OraclePolicy& policy() const { return policy_; }

private:
    OraclePolicy policy_;
};

} // namespace rdd
