#pragma once

// Fault-injection wrapper: flips step outputs of an inner backend with a
// configured probability per meta-task, turning correct completions into
// guaranteed-wrong ones. Drives the end-to-end validation of the accuracy
// model against simulated error rates.

#include <mutex>
#include <random>
#include <string>

#include "rdd/backend.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompts.hpp"

namespace rdd {

struct FaultRates {
    double decompose = 0.0;
    double unit = 0.0;
    double merge = 0.0;
};

// Appends an extra token to the answer region, which exact-match scoring can
// never accept.
inline std::string corrupt_answer_text(const std::string& completion) {
    auto close = completion.rfind("</ANSWER>");
    if (close == std::string::npos) return completion + " x";
    auto open = completion.rfind("<ANSWER>", close);
    if (open == std::string::npos) return completion + " x";
    std::string inner = completion.substr(open + 8, close - open - 8);
    std::string t = detail::trim(inner);
    std::string corrupted;
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
        corrupted = t.substr(0, t.size() - 1) + " x\"";
    else
        corrupted = t + " x";
    return completion.substr(0, open + 8) + corrupted + completion.substr(close);
}

// Damages the first partition bullet of a decomposition so the pieces no
// longer reassemble the parent: drops the last word of its bracket list (or
// smuggles in a bogus one when the list has a single word). Unit declarations
// and unbracketed bullets pass through unchanged.
inline std::string corrupt_decomposition_text(const std::string& completion) {
    auto bullet = completion.find("- ");
    if (bullet == std::string::npos) return completion;
    auto line_end = completion.find('\n', bullet);
    if (line_end == std::string::npos) line_end = completion.size();
    std::size_t search = bullet;
    // Skip a leading [P-k] identifier bracket.
    auto id_open = completion.find('[', bullet);
    if (id_open != std::string::npos && id_open < line_end &&
        completion.compare(id_open, 3, "[P-") == 0) {
        auto id_close = completion.find(']', id_open);
        if (id_close != std::string::npos && id_close < line_end) search = id_close + 1;
    }
    auto open = completion.find('[', search);
    if (open == std::string::npos || open >= line_end) return completion;
    auto close = completion.find(']', open);
    if (close == std::string::npos || close > line_end) return completion;
    std::string inner = completion.substr(open + 1, close - open - 1);
    auto comma = inner.rfind(", ");
    std::string mutated =
        comma == std::string::npos ? inner + ", Zzzz" : inner.substr(0, comma);
    return completion.substr(0, open + 1) + mutated + completion.substr(close);
}

class FaultInjectionBackend : public Backend {
public:
    FaultInjectionBackend(Backend& inner, FaultRates rates, std::uint64_t seed)
        : inner_(inner), rates_(rates), rng_(seed) {}

    std::string name() const override { return "fault(" + inner_.name() + ")"; }

    Completion complete(const CompletionRequest& request) override {
        Completion c = inner_.complete(request);
        const PromptKind kind = classify_prompt(request.prompt);
        double rate = 0.0;
        switch (kind) {
            case PromptKind::Decompose: rate = rates_.decompose; break;
            case PromptKind::Unit: rate = rates_.unit; break;
            case PromptKind::Merge: rate = rates_.merge; break;
            case PromptKind::Vote: rate = 0.0; break;
        }
        if (rate > 0.0 && draw() < rate) {
            c.text = kind == PromptKind::Decompose ? corrupt_decomposition_text(c.text)
                                                   : corrupt_answer_text(c.text);
        }
        return c;
    }

private:
    double draw() {
        std::lock_guard lock(mutex_);
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    }

    Backend& inner_;
    FaultRates rates_;
    std::mt19937_64 rng_;
    std::mutex mutex_;
};

} // namespace rdd
