#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdd/backend.hpp"

namespace rdd {

struct RecordedTurn {
    std::string prompt;  // empty when only the completion was recorded
    std::string completion;
    std::optional<UsageRecord> usage;
};

// Feeds back a recorded sequence of completions, one per call. In strict mode
// each incoming prompt must equal the recorded one byte for byte.
class ReplayBackend : public Backend {
public:
    explicit ReplayBackend(std::vector<RecordedTurn> turns, bool strict = false)
        : turns_(std::move(turns)), strict_(strict) {}

    std::string name() const override { return "replay"; }

    Completion complete(const CompletionRequest& request) override {
        check_request(request);
        std::lock_guard lock(mutex_);
        if (cursor_ >= turns_.size())
            throw ReplayExhaustedError("replay exhausted after " + std::to_string(turns_.size()) +
                                       " turns");
        const RecordedTurn& turn = turns_[cursor_++];
        if (strict_ && !turn.prompt.empty() && turn.prompt != request.prompt)
            throw ReplayMismatchError("prompt differs from recorded turn " +
                                      std::to_string(cursor_ - 1));
        Completion c;
        c.text = turn.completion;
        if (turn.usage) {
            c.usage = *turn.usage;
        } else {
            c.usage.context_tokens = approx_token_count(request.prompt);
            c.usage.output_tokens = approx_token_count(turn.completion);
        }
        c.usage.call_count = 1;
        return c;
    }

    std::size_t remaining() const {
        std::lock_guard lock(mutex_);
        return turns_.size() - cursor_;
    }

private:
    std::vector<RecordedTurn> turns_;
    std::size_t cursor_ = 0;
    bool strict_;
    mutable std::mutex mutex_;
};

} // namespace rdd
