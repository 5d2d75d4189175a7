#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rdd/errors.hpp"

namespace rdd {

struct CompletionRequest {
    std::string prompt;
    double temperature = 0.0;  // valid range [0, 2]
    int max_tokens = 1024;
    std::optional<std::uint64_t> seed;
};

struct UsageRecord {
    std::int64_t context_tokens = 0;
    std::int64_t output_tokens = 0;
    std::chrono::microseconds latency{0};
    int call_count = 0;  // 1 per completion

    UsageRecord& operator+=(const UsageRecord& o) {
        context_tokens += o.context_tokens;
        output_tokens += o.output_tokens;
        latency += o.latency;
        call_count += o.call_count;
        return *this;
    }
};

struct Completion {
    std::string text;
    UsageRecord usage;
};

// Whitespace-word token approximation used by the scripted backends and as a
// fallback when a provider omits usage. Only relative comparisons matter for
// compute matching.
inline std::int64_t approx_token_count(std::string_view text) {
    std::int64_t n = 0;
    bool in_word = false;
    for (char c : text) {
        bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
        if (!ws && !in_word) ++n;
        in_word = !ws;
    }
    return n;
}

class Backend {
public:
    virtual ~Backend() = default;
    virtual Completion complete(const CompletionRequest& request) = 0;
    virtual std::string name() const = 0;

protected:
    static void check_request(const CompletionRequest& r) {
        if (r.temperature < 0.0 || r.temperature > 2.0)
            throw std::invalid_argument("temperature out of [0, 2]: " +
                                        std::to_string(r.temperature));
        if (r.max_tokens < 1) throw std::invalid_argument("max_tokens must be positive");
    }
};

} // namespace rdd
