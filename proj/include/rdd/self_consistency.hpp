#pragma once

// Compute-matched baseline: k sampled reasoning chains (first greedy, the
// rest at the sampling temperature) reduced to one answer by a balanced
// pairwise tournament, one comparator call per internal node. Sampling and
// tournament halves can run concurrently; the reduction order and all
// recorded logs are fixed regardless of completion order.

#include <future>
#include <optional>
#include <semaphore>
#include <span>
#include <string>
#include <vector>

#include "rdd/backend.hpp"
#include "rdd/parser.hpp"
#include "rdd/prompts.hpp"

namespace rdd {

struct VoteConfig {
    int k = 1;
    double vote_temperature = 0.0;
    double sample_temperature = 0.7;  // candidates 2..k
    int max_tokens = 1024;
    int parallelism = 1;
    Backend* comparator = nullptr;  // defaults to the sampling backend
};

struct ScSample {
    std::string prompt;
    std::string completion;
    std::string answer;
    double temperature = 0.0;
    UsageRecord usage;
};

struct VoteRecord {
    std::string prompt;
    std::string completion;
    std::string left;
    std::string right;
    std::string winner;
    bool malformed = false;
    UsageRecord usage;
};

struct ScResult {
    std::string answer;
    std::vector<ScSample> samples;
    std::vector<VoteRecord> votes;
    std::vector<std::string> diagnostics;
};

// k reasoning chains for one problem: the first sampled greedily, the rest at
// the configured temperature. Answers come out of extract_answer. Samples are
// produced concurrently up to `parallelism` and returned in index order.
inline std::vector<ScSample> sample_candidates(const std::string& problem, UnitMethod method,
                                               Backend& backend, int k, const PromptAssets& assets,
                                               ExampleRegime regime,
                                               double sample_temperature = 0.7,
                                               int max_tokens = 1024, int parallelism = 1) {
    if (k < 1) throw ConfigError("sample count must be >= 1");
    PromptSuite suite = make_suite(assets, DecompositionMode::Independent, regime, method);
    const std::string prompt = render(suite.unit, suite.unit_examples, problem, 1);
    std::vector<ScSample> samples(static_cast<std::size_t>(k));
    auto take = [&](int i) {
        double temperature = i == 0 ? 0.0 : sample_temperature;
        Completion c = backend.complete({prompt, temperature, max_tokens, {}});
        ScSample s;
        s.prompt = prompt;
        s.completion = c.text;
        s.answer = extract_answer(c.text).text;
        s.temperature = temperature;
        s.usage = c.usage;
        samples[static_cast<std::size_t>(i)] = std::move(s);
    };
    if (parallelism <= 1 || k == 1) {
        for (int i = 0; i < k; ++i) take(i);
    } else {
        std::counting_semaphore<> slots(parallelism);
        std::vector<std::future<void>> futures;
        futures.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            futures.push_back(std::async(std::launch::async, [&take, &slots, i] {
                slots.acquire();
                struct Release {
                    std::counting_semaphore<>& s;
                    ~Release() { s.release(); }
                } release{slots};
                take(i);
            }));
        for (auto& f : futures) f.get();
    }
    return samples;
}

namespace detail {

struct VoteContext {
    const std::string* problem;
    const PromptTemplate* tpl;
    const ExampleSet* examples;
    Backend* comparator;
    double temperature;
    int max_tokens;
    bool parallel;
};

struct TournamentResult {
    std::string winner;
    std::vector<VoteRecord> votes;
    std::vector<std::string> diagnostics;
};

inline VoteRecord vote_pair(const std::string& left, const std::string& right,
                            const VoteContext& ctx) {
    std::string block = *ctx.problem + "\n- Candidate 1: " + left + "\n- Candidate 2: " + right;
    std::string prompt = render(*ctx.tpl, *ctx.examples, block, 1);
    Completion c = ctx.comparator->complete({prompt, ctx.temperature, ctx.max_tokens, {}});
    std::string reply = extract_answer(c.text).text;
    VoteRecord record{std::move(prompt), c.text, left, right, {}, false, c.usage};
    // first '1' or '2' in the reply decides; anything else falls back to the
    // first-listed candidate
    for (char ch : reply) {
        if (ch == '1') {
            record.winner = left;
            break;
        }
        if (ch == '2') {
            record.winner = right;
            break;
        }
    }
    if (record.winner.empty()) {
        record.winner = left;
        record.malformed = true;
    }
    return record;
}

// Balanced reduction. Child results are merged left-then-right, so the
// recorded vote order is a function of the candidate list alone.
inline TournamentResult tournament(std::span<const std::string> candidates, std::size_t lo,
                                   std::size_t hi, const VoteContext& ctx) {
    if (hi - lo == 1) return TournamentResult{candidates[lo], {}, {}};
    std::size_t mid = lo + (hi - lo) / 2;
    TournamentResult left, right;
    if (ctx.parallel && hi - lo >= 4) {
        auto left_future = std::async(std::launch::async, [&] {
            return tournament(candidates, lo, mid, ctx);
        });
        right = tournament(candidates, mid, hi, ctx);
        left = left_future.get();
    } else {
        left = tournament(candidates, lo, mid, ctx);
        right = tournament(candidates, mid, hi, ctx);
    }
    TournamentResult merged;
    merged.votes = std::move(left.votes);
    merged.votes.insert(merged.votes.end(), std::make_move_iterator(right.votes.begin()),
                        std::make_move_iterator(right.votes.end()));
    merged.diagnostics = std::move(left.diagnostics);
    merged.diagnostics.insert(merged.diagnostics.end(),
                              std::make_move_iterator(right.diagnostics.begin()),
                              std::make_move_iterator(right.diagnostics.end()));
    VoteRecord record = vote_pair(left.winner, right.winner, ctx);
    merged.winner = record.winner;
    if (record.malformed)
        merged.diagnostics.push_back("unparseable comparator reply; kept the first candidate");
    merged.votes.push_back(std::move(record));
    return merged;
}

} // namespace detail

// Balanced pairwise tournament over the candidates. The result is always one
// of the candidates; exactly candidates.size() - 1 comparator calls are made.
inline std::string binary_search_vote(std::span<const std::string> candidates,
                                      const std::string& problem, Backend& comparator,
                                      const PromptAssets& assets,
                                      std::vector<VoteRecord>* log = nullptr,
                                      std::vector<std::string>* diagnostics = nullptr,
                                      double temperature = 0.0, int max_tokens = 1024,
                                      int parallelism = 1) {
    if (candidates.empty()) throw ConfigError("vote requires at least one candidate");
    detail::VoteContext ctx{&problem,    &assets.tpl(MetaTask::Vote), &assets.set("vote"),
                            &comparator, temperature,                 max_tokens,
                            parallelism > 1};
    detail::TournamentResult result = detail::tournament(candidates, 0, candidates.size(), ctx);
    if (log)
        log->insert(log->end(), std::make_move_iterator(result.votes.begin()),
                    std::make_move_iterator(result.votes.end()));
    if (diagnostics)
        diagnostics->insert(diagnostics->end(),
                            std::make_move_iterator(result.diagnostics.begin()),
                            std::make_move_iterator(result.diagnostics.end()));
    return result.winner;
}

inline ScResult self_consistency_solve(const std::string& problem, UnitMethod method,
                                       Backend& backend, const VoteConfig& cfg,
                                       const PromptAssets& assets, ExampleRegime regime) {
    ScResult result;
    result.samples = sample_candidates(problem, method, backend, cfg.k, assets, regime,
                                       cfg.sample_temperature, cfg.max_tokens, cfg.parallelism);
    std::vector<std::string> answers;
    answers.reserve(result.samples.size());
    for (const ScSample& s : result.samples) answers.push_back(s.answer);
    Backend& comparator = cfg.comparator ? *cfg.comparator : backend;
    result.answer = binary_search_vote(answers, problem, comparator, assets, &result.votes,
                                       &result.diagnostics, cfg.vote_temperature, cfg.max_tokens,
                                       cfg.parallelism);
    return result;
}

} // namespace rdd
