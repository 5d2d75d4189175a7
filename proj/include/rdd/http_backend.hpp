#pragma once

// Remote chat-completions client. One connection per call keeps the backend
// safely usable from concurrent workers. Transient failures (429, 5xx,
// transport errors) are retried with exponential backoff up to the attempt
// budget; other HTTP errors fail fast.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "rdd/backend.hpp"

namespace rdd {

struct RemoteConfig {
    std::string base_url;  // e.g. "http://localhost:8080"
    std::string model;
    std::string api_key;
    std::string path = "/v1/chat/completions";
    int max_attempts = 4;
    std::chrono::milliseconds initial_backoff{500};
    double backoff_factor = 2.0;
    std::chrono::seconds timeout{120};
    // Injectable for tests; defaults to a real sleep.
    std::function<void(std::chrono::milliseconds)> sleep =
        [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
};

// Reads RDD_API_BASE, RDD_API_KEY and RDD_MODEL.
inline RemoteConfig remote_config_from_env() {
    RemoteConfig cfg;
    if (const char* base = std::getenv("RDD_API_BASE")) cfg.base_url = base;
    if (const char* key = std::getenv("RDD_API_KEY")) cfg.api_key = key;
    if (const char* model = std::getenv("RDD_MODEL")) cfg.model = model;
    return cfg;
}

class HttpChatBackend : public Backend {
public:
    explicit HttpChatBackend(RemoteConfig config) : cfg_(std::move(config)) {
        if (cfg_.base_url.empty()) throw ConfigError("remote backend requires a base URL");
        if (cfg_.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
    }

    std::string name() const override { return "remote(" + cfg_.model + ")"; }

    Completion complete(const CompletionRequest& request) override {
        check_request(request);
        nlohmann::json body{
            {"model", cfg_.model},
            {"messages", nlohmann::json::array({{{"role", "user"}, {"content", request.prompt}}})},
            {"temperature", request.temperature},
            {"max_tokens", request.max_tokens},
        };
        if (request.seed) body["seed"] = *request.seed;
        const std::string payload = body.dump();

        std::chrono::milliseconds delay = cfg_.initial_backoff;
        std::string last_failure = "no attempt made";
        bool rate_limited = false;
        for (int attempt = 1; attempt <= cfg_.max_attempts; ++attempt) {
            if (attempt > 1) {
                cfg_.sleep(delay);
                delay = std::chrono::milliseconds(
                    static_cast<long>(static_cast<double>(delay.count()) * cfg_.backoff_factor));
            }
            auto started = std::chrono::steady_clock::now();
            httplib::Client client(cfg_.base_url);
            client.set_connection_timeout(cfg_.timeout.count(), 0);
            client.set_read_timeout(cfg_.timeout.count(), 0);
            httplib::Headers headers;
            if (!cfg_.api_key.empty())
                headers.emplace("Authorization", "Bearer " + cfg_.api_key);
            auto res = client.Post(cfg_.path, headers, payload, "application/json");
            auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - started);

            if (!res) {
                last_failure = "transport error: " + httplib::to_string(res.error());
                rate_limited = false;
                continue;
            }
            if (res->status == 429) {
                last_failure = "rate limited (429)";
                rate_limited = true;
                continue;
            }
            if (res->status >= 500) {
                last_failure = "server error (" + std::to_string(res->status) + ")";
                rate_limited = false;
                continue;
            }
            if (res->status != 200)
                throw ProtocolError("unexpected status " + std::to_string(res->status) + ": " +
                                    res->body.substr(0, 200));
            return parse_response(res->body, request.prompt, elapsed);
        }
        if (rate_limited)
            throw RateLimitedError("gave up after " + std::to_string(cfg_.max_attempts) +
                                   " attempts: " + last_failure);
        if (last_failure.rfind("transport", 0) == 0)
            throw TimeoutError("gave up after " + std::to_string(cfg_.max_attempts) +
                               " attempts: " + last_failure);
        throw BackendError("gave up after " + std::to_string(cfg_.max_attempts) +
                           " attempts: " + last_failure);
    }

private:
    Completion parse_response(const std::string& body, const std::string& prompt,
                              std::chrono::microseconds elapsed) const {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw ProtocolError(std::string("malformed response body: ") + e.what());
        }
        Completion c;
        try {
            c.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw ProtocolError("response carries no message content");
        }
        if (j.contains("usage") && j["usage"].is_object()) {
            const auto& u = j["usage"];
            c.usage.context_tokens = u.value("prompt_tokens", approx_token_count(prompt));
            c.usage.output_tokens = u.value("completion_tokens", approx_token_count(c.text));
        } else {
            c.usage.context_tokens = approx_token_count(prompt);
            c.usage.output_tokens = approx_token_count(c.text);
        }
        c.usage.latency = elapsed;
        c.usage.call_count = 1;
        return c;
    }

    RemoteConfig cfg_;
};

} // namespace rdd
