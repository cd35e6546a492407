#include "cosbench/model_client.hpp"

#include "cosbench/hash.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/oracle.hpp"
#include "cosbench/promptkit.hpp"
#include "cosbench/taskgen.hpp"

#include "httplib.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <semaphore>
#include <thread>

namespace cosbench {
namespace client {

namespace fs = std::filesystem;

int64_t backoff_delay_ms(int attempt, int64_t base_ms, int64_t cap_ms) {
    if (attempt < 0) attempt = 0;
    if (attempt > 20) attempt = 20;
    int64_t delay = base_ms << attempt;
    return delay < cap_ms ? delay : cap_ms;
}

// ---------------------------------------------------------------------------
// HTTP client
// ---------------------------------------------------------------------------

namespace {

struct Endpoint {
    std::string origin; // scheme://host[:port]
    std::string base_path;
};

Endpoint split_endpoint(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("endpoint_url must include a scheme: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    Endpoint e;
    if (path_start == std::string::npos) {
        e.origin = url;
    } else {
        e.origin = url.substr(0, path_start);
        e.base_path = url.substr(path_start);
        while (!e.base_path.empty() && e.base_path.back() == '/') e.base_path.pop_back();
    }
    return e;
}

using Gate = std::counting_semaphore<64>;

} // namespace

HttpChatModel::HttpChatModel(std::string api_key, RetryPolicy policy, int max_parallel)
    : api_key_(std::move(api_key)), policy_(policy) {
    if (max_parallel < 1) max_parallel = 1;
    if (max_parallel > 64) max_parallel = 64;
    gate_ = std::make_shared<Gate>(max_parallel);
}

Completion HttpChatModel::complete(const std::string& prompt, const ModelParams& params) {
    params.validate();
    if (api_key_.empty()) {
        throw AuthError(std::string("no API credential; set ") + kApiKeyEnvVar);
    }
    Endpoint endpoint = split_endpoint(params.endpoint_url);
    json body = {{"model", params.model_name},
                 {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
                 {"temperature", params.temperature},
                 {"max_tokens", params.max_tokens}};
    const std::string payload = body.dump();

    auto* gate = static_cast<Gate*>(gate_.get());
    bool saw_rate_limit = false;
    std::string last_error;
    auto start = std::chrono::steady_clock::now();

    for (int attempt = 0; attempt < policy_.max_attempts; ++attempt) {
        if (attempt > 0 && policy_.sleep_between) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(backoff_delay_ms(attempt - 1, policy_.base_delay_ms,
                                                           policy_.cap_delay_ms)));
        }
        gate->acquire();
        httplib::Client cli(endpoint.origin);
        cli.set_connection_timeout(30);
        cli.set_read_timeout(120);
        httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};
        auto res = cli.Post(endpoint.base_path + "/chat/completions", headers, payload,
                            "application/json");
        gate->release();

        if (!res) {
            last_error = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 401 || res->status == 403) {
            throw AuthError("authentication rejected (HTTP " + std::to_string(res->status) + ")");
        }
        if (res->status == 429) {
            saw_rate_limit = true;
            last_error = "rate limited (HTTP 429)";
            continue;
        }
        if (res->status >= 500) {
            last_error = "server error (HTTP " + std::to_string(res->status) + ")";
            continue;
        }
        if (res->status != 200) {
            throw ApiError("unexpected HTTP " + std::to_string(res->status) + ": " + res->body);
        }

        json j;
        try {
            j = json::parse(res->body);
        } catch (const json::parse_error& e) {
            throw MalformedResponseError(std::string("response is not JSON: ") + e.what());
        }
        try {
            Completion c;
            const auto& choice = j.at("choices").at(0);
            c.text = choice.at("message").at("content").get<std::string>();
            c.finish_reason = choice.value("finish_reason", "stop");
            if (j.contains("usage")) {
                Usage u;
                u.prompt_tokens = j["usage"].value("prompt_tokens", 0);
                u.completion_tokens = j["usage"].value("completion_tokens", 0);
                c.usage = u;
            }
            c.latency_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            return c;
        } catch (const json::exception& e) {
            throw MalformedResponseError(std::string("response missing fields: ") + e.what());
        }
    }
    if (saw_rate_limit) {
        throw RateLimitError("rate-limit retries exhausted: " + last_error);
    }
    throw NetworkError("retries exhausted: " + last_error);
}

// ---------------------------------------------------------------------------
// Oracle-backed mock
// ---------------------------------------------------------------------------

MockFidelity mock_fidelity_from_string(const std::string& s) {
    if (s == "perfect") return MockFidelity::Perfect;
    if (s == "drop_last_step") return MockFidelity::DropLastStep;
    if (s == "wrong_target") return MockFidelity::WrongTarget;
    throw ConfigError("unknown mock fidelity: '" + s +
                      "' (expected perfect, drop_last_step or wrong_target)");
}

std::string MockOracleModel::name() const {
    switch (fidelity_) {
        case MockFidelity::Perfect: return "mock:perfect";
        case MockFidelity::DropLastStep: return "mock:drop_last_step";
        case MockFidelity::WrongTarget: return "mock:wrong_target";
    }
    return "mock";
}

namespace {

constexpr const char* kRefusal = "I cannot parse this prompt.";

std::optional<Task> detect_task(const std::string& text) {
    if (text.find("set of bricks") != std::string::npos) {
        return text.find("in front of") != std::string::npos ? Task::Brick2D : Task::Brick1D;
    }
    if (text.find("set of roads") != std::string::npos) return Task::Nav;
    if (text.find("three boxes") != std::string::npos) return Task::Nlvr;
    return std::nullopt;
}

// The final question block is everything after the last framing marker.
std::string final_block(const std::string& prompt) {
    size_t pos = std::string::npos;
    for (const char* marker : {"Question: ", "Story: "}) {
        size_t p = prompt.rfind(marker);
        if (p != std::string::npos && (pos == std::string::npos || p > pos)) pos = p;
    }
    return pos == std::string::npos ? prompt : prompt.substr(pos);
}

std::string solve_block(MockFidelity fidelity, const std::string& block) {
    auto task = detect_task(block);
    if (!task) return kRefusal;

    Scene scene = taskgen::parse_description(block, *task);
    Query query = taskgen::parse_question(block, *task);

    GoldAnswer answer;
    switch (*task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            const auto& s = std::get<BrickScene>(scene);
            char target = std::get<BrickQuery>(query).target;
            if (fidelity == MockFidelity::WrongTarget) {
                char other = 0;
                for (const auto& b : s.bricks) {
                    if (b.label != target) {
                        other = b.label;
                        break;
                    }
                }
                if (!other) return kRefusal;
                target = other;
            }
            auto seq = oracle::solve_brick(s, target);
            if (fidelity == MockFidelity::DropLastStep) seq.pop_back();
            answer = BrickGold{seq};
            break;
        }
        case Task::Nav: {
            const auto& m = std::get<NavMap>(scene);
            LandmarkKind kind = std::get<NavQuery>(query).kind;
            if (fidelity == MockFidelity::WrongTarget) {
                bool found = false;
                for (int k = 0; k < 6 && !found; ++k) {
                    auto candidate = static_cast<LandmarkKind>(k);
                    if (candidate == kind) continue;
                    try {
                        oracle::solve_nav(m, candidate);
                        kind = candidate;
                        found = true;
                    } catch (const std::runtime_error&) {
                    }
                }
                if (!found) return kRefusal;
            }
            auto sol = oracle::solve_nav(m, kind);
            if (fidelity == MockFidelity::DropLastStep) sol.path.pop_back();
            answer = NavGold{sol.path, sol.distance_m};
            break;
        }
        case Task::Nlvr: {
            const auto& s = std::get<NlvrScene>(scene);
            auto q = std::get<NlvrQuery>(query);
            if (fidelity == MockFidelity::WrongTarget) {
                q.target_box = static_cast<BoxPos>((static_cast<int>(q.target_box) + 1) % 3);
            }
            auto moves = oracle::solve_nlvr(s, q.value, q.target_box);
            if (fidelity == MockFidelity::DropLastStep && !moves.empty()) moves.pop_back();
            if (moves.empty()) return "There is nothing to move.";
            answer = NlvrGold{moves};
            query = q;
            break;
        }
        case Task::ExternalQA: return kRefusal;
    }
    return promptkit::canonical_final_answer(*task, answer, query);
}

} // namespace

Completion MockOracleModel::complete(const std::string& prompt, const ModelParams& params) {
    params.validate();
    auto start = std::chrono::steady_clock::now();
    Completion c;
    try {
        c.text = solve_block(fidelity_, final_block(prompt));
    } catch (const taskgen::ParseError&) {
        c.text = kRefusal;
    } catch (const oracle::UnsolvableError&) {
        c.text = kRefusal;
    }
    c.latency_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

CachingModel::CachingModel(std::shared_ptr<ChatModel> inner, std::string cache_dir)
    : inner_(std::move(inner)), cache_dir_(std::move(cache_dir)) {
    if (cache_dir_.empty()) throw ConfigError("cache directory is empty");
}

std::string CachingModel::cache_key(const ModelParams& params, const std::string& prompt) {
    json j = {{"endpoint", params.endpoint_url},
              {"model", params.model_name},
              {"temperature", params.temperature},
              {"max_tokens", params.max_tokens},
              {"prompt", prompt}};
    return sha256_hex(dump_canonical(j));
}

Completion CachingModel::complete(const std::string& prompt, const ModelParams& params) {
    const std::string key = cache_key(params, prompt);
    fs::path dir = fs::path(cache_dir_) / key.substr(0, 2);
    fs::path path = dir / (key + ".json");

    {
        std::ifstream in(path);
        if (in) {
            json j = json::parse(in);
            Completion c;
            c.text = j.at("completion").at("text").get<std::string>();
            c.finish_reason = j.at("completion").value("finish_reason", "stop");
            if (j.at("completion").contains("usage") && !j["completion"]["usage"].is_null()) {
                Usage u;
                u.prompt_tokens = j["completion"]["usage"].value("prompt_tokens", 0);
                u.completion_tokens = j["completion"]["usage"].value("completion_tokens", 0);
                c.usage = u;
            }
            c.latency_ms = j.at("completion").value("latency_ms", 0.0);
            hits_++;
            return c;
        }
    }

    Completion c = inner_->complete(prompt, params);
    misses_++;

    fs::create_directories(dir);
    json usage = nullptr;
    if (c.usage) {
        usage = {{"prompt_tokens", c.usage->prompt_tokens},
                 {"completion_tokens", c.usage->completion_tokens}};
    }
    json j = {{"schema_version", 1},
              {"key",
               {{"endpoint", params.endpoint_url},
                {"model", params.model_name},
                {"temperature", params.temperature},
                {"max_tokens", params.max_tokens}}},
              {"completion",
               {{"text", c.text},
                {"finish_reason", c.finish_reason},
                {"usage", usage},
                {"latency_ms", c.latency_ms}}}};
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
        out << j.dump() << "\n";
    }
    fs::rename(tmp, path);
    return c;
}

std::shared_ptr<ChatModel> make_model(const ModelParams& params, const std::string& cache_dir,
                                      int max_parallel) {
    params.validate();
    std::shared_ptr<ChatModel> model;
    const std::string prefix = "mock:";
    if (params.model_name.rfind(prefix, 0) == 0) {
        model = std::make_shared<MockOracleModel>(
            mock_fidelity_from_string(params.model_name.substr(prefix.size())));
    } else {
        const char* key = std::getenv(kApiKeyEnvVar);
        model = std::make_shared<HttpChatModel>(key ? key : "", RetryPolicy{}, max_parallel);
    }
    if (!cache_dir.empty()) model = std::make_shared<CachingModel>(model, cache_dir);
    return model;
}

} // namespace client
} // namespace cosbench
