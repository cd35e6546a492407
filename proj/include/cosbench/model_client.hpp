#pragma once

#include "cosbench/types.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace cosbench {
namespace client {

struct Usage {
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

struct Completion {
    std::string text;
    std::string finish_reason = "stop";
    std::optional<Usage> usage;
    double latency_ms = 0.0;
};

// Error kinds are distinct types so callers can tell auth, rate-limit
// exhaustion, malformed responses and plain network failures apart.
struct ClientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AuthError : ClientError {
    using ClientError::ClientError;
};
struct RateLimitError : ClientError {
    using ClientError::ClientError;
};
struct MalformedResponseError : ClientError {
    using ClientError::ClientError;
};
struct NetworkError : ClientError {
    using ClientError::ClientError;
};
struct ApiError : ClientError {
    using ClientError::ClientError;
};

class ChatModel {
public:
    virtual ~ChatModel() = default;
    virtual Completion complete(const std::string& prompt, const ModelParams& params) = 0;
    virtual std::string name() const = 0;
};

/// Deterministic exponential backoff: min(base << attempt, cap).
int64_t backoff_delay_ms(int attempt, int64_t base_ms = 500, int64_t cap_ms = 8000);

struct RetryPolicy {
    int max_attempts = 5;
    int64_t base_delay_ms = 500;
    int64_t cap_delay_ms = 8000;
    bool sleep_between = true; // disabled in tests
};

/// POST <endpoint>/chat/completions with an OpenAI-style JSON body. Retries
/// transient failures (network, 429, 5xx) with bounded exponential backoff;
/// a counting gate caps concurrent in-flight requests.
class HttpChatModel : public ChatModel {
public:
    HttpChatModel(std::string api_key, RetryPolicy policy = {}, int max_parallel = 4);
    Completion complete(const std::string& prompt, const ModelParams& params) override;
    std::string name() const override { return "http"; }

private:
    std::string api_key_;
    RetryPolicy policy_;
    std::shared_ptr<void> gate_; // counting semaphore
};

enum class MockFidelity { Perfect, DropLastStep, WrongTarget };
MockFidelity mock_fidelity_from_string(const std::string& s);

/// Offline model that re-derives the scene from the prompt's final question
/// via the description parser, solves it with the oracle, and answers in the
/// canonical format. Unparseable prompts get a refusal string, exercising
/// parse-failure paths downstream.
class MockOracleModel : public ChatModel {
public:
    explicit MockOracleModel(MockFidelity fidelity) : fidelity_(fidelity) {}
    Completion complete(const std::string& prompt, const ModelParams& params) override;
    std::string name() const override;

private:
    MockFidelity fidelity_;
};

/// On-disk completion cache keyed by a content hash of (endpoint, model,
/// params, prompt). Writes are atomic (temp file + rename).
class CachingModel : public ChatModel {
public:
    CachingModel(std::shared_ptr<ChatModel> inner, std::string cache_dir);
    Completion complete(const std::string& prompt, const ModelParams& params) override;
    std::string name() const override { return inner_->name(); }

    static std::string cache_key(const ModelParams& params, const std::string& prompt);

    int64_t hits() const { return hits_.load(); }
    int64_t misses() const { return misses_.load(); }

private:
    std::shared_ptr<ChatModel> inner_;
    std::string cache_dir_;
    std::atomic<int64_t> hits_{0};
    std::atomic<int64_t> misses_{0};
};

/// Environment variable holding the API credential for remote endpoints.
inline constexpr const char* kApiKeyEnvVar = "COS_BENCH_API_KEY";

/// Builds a model from params: "mock:<fidelity>" model names select the
/// oracle mock, anything else the HTTP client. A non-empty cache_dir wraps
/// the model in a cache.
std::shared_ptr<ChatModel> make_model(const ModelParams& params, const std::string& cache_dir = "",
                                      int max_parallel = 4);

} // namespace client
} // namespace cosbench
