#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace numpipe {

enum class ModelRole { Main, Extractor, Filter, Judge };

const char* role_name(ModelRole role);
std::optional<ModelRole> role_from_name(const std::string& name);

/// Nanodollars. Integer money keeps ledger sums exact in any order.
using Money = std::int64_t;

/// "$5 per 1M tokens" -> 5000 nanodollars per token.
Money price_per_mtok_to_nano_per_token(double dollars_per_mtok);

std::string format_usd(Money nano);        // rounded to cents, "$5.00"
std::string format_usd_exact(Money nano);  // nine decimals, no rounding

struct ModelConfig {
    ModelRole role = ModelRole::Main;
    std::string endpoint = "mock";  // "mock" or http://host[:port][/prefix]
    std::string model_name = "mock";
    double temperature = 0.0;
    int max_output_tokens = 4096;
    double price_in_per_mtok = 0.0;   // dollars per 1M input tokens
    double price_out_per_mtok = 0.0;  // dollars per 1M output tokens
    int max_retries = 2;
    std::chrono::milliseconds timeout{30000};
    std::chrono::milliseconds retry_base_delay{250};
    std::int64_t context_window_tokens = 1'000'000;
    int max_inflight = 8;
};

struct ChatExchange {
    ModelRole role = ModelRole::Main;
    std::string model_name;
    std::string prompt;
    std::string response;  // empty only when the call errored
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    std::chrono::milliseconds latency{0};
    int attempt = 1;
    bool usage_estimated = false;
    bool truncated = false;   // output hit max_output_tokens
    std::string error;        // set on failed attempts
};

struct RolePricing {
    Money in_nano_per_token = 0;
    Money out_nano_per_token = 0;
};

/// Append-only, thread-safe accounting of every model call. Totals are
/// exact integer sums, independent of entry order.
class CostLedger {
public:
    void set_pricing(ModelRole role, RolePricing pricing);
    RolePricing pricing(ModelRole role) const;
    void add(const ChatExchange& exchange);
    void add_all(const std::vector<ChatExchange>& exchanges);

    Money total_cost(std::optional<ModelRole> role_filter = {}) const;
    std::int64_t total_input_tokens(std::optional<ModelRole> role_filter = {}) const;
    std::int64_t total_output_tokens(std::optional<ModelRole> role_filter = {}) const;
    size_t size() const;
    std::vector<ChatExchange> entries() const;

    static Money cost_of(const std::vector<ChatExchange>& exchanges,
                         const std::map<ModelRole, RolePricing>& pricing,
                         std::optional<ModelRole> role_filter = {});

private:
    mutable std::mutex mu_;
    std::vector<ChatExchange> entries_;
    std::map<ModelRole, RolePricing> pricing_;
};

class MockBackend;

/// The only component that talks to model endpoints. Role-tagged calls,
/// bounded per-role concurrency, retry with exponential backoff, and usage
/// capture into the ledger (every attempt, including failed ones).
class LlmGateway {
public:
    explicit LlmGateway(std::map<ModelRole, ModelConfig> configs,
                        std::shared_ptr<MockBackend> mock = nullptr);
    ~LlmGateway();

    LlmGateway(const LlmGateway&) = delete;
    LlmGateway& operator=(const LlmGateway&) = delete;

    /// Throws std::invalid_argument on an empty prompt before any I/O and
    /// TransportError once retries are exhausted.
    ChatExchange complete(ModelRole role, const std::string& prompt);
    ChatExchange complete(const ModelConfig& config, const std::string& prompt);

    const ModelConfig& config(ModelRole role) const;
    bool has_role(ModelRole role) const;
    CostLedger& ledger() { return ledger_; }
    const CostLedger& ledger() const { return ledger_; }

private:
    struct RoleGate;

    ChatExchange attempt_once(const ModelConfig& config, const std::string& prompt, int attempt);
    ChatExchange http_complete(const ModelConfig& config, const std::string& prompt);

    std::map<ModelRole, ModelConfig> configs_;
    std::shared_ptr<MockBackend> mock_;
    CostLedger ledger_;
    std::map<ModelRole, std::unique_ptr<RoleGate>> gates_;
};

/// API key lookup: NUMPIPE_<ROLE>_API_KEY.
std::string api_key_env_name(ModelRole role);

}  // namespace numpipe
