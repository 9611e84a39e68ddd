#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "numpipe/chunking.hpp"
#include "numpipe/gateway.hpp"
#include "numpipe/sandbox.hpp"

namespace numpipe {

struct PipelineConfig {
    ChunkingConfig chunking;
    std::map<ModelRole, ModelConfig> models;
    SandboxLimits sandbox;
    std::filesystem::path artifact_dir = "runs";
    std::optional<std::filesystem::path> prompt_dir;
    bool repair_retry = true;   // one-shot re-ask on parse failures
    bool script_retry = true;   // one regeneration on script failure
    int filter_concurrency = 8;
    int extract_concurrency = 8;
    std::uint64_t seed = 0;
    double mock_corruption_rate = 0.0;
    std::optional<std::filesystem::path> mock_scenario_path;

    /// Main, Extractor and Filter must be configured. Throws ConfigError.
    void validate() const;

    /// All roles on the mock backend, paper pricing on Main/Judge, zero on
    /// the auxiliary roles. Needs no credentials.
    static PipelineConfig mock_defaults();
};

/// CLI flags that shadow config-file fields. Every flag has a config
/// equivalent; precedence is flag > config file > default (the sandbox
/// interpreter env var additionally overrides the flag).
struct FlagOverrides {
    std::optional<int> filter_chunk_tokens;
    std::optional<int> extract_chunk_tokens;
    std::optional<std::string> sandbox_interpreter;
    std::optional<std::string> artifact_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> mock_corruption_rate;
    std::optional<std::string> prompt_dir;
};

PipelineConfig load_pipeline_config(const std::optional<std::filesystem::path>& config_file,
                                    const FlagOverrides& flags = {});

/// Parses a config JSON document over the given base. Exposed for tests.
PipelineConfig apply_config_json(PipelineConfig base, const std::string& json_text);
void apply_flag_overrides(PipelineConfig& config, const FlagOverrides& flags);
void apply_env_overrides(PipelineConfig& config);

}  // namespace numpipe
