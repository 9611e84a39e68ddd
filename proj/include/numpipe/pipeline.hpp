#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numpipe/chunking.hpp"
#include "numpipe/config.hpp"
#include "numpipe/gateway.hpp"
#include "numpipe/parsers.hpp"
#include "numpipe/prompts.hpp"
#include "numpipe/sandbox.hpp"
#include "numpipe/table.hpp"

namespace numpipe {

enum class RunStatus { Success, Failed };

/// Everything one pipeline run produced, persisted stage by stage under the
/// run directory so failed runs keep their partial work.
struct RunArtifact {
    RunStatus status = RunStatus::Failed;
    std::string failed_stage;  // empty on success
    std::string error;         // empty on success

    std::string question;
    QuestionSchema schema;
    size_t chunks_total = 0;
    size_t chunks_kept = 0;
    size_t tables_extracted = 0;
    DataTable merged_table;
    DedupStats dedup;
    std::string script;
    ExecutionResult execution;
    std::string sandbox_answer;
    std::string final_answer;
    std::vector<ChatExchange> exchanges;  // calls made by this process, stage order
    std::map<std::string, std::chrono::milliseconds> stage_timings;
    std::filesystem::path run_dir;
    std::vector<std::string> notes;  // per-chunk errors, dropped conflicts, resume hits
};

/// The seven-stage workflow: analyze the question, segment, drop irrelevant
/// chunks, re-segment larger, extract per-chunk tables, process the merged
/// table with a generated script in the sandbox, conclude. Stages that call
/// models persist their outputs content-addressed by input hash, so rerunning
/// with the same inputs and run directory skips completed work.
class Pipeline {
public:
    Pipeline(PipelineConfig config, std::shared_ptr<LlmGateway> gateway);

    QuestionSchema analyze_question(const std::string& question);
    std::vector<Chunk> filter_chunks(const std::vector<Chunk>& chunks, const QuestionSchema& schema);
    DataTable extract_all(const std::vector<Chunk>& chunks, const QuestionSchema& schema,
                          DedupStats* stats = nullptr);
    std::string conclude(const std::string& question, const std::string& script,
                         const std::string& answer);

    /// Never throws for stage failures: the artifact records the failing
    /// stage and keeps all completed work.
    RunArtifact run(const std::string& question, const std::string& context,
                    const std::optional<std::string>& run_id = {});

    const PipelineConfig& config() const { return config_; }
    LlmGateway& gateway() { return *gateway_; }
    const PromptLibrary& prompts() const { return prompts_; }

private:
    friend struct PipelineStages;

    PipelineConfig config_;
    std::shared_ptr<LlmGateway> gateway_;
    PromptLibrary prompts_;
};

/// headers_list binding for the relevance prompt: names joined by " or ".
std::string headers_list_binding(const QuestionSchema& schema);

/// table_header binding for the extract prompt: "| A | B |".
std::string table_header_binding(const QuestionSchema& schema);

/// Builds a gateway wired to the config (mock backend when any endpoint is
/// "mock"), with ledger pricing installed.
std::shared_ptr<LlmGateway> make_gateway(const PipelineConfig& config);

}  // namespace numpipe
