#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include "numpipe/table.hpp"

namespace numpipe {

struct SandboxLimits {
    std::string interpreter;  // no compiled-in fallback; must be configured
    std::chrono::milliseconds timeout{20000};
    size_t max_output_bytes = 1 << 20;
    int max_concurrent = 0;  // 0 = number of hardware threads
};

struct ExecutionResult {
    int exit_status = 0;
    std::string stdout_text;
    std::string stderr_text;
    std::optional<std::string> answer_text;      // contents of code_answer.txt
    std::optional<std::string> processed_table;  // contents of data_p.json
    std::chrono::milliseconds wall_time{0};
    bool timed_out = false;
    bool output_truncated = false;
    std::filesystem::path workspace;  // retained for inspection
};

/// Runs the script in a fresh workspace seeded with data.json (the
/// interchange serialization of the table), working directory set to the
/// workspace, `<interpreter> <script-file>`. Enforces the timeout and
/// output caps; collects stdout/stderr plus the answer and processed-table
/// files. Nonzero exits and timeouts are reported in the result, not
/// thrown. Throws InterpreterMissing when the configured runtime cannot be
/// found, std::invalid_argument on an empty script.
ExecutionResult execute_script(const std::string& script, const DataTable& table,
                               const SandboxLimits& limits,
                               const std::filesystem::path& workspace_parent);

/// Answer file wins over stdout; both empty is NoAnswer.
std::string resolve_answer(const ExecutionResult& result);

}  // namespace numpipe
