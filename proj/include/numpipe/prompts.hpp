#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace numpipe {

enum class PromptKind {
    AnalyzeQuestion,
    RelevanceFilter,
    ExtractData,
    ProcessDataByCode,
    Conclude,
    Judge,
    BaselineNormal,
    BaselineCoT,
};

const char* prompt_kind_name(PromptKind kind);

struct PromptTemplate {
    PromptKind kind;
    std::string body;  // named {placeholder} slots
};

/// Substitutes every {name} placeholder from the bindings, byte-exact
/// otherwise. Placeholder values are not rescanned, so braces inside bound
/// text cannot inject further substitutions. Throws UnboundPlaceholder if
/// the body references a name the bindings lack.
std::string render(const PromptTemplate& tpl, const std::map<std::string, std::string>& bindings);

/// Built-in template bodies, overridable per kind by dropping a
/// <kind_name>.txt file into a prompt directory.
class PromptLibrary {
public:
    PromptLibrary();
    explicit PromptLibrary(const std::optional<std::filesystem::path>& override_dir);

    const PromptTemplate& get(PromptKind kind) const;
    std::string render(PromptKind kind, const std::map<std::string, std::string>& bindings) const;

private:
    std::map<PromptKind, PromptTemplate> templates_;
};

const PromptTemplate& builtin_template(PromptKind kind);

/// Appended to the original prompt for the one-shot repair re-ask.
extern const char* const kFormatReminder;

/// Appended (with the captured stderr) for the one-shot script regeneration.
extern const char* const kScriptErrorPreamble;

}  // namespace numpipe
