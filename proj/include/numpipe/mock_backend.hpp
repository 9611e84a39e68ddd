#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace numpipe {

/// Maps question keywords to the schema the analyze stage should return.
struct SchemaRule {
    std::vector<std::string> keywords;  // any match (case-insensitive) selects the rule
    std::vector<std::string> header;
    std::string primary_key;
};

/// One way a fact can appear on a document line: a regex whose capture
/// groups fill the named columns, in order.
struct RecordPattern {
    std::string regex;
    std::vector<std::string> columns;
};

/// Everything the mock needs to behave as an oracle for one family of
/// tables: how records look on a line, plus partial-information hints that
/// keep a chunk at the filter stage.
struct RecordRule {
    std::vector<std::string> columns;  // full set this rule can produce
    std::vector<RecordPattern> patterns;
    std::vector<std::string> hints;
};

struct MockScenario {
    std::uint64_t seed = 0;
    double corruption_rate = 0.0;  // fraction of extract responses to malform
    std::vector<SchemaRule> schema_rules;
    std::vector<RecordRule> record_rules;

    /// Rules covering the synthetic regimes (student resumes, company
    /// reports) so the full pipeline runs offline as a deterministic oracle.
    static MockScenario oracle_defaults(std::uint64_t seed = 0, double corruption_rate = 0.0);

    static MockScenario from_json_file(const std::filesystem::path& path);
    std::string to_json() const;
};

/// Deterministic stand-in for every model role: classifies the incoming
/// prompt by which template produced it and computes a contract-conformant
/// response from the prompt's own payload. Same (scenario, seed, prompt)
/// always yields identical bytes.
class MockBackend {
public:
    explicit MockBackend(MockScenario scenario);
    ~MockBackend();

    MockBackend(const MockBackend&) = delete;
    MockBackend& operator=(const MockBackend&) = delete;

    /// Throws UnrecognizedTemplate when the prompt matches no known template.
    std::string complete(const std::string& prompt) const;

    const MockScenario& scenario() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace numpipe
