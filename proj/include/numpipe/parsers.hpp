#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numpipe/table.hpp"

namespace numpipe {

enum class JudgeVerdict { Correct, Incorrect };

/// A fenced block as found in a model response: the info string after the
/// opening fence, and the body up to the closing fence.
struct FencedBlock {
    std::string info;
    std::string body;
};

std::vector<FencedBlock> scan_fenced_blocks(const std::string& text);

/// Parses the analyze-question response: a fenced `header:` block holding
/// one markdown row plus a fenced `primary key` block. Throws
/// SchemaParseError when either block is missing or the schema invariants
/// fail.
QuestionSchema parse_schema(const std::string& response);

/// Total on arbitrary bytes. First alphabetic token "no" means drop;
/// "yes" or anything ambiguous keeps the chunk.
bool parse_relevance(const std::string& response);

/// Locates the fenced `table` block (falling back to the first run of pipe
/// rows anywhere), repairs a missing delimiter row, strips an "index"
/// column, canonicalizes header spelling to expected_header, and drops rows
/// with wrong arity or empty/placeholder cells. Returns std::nullopt for
/// the "no data" sentinel. Throws TableParseError / HeaderMismatch.
std::optional<DataTable> parse_markdown_table(const std::string& response,
                                              const std::vector<std::string>& expected_header);

/// Returns the first fenced code block; when several exist, the first one
/// referencing data.json wins. Throws CodeParseError if none.
std::string parse_code_block(const std::string& response);

/// Case-insensitive scan; "incorrect" wins over "correct"; neither present
/// is judged Incorrect.
JudgeVerdict parse_judge(const std::string& response);

}  // namespace numpipe
