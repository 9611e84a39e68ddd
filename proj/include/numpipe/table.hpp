#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace numpipe {

/// The inferred table header and primary key that drive filtering,
/// extraction and deduplication for one question.
struct QuestionSchema {
    std::vector<std::string> header;
    std::string primary_key;

    size_t primary_key_index() const;

    /// Validates: non-empty header, names unique after trimming
    /// (case-insensitive), primary key present in the header. Throws
    /// SchemaParseError otherwise. The stored primary key uses the
    /// header's spelling.
    static QuestionSchema make(std::vector<std::string> header, std::string primary_key);
};

/// All cells are strings end to end; type casting is the generated
/// script's job.
struct DataTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    size_t primary_key_index = 0;

    static DataTable for_schema(const QuestionSchema& schema);
    void add_row(std::vector<std::string> cells);  // throws HeaderMismatch on arity
    size_t row_count() const { return rows.size(); }
};

struct DedupStats {
    size_t duplicates_dropped = 0;  // identical rows under the same key
    size_t conflicts_dropped = 0;   // same key, differing cells
};

/// Canonical numeric spelling: no thousands separators, period decimal
/// point, no currency symbols. Non-numeric strings pass through unchanged.
/// Idempotent on every input.
std::string normalize_number(const std::string& cell);

/// Dedup key: number-normalized, trimmed, case-folded.
std::string normalize_key(const std::string& cell);

/// Appends tables in order, normalizes cells, and keeps the first
/// occurrence of each primary-key value (keys compared via normalize_key).
/// All inputs must carry the schema header exactly.
DataTable concat_dedup(const std::vector<DataTable>& tables, const QuestionSchema& schema,
                       DedupStats* stats = nullptr);

/// Pipe table with a 1-based "index" column prepended. Pipes inside cells
/// are escaped; the output round-trips through parse_markdown_table.
std::string render_table(const DataTable& table);

/// First min(n, rows) rows rendered as a pipe table. n must be >= 1.
std::string head_preview(const DataTable& table, size_t n = 5);

/// Column-oriented stringly-typed JSON, the exact shape the generated
/// script's default loading call reads: {"col": {"0": "cell", ...}, ...}.
std::string to_interchange_json(const DataTable& table);

}  // namespace numpipe
