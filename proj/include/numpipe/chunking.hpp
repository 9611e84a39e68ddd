#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace numpipe {

enum class BoundaryPolicy { Line, Paragraph };

/// A contiguous span of the source document. Chunks produced by segment()
/// partition the source: concatenating texts in index order reproduces it
/// byte for byte, and [byte_begin, byte_end) ranges tile the whole input.
struct Chunk {
    size_t index = 0;
    std::string text;
    std::int64_t token_count = 0;
    size_t byte_begin = 0;
    size_t byte_end = 0;
};

struct ChunkingConfig {
    int filter_chunk_tokens = 1000;
    int extract_chunk_tokens = 8000;
    BoundaryPolicy boundary_policy = BoundaryPolicy::Line;
};

/// Deterministic token estimate: ceil(bytes/4) summed per line, where each
/// line includes its trailing newline. Returns 0 only for the empty string.
/// No model tokenizer is assumed; swap in an exact one via TokenEstimator
/// if a deployment needs model-true budgets.
std::int64_t estimate_tokens(std::string_view text);

using TokenEstimator = std::int64_t (*)(std::string_view);

/// Greedy packing of whole lines (or paragraphs) into chunks of at most
/// target_tokens. A single line/paragraph over the budget is emitted whole.
std::vector<Chunk> segment(std::string_view document, std::int64_t target_tokens,
                           BoundaryPolicy policy = BoundaryPolicy::Line,
                           TokenEstimator estimator = &estimate_tokens);

/// Merges surviving chunks (single newline at each seam) and re-segments at
/// a larger budget. Byte ranges of the result map into the merged text.
std::vector<Chunk> resegment(const std::vector<Chunk>& survivors, std::int64_t target_tokens,
                             BoundaryPolicy policy = BoundaryPolicy::Line,
                             TokenEstimator estimator = &estimate_tokens);

/// The seam rule used by resegment, exposed for the extraction stage.
std::string merge_chunk_texts(const std::vector<Chunk>& chunks);

}  // namespace numpipe
