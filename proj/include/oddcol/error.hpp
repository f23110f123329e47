#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddcol {

enum class ErrorCode {
    LoopEdge,
    VertexOutOfRange,
    MalformedHeader,
    TruncatedBits,
    TrailingGarbage,
    MalformedInput,
    AsymmetricAdjacency,
    DuplicateNeighbor,
    MissingVertexLine,
    Disconnected,
    BadParameters,
    SizeMismatch,
    BadPalette,
    TooLarge,
    NeedsEmbedding,
    StaleSite,
    PreconditionViolated,
    HypothesisViolated,
    EmptyChoiceSet,
};

auto to_string(ErrorCode code) -> std::string_view;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

}  // namespace oddcol
