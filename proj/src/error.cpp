#include "oddcol/error.hpp"

namespace oddcol {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::MissingVertexLine: return "MissingVertexLine";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadPalette: return "BadPalette";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NeedsEmbedding: return "NeedsEmbedding";
    case ErrorCode::StaleSite: return "StaleSite";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyChoiceSet: return "EmptyChoiceSet";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code)
{
}

}  // namespace oddcol
