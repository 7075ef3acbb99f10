#pragma once

#include <stdexcept>
#include <string>

namespace planedeg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data is not a valid plane embedding (rotation system fails the
// genus check) or is otherwise structurally malformed.
struct EmbeddingError : Error {
    using Error::Error;
};

// Byte- or text-level format error, with the offset where parsing stopped.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset = 0;
};

// A structural guarantee the algorithms rely on did not hold at runtime.
// Carries a diagnostic dump (JSON) of the offending graph.
struct GuaranteeError : Error {
    GuaranteeError(const std::string& what, std::string diagnostic_json)
        : Error(what), diagnostic(std::move(diagnostic_json)) {}
    std::string diagnostic;
};

}  // namespace planedeg
