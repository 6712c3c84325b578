#pragma once

#include <stdexcept>
#include <string>

namespace visemap {

/// Every failure the library can signal, by name. CLI maps these to exit code 1.
enum class ErrorCode {
    ParseError,
    DuplicatePhoneme,
    UnknownPhoneme,
    CoverageMismatch,
    OverlappingClasses,
    EmptyMap,
    UnknownMap,
    DuplicateMapId,
    ShapeError,
    LabelMismatch,
    IdMismatch,
    EmptyReference,
    EmptyInput,
    IncompleteSweep,
    IoError,
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicatePhoneme: return "DuplicatePhoneme";
        case ErrorCode::UnknownPhoneme: return "UnknownPhoneme";
        case ErrorCode::CoverageMismatch: return "CoverageMismatch";
        case ErrorCode::OverlappingClasses: return "OverlappingClasses";
        case ErrorCode::EmptyMap: return "EmptyMap";
        case ErrorCode::UnknownMap: return "UnknownMap";
        case ErrorCode::DuplicateMapId: return "DuplicateMapId";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::LabelMismatch: return "LabelMismatch";
        case ErrorCode::IdMismatch: return "IdMismatch";
        case ErrorCode::EmptyReference: return "EmptyReference";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::IncompleteSweep: return "IncompleteSweep";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace visemap
