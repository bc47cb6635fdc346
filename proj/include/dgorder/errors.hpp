#pragma once

#include <stdexcept>
#include <string>

namespace dgo {

enum class ErrorCode {
    DimensionMismatch,
    CharTwo,
    InvalidRing,
    NotSubmodule,
    NotAComplex,
    UnsupportedRing,
    ZeroModule,
    DimensionTooLarge,
    NotFull,
    NotDgLattice,
    InconsistentLocalData,
    NotSplit,
    NonUnitComponent,
    ConductorNotComputed,
    TooLarge,
    UnsupportedCycleOrder,
    NotCentralIdempotent,
    NotUnit,
    HomologyNotSemisimple,
    UnknownExample,
    ParseError,
    PreconditionFailed,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

    // resource caps map to CLI exit code 3
    bool is_resource_cap() const noexcept {
        return code_ == ErrorCode::DimensionTooLarge || code_ == ErrorCode::TooLarge;
    }

private:
    ErrorCode code_;
};

} // namespace dgo
