#ifndef CORRIDORCAST_ERRORS_HPP
#define CORRIDORCAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corridorcast {

enum class ErrorCode {
    InvalidArgument,
    InvalidConfig,
    IoError,
    SchemaMismatch,
    EmptyFile,
    MissingSegment,
    NonPositiveSpeed,
    UnknownLocationTag,
    InsufficientData,
    InsufficientCountData,
    EmptyMatrix,
    MissingProbeSlot,
    ZeroVariance,
    DegenerateMatrix,
    InvalidRange,
    ZeroMeanTarget,
    NoConvergence,
    PredictSchemaMismatch,
};

const char* error_code_name(ErrorCode code);

/// True for errors caused by bad inputs/config (CLI exit 1) as opposed to
/// computational failures (CLI exit 2).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace corridorcast

#endif
