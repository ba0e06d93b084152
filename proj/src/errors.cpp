#include "corridorcast/errors.hpp"

namespace corridorcast {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::EmptyFile: return "EmptyFile";
        case ErrorCode::MissingSegment: return "MissingSegment";
        case ErrorCode::NonPositiveSpeed: return "NonPositiveSpeed";
        case ErrorCode::UnknownLocationTag: return "UnknownLocationTag";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::InsufficientCountData: return "InsufficientCountData";
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::MissingProbeSlot: return "MissingProbeSlot";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::ZeroMeanTarget: return "ZeroMeanTarget";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::PredictSchemaMismatch: return "PredictSchemaMismatch";
    }
    return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidConfig:
        case ErrorCode::IoError:
        case ErrorCode::SchemaMismatch:
        case ErrorCode::EmptyFile:
        case ErrorCode::InvalidRange:
            return true;
        default:
            return false;
    }
}

}  // namespace corridorcast
