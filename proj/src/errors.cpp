#include "linopt/errors.hpp"

namespace linopt {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::WeightMismatch: return "WeightMismatch";
        case ErrorCode::EmptyDistribution: return "EmptyDistribution";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::IncomparableInput: return "IncomparableInput";
        case ErrorCode::NotComparablePair: return "NotComparablePair";
        case ErrorCode::SupportMismatch: return "SupportMismatch";
        case ErrorCode::UnsupportedAlgo: return "UnsupportedAlgo";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace linopt
