#include "parakat/error.hpp"

namespace parakat {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUpper: return "NotUpper";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::NotIncreasingUpper: return "NotIncreasingUpper";
    case ErrorCode::NotGapless: return "NotGapless";
    case ErrorCode::NotGaplessCore: return "NotGaplessCore";
    case ErrorCode::NotFlagCriticalList: return "NotFlagCriticalList";
    case ErrorCode::NotAvoiding: return "NotAvoiding";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace parakat
