#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parakat {

/// Domain error categories. Each maps one-to-one onto a C API status code
/// and onto the name echoed by the CLI on exit code 65.
enum class ErrorCode {
    InvalidArgument,      // malformed input (bad entries, bad R, bad shape)
    NotUpper,
    NotFlag,
    NotIncreasingUpper,
    NotGapless,
    NotGaplessCore,
    NotFlagCriticalList,
    NotAvoiding,
    DomainMismatch,
    ShapeMismatch,
    CapExceeded,
    BudgetExceeded,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond)
        fail(code, what);
}

} // namespace parakat
