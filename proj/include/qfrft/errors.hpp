#pragma once

#include <stdexcept>
#include <string>

namespace qfr {

/// Failure categories surfaced by the library. The CLI maps these to
/// process exit codes (domain errors -> 2, file format errors -> 3).
enum class Errc {
    zero_quaternion,
    not_unit_pure,
    not_pure,
    bad_grid,
    grid_too_small,
    grid_mismatch,
    non_finite,
    zero_field,
    degenerate_order,
    not_normalized,
    non_commuting_betas,
    format_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

    bool is_format_error() const noexcept { return code_ == Errc::format_error; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qfr
