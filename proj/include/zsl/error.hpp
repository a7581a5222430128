#pragma once

#include <stdexcept>
#include <string>

namespace zsl {

enum class Errc {
    invalid_argument,
    parse_error,
    not_a_subsequence,
    not_in_cyclic_span,
    zero_element_in_cross_number,
    not_zero_sum,
    too_many_factorizations,
    different_products,
    cache_corrupt,
    cache_stale,
    too_large,
    undefined_daleth,
    not_found,
};

const char* errc_name(Errc code) noexcept;

/// Library error. Every failure raised by zsl carries one of the Errc codes so
/// callers (and the CLI exit-code mapping) can branch on the category.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// A resource guard was exceeded. `guard` names the limit and `override_flag`
/// the CLI switch that raises it.
class GuardError : public Error {
public:
    GuardError(std::string guard, std::string override_flag, const std::string& message);

    const std::string& guard() const noexcept { return guard_; }
    const std::string& override_flag() const noexcept { return override_flag_; }

private:
    std::string guard_;
    std::string override_flag_;
};

}  // namespace zsl
