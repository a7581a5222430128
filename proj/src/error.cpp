#include "zsl/error.hpp"

namespace zsl {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
    case Errc::not_a_subsequence: return "not-a-subsequence";
    case Errc::not_in_cyclic_span: return "not-in-cyclic-span";
    case Errc::zero_element_in_cross_number: return "zero-element-in-cross-number";
    case Errc::not_zero_sum: return "not-zero-sum";
    case Errc::too_many_factorizations: return "too-many-factorizations";
    case Errc::different_products: return "different-products";
    case Errc::cache_corrupt: return "cache-corrupt";
    case Errc::cache_stale: return "cache-stale";
    case Errc::too_large: return "too-large";
    case Errc::undefined_daleth: return "undefined-daleth";
    case Errc::not_found: return "not-found";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
{
}

GuardError::GuardError(std::string guard, std::string override_flag, const std::string& message)
    : Error(Errc::too_large, message + " (guard " + guard + ", raise with " + override_flag + ")"),
      guard_(std::move(guard)),
      override_flag_(std::move(override_flag))
{
}

}  // namespace zsl
