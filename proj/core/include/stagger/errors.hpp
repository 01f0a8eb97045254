#pragma once

#include <stdexcept>
#include <string>

namespace stagger {

/// Error raised for domain-level failures (bad preconditions, unsupported
/// inputs). Carries a stable machine-readable code and a free-form context
/// string such as the offending stratum.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    std::string code_;
    std::string context_;
};

namespace errc {
inline constexpr const char* kDimensionMismatch = "dimension_mismatch";
inline constexpr const char* kHomogeneity = "homogeneity";
inline constexpr const char* kNotChainMap = "not_chain_map";
inline constexpr const char* kParity = "parity";
inline constexpr const char* kStrictness = "strictness";
inline constexpr const char* kPrecondition = "precondition";
inline constexpr const char* kNotFiniteLength = "not_finite_length";
inline constexpr const char* kNotPure = "not_pure";
inline constexpr const char* kNotSemisimple = "not_semisimple";
inline constexpr const char* kNotFormal = "not_formal";
inline constexpr const char* kUndefinedPerversity = "undefined_perversity";
inline constexpr const char* kRingMismatch = "ring_mismatch";
}  // namespace errc

}  // namespace stagger
