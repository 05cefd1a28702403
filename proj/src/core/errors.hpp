#pragma once

#include <stdexcept>
#include <string>

namespace rmc {

// Error kinds, used to map library failures onto C API status codes and CLI
// exit codes.
enum class Errc {
    not_prime,
    reducible_modulus,
    degree_mismatch,
    not_a_basis,
    ambient_mismatch,
    enumeration_too_large,
    dependent_evaluation_points,
    dimension_too_large,
    non_integral_count,
    block_count_mismatch,
    t_too_small,
    b_out_of_range,
    hypothesis_violated,
    parse_error,
    invalid_argument,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Errc kind() const noexcept { return kind_; }

  private:
    Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* errc_name(Errc k) {
    switch (k) {
        case Errc::not_prime: return "NotPrime";
        case Errc::reducible_modulus: return "ReducibleModulus";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::not_a_basis: return "NotABasis";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::enumeration_too_large: return "EnumerationTooLarge";
        case Errc::dependent_evaluation_points: return "DependentEvaluationPoints";
        case Errc::dimension_too_large: return "DimensionTooLarge";
        case Errc::non_integral_count: return "NonIntegralCount";
        case Errc::block_count_mismatch: return "BlockCountMismatch";
        case Errc::t_too_small: return "TTooSmall";
        case Errc::b_out_of_range: return "BOutOfRange";
        case Errc::hypothesis_violated: return "HypothesisViolated";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace rmc
