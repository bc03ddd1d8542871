#pragma once

#include <stdexcept>
#include <string>

namespace multifan {

/**
 * Error categories raised by the library.  Input-shaped problems (bad cycles,
 * degenerate colorings, malformed documents) are distinguished from internal
 * consistency failures (a violated symmetry indicates an arithmetic bug, not
 * bad input).
 */
enum class errc {
    invalid_input,
    not_a_cycle,
    degenerate_coloring,
    dimension_mismatch,
    coloring_mismatch,
    dependent_glue_set,
    singular_matrix,
    non_generic_polarization,
    genericity_exhausted,
    zero_volume_polynomial,
    symmetry_violation,
    move_not_applicable,
    not_suspension_shaped,
    too_many_singular_points,
    sample_disagreement,
};

inline const char* errc_name(errc c)
{
    switch (c) {
        case errc::invalid_input:            return "InvalidInput";
        case errc::not_a_cycle:              return "NotACycle";
        case errc::degenerate_coloring:      return "DegenerateColoring";
        case errc::dimension_mismatch:       return "DimensionMismatch";
        case errc::coloring_mismatch:        return "ColoringMismatch";
        case errc::dependent_glue_set:       return "DependentGlueSet";
        case errc::singular_matrix:          return "SingularMatrix";
        case errc::non_generic_polarization: return "NonGenericPolarization";
        case errc::genericity_exhausted:     return "GenericityExhausted";
        case errc::zero_volume_polynomial:   return "ZeroVolumePolynomial";
        case errc::symmetry_violation:       return "SymmetryViolation";
        case errc::move_not_applicable:      return "MoveNotApplicable";
        case errc::not_suspension_shaped:    return "NotSuspensionShaped";
        case errc::too_many_singular_points: return "TooManySingularPoints";
        case errc::sample_disagreement:      return "SampleDisagreement";
    }
    return "UnknownError";
}

/// True for errors that signal a bug in the computation rather than bad input.
inline bool errc_is_internal(errc c)
{
    return c == errc::symmetry_violation;
}

class FanError : public std::runtime_error {
public:
    FanError(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message)
    {
    }

    errc code() const noexcept { return code_; }

    /// The description alone, without the "CodeName: " prefix of what().
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

[[noreturn]] inline void raise(errc code, const std::string& message)
{
    throw FanError(code, message);
}

}  // namespace multifan
