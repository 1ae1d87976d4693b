#ifndef GRTAB_ERRORS_HPP
#define GRTAB_ERRORS_HPP

/**
 * @file errors.hpp
 * @brief Error codes and the exception type shared by the whole library.
 */

#include <stdexcept>
#include <string>

namespace grtab {

/// Reason codes attached to every grtab::Error.
enum class ErrorCode {
    ColumnNotStrict,     ///< a tableau column is not strictly increasing
    OutOfRange,          ///< an entry or index lies outside its admissible range
    RaggedRows,          ///< tableau rows have unequal lengths
    DimensionMismatch,   ///< operands live in different ambient Gr(n,[m])
    NotAFactor,          ///< requested division is not exact
    ContentMismatch,     ///< dominance comparison of tableaux with different content
    NotInLattice,        ///< degree difference is not in the solid-column lattice
    NotFundamental,      ///< column is not a one-gap (fundamental) column
    ParityError,         ///< variable Y[i,s] with s and i of different parity
    OutOfWindow,         ///< monomial does not fit the target window C_l
    KTooLarge,           ///< symmetric-group size exceeds the configured cap
    IncomparableDegrees, ///< multidegrees differ by something outside the frozen lattice
    SingularFrozen,      ///< evaluation point where a solid frozen minor vanishes
    FrozenVertex,        ///< mutation requested at a frozen vertex
    AmbiguousMax,        ///< neither exchange side dominates in the weight order
    NotExpressible,      ///< no integer expansion over the requested cluster exists
    BadDimensions,       ///< invalid (n, m) for a seed construction
    InvalidInput,        ///< malformed serialized data or CLI input
    Internal,            ///< broken internal invariant (library bug)
};

/// @return a short stable identifier for @p c, used in messages and CLI output.
inline const char* to_string(ErrorCode c) {
    switch (c) {
    case ErrorCode::ColumnNotStrict: return "ColumnNotStrict";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::ContentMismatch: return "ContentMismatch";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::NotFundamental: return "NotFundamental";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::IncomparableDegrees: return "IncomparableDegrees";
    case ErrorCode::SingularFrozen: return "SingularFrozen";
    case ErrorCode::FrozenVertex: return "FrozenVertex";
    case ErrorCode::AmbiguousMax: return "AmbiguousMax";
    case ErrorCode::NotExpressible: return "NotExpressible";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

/**
 * @brief Exception thrown by all library operations on invalid input.
 *
 * Carries a machine-readable ErrorCode plus a human-readable message.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    /// @return the reason code for this error.
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Throws Error{code, what} — single call site keeps `[[noreturn]]` friendly.
[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

/// Internal-invariant check; failures signal a library bug, not bad input.
inline void require_internal(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::Internal, what);
}

} // namespace grtab

#endif // GRTAB_ERRORS_HPP
