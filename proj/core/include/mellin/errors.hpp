#ifndef MELLIN_ERRORS_HPP
#define MELLIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mellin {

// Base class for every failure this library can raise.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

struct ZeroOperatorError : Error {
    ZeroOperatorError() : Error("operation undefined for the zero operator") {}
};

struct DivisionByZeroSeriesError : Error {
    DivisionByZeroSeriesError()
        : Error("cannot invert a series that is zero up to its precision") {}
};

struct WrongKindError : Error {
    explicit WrongKindError(const std::string& what) : Error(what) {}
};

// Raised when a pipeline needs a rational point but the input only has
// non-rational candidates; carries the degree of the irreducible residual.
struct NonRationalPointError : Error {
    int residualDegree;
    explicit NonRationalPointError(int degree)
        : Error("candidate point is not rational (residual factor of degree " +
                std::to_string(degree) + ")"),
          residualDegree(degree) {}
};

struct TagMismatchError : Error {
    TagMismatchError() : Error("microdifference operands carry different derivation tags") {}
};

struct EmptyWindowError : Error {
    EmptyWindowError() : Error("truncation windows do not overlap") {}
};

struct InsufficientPrecisionError : Error {
    explicit InsufficientPrecisionError(const std::string& what)
        : Error("insufficient precision: " + what) {}
};

// Parse failure with a byte offset into the input and the token set that
// would have been accepted at that position.
struct SyntaxError : Error {
    std::size_t offset;
    std::vector<std::string> expected;
    SyntaxError(std::size_t at, std::vector<std::string> expectedTokens,
                const std::string& what)
        : Error(what), offset(at), expected(std::move(expectedTokens)) {}
};

// Reserved: the expression grammar cannot currently produce this.
struct MixedNonsenseError : Error {
    explicit MixedNonsenseError(const std::string& what) : Error(what) {}
};

}  // namespace mellin

#endif
