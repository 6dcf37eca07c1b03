#ifndef TGF_ERRORS_HPP
#define TGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tgf {

/// Caller violated a precondition (mismatched shapes, index out of range, bad order).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Division by a series whose constant term is zero.
class NonUnitDivisor : public std::domain_error {
public:
    NonUnitDivisor() : std::domain_error("non-unit divisor") {}
};

/// Square root of a series whose constant term is not a nonzero rational square.
class NonSquareConstant : public std::domain_error {
public:
    NonSquareConstant() : std::domain_error("non-square constant term") {}
};

/// Substitution of a series with nonzero constant term.
class CompositionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematically guaranteed property failed. Never expected to fire.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tgf

#endif  // TGF_ERRORS_HPP
