#pragma once

#include <stdexcept>
#include <string>

namespace mirabolic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct SizeMismatch : Error {
    SizeMismatch() : Error("matrix dimensions do not match") {}
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct NotInP : Error {
    NotInP() : Error("group element is not in the mirabolic subgroup") {}
};

struct NotInLieP : Error {
    NotInLieP() : Error("matrix is not in the mirabolic Lie algebra (nonzero last row)") {}
};

struct InvalidSelector : Error {
    explicit InvalidSelector(const std::string& what) : Error(what) {}
};

struct DegenerateSpectralData : Error {
    explicit DegenerateSpectralData(const std::string& what) : Error(what) {}
};

struct BadReduction : Error {
    explicit BadReduction(const std::string& what) : Error(what) {}
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace mirabolic
