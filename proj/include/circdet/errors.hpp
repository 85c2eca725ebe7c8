#ifndef CIRCDET_ERRORS_HPP
#define CIRCDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters outside the documented domain (bad p, q, t, r, s, ...).
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Both bands of a three-band circulant have offsets sharing a factor with p;
/// no relabeling reduces it to the canonical form.
class IrreducibleSpec : public Error {
public:
    using Error::Error;
};

class InvalidKey : public Error {
public:
    using Error::Error;
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

/// A factorial or exponential backend refused an input above its ceiling.
class TooLarge : public Error {
public:
    using Error::Error;
};

class StateSpaceTooLarge : public Error {
public:
    using Error::Error;
};

class NotACycle : public Error {
public:
    using Error::Error;
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

/// Raised when an exact polynomial division leaves a remainder. Inside a
/// determinant backend this is always a bug.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

/// Two independent routes disagreed. Always a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace circdet

#endif // CIRCDET_ERRORS_HPP
