#ifndef GRAPHKRYLOV_ERRORS_HPP
#define GRAPHKRYLOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphkrylov {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes of two operands do not match.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Input matrix is not symmetric within tolerance.
class NotSymmetric : public Error {
public:
    using Error::Error;
};

/// An argument or a spectrum leaves the declared domain of a kernel function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A pivot dropped below the rank tolerance during a linear solve.
class Singular : public Error {
public:
    using Error::Error;
};

/// A desk-scale size guard was exceeded (dense oracle, dense eigenvalues).
class SizeExceeded : public Error {
public:
    using Error::Error;
};

class DuplicateNode : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// sqrt(phi) is needed but phi is negative at an interpolation node.
class NegativePhiAtNode : public Error {
public:
    using Error::Error;
};

/// The regularized collocation matrix of an approximate kernel is singular.
/// A legal outcome for the gbl/sbl/cheb methods at small m.
class NonInvertibleCollocation : public Error {
public:
    using Error::Error;
};

} // namespace graphkrylov

#endif
