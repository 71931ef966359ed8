#ifndef QDUAL_ERRORS_HPP
#define QDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdual {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by a zero divisor of the Lorentz-number algebra (light-cone element).
struct NullDivisor : Error {
    explicit NullDivisor(const std::string& msg = "division by a null Lorentz number")
        : Error(msg) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation too close to a pole of a closed-form expression.
struct PoleError : Error {
    explicit PoleError(const std::string& msg = "evaluation at a pole") : Error(msg) {}
};

// Half-axes that make the modulus formulas divide by zero (surfaces of revolution etc.).
struct DegenerateAxes : Error {
    explicit DegenerateAxes(const std::string& msg) : Error(msg) {}
};

// Requested formula case does not match the modulus configuration.
struct CaseMismatch : Error {
    explicit CaseMismatch(const std::string& msg) : Error(msg) {}
};

// Christoffel integration step with vanishing conformal factor denominator.
struct SingularStep : Error {
    explicit SingularStep(const std::string& msg = "singular Christoffel step") : Error(msg) {}
};

// Finite-difference stencil touched a masked grid node.
struct StencilMasked : Error {
    explicit StencilMasked(const std::string& msg = "stencil touches masked node") : Error(msg) {}
};

}  // namespace qdual

#endif
