// errors.hpp — exception types and the complex alias shared across the library
#pragma once

#include <complex>
#include <stdexcept>

namespace uswqed {

using cdouble = std::complex<double>;

// Coupling strong enough that the dressed cavity frequency collapses to zero;
// the model has no normalizable ground state there.
struct OvercriticalCouplingError : std::domain_error {
    using std::domain_error::domain_error;
};

// A quadrature or root search could not reach the requested tolerance.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace uswqed
