// model.hpp — cavity coupled to a semi-infinite waveguide: parameters,
// coupling density, dressed poles, and renormalized cavity numbers.
#pragma once

#include "uswqed/errors.hpp"

namespace uswqed {

// Cavity of frequency omega_b, waveguide modes k > 0 with linear dispersion,
// bilinear coupling of density xi_k^2 = C k / (k^2 + omega_x^2) including the
// counter-rotating terms.  Units: hbar = v = 1; omega_b sets the scale.
struct ModelParams {
    double omega_b = 1.0;
    double omega_x = 5.0;   // coupling cutoff
    double kappa   = 0.0;   // weak-coupling decay rate, kappa = 2 pi xi^2(omega_b)
};

// Positivity plus the subcritical-coupling requirement.  Throws
// std::invalid_argument on malformed input and OvercriticalCouplingError once
// kappa/omega_b reaches the strict bound below.
void validate(const ModelParams& p);

struct CouplingBound {
    double naive;    // omega_b omega_x / (omega_b^2 + omega_x^2), from the admissibility integral
    double strict;   // exact value where two dressed poles merge on the imaginary axis
};

// Both bounds on kappa/omega_b.  Requires omega_x^2 >= 3 omega_b^2, which
// keeps the merge analysis single-valleyed.
CouplingBound coupling_bound(double omega_b, double omega_x);

double coupling_constant(const ModelParams& p);            // C above
double coupling_squared(double k, const ModelParams& p);   // xi_k^2, odd in k
double coupling_xi(double k, const ModelParams& p);        // sqrt(xi_k^2), k >= 0
cdouble coupling_xi(cdouble k, const ModelParams& p);      // principal branch, Re k > 0

// Dielectric-like response z(k) = 1 + 2 pi i C / (omega_b (k - i omega_x)) and
// its conjugate-reflected partner z*(k) = conj(z(conj(k))).  Both reject
// arguments at their own pole.
cdouble z_of_k(cdouble k, const ModelParams& p);
cdouble z_star(cdouble k, const ModelParams& p);

cdouble dispersion(cdouble k, const ModelParams& p);        // k^2 - omega_b^2 z(k)
cdouble dispersion_star(cdouble k, const ModelParams& p);   // k^2 - omega_b^2 z*(k)

// Zeros of (k - i omega_x) * dispersion(k) / ..., i.e. of the cubic
// k^3 - i omega_x k^2 - omega_b^2 k + i (omega_x omega_b^2 - 2 pi C omega_b).
// lambda2 = -conj(lambda1) exactly; lambda3 is purely imaginary.
struct DressedPoles {
    cdouble lambda1;   // first quadrant: Re > 0, Im >= 0
    cdouble lambda2;   // mirror partner
    cdouble lambda3;   // positive imaginary axis
};

DressedPoles solve_cubic(const ModelParams& p);

struct Renormalization {
    double omega_b_tilde;   // Re lambda1
    double kappa_tilde;     // 2 Im lambda1
};

Renormalization renormalize(const ModelParams& p);

// Independent route to the renormalized frequency from the vanishing of the
// real part of the dispersion on the real axis.  Throws std::domain_error
// when the radicand goes negative or the squared frequency is nonpositive.
double renormalized_frequency_closed_form(const ModelParams& p);

// kappa/omega_b where kappa_tilde/omega_b_tilde crosses 0.1 and 1.0 (with
// omega_b = 1 and the given cutoff), found by bisection.
struct RegimeThresholds {
    double ultrastrong;
    double deepstrong;
};

RegimeThresholds coupling_regime_thresholds(double omega_x);

} // namespace uswqed
