// numerics.hpp — adaptive panel quadrature: principal-value poles, oscillatory
// integrals over infinite ranges, and half-line Fourier transforms of spectra
// that carry a delta line plus regular terms.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "uswqed/errors.hpp"

namespace uswqed {

struct QuadratureOptions {
    double rel_tol = 1e-8;        // per-call relative target
    double abs_tol = 1e-13;       // absolute floor for near-zero results
    double panel_width = 0.25;    // widest panel; the oscillation cap may shrink it
    double rotation_split = 40.0; // |Re q| where infinite tails leave the real axis
    int max_depth = 13;           // adaptive bisection depth inside one panel
};

// Honors the USWQED_TOL environment variable for rel_tol when it parses to a
// value in (0, 1); anything else keeps the built-in default.
QuadratureOptions default_quadrature_options();

struct IntegrationResult {
    cdouble value{0.0};
    double error = 0.0;   // accumulated estimate over all panels and tails
};

// Simple pole on the real axis.  minus_i0 means the denominator is
// (x - location - i0), so the integral is PV + i*pi*numerator(location);
// plus_i0 is (x - location + i0), giving PV - i*pi*numerator(location).
enum class PolePrescription { plus_i0, minus_i0 };

struct PoleSpec {
    double location = 0.0;
    PolePrescription prescription = PolePrescription::minus_i0;
};

// Integrand factor; called with real arguments on the axis and with complex
// ones on the rotated tails, so it must be analytic right of the split.
using AnalyticFn = std::function<cdouble(cdouble)>;

// \int_a^b f(x) / (x - pole) dx on a finite interval with the prescription
// above.  A pole outside (a, b) degrades to plain adaptive quadrature; a pole
// at which f is not finite, or sitting on an endpoint, is rejected.
IntegrationResult pv_pole_integral(const AnalyticFn& f, double a, double b,
                                   const PoleSpec& pole,
                                   const QuadratureOptions& opts = default_quadrature_options());

// Integration domain; infinite ends are allowed and handled by contour
// rotation, which requires the integrand to be analytic beyond the split.
struct Interval {
    double a = 0.0;
    double b = 0.0;
    static Interval whole_line();
    static Interval half_line();              // (0, inf)
    static Interval finite(double a, double b);
};

// \int g(q) e^{i sign t q} dq over the interval, optionally divided by a
// prescribed simple pole (which must lie strictly inside the finite core).
// Panels never span more than an eighth of an oscillation period.
IntegrationResult oscillatory_integral(const AnalyticFn& g, double t, int sign,
                                       const Interval& iv,
                                       const QuadratureOptions& opts = default_quadrature_options(),
                                       const std::optional<PoleSpec>& pole = std::nullopt);

// One additive term of a wavenumber spectrum:
//     amplitude(k) * e^{i k phase} [ / (k - pole) ].
struct SpectrumTerm {
    AnalyticFn amplitude;
    double phase = 0.0;
    std::optional<PoleSpec> pole;
};

// delta_weight * delta(k - delta_location) + sum of SpectrumTerms.
struct DeltaPlusRegular {
    cdouble delta_weight{0.0};
    double delta_location = 0.0;
    std::vector<SpectrumTerm> terms;

    // Pointwise sum of the regular terms; diverges at an unguarded pole.
    cdouble regular(double k) const;
};

// (1/sqrt(2 pi)) \int_0^inf e^{i k r} spectrum(k) dk.  The delta line is added
// analytically and never discretized.
IntegrationResult halfline_fourier(const DeltaPlusRegular& spectrum, double r,
                                   const QuadratureOptions& opts = default_quadrature_options());

} // namespace uswqed
