// fluctuations.cpp — ground-state moments of the cavity mode and the
// quadrature widths built from them.
#include "uswqed/fluctuations.hpp"

#include <cmath>

namespace uswqed {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr cdouble kI{0.0, 1.0};

// Rational continuation of |dispersion(q)|^-2 * xi_q^2 off the real axis:
// 1 / (dispersion * dispersion_star) times C q / (q^2 + omega_x^2).
cdouble weight(cdouble q, const ModelParams& p) {
    return coupling_constant(p) * q /
           ((q * q + p.omega_x * p.omega_x) * dispersion(q, p) * dispersion_star(q, p));
}

} // namespace

Moments moments_quadrature(const ModelParams& p, const QuadratureOptions& opts) {
    validate(p);
    if (p.kappa == 0.0) return {0.0, cdouble(0.0)};
    const ModelParams pc = p;
    auto virt = [pc](cdouble q) {
        cdouble d = q - pc.omega_b;
        return d * d * weight(q, pc);
    };
    auto anom = [pc](cdouble q) {
        return (pc.omega_b * pc.omega_b - q * q) * weight(q, pc);
    };
    const IntegrationResult n = oscillatory_integral(virt, 0.0, 1, Interval::half_line(), opts);
    const IntegrationResult a = oscillatory_integral(anom, 0.0, 1, Interval::half_line(), opts);
    return {n.value.real(), a.value};
}

// Residue closed form: with f(q) = (q - omega_b)^2 (q - i omega_x) and
// g(q) = (omega_b^2 - q^2)(q - i omega_x) divided by prod(q - lambda_j),
//   n = -(1 / 2 pi omega_b) sum_j Im[c_j log(-lambda_j)],
// and the same for the anomalous moment with the g residues.
Moments moments_closed_form(const ModelParams& p) {
    validate(p);
    if (p.kappa == 0.0) return {0.0, cdouble(0.0)};
    const DressedPoles poles = solve_cubic(p);
    const cdouble lam[3] = {poles.lambda1, poles.lambda2, poles.lambda3};
    const double scale = std::abs(lam[0]) + std::abs(lam[1]) + std::abs(lam[2]);

    cdouble c[3], d[3];
    for (int j = 0; j < 3; ++j) {
        cdouble sep{1.0};
        for (int m = 0; m < 3; ++m) {
            if (m == j) continue;
            if (std::abs(lam[j] - lam[m]) < 1e-8 * p.omega_b)
                throw NumericsError("closed-form moments need well-separated dressed poles");
            sep *= lam[j] - lam[m];
        }
        const cdouble lj = lam[j];
        const cdouble cut = lj - kI * p.omega_x;
        c[j] = (lj - p.omega_b) * (lj - p.omega_b) * cut / sep;
        d[j] = (p.omega_b * p.omega_b - lj * lj) * cut / sep;
    }

    double n = 0.0, a = 0.0;
    for (int j = 0; j < 3; ++j) {
        // -lambda_j must avoid the branch cut of the principal logarithm; a
        // pole pinching the positive real axis only happens at kappa = 0,
        // where its residue vanishes identically.
        const bool on_cut = lam[j].imag() <= 1e-13 * scale && lam[j].real() > 0.0;
        if (on_cut) {
            if (std::abs(c[j]) > 1e-12 * scale * scale || std::abs(d[j]) > 1e-12 * scale * scale)
                throw NumericsError("weighted dressed pole on the logarithm branch cut");
            continue;
        }
        const cdouble lg = std::log(-lam[j]);
        n += (c[j] * lg).imag();
        a += (d[j] * lg).imag();
    }
    const double pref = -1.0 / (2.0 * kPi * p.omega_b);
    return {pref * n, cdouble(pref * a, 0.0)};
}

QuadratureFluct fluctuations_from(const Moments& m) {
    const double x2 = 0.25 * (1.0 + 2.0 * m.n_virtual + 2.0 * m.anomalous.real());
    const double y2 = 0.25 * (1.0 + 2.0 * m.n_virtual - 2.0 * m.anomalous.real());
    if (!(x2 > 0.0) || !(y2 > 0.0))
        throw NumericsError("quadrature variance went non-positive");
    return {std::sqrt(x2), std::sqrt(y2)};
}

QuadratureFluct quadrature_fluctuations(const ModelParams& p) {
    return fluctuations_from(moments_closed_form(p));
}

} // namespace uswqed
