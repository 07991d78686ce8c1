// dynamics.cpp — driven cavity amplitude: stationary orbit and transient.
#include "uswqed/dynamics.hpp"

#include <cmath>

namespace uswqed {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr cdouble kI{0.0, 1.0};

} // namespace

cdouble Drive::amplitude() const {
    return e_d_abs * std::exp(cdouble(0.0, theta_d));
}

void validate(const Drive& d, const ModelParams& p) {
    validate(p);
    if (!std::isfinite(d.e_d_abs) || d.e_d_abs < 0.0)
        throw std::invalid_argument("drive amplitude must be non-negative and finite");
    if (!std::isfinite(d.theta_d))
        throw std::invalid_argument("drive phase must be finite");
    if (!std::isfinite(d.k_d) || !(d.k_d > 0.0))
        throw std::invalid_argument("drive wavenumber must be positive and finite");
}

cdouble stationary_amplitude(double t, const Drive& d, const ModelParams& p) {
    validate(d, p);
    const double xi = coupling_xi(d.k_d, p);
    const cdouble disp = dispersion(cdouble(d.k_d), p);
    const cdouble b1 = (d.k_d + p.omega_b) * xi / disp;
    const cdouble b2 = (d.k_d - p.omega_b) * xi / disp;
    const cdouble ed = d.amplitude();
    const cdouble osc = std::exp(cdouble(0.0, -d.k_d * t));
    return kSqrt2Pi * (std::conj(b1) * ed * osc - b2 * std::conj(ed) / osc);
}

// Transient continuum integrals.  With E_d the drive amplitude and xi the
// coupling at k_d, the switch-on part is
//   (i E_d xi / sqrt(2 pi)) I1 + (i conj(E_d) xi / sqrt(2 pi)) I2,
//   I1 = \int e^{-i q t} (q + omega_b) / ((q - k_d - i0) dispersion_star(q)) dq,
//   I2 = \int e^{+i q t} (q - omega_b) / ((q - k_d + i0) dispersion(q)) dq,
// both over the whole line.
cdouble transient_amplitude(double t, const Drive& d, const ModelParams& p,
                            const QuadratureOptions& opts) {
    validate(d, p);
    if (!(t >= 0.0)) throw std::invalid_argument("transient defined for t >= 0");
    const ModelParams pc = p;
    auto g1 = [pc](cdouble q) { return (q + pc.omega_b) / dispersion_star(q, pc); };
    auto g2 = [pc](cdouble q) { return (q - pc.omega_b) / dispersion(q, pc); };
    const IntegrationResult i1 =
        oscillatory_integral(g1, t, -1, Interval::whole_line(), opts,
                             PoleSpec{d.k_d, PolePrescription::minus_i0});
    const IntegrationResult i2 =
        oscillatory_integral(g2, t, 1, Interval::whole_line(), opts,
                             PoleSpec{d.k_d, PolePrescription::plus_i0});
    const double xi = coupling_xi(d.k_d, p);
    const cdouble ed = d.amplitude();
    return kI * xi / kSqrt2Pi * (ed * i1.value + std::conj(ed) * i2.value);
}

// Same two integrals closed through the decaying half plane.  I1 picks up the
// conjugated dressed poles (all below the axis for the e^{-iqt} closure), I2
// the dressed poles themselves; the driven pole k_d -+ i0 stays outside.
cdouble transient_amplitude_residues(double t, const Drive& d, const ModelParams& p) {
    validate(d, p);
    if (!(t >= 0.0)) throw std::invalid_argument("transient defined for t >= 0");
    const DressedPoles poles = solve_cubic(p);
    const cdouble lam[3] = {poles.lambda1, poles.lambda2, poles.lambda3};
    const cdouble iwx = kI * p.omega_x;
    cdouble i1{0.0}, i2{0.0};
    for (int j = 0; j < 3; ++j) {
        cdouble lj = lam[j];
        cdouble sep1{1.0}, sep2{1.0};
        for (int m = 0; m < 3; ++m) {
            if (m == j) continue;
            sep1 *= std::conj(lj) - std::conj(lam[m]);
            sep2 *= lj - lam[m];
        }
        const cdouble ljs = std::conj(lj);
        i1 += std::exp(-kI * ljs * t) * (ljs + p.omega_b) * (ljs + iwx) / ((ljs - d.k_d) * sep1);
        i2 += std::exp(kI * lj * t) * (lj - p.omega_b) * (lj - iwx) / ((lj - d.k_d) * sep2);
    }
    i1 *= -2.0 * kPi * kI;
    i2 *= 2.0 * kPi * kI;
    const double xi = coupling_xi(d.k_d, p);
    const cdouble ed = d.amplitude();
    return kI * xi / kSqrt2Pi * (ed * i1 + std::conj(ed) * i2);
}

Trajectory trajectory(const std::vector<double>& times, const Drive& d,
                      const ModelParams& p, TrajectoryMode mode,
                      const QuadratureOptions& opts) {
    Trajectory out;
    out.times = times;
    out.mode = mode;
    out.values.reserve(times.size());
    for (double t : times) {
        cdouble v = stationary_amplitude(t, d, p);
        if (mode == TrajectoryMode::full) v += transient_amplitude(t, d, p, opts);
        out.values.push_back(v);
    }
    return out;
}

EllipseGeometry ellipse(const Drive& d, const ModelParams& p) {
    validate(d, p);
    const double xi = coupling_xi(d.k_d, p);
    const double mag = std::abs(dispersion(cdouble(d.k_d), p));
    const double rx = std::sqrt(8.0 * kPi) * d.e_d_abs * p.omega_b * xi / mag;
    const double ry = rx * d.k_d / p.omega_b;
    return {rx, ry, std::max(rx, ry), std::min(rx, ry)};
}

} // namespace uswqed
