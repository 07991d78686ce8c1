// field.hpp — stationary waveguide field: wavenumber spectrum, real-space
// profile, and the reflection spectrum of the semi-infinite line.
#pragma once

#include <vector>

#include "uswqed/dynamics.hpp"
#include "uswqed/model.hpp"
#include "uswqed/numerics.hpp"

namespace uswqed {

// Stationary <c_k(t)> at fixed time under the drive: a delta line at k_d plus
// two regular components.  component2 has a pole at k = k_d whose numerator
// vanishes there, so its principal-value limit is finite.
class CkStationary {
public:
    CkStationary(double t, const Drive& d, const ModelParams& p);

    cdouble delta_weight() const;     // sqrt(2 pi) E_d e^{-i k_d t}
    double delta_location() const;    // k_d
    cdouble component2(double k) const;
    cdouble component3(double k) const;
    cdouble regular_total(double k) const;

    // The same spectrum in the representation halfline_fourier consumes.
    DeltaPlusRegular spectrum() const;

private:
    double t_;
    Drive drive_;
    ModelParams params_;
    cdouble dstar_kd_;    // dispersion_star(k_d)
    cdouble d_kd_;        // dispersion(k_d)
    double xi_kd_;
};

enum class FieldMethod { rigorous, approximate };

// Real-space field at r, normalized by the incident wave E_d e^{i k_d (r-t)}.
// rigorous evaluates the full Fourier transform of the spectrum; approximate
// is the sharp-wavefront input/output form 1 + (R - 1) theta(r) theta(t - r).
cdouble realspace_field(double r, double t, const Drive& d, const ModelParams& p,
                        FieldMethod method,
                        const QuadratureOptions& opts = default_quadrature_options());

struct FieldProfile {
    std::vector<double> positions;
    std::vector<cdouble> normalized;
    double t = 0.0;
    FieldMethod method = FieldMethod::rigorous;
};

FieldProfile field_profile(const std::vector<double>& positions, double t,
                           const Drive& d, const ModelParams& p, FieldMethod method,
                           const QuadratureOptions& opts = default_quadrature_options());

// Amplitude reflection coefficient of the semi-infinite line; |R| = 1 exactly,
// R = dispersion(k) / dispersion_star(k).
cdouble reflection(double k_d, const ModelParams& p);

// Continuous representative of arg R in (-2 pi, 0), equal to
// -2 arg dispersion_star(k).  Requires kappa > 0.
double reflection_phase(double k_d, const ModelParams& p);

// Nearest-branch unwrap of arg R over an ascending grid, anchored so the
// first value lies in (-2 pi, 0].  The grid must resolve kappa_tilde / 10
// around the renormalized resonance or the unwrap is rejected.
std::vector<double> phase_spectrum(const std::vector<double>& k_grid, const ModelParams& p);

// max over 0 < delta <= delta_max of
// |argR(w + delta) + argR(w - delta) - 2 argR(w)| at w = omega_b_tilde with
// delta_max = min(3 kappa_tilde, 0.9 w); zero for a symmetric phase profile.
double phase_asymmetry_metric(const ModelParams& p);

// Reflection/transmission split of the equivalent two-sided line.
struct ScatteringPoint {
    double k_d;
    cdouble r_total;   // semi-infinite reflection R
    cdouble r_prime;   // (R - 1) / 2
    cdouble t_prime;   // (R + 1) / 2
};

ScatteringPoint open_waveguide(double k_d, const ModelParams& p);

} // namespace uswqed
