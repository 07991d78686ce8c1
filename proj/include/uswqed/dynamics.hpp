// dynamics.hpp — cavity amplitude under a monochromatic coherent drive:
// stationary elliptical orbit plus the switch-on transient.
#pragma once

#include <vector>

#include "uswqed/model.hpp"
#include "uswqed/numerics.hpp"

namespace uswqed {

// Coherent drive entering through the waveguide at wavenumber k_d > 0.
struct Drive {
    double e_d_abs = 0.0;   // |E_d|
    double theta_d = 0.0;   // drive phase
    double k_d     = 0.0;
    cdouble amplitude() const;   // E_d = |E_d| e^{i theta_d}
};

void validate(const Drive& d, const ModelParams& p);

// Long-time limit of <b(t)>; traces an ellipse in the complex plane.
cdouble stationary_amplitude(double t, const Drive& d, const ModelParams& p);

// Switch-on transient (full amplitude minus the stationary part), t >= 0.
// Quadrature over the dressed continuum is the primary route; the residue sum
// over the dressed poles is the independent cross-check.
cdouble transient_amplitude(double t, const Drive& d, const ModelParams& p,
                            const QuadratureOptions& opts = default_quadrature_options());
cdouble transient_amplitude_residues(double t, const Drive& d, const ModelParams& p);

enum class TrajectoryMode { stationary, full };

struct Trajectory {
    std::vector<double> times;
    std::vector<cdouble> values;
    TrajectoryMode mode = TrajectoryMode::stationary;
};

Trajectory trajectory(const std::vector<double>& times, const Drive& d,
                      const ModelParams& p, TrajectoryMode mode,
                      const QuadratureOptions& opts = default_quadrature_options());

// Stationary orbit geometry: semi-axes along Re<b> and Im<b>.  The aspect
// ratio radius_y / radius_x equals k_d / omega_b exactly.
struct EllipseGeometry {
    double radius_x;
    double radius_y;
    double long_radius;
    double short_radius;
};

EllipseGeometry ellipse(const Drive& d, const ModelParams& p);

} // namespace uswqed
