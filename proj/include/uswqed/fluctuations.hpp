// fluctuations.hpp — drive-independent quadrature noise of the cavity mode in
// the interacting ground state.
#pragma once

#include "uswqed/model.hpp"
#include "uswqed/numerics.hpp"

namespace uswqed {

// Connected second moments of the cavity operators.
struct Moments {
    double n_virtual = 0.0;     // <b+, b>, virtual photon number
    cdouble anomalous{0.0};     // <b, b>, real for this coupling density
};

Moments moments_quadrature(const ModelParams& p,
                           const QuadratureOptions& opts = default_quadrature_options());

// Residue closed form; needs well-separated dressed poles and rejects
// configurations where any weighted pole sits on the logarithm's branch cut.
Moments moments_closed_form(const ModelParams& p);

struct QuadratureFluct {
    double dx;   // fluctuation along Re<b>
    double dy;   // fluctuation along Im<b>; squeezed below 1/2 for kappa > 0
};

QuadratureFluct fluctuations_from(const Moments& m);
QuadratureFluct quadrature_fluctuations(const ModelParams& p);   // via closed form

} // namespace uswqed
