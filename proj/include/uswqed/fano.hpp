// fano.hpp — expansion coefficients of the dressed waveguide modes in terms of
// the bare cavity and waveguide operators.
#pragma once

#include "uswqed/model.hpp"
#include "uswqed/numerics.hpp"

namespace uswqed {

// All evaluators take wavenumbers on the physical half line k > 0.
class FanoCoefficients {
public:
    explicit FanoCoefficients(const ModelParams& p);

    const ModelParams& params() const { return params_; }

    cdouble beta1(double k) const;   // (k + omega_b) xi_k / dispersion(k)
    cdouble beta2(double k) const;   // (k - omega_b) xi_k / dispersion(k)

    // gamma1(k, q) = delta(k - q) + regular part; the regular part carries a
    // simple pole at q = k and is only defined pointwise away from it.
    cdouble gamma1_regular(double k, double q) const;
    cdouble gamma2(double k, double q) const;

    // gamma1 at fixed k as a distribution in q, ready for integration against
    // test functions with the pole prescription attached.
    DeltaPlusRegular gamma1_in_q(double k) const;

    cdouble self_energy(double k) const;   // omega_b (z(k) - 1) / 2
    cdouble y_of_k(double k) const;        // [(k^2 - omega_b^2)/(2 omega_b) - self_energy] / xi_k^2

private:
    ModelParams params_;
};

} // namespace uswqed
