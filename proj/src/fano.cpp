// fano.cpp — dressed-mode expansion coefficients.
#include "uswqed/fano.hpp"

#include <cmath>

namespace uswqed {

FanoCoefficients::FanoCoefficients(const ModelParams& p) : params_(p) {
    validate(p);
}

cdouble FanoCoefficients::beta1(double k) const {
    return (k + params_.omega_b) * coupling_xi(k, params_) / dispersion(cdouble(k), params_);
}

cdouble FanoCoefficients::beta2(double k) const {
    return (k - params_.omega_b) * coupling_xi(k, params_) / dispersion(cdouble(k), params_);
}

cdouble FanoCoefficients::gamma1_regular(double k, double q) const {
    if (std::abs(k - q) <= 1e-12 * (std::abs(k) + std::abs(q) + params_.omega_b))
        throw std::invalid_argument(
            "gamma1_regular at coincident wavenumbers: use the delta plus pole form");
    return 2.0 * params_.omega_b * coupling_xi(k, params_) * coupling_xi(q, params_) /
           ((k - q) * dispersion(cdouble(k), params_));
}

cdouble FanoCoefficients::gamma2(double k, double q) const {
    return 2.0 * params_.omega_b * coupling_xi(k, params_) * coupling_xi(q, params_) /
           ((k + q) * dispersion(cdouble(k), params_));
}

DeltaPlusRegular FanoCoefficients::gamma1_in_q(double k) const {
    // 1/(k - q - i0) = -1/(q - k + i0): as a q-pole the amplitude flips sign
    // and the prescription becomes plus_i0.
    const ModelParams p = params_;
    const cdouble pref = -2.0 * p.omega_b * coupling_xi(k, p) / dispersion(cdouble(k), p);
    DeltaPlusRegular spec;
    spec.delta_weight = 1.0;
    spec.delta_location = k;
    spec.terms.push_back({[pref, p](cdouble q) { return pref * coupling_xi(q, p); },
                          0.0,
                          PoleSpec{k, PolePrescription::plus_i0}});
    return spec;
}

cdouble FanoCoefficients::self_energy(double k) const {
    return params_.omega_b * (z_of_k(cdouble(k), params_) - 1.0) / 2.0;
}

cdouble FanoCoefficients::y_of_k(double k) const {
    const double wb = params_.omega_b;
    return ((k * k - wb * wb) / (2.0 * wb) - self_energy(k)) / coupling_squared(k, params_);
}

} // namespace uswqed
