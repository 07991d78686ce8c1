// field.cpp — stationary waveguide spectrum, its real-space transform, and the
// reflection data of the semi-infinite line.
#include "uswqed/field.hpp"

#include <cmath>

namespace uswqed {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr cdouble kI{0.0, 1.0};

cdouble zstar_deriv(cdouble k, const ModelParams& p) {
    const cdouble den = k + kI * p.omega_x;
    return 2.0 * kPi * kI * coupling_constant(p) / (p.omega_b * den * den);
}

} // namespace

CkStationary::CkStationary(double t, const Drive& d, const ModelParams& p)
    : t_(t), drive_(d), params_(p) {
    validate(d, p);
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    dstar_kd_ = dispersion_star(cdouble(d.k_d), p);
    d_kd_ = dispersion(cdouble(d.k_d), p);
    xi_kd_ = coupling_xi(d.k_d, p);
}

cdouble CkStationary::delta_weight() const {
    return kSqrt2Pi * drive_.amplitude() * std::exp(cdouble(0.0, -drive_.k_d * t_));
}

double CkStationary::delta_location() const {
    return drive_.k_d;
}

// Driven pole component: prefactor * [F(k) - F(k_d)] / (k - k_d) with
// F(k) = e^{-i k t} / dispersion_star(k).  The difference quotient is the
// principal-value limit; close to k_d it crosses over to F'(k_d).
cdouble CkStationary::component2(double k) const {
    const double kd = drive_.k_d;
    const cdouble pref = std::sqrt(8.0 * kPi) * params_.omega_b * coupling_xi(k, params_) *
                         xi_kd_ * drive_.amplitude();
    const cdouble f_kd = std::exp(cdouble(0.0, -kd * t_)) / dstar_kd_;
    if (std::abs(k - kd) > 1e-5 * (1.0 + kd)) {
        const cdouble f_k = std::exp(cdouble(0.0, -k * t_)) / dispersion_star(cdouble(k), params_);
        return pref * (f_k - f_kd) / (k - kd);
    }
    const cdouble dstar_prime = 2.0 * kd - params_.omega_b * params_.omega_b *
                                              zstar_deriv(cdouble(kd), params_);
    return pref * (-kI * t_ * f_kd - f_kd * dstar_prime / dstar_kd_);
}

cdouble CkStationary::component3(double k) const {
    const double kd = drive_.k_d;
    const cdouble pref = std::sqrt(8.0 * kPi) * params_.omega_b * coupling_xi(k, params_) *
                         xi_kd_ * std::conj(drive_.amplitude());
    const cdouble f_k = std::exp(cdouble(0.0, -k * t_)) / dispersion_star(cdouble(k), params_);
    const cdouble g_kd = std::exp(cdouble(0.0, kd * t_)) / d_kd_;
    return pref * (f_k - g_kd) / (k + kd);
}

cdouble CkStationary::regular_total(double k) const {
    return component2(k) + component3(k);
}

// Four oscillatory terms: the time-carrying halves of components 2 and 3 and
// their constant counterparts, each with its own phase so the transform can
// rotate every tail in the right direction.
DeltaPlusRegular CkStationary::spectrum() const {
    const ModelParams p = params_;
    const double kd = drive_.k_d;
    const cdouble ed = drive_.amplitude();
    const cdouble base = std::sqrt(8.0 * kPi) * p.omega_b * xi_kd_;
    const cdouble f_kd = std::exp(cdouble(0.0, -kd * t_)) / dstar_kd_;
    const cdouble g_kd = std::exp(cdouble(0.0, kd * t_)) / d_kd_;

    DeltaPlusRegular spec;
    spec.delta_weight = delta_weight();
    spec.delta_location = kd;

    const PoleSpec pole{kd, PolePrescription::minus_i0};
    // component 2, moving half: base ed xi(k) e^{-ikt} / (D*(k) (k - kd - i0))
    spec.terms.push_back({[base, ed, p](cdouble k) {
                              return base * ed * coupling_xi(k, p) / dispersion_star(k, p);
                          },
                          -t_, pole});
    // component 2, standing half: -base ed xi(k) F(kd) / (k - kd - i0)
    spec.terms.push_back({[base, ed, f_kd, p](cdouble k) {
                              return -base * ed * f_kd * coupling_xi(k, p);
                          },
                          0.0, pole});
    // component 3, moving half: base conj(ed) xi(k) e^{-ikt} / (D*(k) (k + kd))
    spec.terms.push_back({[base, ed, kd, p](cdouble k) {
                              return base * std::conj(ed) * coupling_xi(k, p) /
                                     (dispersion_star(k, p) * (k + kd));
                          },
                          -t_, std::nullopt});
    // component 3, standing half: -base conj(ed) xi(k) G(kd) / (k + kd)
    spec.terms.push_back({[base, ed, g_kd, kd, p](cdouble k) {
                              return -base * std::conj(ed) * g_kd * coupling_xi(k, p) / (k + kd);
                          },
                          0.0, std::nullopt});
    return spec;
}

cdouble realspace_field(double r, double t, const Drive& d, const ModelParams& p,
                        FieldMethod method, const QuadratureOptions& opts) {
    validate(d, p);
    if (!std::isfinite(r) || !std::isfinite(t))
        throw std::invalid_argument("field point must be finite");
    const cdouble incident = d.amplitude() * std::exp(cdouble(0.0, d.k_d * (r - t)));
    if (method == FieldMethod::approximate) {
        const cdouble refl = reflection(d.k_d, p);
        const double step = (r >= 0.0 && t - r >= 0.0) ? 1.0 : 0.0;
        return 1.0 + (refl - 1.0) * step;
    }
    const CkStationary ck(t, d, p);
    const IntegrationResult raw = halfline_fourier(ck.spectrum(), r, opts);
    return raw.value / incident;
}

FieldProfile field_profile(const std::vector<double>& positions, double t,
                           const Drive& d, const ModelParams& p, FieldMethod method,
                           const QuadratureOptions& opts) {
    FieldProfile out;
    out.positions = positions;
    out.t = t;
    out.method = method;
    out.normalized.reserve(positions.size());
    for (double r : positions)
        out.normalized.push_back(realspace_field(r, t, d, p, method, opts));
    return out;
}

cdouble reflection(double k_d, const ModelParams& p) {
    validate(p);
    if (!std::isfinite(k_d) || !(k_d > 0.0))
        throw std::invalid_argument("reflection needs k_d > 0");
    // R = 1 - 4 pi i omega_b xi^2 / dispersion_star = dispersion / dispersion_star.
    return dispersion(cdouble(k_d), p) / dispersion_star(cdouble(k_d), p);
}

double reflection_phase(double k_d, const ModelParams& p) {
    validate(p);
    if (!(p.kappa > 0.0))
        throw std::invalid_argument("reflection_phase needs kappa > 0");
    if (!std::isfinite(k_d) || !(k_d > 0.0))
        throw std::invalid_argument("reflection_phase needs k_d > 0");
    return -2.0 * std::arg(dispersion_star(cdouble(k_d), p));
}

std::vector<double> phase_spectrum(const std::vector<double>& k_grid, const ModelParams& p) {
    validate(p);
    if (k_grid.size() < 2) throw std::invalid_argument("phase grid needs at least two points");
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (!std::isfinite(k_grid[i]) || !(k_grid[i] > 0.0))
            throw std::invalid_argument("phase grid must be positive");
        if (i > 0 && !(k_grid[i] > k_grid[i - 1]))
            throw std::invalid_argument("phase grid must be strictly ascending");
    }
    if (p.kappa > 0.0) {
        // The unwrap is only trustworthy when the grid resolves the resonance.
        const Renormalization rn = renormalize(p);
        const double lo = rn.omega_b_tilde - 5.0 * rn.kappa_tilde;
        const double hi = rn.omega_b_tilde + 5.0 * rn.kappa_tilde;
        for (std::size_t i = 1; i < k_grid.size(); ++i) {
            const bool overlaps = k_grid[i] > lo && k_grid[i - 1] < hi;
            if (overlaps && k_grid[i] - k_grid[i - 1] > rn.kappa_tilde / 10.0)
                throw std::invalid_argument("phase grid must resolve kappa_tilde/10 "
                                            "around the renormalized resonance");
        }
    }
    std::vector<double> out(k_grid.size());
    double prev = std::arg(reflection(k_grid[0], p));
    out[0] = prev > 0.0 ? prev - 2.0 * kPi : prev;
    for (std::size_t i = 1; i < k_grid.size(); ++i) {
        double cur = std::arg(reflection(k_grid[i], p));
        double step = cur - prev;
        step -= 2.0 * kPi * std::round(step / (2.0 * kPi));
        out[i] = out[i - 1] + step;
        prev = cur;
    }
    return out;
}

double phase_asymmetry_metric(const ModelParams& p) {
    validate(p);
    if (!(p.kappa > 0.0)) throw std::invalid_argument("asymmetry metric needs kappa > 0");
    const Renormalization rn = renormalize(p);
    const double w = rn.omega_b_tilde;
    const double dmax = std::min(3.0 * rn.kappa_tilde, 0.9 * w);
    const double center = reflection_phase(w, p);
    double worst = 0.0;
    const int n = 400;
    for (int i = 1; i <= n; ++i) {
        const double delta = dmax * static_cast<double>(i) / n;
        const double m = std::abs(reflection_phase(w + delta, p) +
                                  reflection_phase(w - delta, p) - 2.0 * center);
        worst = std::max(worst, m);
    }
    return worst;
}

ScatteringPoint open_waveguide(double k_d, const ModelParams& p) {
    const cdouble r = reflection(k_d, p);
    return {k_d, r, (r - 1.0) / 2.0, (r + 1.0) / 2.0};
}

} // namespace uswqed
