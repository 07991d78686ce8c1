// model.cpp — coupling density, dielectric response, dressed-pole cubic, and
// the renormalized cavity numbers derived from it.
#include "uswqed/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace uswqed {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr cdouble kI{0.0, 1.0};

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Monic cubic k^3 + a2 k^2 + a1 k + a0 for the dressed poles.
struct Cubic {
    cdouble a2, a1, a0;
    cdouble eval(cdouble k) const { return ((k + a2) * k + a1) * k + a0; }
    cdouble deriv(cdouble k) const { return (3.0 * k + 2.0 * a2) * k + a1; }
};

Cubic pole_cubic(const ModelParams& p) {
    double wb2 = p.omega_b * p.omega_b;
    double c = coupling_constant(p);
    return {-kI * p.omega_x, cdouble(-wb2), kI * (p.omega_x * wb2 - 2.0 * kPi * c * p.omega_b)};
}

std::array<cdouble, 3> cardano(const Cubic& c) {
    const cdouble shift = c.a2 / 3.0;
    const cdouble p = c.a1 - c.a2 * c.a2 / 3.0;
    const cdouble q = 2.0 * c.a2 * c.a2 * c.a2 / 27.0 - c.a2 * c.a1 / 3.0 + c.a0;
    const cdouble disc = q * q / 4.0 + p * p * p / 27.0;
    const cdouble sq = std::sqrt(disc);
    cdouble u3 = -q / 2.0 + sq;
    if (std::abs(u3) < std::abs(-q / 2.0 - sq)) u3 = -q / 2.0 - sq;
    if (std::abs(u3) == 0.0) return {-shift, -shift, -shift};   // triple root
    const cdouble u = std::pow(u3, 1.0 / 3.0);
    const cdouble v = -p / (3.0 * u);
    const cdouble w{-0.5, 0.8660254037844386467637};            // primitive cube root of unity
    return {u + v - shift, u * w + v * std::conj(w) - shift, u * std::conj(w) + v * w - shift};
}

std::array<cdouble, 3> polished_roots(const ModelParams& p) {
    const Cubic c = pole_cubic(p);
    std::array<cdouble, 3> roots = cardano(c);
    for (auto& r : roots) {
        cdouble d = c.deriv(r);
        if (std::abs(d) > 0.0) r -= c.eval(r) / d;
    }
    return roots;
}

// Quadrant labels: lambda1 right of the imaginary axis, lambda2 left,
// lambda3 on it.  Returns nullopt when the pattern is not clean.
struct Classified {
    cdouble l1, l2, l3;
};

std::optional<Classified> try_classify(std::array<cdouble, 3> r, const ModelParams& p) {
    std::sort(r.begin(), r.end(), [](cdouble x, cdouble y) { return x.real() < y.real(); });
    const double axis_tol = 1e-12 * p.omega_x;
    const cdouble l2 = r[0], l3 = r[1], l1 = r[2];
    const bool imag_ok = p.kappa == 0.0 ? std::abs(l1.imag()) <= 1e-12 * p.omega_b
                                        : l1.imag() > 0.0;
    if (l1.real() > axis_tol && l2.real() < -axis_tol && std::abs(l3.real()) <= axis_tol &&
        l3.imag() > 0.0 && imag_ok)
        return Classified{l1, l2, l3};
    return std::nullopt;
}

std::array<cdouble, 3> pair_nearest(const std::array<cdouble, 3>& prev,
                                    std::array<cdouble, 3> fresh) {
    std::array<cdouble, 3> out{};
    std::array<bool, 3> used{false, false, false};
    for (int i = 0; i < 3; ++i) {
        int best = -1;
        double best_d = 0.0;
        for (int j = 0; j < 3; ++j) {
            if (used[j]) continue;
            double d = std::abs(fresh[j] - prev[i]);
            if (best < 0 || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        out[i] = fresh[best];
    }
    return out;
}

DressedPoles finalize(Classified c, const ModelParams& p) {
    c.l3 = cdouble(0.0, c.l3.imag());          // exactly on the axis
    c.l2 = -std::conj(c.l1);                   // exact mirror symmetry of the cubic
    const Cubic cub = pole_cubic(p);
    const double wb3 = p.omega_b * p.omega_b * p.omega_b;
    for (cdouble l : {c.l1, c.l2, c.l3}) {
        if (std::abs(cub.eval(l)) > 1e-10 * wb3)
            throw NumericsError("dressed-pole residual too large");
    }
    return {c.l1, c.l2, c.l3};
}

} // namespace

void validate(const ModelParams& p) {
    require(std::isfinite(p.omega_b) && p.omega_b > 0.0, "omega_b must be positive and finite");
    require(std::isfinite(p.omega_x) && p.omega_x > 0.0, "omega_x must be positive and finite");
    require(std::isfinite(p.kappa) && p.kappa >= 0.0, "kappa must be non-negative and finite");
    const CouplingBound bound = coupling_bound(p.omega_b, p.omega_x);
    if (p.kappa / p.omega_b >= bound.strict)
        throw OvercriticalCouplingError("kappa/omega_b = " + std::to_string(p.kappa / p.omega_b) +
                                        " at or beyond the critical value " +
                                        std::to_string(bound.strict));
}

CouplingBound coupling_bound(double omega_b, double omega_x) {
    require(std::isfinite(omega_b) && omega_b > 0.0, "omega_b must be positive and finite");
    require(std::isfinite(omega_x) && omega_x > 0.0, "omega_x must be positive and finite");
    require(omega_x * omega_x >= 3.0 * omega_b * omega_b,
            "coupling_bound needs omega_x^2 >= 3 omega_b^2");
    const double wb2 = omega_b * omega_b;
    const double naive = omega_b * omega_x / (wb2 + omega_x * omega_x);
    // Local maximum of f(y) = y^3 - omega_x y^2 + omega_b^2 y on the positive
    // axis; two poles merge there once the cubic's constant term drops to it.
    const double mu = (omega_x - std::sqrt(omega_x * omega_x - 3.0 * wb2)) / 3.0;
    const double f_mu = ((mu - omega_x) * mu + wb2) * mu;
    const double strict = (wb2 * omega_x - f_mu) / (omega_b * (wb2 + omega_x * omega_x));
    return {naive, strict};
}

double coupling_constant(const ModelParams& p) {
    return p.kappa * (p.omega_b * p.omega_b + p.omega_x * p.omega_x) / (2.0 * kPi * p.omega_b);
}

double coupling_squared(double k, const ModelParams& p) {
    return coupling_constant(p) * k / (k * k + p.omega_x * p.omega_x);
}

double coupling_xi(double k, const ModelParams& p) {
    require(std::isfinite(k) && k >= 0.0, "coupling_xi needs k >= 0 on the real axis");
    return std::sqrt(coupling_squared(k, p));
}

cdouble coupling_xi(cdouble k, const ModelParams& p) {
    // Principal branch; single valued for Re k > 0 where k/(k^2 + omega_x^2)
    // stays off the negative real axis.
    return std::sqrt(coupling_constant(p) * k / (k * k + p.omega_x * p.omega_x));
}

cdouble z_of_k(cdouble k, const ModelParams& p) {
    cdouble den = k - kI * p.omega_x;
    if (std::abs(den) < 1e-12 * p.omega_x)
        throw std::domain_error("z_of_k evaluated at its pole k = i omega_x");
    return 1.0 + 2.0 * kPi * kI * coupling_constant(p) / (p.omega_b * den);
}

cdouble z_star(cdouble k, const ModelParams& p) {
    cdouble den = k + kI * p.omega_x;
    if (std::abs(den) < 1e-12 * p.omega_x)
        throw std::domain_error("z_star evaluated at its pole k = -i omega_x");
    return 1.0 - 2.0 * kPi * kI * coupling_constant(p) / (p.omega_b * den);
}

cdouble dispersion(cdouble k, const ModelParams& p) {
    return k * k - p.omega_b * p.omega_b * z_of_k(k, p);
}

cdouble dispersion_star(cdouble k, const ModelParams& p) {
    return k * k - p.omega_b * p.omega_b * z_star(k, p);
}

DressedPoles solve_cubic(const ModelParams& p) {
    validate(p);
    if (auto direct = try_classify(polished_roots(p), p)) return finalize(*direct, p);

    // Near the critical coupling the quadrant test can degenerate; walk the
    // labels up in kappa from a configuration that classifies cleanly.
    ModelParams q = p;
    q.kappa = 0.5 * p.kappa;
    auto base = try_classify(polished_roots(q), q);
    if (!base) throw NumericsError("dressed-pole classification failed");
    std::array<cdouble, 3> cur{base->l1, base->l2, base->l3};
    const int steps = 64;
    for (int i = 1; i <= steps; ++i) {
        q.kappa = p.kappa * (0.5 + 0.5 * static_cast<double>(i) / steps);
        cur = pair_nearest(cur, polished_roots(q));
    }
    return finalize({cur[0], cur[1], cur[2]}, p);
}

Renormalization renormalize(const ModelParams& p) {
    const DressedPoles poles = solve_cubic(p);
    return {poles.lambda1.real(), 2.0 * poles.lambda1.imag()};
}

double renormalized_frequency_closed_form(const ModelParams& p) {
    require(std::isfinite(p.omega_b) && p.omega_b > 0.0, "omega_b must be positive and finite");
    require(std::isfinite(p.omega_x) && p.omega_x > 0.0, "omega_x must be positive and finite");
    require(std::isfinite(p.kappa) && p.kappa >= 0.0, "kappa must be non-negative and finite");
    const double wb2 = p.omega_b * p.omega_b;
    const double wx2 = p.omega_x * p.omega_x;
    const double sum = wb2 + wx2;
    const double radicand = sum * (sum - 4.0 * p.kappa * p.omega_x);
    if (radicand < 0.0)
        throw std::domain_error("renormalized frequency: negative radicand (overcritical)");
    const double w2 = 0.5 * (wb2 - wx2 + std::sqrt(radicand));
    if (!(w2 > 0.0))
        throw std::domain_error("renormalized frequency collapsed to zero (overcritical)");
    return std::sqrt(w2);
}

RegimeThresholds coupling_regime_thresholds(double omega_x) {
    const CouplingBound bound = coupling_bound(1.0, omega_x);
    auto ratio = [omega_x](double kappa) {
        Renormalization r = renormalize({1.0, omega_x, kappa});
        return r.kappa_tilde / r.omega_b_tilde;
    };
    auto crossing = [&](double target) {
        double lo = 1e-9;
        double hi = bound.strict * (1.0 - 1e-9);
        if (ratio(lo) >= target || ratio(hi) <= target)
            throw NumericsError("regime threshold not bracketed");
        while (hi - lo > 1e-10) {
            double mid = 0.5 * (lo + hi);
            (ratio(mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    return {crossing(0.1), crossing(1.0)};
}

} // namespace uswqed
