// test_numerics.cpp — quadrature engine against closed forms and exact
// identities of the pole prescriptions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "uswqed/numerics.hpp"

using namespace uswqed;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr cdouble kI{0.0, 1.0};

double dist(cdouble a, cdouble b) {
    return std::abs(a - b);
}

} // namespace

// ---------- prescribed poles on finite intervals ----------

TEST_CASE("constant numerator over a symmetric interval leaves only the prescription term") {
    auto one = [](cdouble) -> cdouble { return 1.0; };
    auto minus = pv_pole_integral(one, -1.0, 1.0, {0.0, PolePrescription::minus_i0});
    CHECK(dist(minus.value, kI * kPi) <= 1e-12);
    auto plus = pv_pole_integral(one, -1.0, 1.0, {0.0, PolePrescription::plus_i0});
    CHECK(dist(plus.value, -kI * kPi) <= 1e-12);
}

TEST_CASE("identity numerator integrates to the interval length plus i pi") {
    auto ident = [](cdouble x) -> cdouble { return x; };
    auto r = pv_pole_integral(ident, 0.0, 2.0, {1.0, PolePrescription::minus_i0});
    CHECK(dist(r.value, cdouble(2.0, kPi)) <= 1e-12);
}

TEST_CASE("swapping the prescription shifts the value by 2 i pi times the numerator") {
    auto f = [](cdouble x) -> cdouble { return std::exp(-x * x) * (1.0 + 0.5 * kI * x); };
    const PoleSpec below{0.4, PolePrescription::minus_i0};
    const PoleSpec above{0.4, PolePrescription::plus_i0};
    auto vb = pv_pole_integral(f, -1.5, 2.5, below).value;
    auto va = pv_pole_integral(f, -1.5, 2.5, above).value;
    CHECK(dist(vb - va, 2.0 * kI * kPi * f(0.4)) <= 1e-13);
}

TEST_CASE("pole integral is linear in the numerator") {
    std::mt19937 rng(20260816);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto poly = [&]() {
        cdouble c0{u(rng), u(rng)}, c1{u(rng), u(rng)}, c2{u(rng), u(rng)};
        return [c0, c1, c2](cdouble x) { return (c2 * x + c1) * x + c0; };
    };
    auto f1 = poly();
    auto f2 = poly();
    const cdouble alpha{u(rng), u(rng)}, beta{u(rng), u(rng)};
    auto combo = [&](cdouble x) { return alpha * f1(x) + beta * f2(x); };
    const PoleSpec pole{0.3, PolePrescription::minus_i0};
    auto lhs = pv_pole_integral(combo, -1.0, 2.0, pole).value;
    auto rhs = alpha * pv_pole_integral(f1, -1.0, 2.0, pole).value +
               beta * pv_pole_integral(f2, -1.0, 2.0, pole).value;
    CHECK(dist(lhs, rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
}

TEST_CASE("pole outside the interval degrades to a plain integral") {
    auto one = [](cdouble) -> cdouble { return 1.0; };
    auto r = pv_pole_integral(one, 0.0, 1.0, {2.0, PolePrescription::minus_i0});
    CHECK(dist(r.value, cdouble(-std::log(2.0), 0.0)) <= 1e-12);
}

TEST_CASE("numerator singular at the pole is rejected") {
    auto bad = [](cdouble x) -> cdouble { return 1.0 / (x - 0.5); };
    CHECK_THROWS_AS(pv_pole_integral(bad, 0.0, 1.0, {0.5, PolePrescription::minus_i0}),
                    std::invalid_argument);
}

TEST_CASE("pole at an endpoint is rejected") {
    auto one = [](cdouble) -> cdouble { return 1.0; };
    CHECK_THROWS_AS(pv_pole_integral(one, 0.0, 1.0, {0.0, PolePrescription::minus_i0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pv_pole_integral(one, 0.0, 1.0, {1.0, PolePrescription::plus_i0}),
                    std::invalid_argument);
}

// ---------- oscillatory integrals ----------

TEST_CASE("whole-line Lorentzian transform reproduces pi e^{-t}") {
    auto g = [](cdouble q) -> cdouble { return 1.0 / (q * q + 1.0); };
    for (double t : {0.0, 1.0, 2.5}) {
        for (int sign : {1, -1}) {
            auto r = oscillatory_integral(g, t, sign, Interval::whole_line());
            CHECK(dist(r.value, cdouble(kPi * std::exp(-t), 0.0)) <= 1e-8);
        }
    }
}

TEST_CASE("finite-interval Lorentzian matches the arctangent") {
    auto g = [](cdouble q) -> cdouble { return 1.0 / (q * q + 1.0); };
    auto r = oscillatory_integral(g, 0.0, 1, Interval::finite(-200.0, 200.0));
    CHECK(dist(r.value, cdouble(2.0 * std::atan(200.0), 0.0)) <= 1e-8);
}

TEST_CASE("fast oscillation over a finite interval keeps full accuracy") {
    auto one = [](cdouble) -> cdouble { return 1.0; };
    const double t = 500.0;
    auto r = oscillatory_integral(one, t, 1, Interval::finite(0.0, 1.0));
    const cdouble exact = (std::exp(kI * t) - 1.0) / (kI * t);
    CHECK(dist(r.value, exact) <= 1e-10);
}

TEST_CASE("whole-line pole integral agrees with the residue closed form") {
    auto f = [](cdouble q) -> cdouble { return 1.0 / (q * q + 1.0); };
    const double t = 1.3, x0 = 0.6;
    // e^{iqt} closes upward: the i pole always contributes, the driven pole
    // only under the minus_i0 prescription (it then sits above the axis).
    const cdouble at_i = 2.0 * kPi * kI * std::exp(-t) / (2.0 * kI * (kI - x0));
    const cdouble at_x0 = 2.0 * kPi * kI * std::exp(kI * x0 * t) / (x0 * x0 + 1.0);
    auto minus = oscillatory_integral(f, t, 1, Interval::whole_line(),
                                      default_quadrature_options(),
                                      PoleSpec{x0, PolePrescription::minus_i0});
    CHECK(dist(minus.value, at_i + at_x0) <= 1e-8);
    auto plus = oscillatory_integral(f, t, 1, Interval::whole_line(),
                                     default_quadrature_options(),
                                     PoleSpec{x0, PolePrescription::plus_i0});
    CHECK(dist(plus.value, at_i) <= 1e-8);
}

TEST_CASE("conjugate reflection of the integrand mirrors the result") {
    auto g = [](cdouble q) -> cdouble {
        return (q + cdouble(1.0, 0.5)) / ((q * q + 4.0) * (q - 3.0 * kI));
    };
    auto gbar = [g](cdouble q) -> cdouble { return std::conj(g(std::conj(q))); };
    const double t = 1.7;
    auto a = oscillatory_integral(g, t, 1, Interval::whole_line());
    auto b = oscillatory_integral(gbar, t, -1, Interval::whole_line());
    CHECK(dist(a.value, std::conj(b.value)) <= 1e-13 * (1.0 + std::abs(a.value)));
}

TEST_CASE("halving the tolerance moves the value by less than the error budget") {
    auto g = [](cdouble q) -> cdouble { return 1.0 / (q * q + 0.01); };
    QuadratureOptions loose;
    loose.rel_tol = 1e-6;
    QuadratureOptions tight = loose;
    tight.rel_tol = 5e-7;
    auto a = oscillatory_integral(g, 3.7, 1, Interval::finite(-3.0, 3.0), loose);
    auto b = oscillatory_integral(g, 3.7, 1, Interval::finite(-3.0, 3.0), tight);
    CHECK(dist(a.value, b.value) <= a.error + b.error + 1e-12);
}

TEST_CASE("unreachable tolerance raises the numerics error") {
    auto rough = [](cdouble x) -> cdouble {
        return std::pow(std::abs(x.real() - 0.4711), -0.9);
    };
    QuadratureOptions strangled;
    strangled.rel_tol = 1e-14;
    strangled.max_depth = 2;
    CHECK_THROWS_AS(oscillatory_integral(rough, 0.0, 1, Interval::finite(0.0, 1.0), strangled),
                    NumericsError);
}

TEST_CASE("environment variable overrides the default tolerance") {
    setenv("USWQED_TOL", "1e-5", 1);
    CHECK(default_quadrature_options().rel_tol == doctest::Approx(1e-5));
    setenv("USWQED_TOL", "not-a-number", 1);
    CHECK(default_quadrature_options().rel_tol == doctest::Approx(1e-8));
    setenv("USWQED_TOL", "-3", 1);
    CHECK(default_quadrature_options().rel_tol == doctest::Approx(1e-8));
    unsetenv("USWQED_TOL");
    CHECK(default_quadrature_options().rel_tol == doctest::Approx(1e-8));
}

// ---------- half-line Fourier transforms ----------

TEST_CASE("delta-only spectrum transforms to a plane wave") {
    DeltaPlusRegular s;
    s.delta_weight = cdouble(1.2, -0.4);
    s.delta_location = 0.7;
    const double r = 3.1;
    auto got = halfline_fourier(s, r);
    const cdouble expect = s.delta_weight * std::exp(kI * 0.7 * r) / std::sqrt(2.0 * kPi);
    CHECK(dist(got.value, expect) <= 1e-14);
}

TEST_CASE("empty spectrum transforms to zero") {
    DeltaPlusRegular s;
    auto got = halfline_fourier(s, 12.0);
    CHECK(std::abs(got.value) <= 1e-15);
}

TEST_CASE("half-line Lorentzian transform matches an independent contour evaluation") {
    const double k0 = 2.0, gamma = 0.3, r = 1.7;
    auto lor = [k0, gamma](cdouble k) -> cdouble {
        return gamma / ((k - k0) * (k - k0) + gamma * gamma);
    };
    DeltaPlusRegular s;
    s.terms.push_back({lor, 0.0, std::nullopt});
    auto got = halfline_fourier(s, r);

    // Close the first quadrant: the enclosed pole at k0 + i gamma plus the
    // imaginary-axis leg, the latter non-oscillatory and done by exp-sinh.
    const cdouble residue_term = kPi * std::exp(kI * k0 * r - gamma * r);
    boost::math::quadrature::exp_sinh<double> es;
    auto leg = [&](double v) -> cdouble { return lor(kI * v) * std::exp(-v * r); };
    const cdouble axis_term = kI * es.integrate(leg, 1e-12);
    const cdouble expect = (residue_term + axis_term) / std::sqrt(2.0 * kPi);
    CHECK(dist(got.value, expect) <= 1e-8);
}

TEST_CASE("pole with vanishing numerator equals the reduced pole-free term") {
    const double x0 = 0.8, r = 2.3, phase = 0.35;
    auto f = [](cdouble k) -> cdouble { return std::exp(-0.1 * k) / (k * k + 1.0); };
    DeltaPlusRegular with_pole;
    with_pole.terms.push_back({[f, x0](cdouble k) { return (k - x0) * f(k); },
                               phase,
                               PoleSpec{x0, PolePrescription::minus_i0}});
    DeltaPlusRegular plain;
    plain.terms.push_back({f, phase, std::nullopt});
    auto a = halfline_fourier(with_pole, r);
    auto b = halfline_fourier(plain, r);
    CHECK(dist(a.value, b.value) <= 1e-9);
}

TEST_CASE("pointwise regular sum applies phases and pole divisors") {
    DeltaPlusRegular s;
    s.terms.push_back({[](cdouble k) { return k * k; }, 0.5,
                       PoleSpec{1.0, PolePrescription::minus_i0}});
    const double k = 3.0;
    const cdouble expect = 9.0 * std::exp(kI * 0.5 * 3.0) / 2.0;
    CHECK(dist(s.regular(k), expect) <= 1e-14);
}
