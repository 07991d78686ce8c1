// test_dynamics.cpp — driven cavity amplitude: stationary ellipse, switch-on
// transient by quadrature and by residues, and the orbit geometry.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "uswqed/dynamics.hpp"
#include "uswqed/model.hpp"

using namespace uswqed;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt8Pi = 5.01325654926800484094;

double dist(cdouble a, cdouble b) { return std::abs(a - b); }

} // namespace

// ---------- stationary component ----------

TEST_CASE("zero drive produces a zero amplitude everywhere") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Drive d{0.0, 0.3, 0.9};
    for (double t : {0.0, 1.7, 12.0}) {
        CHECK(std::abs(stationary_amplitude(t, d, p)) == 0.0);
        CHECK(std::abs(transient_amplitude_residues(t, d, p)) == 0.0);
    }
    CHECK(std::abs(transient_amplitude(2.0, d, p)) <= 1e-14);
}

TEST_CASE("stationary components match their explicit projections") {
    // Re <b> = sqrt(8 pi) |E| omega_b xi Re[e^{i(k_d t - theta)} / D(k_d)],
    // Im <b> = -sqrt(8 pi) |E| k_d xi Im[e^{i(k_d t - theta)} / D(k_d)].
    const ModelParams p{1.0, 5.0, 0.15};
    const Drive d{0.61, 0.77, 0.476};
    const double xi = coupling_xi(d.k_d, p);
    const cdouble disp = dispersion(cdouble(d.k_d), p);
    for (double t : {0.0, 0.9, 4.2, 17.0}) {
        const cdouble w = std::exp(cdouble(0.0, d.k_d * t - d.theta_d)) / disp;
        const cdouble b = stationary_amplitude(t, d, p);
        CHECK(std::abs(b.real() - kSqrt8Pi * d.e_d_abs * p.omega_b * xi * w.real()) <=
              1e-11 * std::abs(b));
        CHECK(std::abs(b.imag() + kSqrt8Pi * d.e_d_abs * d.k_d * xi * w.imag()) <=
              1e-11 * std::abs(b));
    }
}

TEST_CASE("stationary orbit is periodic and phase shifts translate time") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Drive d{0.5, 0.2, 0.8};
    const double period = 2.0 * kPi / d.k_d;
    const cdouble ref = stationary_amplitude(0.37, d, p);
    CHECK(dist(stationary_amplitude(0.37 + period, d, p), ref) <= 1e-13 * std::abs(ref));
    // advancing theta_d by phi equals evaluating phi / k_d earlier
    const double phi = 1.234;
    const Drive shifted{d.e_d_abs, d.theta_d + phi, d.k_d};
    for (double t : {0.0, 2.2, 9.5}) {
        const cdouble a = stationary_amplitude(t, shifted, p);
        const cdouble b = stationary_amplitude(t - phi / d.k_d, d, p);
        CHECK(dist(a, b) <= 1e-13 * (std::abs(a) + 1e-30));
    }
}

TEST_CASE("driving at the bare frequency removes the counter-rotating motion") {
    // beta2(omega_b) = 0, so the orbit degenerates to a circle.
    const ModelParams p{1.0, 5.0, 0.15};
    const Drive d{0.61, 0.0, 1.0};
    const double r0 = std::abs(stationary_amplitude(0.0, d, p));
    for (double t : {0.3, 1.1, 2.9, 5.0})
        CHECK(std::abs(std::abs(stationary_amplitude(t, d, p)) - r0) <= 1e-12 * r0);
}

TEST_CASE("resonant weak drive reaches the input-output photon number") {
    // |E_d|^2 = 2.5 kappa at the dressed resonance gives <b† b> ~ 10, so the
    // orbit's long radius should sit within 5% of sqrt(10).
    const ModelParams p{1.0, 5.0, 0.01};
    const Renormalization r = renormalize(p);
    const Drive d{std::sqrt(2.5 * p.kappa), 0.0, r.omega_b_tilde};
    const EllipseGeometry e = ellipse(d, p);
    CHECK(std::abs(e.long_radius - std::sqrt(10.0)) <= 0.05 * std::sqrt(10.0));
}

// ---------- ellipse geometry ----------

TEST_CASE("ellipse radii obey the exact aspect ratio in the drive frequency") {
    for (double kap : {0.01, 0.1, 0.18}) {
        const ModelParams p{1.0, 5.0, kap};
        for (double kd : {0.3, 0.476, 1.0, 1.9}) {
            const Drive d{0.5, 0.0, kd};
            const EllipseGeometry e = ellipse(d, p);
            CHECK(std::abs(e.radius_y / e.radius_x - kd / p.omega_b) <= 1e-14 * kd);
            CHECK(e.long_radius == std::max(e.radius_x, e.radius_y));
            CHECK(e.short_radius == std::min(e.radius_x, e.radius_y));
        }
        const EllipseGeometry circle = ellipse({0.5, 0.0, 1.0}, p);
        CHECK(circle.radius_x == circle.radius_y);
    }
}

TEST_CASE("stationary samples land on the predicted ellipse") {
    const ModelParams p{1.0, 5.0, 0.15};
    const Drive d{0.61, 1.1, 0.476};
    const EllipseGeometry e = ellipse(d, p);
    for (int i = 0; i < 40; ++i) {
        const double t = i * 2.0 * kPi / d.k_d / 40.0;
        const cdouble b = stationary_amplitude(t, d, p);
        const double on = std::pow(b.real() / e.radius_x, 2) +
                          std::pow(b.imag() / e.radius_y, 2);
        CHECK(std::abs(on - 1.0) <= 1e-10);
    }
}

TEST_CASE("dressed-resonance drives trace the strongly squashed orbits") {
    // Aspect ratios short/long equal the drive frequency itself: near circular
    // at weak coupling, strongly elliptical at strong coupling.
    const double kd_weak = renormalized_frequency_closed_form({1.0, 5.0, 0.01});
    const EllipseGeometry weak = ellipse({0.158, 0.0, kd_weak}, {1.0, 5.0, 0.01});
    CHECK(std::abs(weak.short_radius / weak.long_radius - 0.975) <= 1e-3);
    const double kd_strong = renormalized_frequency_closed_form({1.0, 5.0, 0.15});
    const EllipseGeometry strong = ellipse({0.61, 0.0, kd_strong}, {1.0, 5.0, 0.15});
    CHECK(std::abs(strong.short_radius / strong.long_radius - 0.476) <= 1e-3);
}

// ---------- transient component ----------

TEST_CASE("quadrature and residue routes agree on the transient") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Drive d{0.5, 0.4, 0.6};
    for (double t : {0.0, 0.7, 3.0, 12.0}) {
        const cdouble quad = transient_amplitude(t, d, p);
        const cdouble res = transient_amplitude_residues(t, d, p);
        CHECK(dist(quad, res) <= 1e-6);
    }
}

TEST_CASE("total amplitude starts from an undisplaced cavity") {
    // The initial state carries no cavity displacement, so the stationary and
    // transient parts cancel at t = 0.  Checked on both evaluation routes.
    for (double kap : {0.01, 0.15}) {
        const ModelParams p{1.0, 5.0, kap};
        const Drive d{std::sqrt(2.5 * kap), 0.9, 0.7};
        const cdouble total_q = stationary_amplitude(0.0, d, p) +
                                transient_amplitude(0.0, d, p);
        CHECK(std::abs(total_q) <= 1e-6 * d.e_d_abs);
        const cdouble total_r = stationary_amplitude(0.0, d, p) +
                                transient_amplitude_residues(0.0, d, p);
        CHECK(std::abs(total_r) <= 1e-9 * d.e_d_abs);
    }
}

TEST_CASE("transient decays at half the dressed linewidth") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Renormalization r = renormalize(p);
    const Drive d{0.5, 0.0, 0.6};
    // period-spaced samples freeze the oscillation phase, leaving pure decay
    const double period = 2.0 * kPi / r.omega_b_tilde;
    std::vector<double> ts, logs;
    for (int n = 0; n < 5; ++n) {
        const double t = 10.0 + n * period;
        ts.push_back(t);
        logs.push_back(std::log(std::abs(transient_amplitude_residues(t, d, p))));
    }
    const double slope = (logs.front() - logs.back()) / (ts.back() - ts.front());
    CHECK(std::abs(slope - r.kappa_tilde / 2.0) <= 0.1 * r.kappa_tilde / 2.0);
    for (std::size_t i = 1; i < logs.size(); ++i) CHECK(logs[i] < logs[i - 1]);
}

TEST_CASE("transient is negligible after fifty dressed lifetimes") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Renormalization r = renormalize(p);
    const Drive d{0.5, 0.0, 0.6};
    const EllipseGeometry e = ellipse(d, p);
    const double late = 50.0 / r.kappa_tilde;
    CHECK(std::abs(transient_amplitude_residues(late, d, p)) <= 1e-4 * e.radius_x);
}

TEST_CASE("transient evaluation rejects negative times") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Drive d{0.5, 0.0, 0.6};
    CHECK_THROWS_AS(transient_amplitude(-0.1, d, p), std::invalid_argument);
    CHECK_THROWS_AS(transient_amplitude_residues(-0.1, d, p), std::invalid_argument);
}

// ---------- trajectories ----------

TEST_CASE("trajectory sampling matches pointwise evaluation in both modes") {
    const ModelParams p{1.0, 5.0, 0.1};
    const Drive d{0.5, 0.2, 0.8};
    const std::vector<double> times{0.0, 0.5, 2.0, 7.5};
    const Trajectory st = trajectory(times, d, p, TrajectoryMode::stationary);
    const Trajectory fu = trajectory(times, d, p, TrajectoryMode::full);
    REQUIRE(st.values.size() == times.size());
    REQUIRE(fu.values.size() == times.size());
    CHECK(st.mode == TrajectoryMode::stationary);
    CHECK(fu.mode == TrajectoryMode::full);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(dist(st.values[i], stationary_amplitude(times[i], d, p)) == 0.0);
        const cdouble full = stationary_amplitude(times[i], d, p) +
                             transient_amplitude(times[i], d, p);
        CHECK(dist(fu.values[i], full) <= 1e-12);
    }
}

TEST_CASE("stationary trajectory over one period closes on itself") {
    const ModelParams p{1.0, 5.0, 0.15};
    const Drive d{0.61, 0.3, 0.476};
    std::vector<double> times;
    for (int i = 0; i < 64; ++i) times.push_back(i * (2.0 * kPi / d.k_d) / 63.0);
    const Trajectory tr = trajectory(times, d, p, TrajectoryMode::stationary);
    CHECK(dist(tr.values.front(), tr.values.back()) <= 1e-13 * std::abs(tr.values.front()));
}
