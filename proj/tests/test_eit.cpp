#include <doctest.h>

#include <cmath>
#include <random>

#include "polariton/constants.hpp"
#include "polariton/eit.hpp"
#include "polariton/error.hpp"

using namespace polariton;

namespace {

constexpr cplx I(0.0, 1.0);

double gsq_over_v0_for(const LambdaMediumParams& p, double alpha0) {
    return alpha0 * p.k1s * p.Gamma31 / (constants::pi * p.density * p.Ly);
}

// Equal decay constants: u = e^{−2kz} turns the layer integral into a logarithm.
cplx alpha_equal_k(const LambdaMediumParams& p, double alpha0, double nu) {
    const double k = p.k1s;
    const cplx D = (nu + I * p.gamma21) * (nu + I * p.Gamma31);
    const double w2 = p.Omega * p.Omega;
    const double u1 = std::exp(-2.0 * k * p.z0);
    const cplx integral = (std::log(w2 - D) - std::log(w2 * u1 - D)) / (2.0 * k * w2);
    const double pref = 2.0 * constants::pi * gsq_over_v0_for(p, alpha0) * p.density * p.Ly;
    return pref * (p.gamma21 - I * nu) * integral;
}

}  // namespace

TEST_CASE("closed form equals the elementary result for k1s = k1c") {
    LambdaMediumParams p;
    const double alpha0 = 1e7;
    for (double om : {0.3, 1.0, 2.5}) {
        for (double z0k : {0.2, 1.0, 5.0, 30.0}) {
            for (double nu : {-3.0, -0.4, 0.0, 0.05, 1.7}) {
                p.Omega = om * p.Gamma31;
                p.z0 = z0k / p.k1s;
                const cplx closed = alpha_closed(p, alpha0, nu * p.Gamma31).alpha;
                const cplx ref = alpha_equal_k(p, alpha0, nu * p.Gamma31);
                INFO("Omega=", om, " k z0=", z0k, " nu=", nu);
                CHECK(std::abs(closed - ref) <= 1e-10 * std::abs(ref) + 1e-12 * alpha0);
            }
        }
    }
}

TEST_CASE("closed form equals adaptive quadrature on random draws") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double alpha0 = 1e7;
    int drawn = 0;
    double worst = 0.0;
    while (drawn < 200) {
        LambdaMediumParams p;
        p.Gamma31 = 1e9;
        p.Omega = p.Gamma31 * std::pow(10.0, -1.0 + 1.6 * u(rng));
        p.gamma21 = p.Gamma31 * std::pow(10.0, -6.0 + 4.0 * u(rng));
        p.k1s = 1e6 * std::pow(10.0, -0.5 + u(rng));
        p.k1c = p.k1s * std::pow(10.0, -0.5 + u(rng));
        p.z0 = std::pow(10.0, -1.0 + 2.5 * u(rng)) / p.k1s;
        const double nu = p.Gamma31 * (-5.0 + 10.0 * u(rng));
        const EitResponse r = alpha_closed(p, alpha0, nu);
        if (r.nudged) continue;
        ++drawn;
        const cplx q = alpha_quadrature(p, gsq_over_v0_for(p, alpha0), nu);
        const double err = std::abs(r.alpha - q) / std::abs(q);
        worst = std::max(worst, err);
        CHECK(err < 1e-6);
    }
    MESSAGE("worst relative error ", worst);
}

TEST_CASE("quadrature at zero control reproduces the resonant coefficient") {
    LambdaMediumParams p;
    p.Omega = 0.0;
    p.z0 = 25.0 / p.k1s;
    const double gsq = 1e15, v0 = 1.8e8;
    const double a0 = alpha_resonant(p, gsq, v0);
    CHECK(a0 == doctest::Approx(constants::pi * p.density * p.Ly * gsq / (p.k1s * v0 * p.Gamma31))
                    .epsilon(1e-15));
    const cplx q = alpha_quadrature(p, gsq / v0, 0.0);
    CHECK(std::abs(q - a0) < 1e-8 * a0);
    const EitResponse off = alpha_control_off(p, a0, 0.0);
    CHECK(std::abs(off.alpha - a0) < 1e-12 * a0);
}

TEST_CASE("control field opens a transparency window") {
    LambdaMediumParams p;
    p.z0 = 20.0 / p.k1s;
    const double alpha0 = 1e7;
    p.Omega = 0.0;
    const double absorbing = alpha_response(p, alpha0, 0.0).alpha.real();
    p.Omega = p.Gamma31;
    const double transparent = alpha_response(p, alpha0, 0.0).alpha.real();
    CHECK(absorbing == doctest::Approx(alpha0).epsilon(1e-12));
    CHECK(transparent < 0.01 * absorbing);
    CHECK(transparent > 0.0);
}

TEST_CASE("line-center absorption grows with ground-state decoherence") {
    LambdaMediumParams p;
    double prev = -1.0;
    for (double g : {1e2, 1e3, 1e4, 1e5, 1e6}) {
        p.gamma21 = g;
        const double a = alpha_response(p, 1e7, 0.0).alpha.real();
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("stronger control widens the window") {
    LambdaMediumParams p;
    double prev = INFINITY;
    for (double om : {0.5, 1.0, 2.0, 4.0}) {
        p.Omega = om * p.Gamma31;
        const double a = alpha_response(p, 1e7, 0.2 * p.Gamma31).alpha.real();
        CHECK(a < prev);
        prev = a;
    }
}

TEST_CASE("layer thickness limits") {
    LambdaMediumParams p;
    p.z0 = 1e-6 / p.k1s;
    CHECK(std::abs(alpha_response(p, 1e7, 0.3e9).alpha) < 1e-4 * 1e7);
    p.z0 = 30.0 / p.k1s;
    const cplx thick = alpha_response(p, 1e7, 0.3e9).alpha;
    p.z0 = 60.0 / p.k1s;
    CHECK(std::abs(alpha_response(p, 1e7, 0.3e9).alpha - thick) < 1e-12 * std::abs(thick));
}

TEST_CASE("absorption is linear in density") {
    LambdaMediumParams p;
    const double v0 = 1.8e8, gsq = 1e15;
    const cplx a1 = alpha_response(p, alpha_resonant(p, gsq, v0), 0.7e9).alpha;
    p.density *= 3.0;
    const cplx a3 = alpha_response(p, alpha_resonant(p, gsq, v0), 0.7e9).alpha;
    CHECK(std::abs(a3 - 3.0 * a1) < 1e-13 * std::abs(a3));
    p.density = 0.0;
    CHECK(alpha_response(p, alpha_resonant(p, gsq, v0), 0.7e9).alpha == cplx(0.0, 0.0));
    CHECK(alpha_quadrature(p, 1.0, 0.7e9) == cplx(0.0, 0.0));
}

TEST_CASE("two-photon resonance without decoherence is exactly transparent") {
    LambdaMediumParams p;
    p.gamma21 = 0.0;
    const EitResponse r = alpha_closed(p, 1e7, 0.0);
    CHECK(r.beta == cplx(0.0, 0.0));
    CHECK(r.alpha == cplx(0.0, 0.0));
}

TEST_CASE("parameter validation") {
    LambdaMediumParams p;
    CHECK_NOTHROW(validate(p));
    for (auto mutate : {+[](LambdaMediumParams& q) { q.density = -1; },
                        +[](LambdaMediumParams& q) { q.z0 = 0; },
                        +[](LambdaMediumParams& q) { q.gamma21 = -1; },
                        +[](LambdaMediumParams& q) { q.Gamma31 = 0; },
                        +[](LambdaMediumParams& q) { q.k1s = 0; },
                        +[](LambdaMediumParams& q) { q.k1c = NAN; },
                        +[](LambdaMediumParams& q) { q.Ly = 0; }}) {
        LambdaMediumParams q;
        mutate(q);
        CHECK_THROWS_AS(validate(q), DomainError);
    }
    p.Omega = 0.0;
    CHECK_THROWS_AS(alpha_closed(p, 1e7, 0.0), DomainError);
    p.gamma21 = 0.5 * p.Gamma31;
    CHECK(soft_warnings(p).size() == 1);
}
