#include <doctest.h>

#include <cmath>
#include <random>

#include "polariton/error.hpp"
#include "polariton/hypergeometric.hpp"
#include "oracles.hpp"

using namespace polariton;
using cplx = std::complex<double>;

namespace {

cplx hyp_oracle(double b, cplx z) { return oracles::hyp2f1(b, z); }

}  // namespace

TEST_CASE("value at the origin and both sides of the series radius") {
    CHECK(hyp2f1_special(2.5, 0.0) == cplx(1.0, 0.0));
    for (double arg : {0.3, 1.7, 3.0}) {
        for (double scale : {1 - 1e-9, 1 + 1e-9}) {
            const cplx z = std::polar(hyp2f1_series_radius * scale, arg);
            const cplx ref = hyp_oracle(1.7, z);
            CHECK(std::abs(hyp2f1_special(1.7, z) - ref) < 1e-12 * std::abs(ref));
        }
    }
}

TEST_CASE("points just off the cut") {
    for (double b : {0.5, 1.7, 2.3}) {
        for (double x : {1.5, 2.5, 10.0}) {
            for (double y : {1e-9, -1e-6, 1e-3}) {
                const cplx z(x, y);
                const cplx ref = hyp_oracle(b, z);
                INFO("b=", b, " z=", x, "+", y, "i");
                CHECK(std::abs(hyp2f1_special(b, z) - ref) < 1e-10 * std::abs(ref));
            }
        }
    }
    const cplx z(2.5, 1e-9);
    CHECK(std::abs(hyp2f1_special(1.0, z) + std::log(1.0 - z) / z) < 1e-12);
}

TEST_CASE("b = 1 reduces to -log(1 - z)/z") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const cplx z(u(rng), u(rng));
        if (z.real() > 0.9 && std::abs(z.imag()) < 1e-3) continue;
        const cplx exact = -std::log(1.0 - z) / z;
        CHECK(std::abs(hyp2f1_special(1.0, z) - exact) < 1e-12 * std::abs(exact));
    }
}

TEST_CASE("matches a 50-digit oracle on random arguments") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ub(0.05, 4.0);
    std::uniform_real_distribution<double> ur(0.0, 4.0);
    std::uniform_real_distribution<double> ua(-M_PI, M_PI);
    int drawn = 0;
    double worst = 0.0;
    while (drawn < 500) {
        const double b = ub(rng);
        if (std::abs(b - std::round(b)) < 0.02) continue;  // connection formula is singular there
        const double r = ur(rng);
        if (std::abs(r - 1.0) < 0.015) continue;
        const cplx z = std::polar(r, ua(rng));
        if (z.real() > 1.0 && std::abs(z.imag()) < 1e-6) continue;
        ++drawn;
        const cplx ref = hyp_oracle(b, z);
        const double err = std::abs(hyp2f1_special(b, z) - ref) / std::abs(ref);
        worst = std::max(worst, err);
        INFO("b=", b, " z=", z.real(), "+", z.imag(), "i");
        CHECK(err < 1e-10);
    }
    MESSAGE("worst relative error ", worst);
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(hyp2f1_special(1.0, 1.0), BranchCutError);
    CHECK_THROWS_AS(hyp2f1_special(1.0, 2.5), BranchCutError);
    CHECK_THROWS_AS(hyp2f1_special(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(hyp2f1_special(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(hyp2f1_special(1.0, cplx(NAN, 0.0)), DomainError);
    CHECK_NOTHROW(hyp2f1_special(1.0, -50.0));
}
