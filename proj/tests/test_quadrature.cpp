#include <doctest.h>

#include <cmath>

#include "polariton/constants.hpp"
#include "polariton/quadrature.hpp"

using namespace polariton;
using cplx = std::complex<double>;

TEST_CASE("polynomials are integrated exactly") {
    const auto r = quadrature::integrate([](double x) { return cplx(x * x * x, 1.0); }, 0.0, 2.0);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(r.value.imag() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("oscillatory and peaked integrands") {
    const auto osc = quadrature::integrate(
        [](double x) { return std::exp(cplx(0.0, 50.0 * x)); }, 0.0, 1.0);
    const cplx exact = (std::exp(cplx(0.0, 50.0)) - 1.0) / cplx(0.0, 50.0);
    CHECK(std::abs(osc.value - exact) < 1e-12);

    const double w = 1e-4;
    const auto lorentz = quadrature::integrate(
        [w](double x) { return cplx(w / (x * x + w * w), 0.0); }, -1.0, 1.0);
    CHECK(lorentz.converged);
    CHECK(lorentz.value.real() == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-12));
}

TEST_CASE("endpoint singularity converges") {
    const auto r = quadrature::integrate([](double x) { return cplx(1.0 / std::sqrt(x), 0.0); },
                                         0.0, 1.0, {1e-10, 1e-10, 50000});
    CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("empty interval and reversed bounds") {
    const auto z = quadrature::integrate([](double) { return cplx(1.0, 0.0); }, 1.0, 1.0);
    CHECK(z.converged);
    CHECK(z.value == cplx(0.0, 0.0));
    const auto rev = quadrature::integrate([](double x) { return cplx(x, 0.0); }, 1.0, 0.0);
    CHECK(rev.value.real() == doctest::Approx(-0.5));
}

TEST_CASE("interval budget is reported") {
    quadrature::Options tight{0.0, 1e-15, 8};
    const auto r = quadrature::integrate(
        [](double x) { return cplx(std::sin(1.0 / (x + 1e-3)), 0.0); }, 0.0, 1.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals <= 8);
}
