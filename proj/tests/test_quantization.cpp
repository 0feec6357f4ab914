#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "polariton/constants.hpp"
#include "polariton/error.hpp"
#include "polariton/quantization.hpp"

using namespace polariton;

namespace {

constexpr double we = silver_plasma_frequency;

// 2∫₀^∞ of the dispersive field energy density, one half-space at a time.
// Electric: (1 + k²/k_j²) e^{−2k_j z}; magnetic: (ε_j q/k_j)² e^{−2k_j z}.
cplx energy_integral(cplx weight, cplx amplitude2, cplx kj) {
    boost::math::quadrature::exp_sinh<double> integrator;
    auto re = [&](double z) { return (weight * amplitude2 * std::exp(-2.0 * kj * z)).real(); };
    auto im = [&](double z) { return (weight * amplitude2 * std::exp(-2.0 * kj * z)).imag(); };
    return 2.0 * cplx(integrator.integrate(re), integrator.integrate(im));
}

cplx lz_oracle(const HalfSpaceMaterial& a, const HalfSpaceMaterial& b, const DispersionPoint& p) {
    const double w = p.omega;
    const double q = w / constants::speed_of_light;
    const cplx k2 = p.k_par * p.k_par;
    cplx total = 0.0;
    const HalfSpaceMaterial* media[] = {&a, &b};
    const cplx kj[] = {p.k1, p.k2};
    for (int j = 0; j < 2; ++j) {
        const MaterialResponse r = eval_material(*media[j], w);
        const MaterialSlope s = d_omega_material(*media[j], w);
        total += energy_integral(s.d_omega_epsilon, 1.0 + k2 / (kj[j] * kj[j]), kj[j]);
        total += energy_integral(s.d_omega_mu, r.epsilon * r.epsilon * q * q / (kj[j] * kj[j]), kj[j]);
    }
    return total;
}

}  // namespace

TEST_CASE("quantization length equals the integrated field energy") {
    const auto d = presets::dielectric(1.3);
    HalfSpaceMaterial lossless = presets::nimm_default(0.0);
    std::get<DrudeParams>(lossless.epsilon).loss_rate = 0.0;
    int checked = 0;
    for (const auto& m : {lossless, presets::silver(), presets::nimm_default(1e13)}) {
        for (double f : {0.42, 0.46}) {
            const DispersionPoint p = sp_wavevector(d, m, f * we, Polarization::TM);
            // The real-axis oracle needs a decaying, not oscillating, profile.
            if (!p.bound || p.k1.real() < 0.2 * std::abs(p.k1)) continue;
            ++checked;
            const ModeNormalization mn =
                mode_normalization(d, m, p, 2.5e-6, NormalizationOptions{false});
            const cplx ref = lz_oracle(d, m, p);
            INFO(m.label, " f=", f, " k1=", p.k1.real(), "+", p.k1.imag(), "i Lz=", mn.Lz.real(), "+", mn.Lz.imag(), "i ref=", ref.real(), "+", ref.imag(), "i");
            CHECK(std::abs(mn.Lz - ref) < 1e-8 * std::abs(ref));
        }
    }
    CHECK(checked >= 3);
}

TEST_CASE("metal-dielectric normalization is real and positive without loss") {
    HalfSpaceMaterial ag = presets::silver();
    std::get<DrudeParams>(ag.epsilon).loss_rate = 0.0;
    const auto d = presets::dielectric(1.3);
    const DispersionPoint p = sp_wavevector(d, ag, 0.4 * we, Polarization::TM);
    REQUIRE(p.bound);
    const ModeNormalization mn = mode_normalization(d, ag, p, 1e-6);
    CHECK(mn.Lz.imag() == doctest::Approx(0.0).scale(std::abs(mn.Lz)).epsilon(1e-12));
    CHECK(mn.Lz.real() > 0.0);
    CHECK(mn.lz_phase == doctest::Approx(0.0).epsilon(1e-12));
    const double e0 = std::sqrt(constants::hbar * p.omega /
                                (2.0 * constants::pi * constants::vacuum_permittivity * 1e-6 * mn.Lz.real()));
    CHECK(mn.E0 == doctest::Approx(e0).epsilon(1e-12));
}

TEST_CASE("coupling scales with dipole and width") {
    const auto d = presets::dielectric(1.3);
    const auto n = presets::nimm_default();
    const DispersionPoint p = sp_wavevector(d, n, 0.4095 * we, Polarization::TM);
    const NormalizationOptions lenient{false};
    const ModeNormalization a = mode_normalization(d, n, p, 2.5e-6, lenient);
    const ModeNormalization b = mode_normalization(d, n, p, 10e-6, lenient);
    const double dip = atomic_dipole_scale();
    const cplx g1 = coupling_constant(a, p, {dip, 1, 0}).g;
    const cplx g2 = coupling_constant(a, p, {2 * dip, 1, 0}).g;
    const cplx g4 = coupling_constant(b, p, {dip, 1, 0}).g;
    CHECK(std::norm(g2) == doctest::Approx(4 * std::norm(g1)).epsilon(1e-12));
    CHECK(std::norm(g4) == doctest::Approx(std::norm(g1) / 4).epsilon(1e-12));
    const CouplingConstant gz = coupling_constant(a, p, {dip, 0, 1});
    CHECK(std::abs(gz.polarization_overlap - cplx(0, 1) * p.k_par / p.k1) < 1e-15);
    CHECK(coupling_constant(a, p, {0.0, 1, 0}).g == cplx(0.0, 0.0));
    CHECK(atomic_dipole_scale() ==
          doctest::Approx(constants::elementary_charge * constants::bohr_radius));
}

TEST_CASE("normalization error paths") {
    const auto d = presets::dielectric(1.3);
    const auto n = presets::nimm_default();
    const DispersionPoint p = sp_wavevector(d, n, 0.4095 * we, Polarization::TM);
    CHECK_THROWS_AS(mode_normalization(d, n, p, 0.0), DomainError);
    const DispersionPoint unbound = sp_wavevector(d, n, 0.35 * we, Polarization::TM);
    REQUIRE_FALSE(unbound.bound);
    CHECK_THROWS_AS(mode_normalization(d, n, unbound, 1e-6), DomainError);
    const DispersionPoint te = sp_wavevector(d, n, 0.45 * we, Polarization::TE);
    CHECK_THROWS_AS(mode_normalization(d, n, te, 1e-6), DomainError);
    // Near the loss minimum Re Lz is slightly negative for the default NIMM.
    const ModeNormalization mn = mode_normalization(d, n, p, 2.5e-6, NormalizationOptions{false});
    if (!(mn.Lz.real() > 0.0)) {
        CHECK_THROWS_AS(mode_normalization(d, n, p, 2.5e-6), NonphysicalModeError);
    }
    CHECK(mn.E0 > 0.0);
}
