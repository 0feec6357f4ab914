#include "polariton/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "polariton/constants.hpp"
#include "polariton/error.hpp"

namespace polariton {

const char* to_string(Polarization p) { return p == Polarization::TM ? "TM" : "TE"; }

cplx principal_sqrt(cplx z) {
    cplx r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return r;
}

DispersionPoint sp_wavevector(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                              double omega, Polarization pol) {
    const MaterialResponse r1 = eval_material(m1, omega);
    const MaterialResponse r2 = eval_material(m2, omega);

    // ς enters the boundary condition, π is the other response.
    const bool tm = pol == Polarization::TM;
    const cplx s1 = tm ? r1.epsilon : r1.mu;
    const cplx s2 = tm ? r2.epsilon : r2.mu;
    const cplx p1 = tm ? r1.mu : r1.epsilon;
    const cplx p2 = tm ? r2.mu : r2.epsilon;

    const cplx denom = s2 * s2 - s1 * s1;
    if (std::abs(denom) < 1e-12 * std::norm(s1)) {
        throw SingularityError(std::string("surface-mode relation is degenerate (") +
                               to_string(pol) + ": sigma2^2 == sigma1^2) at omega=" +
                               std::to_string(omega));
    }
    const cplx radicand = s1 * s2 * (s2 * p1 - s1 * p2) / denom;

    const double q = omega / constants::speed_of_light;
    const cplx k = q * principal_sqrt(radicand);

    DispersionPoint dp;
    dp.omega = omega;
    dp.polarization = pol;
    dp.k_par = k.real();
    dp.kappa = k.imag();
    // k_j² = k∥² − q²ε_jμ_j, with k∥² = q²·radicand up to rounding.
    dp.k1 = q * principal_sqrt(radicand - r1.epsilon * r1.mu);
    dp.k2 = q * principal_sqrt(radicand - r2.epsilon * r2.mu);

    const cplx a = dp.k1 * s2;
    const cplx b = dp.k2 * s1;
    const double scale = std::max(std::abs(a), std::abs(b));
    dp.boundary_residual = scale > 0.0 ? std::abs(a + b) / scale : 0.0;
    dp.bound = dp.k1.real() > 0.0 && dp.k2.real() > 0.0 &&
               dp.boundary_residual < boundary_residual_tolerance;
    return dp;
}

std::vector<Polarization> polarization_support(const HalfSpaceMaterial& m1,
                                               const HalfSpaceMaterial& m2, double omega) {
    std::vector<Polarization> out;
    for (Polarization pol : {Polarization::TM, Polarization::TE}) {
        try {
            if (sp_wavevector(m1, m2, omega, pol).bound) out.push_back(pol);
        } catch (const SingularityError&) {
            // No surface mode without contrast in ς.
        }
    }
    return out;
}

namespace {

std::optional<double> centered_velocity(const HalfSpaceMaterial& m1,
                                        const HalfSpaceMaterial& m2, double omega,
                                        Polarization pol, double h, double k0) {
    const double kp = sp_wavevector(m1, m2, omega + h, pol).k_par;
    const double km = sp_wavevector(m1, m2, omega - h, pol).k_par;
    const bool increasing = km < k0 && k0 < kp;
    const bool decreasing = km > k0 && k0 > kp;
    if (!increasing && !decreasing) return std::nullopt;
    return 2.0 * h / (kp - km);
}

}  // namespace

double group_velocity(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2, double omega,
                      Polarization pol, double relative_step) {
    const DispersionPoint dp = sp_wavevector(m1, m2, omega, pol);
    if (!dp.bound) {
        throw DomainError("group velocity requested for an unbound mode at omega=" +
                          std::to_string(omega));
    }
    if (!(relative_step > 0.0 && relative_step < 0.1)) {
        throw DomainError("relative finite-difference step must lie in (0, 0.1)");
    }
    double h = relative_step * omega;
    std::optional<double> prev = centered_velocity(m1, m2, omega, pol, h, dp.k_par);
    for (int iter = 0; iter < 24; ++iter) {
        h *= 0.5;
        const std::optional<double> cur = centered_velocity(m1, m2, omega, pol, h, dp.k_par);
        if (prev && cur && std::abs(*cur - *prev) <= 1e-4 * std::abs(*cur)) return *cur;
        prev = cur;
    }
    throw NumericError("group velocity did not converge under step halving at omega=" +
                       std::to_string(omega));
}

double abyss_condition_residual(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                                double omega) {
    const MaterialResponse r1 = eval_material(m1, omega);
    const MaterialResponse r2 = eval_material(m2, omega);
    const double e1 = r1.epsilon.real();
    const double er = r2.epsilon.real(), ei = r2.epsilon.imag();
    const double mr = r2.mu.real(), mi = r2.mu.imag();
    // Cross-multiplied so that lossless or non-magnetic media stay finite.
    const double lhs = mi * er * (er * er - e1 * e1);
    const double rhs = ei * (mr * (er * er + e1 * e1) - 2.0 * er * e1);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

AbyssResult find_abyss(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                       FrequencyBand band, Polarization pol, const AbyssOptions& opts) {
    if (!(band.lower > 0.0) || !(band.upper > band.lower)) {
        throw DomainError("abyss search band must satisfy 0 < lower < upper");
    }
    const std::size_t n = std::max<std::size_t>(opts.coarse_points, 3);

    auto loss = [&](double w) {
        try {
            return std::abs(sp_wavevector(m1, m2, w, pol).kappa);
        } catch (const SingularityError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    const double step = (band.upper - band.lower) / static_cast<double>(n - 1);
    std::size_t best = 0;
    double best_loss = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double l = loss(band.lower + step * static_cast<double>(i));
        if (l < best_loss) {
            best_loss = l;
            best = i;
        }
    }
    if (best == 0 || best == n - 1 || !std::isfinite(best_loss)) {
        throw NotFoundError("no interior loss minimum in band [" + std::to_string(band.lower) +
                            ", " + std::to_string(band.upper) + "] rad/s");
    }

    // Golden-section refinement on the bracketing cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = band.lower + step * static_cast<double>(best - 1);
    double b = band.lower + step * static_cast<double>(best + 1);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = loss(c), fd = loss(d);
    int guard = 0;
    while (b - a > opts.relative_tolerance * 0.5 * (a + b)) {
        if (++guard > 500) throw NumericError("golden-section search did not converge");
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = loss(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = loss(d);
        }
    }

    AbyssResult res;
    res.omega0 = fc < fd ? c : d;
    res.kappa_at_omega0 = sp_wavevector(m1, m2, res.omega0, pol).kappa;
    res.residual = pol == Polarization::TM
                       ? abyss_condition_residual(m1, m2, res.omega0)
                       : abyss_condition_residual(swap_epsilon_mu(m1), swap_epsilon_mu(m2),
                                                  res.omega0);
    res.residual_warning = res.residual > opts.residual_warning_threshold;
    return res;
}

}  // namespace polariton
