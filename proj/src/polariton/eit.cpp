#include "polariton/eit.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "polariton/constants.hpp"
#include "polariton/error.hpp"
#include "polariton/hypergeometric.hpp"
#include "polariton/quadrature.hpp"

namespace polariton {

namespace {

constexpr cplx I(0.0, 1.0);

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() >= 1.0; }

}  // namespace

void validate(const LambdaMediumParams& p) {
    auto fail = [](const char* what) { throw DomainError(std::string("Lambda medium: ") + what); };
    if (!(p.density >= 0.0) || !std::isfinite(p.density)) fail("density must be >= 0");
    if (!(p.z0 > 0.0) || !std::isfinite(p.z0)) fail("z0 must be > 0");
    if (!(p.gamma21 >= 0.0) || !std::isfinite(p.gamma21)) fail("gamma21 must be >= 0");
    if (!(p.Gamma31 > 0.0) || !std::isfinite(p.Gamma31)) fail("Gamma31 must be > 0");
    if (!(p.Omega >= 0.0) || !std::isfinite(p.Omega)) fail("Omega must be >= 0");
    if (!(p.k1s > 0.0) || !std::isfinite(p.k1s)) fail("k1s must be > 0");
    if (!(p.k1c > 0.0) || !std::isfinite(p.k1c)) fail("k1c must be > 0");
    if (!(p.Ly > 0.0) || !std::isfinite(p.Ly)) fail("Ly must be > 0");
}

std::vector<std::string> soft_warnings(const LambdaMediumParams& p) {
    std::vector<std::string> w;
    if (p.gamma21 > 0.1 * p.Gamma31) {
        w.emplace_back("gamma21 is not small compared to Gamma31");
    }
    return w;
}

cplx eit_beta(const LambdaMediumParams& p, double nu) {
    return (nu + I * p.gamma21) * (nu + I * p.Gamma31) / (p.Omega * p.Omega);
}

EitResponse alpha_closed(const LambdaMediumParams& p, double alpha0, double nu) {
    validate(p);
    if (!(p.Omega > 0.0)) {
        throw DomainError("alpha_closed requires Omega > 0; use alpha_control_off for Omega = 0");
    }
    EitResponse r;
    r.nu = nu;
    const cplx b = p.k1s / p.k1c;
    const double att_s = std::exp(-2.0 * p.k1s * p.z0);
    const double att_c = std::exp(-2.0 * p.k1c * p.z0);

    for (int attempt = 0; attempt < 2; ++attempt) {
        r.beta = eit_beta(p, r.nu);
        if (r.beta == cplx(0.0, 0.0)) {
            // 1/β → ∞ and ₂F₁(1,b;b+1;z) → 0: perfect transparency.
            r.G = 0.0;
            break;
        }
        const cplx z1 = 1.0 / r.beta;
        const cplx z2 = att_c / r.beta;
        if (on_cut(z1) || on_cut(z2)) {
            r.nu += 1e-6 * p.Gamma31;
            r.nudged = true;
            continue;
        }
        const cplx bracket = hyp2f1_special(b, z1) - att_s * hyp2f1_special(b, z2);
        r.G = I * p.Gamma31 / (r.nu + I * p.Gamma31) * bracket;
        break;
    }
    r.alpha = alpha0 * r.G;
    return r;
}

EitResponse alpha_control_off(const LambdaMediumParams& p, double alpha0, double nu) {
    validate(p);
    EitResponse r;
    r.nu = nu;
    r.beta = cplx(std::numeric_limits<double>::infinity(), 0.0);
    r.G = I * p.Gamma31 / (nu + I * p.Gamma31) * (1.0 - std::exp(-2.0 * p.k1s * p.z0));
    r.alpha = alpha0 * r.G;
    return r;
}

EitResponse alpha_response(const LambdaMediumParams& p, double alpha0, double nu) {
    if (p.density == 0.0 || alpha0 == 0.0) {
        validate(p);
        EitResponse r;
        r.nu = nu;
        r.beta = p.Omega > 0.0 ? eit_beta(p, nu) : cplx(0.0, 0.0);
        return r;
    }
    return p.Omega > 0.0 ? alpha_closed(p, alpha0, nu) : alpha_control_off(p, alpha0, nu);
}

cplx alpha_quadrature(const LambdaMediumParams& p, double gsq_over_v0, double nu) {
    validate(p);
    if (p.density == 0.0 || gsq_over_v0 == 0.0) return 0.0;

    const cplx numerator = p.gamma21 - I * nu;
    const cplx detuning = (nu + I * p.gamma21) * (nu + I * p.Gamma31);
    const double omega2 = p.Omega * p.Omega;
    auto integrand = [&](double z) -> cplx {
        return numerator * std::exp(-2.0 * p.k1s * z) /
               (omega2 * std::exp(-2.0 * p.k1c * z) - detuning);
    };

    // Split at a few probe decay lengths so that a thick layer cannot hide
    // the e^{−2k1s z} structure between Kronrod nodes.
    const std::array<double, 4> marks = {1.0 / p.k1s, 5.0 / p.k1s, 20.0 / p.k1s, 40.0 / p.k1s};
    quadrature::Options opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-13;
    opts.max_intervals = 20000;

    cplx total = 0.0;
    double lo = 0.0;
    auto piece = [&](double a, double b) {
        const quadrature::Result r = quadrature::integrate(integrand, a, b, opts);
        if (!r.converged && r.error > 1e-12 * std::abs(r.value + total)) {
            std::ostringstream os;
            os << "alpha quadrature over z in [" << a << ", " << b << "] unresolved at nu=" << nu
               << " (error " << r.error << ")";
            throw NumericError(os.str());
        }
        total += r.value;
    };
    for (double m : marks) {
        if (m >= p.z0) break;
        piece(lo, m);
        lo = m;
    }
    piece(lo, p.z0);

    return 2.0 * constants::pi * gsq_over_v0 * p.density * p.Ly * total;
}

double alpha_resonant(const LambdaMediumParams& p, double gsq, double v0) {
    if (!(p.Gamma31 > 0.0) || !(p.k1s > 0.0) || !(v0 > 0.0)) {
        throw DomainError("alpha_resonant requires Gamma31 > 0, k1s > 0 and v0 > 0");
    }
    if (!(p.Ly > 0.0) || !(p.density >= 0.0)) {
        throw DomainError("alpha_resonant requires Ly > 0 and density >= 0");
    }
    return constants::pi * p.density * p.Ly * gsq / (p.k1s * v0 * p.Gamma31);
}

}  // namespace polariton
