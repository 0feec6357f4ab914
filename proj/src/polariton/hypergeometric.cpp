#include "polariton/hypergeometric.hpp"

#include <cmath>
#include <sstream>

#include "polariton/error.hpp"
#include "polariton/quadrature.hpp"

namespace polariton {

namespace {

using cplx = std::complex<double>;

std::string describe(cplx b, cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << "b=" << b << " z=" << z;
    return os.str();
}

cplx series(cplx b, cplx z) {
    cplx sum = 1.0;  // n = 0 term of b·Σ zⁿ/(b+n)
    cplx zn = 1.0;
    for (int n = 1; n < 2000; ++n) {
        zn *= z;
        const cplx term = b * zn / (b + static_cast<double>(n));
        sum += term;
        if (std::abs(term) <= 1e-14 * std::abs(sum)) return sum;
    }
    throw NumericError("2F1 series did not converge for " + describe(b, z));
}

cplx integral(cplx b, cplx z) {
    const cplx inv_b = 1.0 / b;
    const bool real_b = b.imag() == 0.0;

    // Just off the cut the integrand has a pole s0 = z^(−b) next to [0, 1].
    // Its principal part b·s0/(s0 − s) is subtracted and integrated exactly.
    const cplx s0 = std::exp(-b * std::log(z));
    const bool subtract = z.real() > 0.0 && s0.imag() != 0.0 && std::abs(s0.imag()) < 0.25 &&
                          s0.real() > -0.25 && s0.real() < 1.25;
    const cplx residue = b * s0;

    auto f = [&](double s) -> cplx {
        cplx v = 1.0;
        if (s != 0.0) {
            const cplx p =
                real_b ? cplx(std::pow(s, inv_b.real()), 0.0) : std::exp(inv_b * std::log(s));
            v = 1.0 / (1.0 - z * p);
        }
        if (subtract) v -= residue / (s0 - s);
        return v;
    };
    quadrature::Options opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-12;
    opts.max_intervals = 50000;
    const quadrature::Result r = quadrature::integrate(f, 0.0, 1.0, opts);
    if (!r.converged) {
        std::ostringstream os;
        os << "2F1 quadrature did not converge for " << describe(b, z)
           << " (error estimate " << r.error << ", " << r.intervals << " intervals)";
        throw NumericError(os.str());
    }
    if (subtract) return r.value + residue * (std::log(s0) - std::log(s0 - 1.0));
    return r.value;
}

}  // namespace

cplx hyp2f1_special(cplx b, cplx z) {
    if (!(b.real() > 0.0)) throw DomainError("2F1(1,b;b+1;z) requires Re b > 0, " + describe(b, z));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("2F1 argument is not finite, " + describe(b, z));
    }
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        throw BranchCutError("2F1 argument on the branch cut [1, inf), " + describe(b, z));
    }
    if (z == cplx(0.0, 0.0)) return 1.0;
    if (std::abs(z) <= hyp2f1_series_radius) return series(b, z);
    return integral(b, z);
}

}  // namespace polariton
