#include "polariton/quantization.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "polariton/constants.hpp"
#include "polariton/error.hpp"

namespace polariton {

ModeNormalization mode_normalization(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                                     const DispersionPoint& dp, double Ly,
                                     const NormalizationOptions& opts) {
    if (!dp.bound) throw DomainError("mode normalization requires a bound surface mode");
    if (dp.polarization != Polarization::TM) {
        throw DomainError("mode normalization is defined for TM modes only");
    }
    if (!(Ly > 0.0)) throw DomainError("transverse width Ly must be > 0");

    const double omega = dp.omega;
    const MaterialResponse r1 = eval_material(m1, omega);
    const MaterialResponse r2 = eval_material(m2, omega);
    const MaterialSlope s1 = d_omega_material(m1, omega);
    const MaterialSlope s2 = d_omega_material(m2, omega);

    const double kp2 = dp.k_par * dp.k_par;
    const cplx k1 = dp.k1, k2 = dp.k2;
    const cplx k1_3 = k1 * k1 * k1;
    const cplx k2_3 = k2 * k2 * k2;

    ModeNormalization mn;
    mn.omega = omega;
    mn.Ly = Ly;
    mn.D = s1.d_omega_epsilon * (k1 * k1 + kp2) / k1_3 +
           s2.d_omega_epsilon * (k2 * k2 + kp2) / k2_3;
    mn.S = s1.d_omega_mu * r1.epsilon * r1.epsilon / k1_3 +
           s2.d_omega_mu * r2.epsilon * r2.epsilon / k2_3;
    const double q = omega / constants::speed_of_light;
    mn.Lz = mn.D + q * q * mn.S;
    mn.lz_phase = std::arg(mn.Lz);

    const double lz = std::abs(mn.Lz);
    if (!std::isfinite(lz) || lz == 0.0) {
        throw NonphysicalModeError("quantization length is zero or not finite");
    }
    if (opts.require_positive_re_lz && !(mn.Lz.real() > 0.0)) {
        std::ostringstream os;
        os.precision(6);
        os << "Re Lz = " << mn.Lz.real() << " m is not positive at omega = " << omega << " rad/s";
        throw NonphysicalModeError(os.str());
    }
    mn.E0 = std::sqrt(constants::hbar * omega /
                      (2.0 * constants::pi * constants::vacuum_permittivity * Ly * lz));
    return mn;
}

CouplingConstant coupling_constant(const ModeNormalization& mn, const DispersionPoint& dp,
                                   const Dipole& d) {
    CouplingConstant cc;
    cc.dipole_moment = d.magnitude;
    const double norm = std::hypot(d.dir_x, d.dir_z);
    if (d.magnitude == 0.0 || norm == 0.0) {
        cc.g = 0.0;
        cc.polarization_overlap = 0.0;
        return cc;
    }
    const double dx = d.dir_x / norm, dz = d.dir_z / norm;
    cc.polarization_overlap = dx + cplx(0.0, 1.0) * dz * dp.k_par / dp.k1;
    cc.g = d.magnitude * cc.polarization_overlap * mn.E0 / constants::hbar;
    return cc;
}

double atomic_dipole_scale() { return constants::elementary_charge * constants::bohr_radius; }

}  // namespace polariton
