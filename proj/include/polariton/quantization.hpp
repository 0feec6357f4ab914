#pragma once

#include "polariton/dispersion.hpp"
#include "polariton/materials.hpp"

namespace polariton {

/// Normalization of one TM surface mode.
///
/// L_z = D + (ω²/c²) S is complex once losses are present; the field
/// amplitude E₀ = √(ħω / (2π ε₀ L_y |L_z|)) uses its modulus and the phase is
/// kept separately.
struct ModeNormalization {
    cplx D;
    cplx S;
    cplx Lz;
    double lz_phase = 0.0;
    double E0 = 0.0;  // V/m
    double Ly = 0.0;  // m
    double omega = 0.0;
};

struct NormalizationOptions {
    /// Reject modes whose Re L_z ≤ 0 with NonphysicalModeError.
    bool require_positive_re_lz = true;
};

/// Dipole moment in the x–z plane of the mode.
struct Dipole {
    double magnitude = 0.0;  // C m
    double dir_x = 1.0;
    double dir_z = 0.0;
};

struct CouplingConstant {
    cplx g;  // rad/s
    double dipole_moment = 0.0;
    /// d̂ · (e_x + i e_z k∥/k₁)
    cplx polarization_overlap;
};

ModeNormalization mode_normalization(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                                     const DispersionPoint& dp, double Ly,
                                     const NormalizationOptions& opts = {});

CouplingConstant coupling_constant(const ModeNormalization& mn, const DispersionPoint& dp,
                                   const Dipole& d);

/// e·a₀, the dipole scale used for rare-earth transitions.
double atomic_dipole_scale();

}  // namespace polariton
