#pragma once

#include <cstddef>
#include <vector>

#include "polariton/materials.hpp"

namespace polariton {

enum class Polarization { TM, TE };

const char* to_string(Polarization p);

/// Complex surface-mode wave vector at one frequency.
///
/// `k_par + i kappa` is the in-plane wave vector; `k1`, `k2` are the decay
/// constants normal to the interface in media 1 (z > 0) and 2 (z < 0), taken
/// on the Re ≥ 0 branch. `bound` is set only when both decay constants have
/// strictly positive real part and the boundary condition k₁ς₂ + k₂ς₁ = 0 is
/// met on that branch.
struct DispersionPoint {
    double omega = 0.0;
    double k_par = 0.0;
    double kappa = 0.0;
    cplx k1;
    cplx k2;
    Polarization polarization = Polarization::TM;
    bool bound = false;
    /// |k₁ς₂ + k₂ς₁| / max(|k₁ς₂|, |k₂ς₁|)
    double boundary_residual = 0.0;

    [[nodiscard]] cplx k_complex() const { return {k_par, kappa}; }
};

struct FrequencyBand {
    double lower = 0.0;  // rad/s
    double upper = 0.0;  // rad/s
};

struct AbyssOptions {
    std::size_t coarse_points = 512;
    double relative_tolerance = 1e-9;
    double residual_warning_threshold = 0.05;
};

/// Location of the loss minimum ("abyss") of a surface mode.
struct AbyssResult {
    double omega0 = 0.0;
    double kappa_at_omega0 = 0.0;
    /// Mismatch of the electric/magnetic loss-cancellation condition at omega0.
    double residual = 0.0;
    /// Minimum exists but does not satisfy the cancellation condition.
    bool residual_warning = false;
};

/// Principal square root with Re ≥ 0, and Im ≥ 0 when Re = 0.
cplx principal_sqrt(cplx z);

inline constexpr double boundary_residual_tolerance = 1e-8;

DispersionPoint sp_wavevector(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                              double omega, Polarization pol);

/// Polarizations for which a bound surface mode exists at omega (TM first).
std::vector<Polarization> polarization_support(const HalfSpaceMaterial& m1,
                                               const HalfSpaceMaterial& m2, double omega);

/// Group velocity dω/dk∥ from a centered difference of k∥(ω).
///
/// The stencil starts at `relative_step`·ω and is halved until two successive
/// estimates agree to 1e-4; a stencil over which k∥ is not monotonic is
/// refined the same way before giving up with NumericError.
double group_velocity(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2, double omega,
                      Polarization pol, double relative_step = 1e-6);

/// Mismatch of μᵢ/εᵢ = (μᵣ(εᵣ² + ε₁²) − 2εᵣε₁)/(εᵣ(εᵣ² − ε₁²)) at omega, normalized
/// by the larger of the two sides. ε, μ are those of medium 2, ε₁ of medium 1.
double abyss_condition_residual(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                                double omega);

/// Frequency of minimum |κ| within `band`: coarse scan, then golden-section.
/// Throws NotFoundError when the coarse minimum sits on the band edge.
AbyssResult find_abyss(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                       FrequencyBand band, Polarization pol, const AbyssOptions& opts = {});

}  // namespace polariton
