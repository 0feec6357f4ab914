#pragma once

#include <complex>
#include <string>
#include <vector>

namespace polariton {

using cplx = std::complex<double>;

/// Λ medium filling 0 < z < z0 above the interface, probed by a surface mode.
///
/// Rates are angular (rad/s), lengths in m. Γ₃₁ already contains the
/// inhomogeneous width (Γ₃₁ = Δ_w + γ₃₁). The control intensity falls off as
/// |Ω|² e^{−2 k1c z}.
struct LambdaMediumParams {
    double density = 1e24;  // 1/m³
    double z0 = 1e-6;
    double gamma21 = 1e3;
    double Gamma31 = 1e9;
    double Omega = 1e9;
    double k1s = 1e6;  // 1/m
    double k1c = 1e6;  // 1/m
    double Ly = 2.5e-6;
};

void validate(const LambdaMediumParams& p);

/// Non-fatal conditions worth logging (γ₂₁ not small against Γ₃₁).
std::vector<std::string> soft_warnings(const LambdaMediumParams& p);

struct EitResponse {
    double nu = 0.0;  // detuning actually evaluated, rad/s
    cplx alpha;       // 1/m
    cplx beta;
    cplx G;
    /// The requested detuning put 1/β on the ₂F₁ cut and was shifted by 1e-6 Γ₃₁.
    bool nudged = false;
};

/// β = (ν + iγ₂₁)(ν + iΓ₃₁)/|Ω|².
cplx eit_beta(const LambdaMediumParams& p, double nu);

/// Closed-form α(ν, z0) = α₀ G(k1s, k1c, z0, β). Requires Ω > 0.
EitResponse alpha_closed(const LambdaMediumParams& p, double alpha0, double nu);

/// Ω = 0 limit of the closed form: G = iΓ₃₁/(ν + iΓ₃₁)·(1 − e^{−2 k1s z0}).
EitResponse alpha_control_off(const LambdaMediumParams& p, double alpha0, double nu);

/// Dispatches to alpha_closed or alpha_control_off; zero density gives α = 0.
EitResponse alpha_response(const LambdaMediumParams& p, double alpha0, double nu);

/// Direct adaptive quadrature of
///   α(ν) = 2π (|g|²/v₀) n L_y ∫₀^{z0} (γ₂₁ − iν) e^{−2k1s z} / (|Ω|² e^{−2k1c z} − (ν + iγ₂₁)(ν + iΓ₃₁)) dz.
cplx alpha_quadrature(const LambdaMediumParams& p, double gsq_over_v0, double nu);

/// α₀ = π n L_y |g|² / (k1s v₀ Γ₃₁).
double alpha_resonant(const LambdaMediumParams& p, double gsq, double v0);

}  // namespace polariton
