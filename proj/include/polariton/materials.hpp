#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polariton {

using cplx = std::complex<double>;

/// Plasma frequency and loss rate of a Drude response, both in rad/s.
struct DrudeParams {
    double plasma_frequency = 0.0;
    double loss_rate = 0.0;
};

/// Frequency-independent real response.
struct ConstantResponse {
    double value = 1.0;
};

using ResponseModel = std::variant<ConstantResponse, DrudeParams>;

/// Electric and magnetic response of one half-space.
struct HalfSpaceMaterial {
    ResponseModel epsilon = ConstantResponse{1.0};
    ResponseModel mu = ConstantResponse{1.0};
    std::string label;
};

struct MaterialResponse {
    cplx epsilon;
    cplx mu;
    double omega = 0.0;
};

/// d(ωε)/dω and d(ωμ)/dω.
struct MaterialSlope {
    cplx d_omega_epsilon;
    cplx d_omega_mu;
};

/// Electric plasma frequency and loss rate of silver (rad/s).
inline constexpr double silver_plasma_frequency = 1.37e16;
inline constexpr double silver_loss_rate = 2.73e13;
inline constexpr double default_magnetic_loss_rate = 1e11;

/// ς(ω) = 1 − ω_f²/(ω(ω + iγ_f)), written so that γ_f = 0 yields an exactly real value.
cplx drude_response(const DrudeParams& p, double omega);

/// d(ως)/dω = 1 + ω_f²/(ω + iγ_f)².
cplx drude_slope(const DrudeParams& p, double omega);

/// Throws DomainError when a model violates its invariants.
void validate(const HalfSpaceMaterial& m);

MaterialResponse eval_material(const HalfSpaceMaterial& m, double omega);
MaterialSlope d_omega_material(const HalfSpaceMaterial& m, double omega);

/// Same material with ε and μ exchanged (TE ↔ TM duality).
HalfSpaceMaterial swap_epsilon_mu(const HalfSpaceMaterial& m);

bool is_drude(const ResponseModel& r);

namespace presets {

HalfSpaceMaterial silver();
/// Silver electric response with a Drude magnetic response at ω_m = 0.5 ωₑ.
HalfSpaceMaterial nimm_default(double magnetic_loss_rate = default_magnetic_loss_rate);
HalfSpaceMaterial dielectric(double epsilon = 1.3, double mu = 1.0);

/// Looks up "silver", "nimm-default" or "dielectric-1.3". Throws DomainError otherwise.
HalfSpaceMaterial by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace presets

}  // namespace polariton
