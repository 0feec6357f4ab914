#include "polariton/materials.hpp"

#include <cmath>
#include <string>

#include "polariton/error.hpp"

namespace polariton {

namespace {

void require_positive_frequency(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("angular frequency must be positive and finite, got " +
                          std::to_string(omega));
    }
}

cplx eval_model(const ResponseModel& r, double omega) {
    if (const auto* c = std::get_if<ConstantResponse>(&r)) {
        return {c->value, 0.0};
    }
    return drude_response(std::get<DrudeParams>(r), omega);
}

cplx slope_model(const ResponseModel& r, double omega) {
    if (const auto* c = std::get_if<ConstantResponse>(&r)) {
        return {c->value, 0.0};
    }
    return drude_slope(std::get<DrudeParams>(r), omega);
}

void validate_drude(const DrudeParams& p, const std::string& what) {
    if (!(p.plasma_frequency > 0.0) || !std::isfinite(p.plasma_frequency)) {
        throw DomainError(what + ": plasma frequency must be > 0");
    }
    if (!(p.loss_rate >= 0.0) || !std::isfinite(p.loss_rate)) {
        throw DomainError(what + ": loss rate must be >= 0");
    }
}

}  // namespace

cplx drude_response(const DrudeParams& p, double omega) {
    const double wf2 = p.plasma_frequency * p.plasma_frequency;
    const double g = p.loss_rate;
    const double denom = omega * (omega * omega + g * g);
    // 1 − ω_f²(ω − iγ)/(ω(ω² + γ²))
    return {1.0 - wf2 * omega / denom, wf2 * g / denom};
}

cplx drude_slope(const DrudeParams& p, double omega) {
    const cplx w(omega, p.loss_rate);
    return 1.0 + p.plasma_frequency * p.plasma_frequency / (w * w);
}

void validate(const HalfSpaceMaterial& m) {
    const std::string name = m.label.empty() ? std::string("material") : m.label;
    if (const auto* c = std::get_if<ConstantResponse>(&m.epsilon)) {
        if (!(c->value >= 1.0) || !std::isfinite(c->value)) {
            throw DomainError(name + ": constant permittivity must be >= 1");
        }
    } else {
        validate_drude(std::get<DrudeParams>(m.epsilon), name + " epsilon");
    }
    if (const auto* c = std::get_if<ConstantResponse>(&m.mu)) {
        if (!(c->value > 0.0) || !std::isfinite(c->value)) {
            throw DomainError(name + ": constant permeability must be > 0");
        }
    } else {
        validate_drude(std::get<DrudeParams>(m.mu), name + " mu");
    }
}

MaterialResponse eval_material(const HalfSpaceMaterial& m, double omega) {
    require_positive_frequency(omega);
    return {eval_model(m.epsilon, omega), eval_model(m.mu, omega), omega};
}

MaterialSlope d_omega_material(const HalfSpaceMaterial& m, double omega) {
    require_positive_frequency(omega);
    return {slope_model(m.epsilon, omega), slope_model(m.mu, omega)};
}

HalfSpaceMaterial swap_epsilon_mu(const HalfSpaceMaterial& m) {
    return {m.mu, m.epsilon, m.label + " (eps<->mu)"};
}

bool is_drude(const ResponseModel& r) { return std::holds_alternative<DrudeParams>(r); }

namespace presets {

HalfSpaceMaterial silver() {
    return {DrudeParams{silver_plasma_frequency, silver_loss_rate}, ConstantResponse{1.0},
            "silver"};
}

HalfSpaceMaterial nimm_default(double magnetic_loss_rate) {
    return {DrudeParams{silver_plasma_frequency, silver_loss_rate},
            DrudeParams{0.5 * silver_plasma_frequency, magnetic_loss_rate}, "nimm-default"};
}

HalfSpaceMaterial dielectric(double epsilon, double mu) {
    return {ConstantResponse{epsilon}, ConstantResponse{mu}, "dielectric"};
}

HalfSpaceMaterial by_name(std::string_view name) {
    if (name == "silver") return silver();
    if (name == "nimm-default") return nimm_default();
    if (name == "dielectric-1.3") {
        auto d = dielectric(1.3, 1.0);
        d.label = "dielectric-1.3";
        return d;
    }
    throw DomainError("unknown material preset '" + std::string(name) + "'");
}

std::vector<std::string> names() { return {"silver", "nimm-default", "dielectric-1.3"}; }

}  // namespace presets

}  // namespace polariton
