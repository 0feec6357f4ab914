#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polariton/dispersion.hpp"
#include "polariton/eit.hpp"
#include "polariton/error.hpp"
#include "polariton/materials.hpp"

namespace polariton::cli {

/// Malformed or inconsistent scenario configuration (exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File-system failure (exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

inline constexpr std::string_view tool_version = "0.1.0";

/// Parsed `[section]` / `key = value` text. Keys are unique per section.
struct IniDocument {
    std::map<std::string, std::map<std::string, std::string>> sections;
};

IniDocument parse_ini(std::string_view text, std::string_view source = "<config>");

/// Applies `section.key=value` overrides on top of a document.
void apply_overrides(IniDocument& doc, const std::vector<std::string>& overrides);

/// FNV-1a 64 of the sorted `section.key=value` lines.
std::uint64_t config_hash(const IniDocument& doc);

struct MaterialsSection {
    HalfSpaceMaterial medium1;
    HalfSpaceMaterial medium2;
    std::optional<HalfSpaceMaterial> reference;
};

/// Frequencies are in units of omega_ref (the electric plasma frequency).
struct BandSection {
    double omega_min = 0.3;
    double omega_max = 0.5;
    std::size_t points = 512;
    double omega_ref = silver_plasma_frequency;
    Polarization polarization = Polarization::TM;
    double kappa0 = 1e4;  // 1/m, normalization of κ in outputs
    double gamma_ratio_min = 1e-5;
    double gamma_ratio_max = 1.0;
    std::size_t gamma_points = 41;
};

struct EitSection {
    LambdaMediumParams params;
    bool k1s_auto = false;
    std::optional<double> alpha0;
    double omega31 = 0.4095;  // units of omega_ref
    double dipole = 0.0;      // C m; 0 → e·a₀
    bool strict_normalization = true;
    double nu_min = -5.0;  // units of Gamma31
    double nu_max = 5.0;
    std::size_t nu_points = 201;
    std::vector<double> omegas = {0.0, 0.5, 1.0, 2.0};  // units of Gamma31
    double x = 1e-3;                                    // m, scales the α columns
    bool quadrature = true;
};

struct PulseSection {
    double delta_t = 100e-9;
    std::vector<double> x = {1e-3, 3e-3};
    std::vector<double> omegas = {1.0};                  // units of Gamma31
    std::vector<double> sweep_omegas = {0.5, 1.0, 2.0, 4.0};  // units of Gamma31
    std::optional<double> kappa31 = 1e2;                 // empty → |κ(ω₃₁)|
    std::optional<double> v0;                            // empty → dω/dk∥ at ω₃₁
    std::size_t n_nu = 4096;
    double nu_span = 0.0;  // 0 → 40/δt
};

struct OutputSection {
    std::string dir = "out";
    bool plot = false;
};

struct ScenarioConfig {
    MaterialsSection materials;
    BandSection band;
    EitSection eit;
    PulseSection pulse;
    OutputSection output;
    std::uint64_t hash = 0;
};

/// Builds and validates a scenario. Unknown sections or keys, missing
/// required keys and violated physical invariants raise ConfigError naming
/// the offending `section.key`.
ScenarioConfig load_config(const IniDocument& doc);

ScenarioConfig load_config_file(const std::string& path,
                                const std::vector<std::string>& overrides = {});

}  // namespace polariton::cli
