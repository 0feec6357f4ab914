#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polariton/eit.hpp"

namespace polariton {

/// Detuning grid: n_nu samples spanning nu_span rad/s, centered on ν = 0.
/// nu_span = 0 selects the default 40/δt.
struct SpectralGrid {
    std::size_t n_nu = 4096;
    double nu_span = 0.0;
};

/// Gaussian probe exp[−(t/δt)²/2] launched at x = 0 into the EIT layer.
struct PropagationScenario {
    double delta_t = 100e-9;  // s
    double x = 1e-3;          // m
    double v0 = 0.6 * 299792458.0;
    double kappa31 = 1e2;  // 1/m, bare surface-mode loss at the probe frequency
    LambdaMediumParams eit;
    double alpha0 = 1e7;  // 1/m
    SpectralGrid grid;

    [[nodiscard]] double nu_span() const;
};

void validate(const PropagationScenario& s);
std::vector<std::string> soft_warnings(const PropagationScenario& s);

struct PulseMetrics {
    double t_peak = 0.0;         // s
    double delay = 0.0;          // s, relative to the input peak at t = 0
    double eit_delay = 0.0;      // s, delay − x/v0
    double amp_ratio = 0.0;      // output peak / input peak
    double width_ratio = 0.0;    // rms width of |A|² relative to the input
    double vg = 0.0;             // m/s, x / t_peak
    double l_sp = 0.0;           // m, vg·δt
    double centroid_delay = 0.0; // s, first moment of |A|²
};

struct PropagatedPulse {
    std::vector<double> time;  // s
    std::vector<cplx> envelope;
    double time_step = 0.0;
    double energy_in = 0.0;   // Σ|A_in|² dt on the same grid
    double energy_out = 0.0;  // Σ|A_out|² dt
    PulseMetrics metrics;
};

/// H(ν) = exp{[iν/v0 − α(ν) − κ₃₁]x}; exponents with real part below −700 return 0.
cplx transfer_function(const PropagationScenario& s, double nu);
cplx transfer_from_alpha(const PropagationScenario& s, double nu, cplx alpha);

/// Applies H(ν) to the analytic Gaussian spectrum and inverts with a DFT.
/// Throws GridError when the envelope at the window edges exceeds 1e-6 of the peak.
PropagatedPulse propagate_pulse(const PropagationScenario& s);

struct DelayRow {
    double Omega = 0.0;
    double delay = 0.0;
    double eit_delay = 0.0;
    double amp_ratio = 0.0;
};

struct DelaySweep {
    std::vector<DelayRow> rows;
    /// d ln(eit_delay)/d ln Ω by least squares; empty with fewer than two rows.
    std::optional<double> slope;
};

DelaySweep delay_vs_control(const PropagationScenario& s, std::span<const double> omegas,
                            unsigned jobs = 1);

/// Least-squares slope of ln y against ln x.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace polariton
