#pragma once

#include <string>
#include <vector>

#include "polariton/cli/config.hpp"
#include "polariton/cli/csv.hpp"
#include "polariton/propagation.hpp"
#include "polariton/quantization.hpp"

namespace polariton::cli {

struct RunOptions {
    unsigned jobs = 1;
    bool plot = false;
    std::string out_dir;
    bool validate = false;
};

/// Surface-mode and EIT quantities at the probe frequency ω₃₁.
struct OperatingPoint {
    double omega31 = 0.0;  // rad/s
    DispersionPoint mode;
    double v0 = 0.0;
    double k1s = 0.0;
    double kappa31 = 0.0;
    double alpha0 = 0.0;
    /// α₀ was computed from the mode normalization rather than supplied.
    bool alpha0_computed = false;
    ModeNormalization norm;
    CouplingConstant coupling;
    LambdaMediumParams params;  // with k1s/k1c/z0 resolved
};

/// Resolves `auto` keys and computes α₀ unless the config supplies it.
OperatingPoint resolve_operating_point(const ScenarioConfig& cfg);

PropagationScenario make_scenario(const ScenarioConfig& cfg, const OperatingPoint& op);

/// A table and the file name it is written to.
struct Output {
    std::string file;
    ResultTable table;
};

/// Each command computes its tables in grid order without touching the disk.
std::vector<Output> compute_dispersion(const ScenarioConfig& cfg, unsigned jobs);
std::vector<Output> compute_lossmap(const ScenarioConfig& cfg, unsigned jobs);
std::vector<Output> compute_eit_spectrum(const ScenarioConfig& cfg, unsigned jobs);
std::vector<Output> compute_propagate(const ScenarioConfig& cfg, unsigned jobs);

/// Runs one subcommand end to end: compute, write CSVs (and SVGs), validate.
void run_command(const std::string& name, const ScenarioConfig& cfg, const RunOptions& opts);

/// CLI entry point; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace polariton::cli
