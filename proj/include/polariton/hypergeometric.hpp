#pragma once

#include <complex>

namespace polariton {

/// ₂F₁(1, b; b + 1; z) for Re b > 0 and z off the cut [1, ∞).
///
/// |z| ≤ 0.8 sums b·Σ zⁿ/(b + n); elsewhere the integral
/// b∫₀¹ t^{b−1}/(1 − zt) dt is evaluated as ∫₀¹ ds/(1 − z s^{1/b}).
/// Throws BranchCutError on the cut, DomainError for Re b ≤ 0 and
/// NumericError if neither path converges.
std::complex<double> hyp2f1_special(std::complex<double> b, std::complex<double> z);

inline constexpr double hyp2f1_series_radius = 0.8;

}  // namespace polariton
