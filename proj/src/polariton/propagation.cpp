#include "polariton/propagation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <sstream>

#include "polariton/constants.hpp"
#include "polariton/error.hpp"
#include "polariton/parallel.hpp"

namespace polariton {

namespace {

constexpr cplx I(0.0, 1.0);

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// Forward DFT (e^{−2πi jk/N}) on fftw_malloc'd buffers.
class ForwardDft {
public:
    explicit ForwardDft(std::size_t n) : n_(n) {
        in_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        out_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        if (in_ == nullptr || out_ == nullptr) {
            release();
            throw NumericError("FFT buffer allocation failed");
        }
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        if (plan_ == nullptr) {
            release();
            throw NumericError("FFT plan creation failed");
        }
    }
    ForwardDft(const ForwardDft&) = delete;
    ForwardDft& operator=(const ForwardDft&) = delete;
    ~ForwardDft() { release(); }

    std::vector<cplx> run(const std::vector<cplx>& input) {
        for (std::size_t j = 0; j < n_; ++j) {
            in_[j][0] = input[j].real();
            in_[j][1] = input[j].imag();
        }
        fftw_execute(plan_);
        std::vector<cplx> result(n_);
        for (std::size_t k = 0; k < n_; ++k) result[k] = {out_[k][0], out_[k][1]};
        return result;
    }

private:
    void release() {
        if (plan_ != nullptr) {
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            fftw_destroy_plan(plan_);
            plan_ = nullptr;
        }
        if (in_ != nullptr) fftw_free(in_);
        if (out_ != nullptr) fftw_free(out_);
        in_ = out_ = nullptr;
    }

    std::size_t n_;
    fftw_complex* in_ = nullptr;
    fftw_complex* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

struct Window {
    std::vector<double> time;
    std::vector<cplx> envelope;
    std::size_t peak = 0;
    double edge_ratio = 0.0;
};

// A(t_k) = dν Σ_j S_j e^{−iν_j t_k}, t_k = t_center + (k − N/2)δτ.
Window invert(ForwardDft& dft, const std::vector<double>& nu, const std::vector<cplx>& spectrum,
              double dnu, double t_center) {
    const std::size_t n = nu.size();
    const double dtau = 2.0 * constants::pi / (static_cast<double>(n) * dnu);
    const double t0 = t_center - 0.5 * static_cast<double>(n) * dtau;

    std::vector<cplx> shifted(n);
    for (std::size_t j = 0; j < n; ++j) shifted[j] = spectrum[j] * std::exp(-I * nu[j] * t0);
    const std::vector<cplx> raw = dft.run(shifted);

    Window w;
    w.time.resize(n);
    w.envelope.resize(n);
    double peak = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        w.time[k] = t0 + static_cast<double>(k) * dtau;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        w.envelope[k] = dnu * sign * raw[k];
        const double mag = std::abs(w.envelope[k]);
        if (mag > peak) {
            peak = mag;
            w.peak = k;
        }
    }
    const double edge = std::max(std::abs(w.envelope.front()), std::abs(w.envelope.back()));
    w.edge_ratio = peak > 0.0 ? edge / peak : 0.0;
    return w;
}

}  // namespace

double PropagationScenario::nu_span() const {
    return grid.nu_span > 0.0 ? grid.nu_span : 40.0 / delta_t;
}

void validate(const PropagationScenario& s) {
    if (!(s.delta_t > 0.0)) throw DomainError("pulse duration delta_t must be > 0");
    if (!(s.x >= 0.0)) throw DomainError("propagation distance x must be >= 0");
    if (!(s.v0 > 0.0)) throw DomainError("group velocity v0 must be > 0");
    if (!(s.kappa31 >= 0.0)) throw DomainError("background loss kappa31 must be >= 0");
    if (!(s.alpha0 >= 0.0)) throw DomainError("alpha0 must be >= 0");
    validate(s.eit);
    if (s.grid.n_nu < 1024 || !std::has_single_bit(s.grid.n_nu)) {
        throw DomainError("n_nu must be a power of two >= 1024");
    }
    if (s.nu_span() < 10.0 / s.delta_t) {
        throw DomainError("nu_span must be at least 10/delta_t");
    }
}

std::vector<std::string> soft_warnings(const PropagationScenario& s) {
    std::vector<std::string> w = soft_warnings(s.eit);
    if (s.kappa31 > 0.0 && s.x > 10.0 / s.kappa31) {
        w.emplace_back("propagation distance exceeds 10/kappa31");
    }
    return w;
}

cplx transfer_from_alpha(const PropagationScenario& s, double nu, cplx alpha) {
    const cplx exponent = (I * nu / s.v0 - alpha - s.kappa31) * s.x;
    if (exponent.real() < -700.0) return 0.0;
    return std::exp(exponent);
}

cplx transfer_function(const PropagationScenario& s, double nu) {
    return transfer_from_alpha(s, nu, alpha_response(s.eit, s.alpha0, nu).alpha);
}

PropagatedPulse propagate_pulse(const PropagationScenario& s) {
    validate(s);
    const std::size_t n = s.grid.n_nu;
    const double span = s.nu_span();
    const double dnu = span / static_cast<double>(n);
    const double half = static_cast<double>(n / 2);

    std::vector<double> nu(n);
    std::vector<cplx> alpha(n);
    std::vector<cplx> input(n);
    std::vector<cplx> spectrum(n);
    const double amp = s.delta_t / std::sqrt(2.0 * constants::pi);
    for (std::size_t j = 0; j < n; ++j) {
        nu[j] = (static_cast<double>(j) - half) * dnu;
        alpha[j] = alpha_response(s.eit, s.alpha0, nu[j]).alpha;
        input[j] = amp * std::exp(-0.5 * nu[j] * nu[j] * s.delta_t * s.delta_t);
        spectrum[j] = transfer_from_alpha(s, nu[j], alpha[j]) * input[j];
    }

    // Group delay from the phase slope of H at ν = 0.
    const std::size_t c = n / 2;
    const double t_group =
        s.x / s.v0 - s.x * (alpha[c + 1].imag() - alpha[c - 1].imag()) / (2.0 * dnu);

    ForwardDft dft(n);
    Window w = invert(dft, nu, spectrum, dnu, t_group);
    if (w.edge_ratio > 1e-6) {
        w = invert(dft, nu, spectrum, dnu, w.time[w.peak]);
    }
    if (w.edge_ratio > 1e-6) {
        std::ostringstream os;
        os << "spectral grid too small: envelope at window edge is " << w.edge_ratio
           << " of the peak (n_nu=" << n << ", nu_span=" << span << ")";
        throw GridError(os.str());
    }

    PropagatedPulse out;
    out.time_step = w.time[1] - w.time[0];
    double in_sum = 0.0;
    for (const cplx& a : input) in_sum += std::norm(a);
    out.energy_in = 2.0 * constants::pi * dnu * in_sum;

    double e = 0.0, m1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double p = std::norm(w.envelope[k]);
        e += p;
        m1 += p * w.time[k];
    }
    out.energy_out = e * out.time_step;

    PulseMetrics& pm = out.metrics;
    const std::size_t k = std::clamp<std::size_t>(w.peak, 1, n - 2);
    const double y0 = std::abs(w.envelope[k]);
    const double ym = std::abs(w.envelope[k - 1]);
    const double yp = std::abs(w.envelope[k + 1]);
    if (y0 > 0.0 && ym > 0.0 && yp > 0.0) {
        // Parabola through ln|A|; exact for a Gaussian peak.
        const double lm = std::log(ym), l0 = std::log(y0), lp = std::log(yp);
        const double curv = lm - 2.0 * l0 + lp;
        const double offset = curv < 0.0 ? 0.5 * (lm - lp) / curv : 0.0;
        pm.t_peak = w.time[k] + offset * out.time_step;
        pm.amp_ratio = std::exp(l0 - 0.25 * (lm - lp) * offset);
    } else {
        pm.t_peak = w.time[w.peak];
        pm.amp_ratio = std::abs(w.envelope[w.peak]);
    }
    pm.delay = pm.t_peak;
    pm.eit_delay = pm.t_peak - s.x / s.v0;
    pm.vg = pm.t_peak > 0.0 ? s.x / pm.t_peak : std::numeric_limits<double>::infinity();
    pm.l_sp = pm.vg * s.delta_t;
    if (e > 0.0) {
        pm.centroid_delay = m1 / e;
        double m2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double dt = w.time[j] - pm.centroid_delay;
            m2 += std::norm(w.envelope[j]) * dt * dt;
        }
        pm.width_ratio = std::sqrt(m2 / e) / (s.delta_t / std::sqrt(2.0));
    }

    out.time = std::move(w.time);
    out.envelope = std::move(w.envelope);
    return out;
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nullopt;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) return std::nullopt;
    return (n * sxy - sx * sy) / den;
}

DelaySweep delay_vs_control(const PropagationScenario& s, std::span<const double> omegas,
                            unsigned jobs) {
    for (double om : omegas) {
        if (!(om > 0.0)) throw DomainError("control Rabi frequencies must be > 0");
    }
    DelaySweep sweep;
    sweep.rows = parallel_map(omegas.size(), jobs, [&](std::size_t i) {
        PropagationScenario local = s;
        local.eit.Omega = omegas[i];
        const PulseMetrics m = propagate_pulse(local).metrics;
        return DelayRow{omegas[i], m.delay, m.eit_delay, m.amp_ratio};
    });
    std::vector<double> om, d;
    for (const DelayRow& r : sweep.rows) {
        om.push_back(r.Omega);
        d.push_back(r.eit_delay);
    }
    sweep.slope = loglog_slope(om, d);
    return sweep;
}

}  // namespace polariton
