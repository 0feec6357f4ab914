#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace polariton::quadrature {

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    std::size_t max_intervals = 20000;
};

struct Result {
    std::complex<double> value;
    double error = 0.0;
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    std::complex<double> value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const std::complex<double> fc = f(center);
    std::complex<double> kronrod = kronrod_weights[7] * fc;
    std::complex<double> gauss = gauss_weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const std::complex<double> pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod integration of a complex-valued f over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol·|I|) or `max_intervals` is hit;
/// `converged` reports which. Reentrant: all state lives on the stack.
template <class F>
Result integrate(F&& f, double a, double b, const Options& opts = {}) {
    Result res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<detail::Segment> heap;
    detail::Segment first = detail::gauss_kronrod_15(f, a, b);
    heap.push(first);
    std::complex<double> total = first.value;
    double err = first.error;
    res.evaluations = 15;

    while (true) {
        if (err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
            res.converged = true;
            break;
        }
        if (heap.size() >= opts.max_intervals) break;
        const detail::Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval at machine resolution
        heap.pop();
        const detail::Segment left = detail::gauss_kronrod_15(f, worst.a, mid);
        const detail::Segment right = detail::gauss_kronrod_15(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    err = 0.0;
    res.intervals = heap.size();
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    if (!res.converged) {
        res.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    }
    return res;
}

}  // namespace polariton::quadrature
