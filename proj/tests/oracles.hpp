#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

namespace oracles {

// ₂F₁(1, b; b+1; z) in 50-digit arithmetic for real b away from the integers:
// the defining series inside the unit disk, the 1/z connection formula outside.
inline std::complex<double> hyp2f1(double b_in, std::complex<double> z_in) {
    using mp = boost::multiprecision::cpp_complex_50;
    using mpr = boost::multiprecision::cpp_bin_float_50;
    const mpr b = b_in;
    const mp z(z_in.real(), z_in.imag());
    const mpr eps("1e-40");
    auto to_double = [](const mp& v) {
        return std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    };
    if (abs(z) < 1) {
        mp sum = 0, zn = 1;
        for (int n = 0; n < 100000; ++n) {
            const mp term = zn / (b + n);
            sum += term;
            if (abs(term) < eps * abs(sum)) break;
            zn *= z;
        }
        return to_double(b * sum);
    }
    const mp w = mp(1) / z;
    mp sum = 0, wn = 1;
    for (int n = 0; n < 100000; ++n) {
        const mp term = wn / (1 - b + n);
        sum += term;
        if (abs(term) < eps * abs(sum)) break;
        wn *= w;
    }
    const mpr pi = boost::math::constants::pi<mpr>();
    const mp first = -b / ((b - 1) * z) * (1 - b) * sum;
    const mp second = pi * b / sin(pi * b) * pow(-z, mp(-b));
    return to_double(first + second);
}

}  // namespace oracles
