#pragma once

#include <cstdint>

namespace zb {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// psi'(x) for x > 0.
double trigamma(double x);

/// Euler beta function B(a, b) for a, b > 0.
double beta(double a, double b);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
/// Overflow is reported as +/-infinity.
double pochhammer(double a, std::uint64_t k) noexcept;

/// Ramanujan's constant gamma(a, b) = 2 psi(1) - psi(a) - psi(b).
double ramanujan_gamma(double a, double b);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace zb
