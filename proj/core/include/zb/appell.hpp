#pragma once

#include "zb/control.hpp"

namespace zb {

/// Parameters of F1(alpha; beta1, beta2; gamma; x, y).
struct AppellParams {
    double alpha;
    double beta1;
    double beta2;
    double gamma_c;

    /// gamma = alpha + beta1 + beta2 (to rounding).
    bool zero_balanced() const noexcept;
    /// Eligible for the integral representation: zero-balanced, all positive.
    bool integral_eligible() const noexcept;
};

/// An evaluation point with the derived quantities used near the corner (1, 1).
struct Point {
    double x;
    double y;

    double u() const noexcept { return 1.0 - x; }
    double v() const noexcept { return 1.0 - y; }
    /// Argument of the line transformation, (y - x) / (1 - x).
    double w() const noexcept { return (y - x) / (1.0 - x); }
    /// Rhombic distance to (1, 1).
    double r(double b1, double b2) const noexcept { return (1.0 - x) * b1 + (1.0 - y) * b2; }
};

/// Result of a transformation formula: F1(params; point) * prefactor equals the original.
struct F1Transform {
    AppellParams params;
    Point point;
    double prefactor;
};

/// Double series summed over anti-diagonals k + n = 0, 1, 2, ... (|x|, |y| < 1).
EvalResult f1_double_series(const AppellParams& p, double x, double y, const SeriesControl& ctl = {});

/// sum_k (alpha)_k (beta1)_k / ((gamma)_k k!) 2F1(alpha+k, beta2; gamma+k; y) x^k.
EvalResult f1_single_series(const AppellParams& p, double x, double y, const SeriesControl& ctl = {});

/// Zero-balanced F1(a; b1, b2; a+b1+b2; x, y) for x, y in [0, 1) from
///   Gamma(a+b1+b2)/(Gamma(a)Gamma(b1+b2)) int_0^inf t^{a-1} (1+t)^{-a} (1+ut)^{-b1} (1+vt)^{-b2} dt.
EvalResult f1_integral(double a, double b1, double b2, double x, double y, const QuadratureControl& qctl = {});

/// F1(a; b1, b2; a+b1+b2; x, y)
///   = ((1-y)/(1-x))^{b1} F1(b1+b2; b1, a; a+b1+b2; (y-x)/(1-x), y).
F1Transform f1_transform_line(const AppellParams& p, double x, double y);

/// F1(a; b, c; d; 1-u, 1-v) = u^{-b} v^{-c} F1(d-a; b, c; d; 1-1/u, 1-1/v).
/// Throws DomainError when a transformed argument leaves (-1, 1).
F1Transform f1_transform_inverse(const AppellParams& p, double x, double y);

inline constexpr double kF1SeriesThreshold = 0.9;

/// Region dispatcher for (x, y) in [0, 1)^2:
///  - max(x, y) <= series_threshold: double series;
///  - zero-balanced positive parameters: integral representation;
///  - otherwise: single series with the larger argument inside the 2F1.
EvalResult f1_eval(const AppellParams& p, double x, double y, const SeriesControl& ctl = {},
                   const QuadratureControl& qctl = {}, double series_threshold = kF1SeriesThreshold);

/// Incomplete elliptic integral of the first kind in Legendre form,
/// F(lambda, k) = int_0^lambda dt / sqrt((1-t^2)(1-k^2 t^2)) = lambda F1(1/2; 1/2, 1/2; 3/2; lambda^2, k^2 lambda^2).
EvalResult elliptic_f(double lambda, double k, const SeriesControl& ctl = {}, const QuadratureControl& qctl = {});

}  // namespace zb
