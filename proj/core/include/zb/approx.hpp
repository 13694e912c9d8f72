#pragma once

#include "zb/control.hpp"

#include <cstddef>
#include <string>

namespace zb {

/// Positive parameters (a, b1, b2) of the zero-balanced F1(a; b1, b2; a+b1+b2; x, y).
struct Params {
    double a;
    double b1;
    double b2;

    /// Throws DomainError unless a, b1, b2 > 0.
    void validate() const;
    Params swapped() const noexcept { return {a, b2, b1}; }
    double bsum() const noexcept { return b1 + b2; }
};

/// Joint record of f, g, the remainder and its certified bound at one point.
struct ApproxReport {
    double x = 0.0;
    double y = 0.0;
    double f_value = 0.0;
    double g_value = 0.0;
    double remainder = 0.0;
    double remainder_integral = 0.0;
    double bound = 0.0;
    double rhombic_r = 0.0;
    /// 0 < remainder < bound, both inequalities holding with the error margin.
    bool within_bound = false;
    /// remainder > 0 with the error margin.
    bool positive = false;

    double f_error = 0.0;
    double g_error = 0.0;
    double remainder_integral_error = 0.0;
    Method f_method = Method::DirectSeries;

    /// False when a sub-evaluation failed; numeric fields are then NaN.
    bool valid = true;
    std::string error;

    /// 10 x the combined estimated error of f and g.
    double margin() const noexcept { return 10.0 * (f_error + g_error); }
};

/// f = B(a, b1+b2) F1(a; b1, b2; a+b1+b2; x, y), (x, y) in [0, 1)^2.
EvalResult f_zb(const Params& p, double x, double y, const SeriesControl& ctl = {},
                const QuadratureControl& qctl = {});

/// The approximation
///   g = ln(1/(1-x)) + gamma(a, b1+b2) + (b2 w / (b1+b2)) 3F2(1, 1, b2+1; 2, b1+b2+1; w),
///   w = (y-x)/(1-x),
/// with the 3F2 term evaluated as f2f1_tail(b2, b1+b2, w). Points with y < x are
/// evaluated as g_{a,b2,b1}(y, x) so that w stays in [0, 1]; either coordinate may
/// equal 1 but not both.
EvalResult g_approx(const Params& p, double x, double y, const SeriesControl& ctl = {});

/// g evaluated in the given orientation, without the parameter swap. Negative
/// w is handled by the 3F2 argument map w = z/(z-1). Requires x < 1.
EvalResult g_approx_direct(const Params& p, double x, double y, const SeriesControl& ctl = {});

/// r (1 + a - a ln r) with r the rhombic distance (1-x) b1 + (1-y) b2; 0 at r = 0.
double remainder_bound(const Params& p, double x, double y);

/// R = int_0^inf f_{a,1}(t) h_{b1,b2,1}(u, v; t) dt with u = 1-x, v = 1-y.
/// The integral is split at t = 1 and t = 1/r.
EvalResult remainder_integral(const Params& p, double x, double y, const QuadratureControl& qctl = {});

/// f_{a,1}(t) = t^{a-1} (1+t)^{-a} - 1/t, computed as expm1(-a log1p(1/t)) / t.
double kernel_f_trunc(double a, double t);

/// h_{b1,b2,1}(u, v; t) = (1+tu)^{-b1} (1+tv)^{-b2} - 1.
double kernel_h_trunc(double b1, double b2, double u, double v, double t);

/// ln(1/(1 - x y)).
double rough_log(double x, double y);

/// Evaluates f, g, the bound and the remainder integral at one point.
/// Sub-evaluation failures produce an invalid report instead of an exception.
ApproxReport approx_report(const Params& p, double x, double y, const SeriesControl& ctl = {},
                           const QuadratureControl& qctl = {});

/// First n_terms terms (in powers of 1-y) of the logarithmic expansion of f
/// around (1, 1); n_terms = 1 reproduces g. Points with x > y use the symmetry
/// of f.
EvalResult log_expansion_series(const Params& p, double x, double y, std::size_t n_terms,
                                const SeriesControl& ctl = {});

}  // namespace zb
