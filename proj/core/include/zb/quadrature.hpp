#pragma once

#include "zb/control.hpp"

#include <functional>
#include <span>

namespace zb {

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over [lo, hi].
///
/// The rule is open, so integrable endpoint singularities are never sampled.
/// Throws ConvergenceError (carrying the best estimate) when the error
/// target is not met within ctl.max_subdivisions intervals.
EvalResult integrate(const Integrand& f, double lo, double hi, const QuadratureControl& ctl = {});

/// Same as integrate() over [points.front(), points.back()], with the
/// interior points used as forced breakpoints. The error target is global.
EvalResult integrate(const Integrand& f, std::span<const double> points,
                     const QuadratureControl& ctl = {});

/// One piece of a piecewise integral, typically after a change of variables
/// that differs between pieces.
struct QuadraturePiece {
    Integrand f;
    double lo;
    double hi;
};

/// Sum of the integrals of each piece, adapted under a single global error target.
EvalResult integrate_pieces(std::span<const QuadraturePiece> pieces, const QuadratureControl& ctl = {});

/// Integral of f over (0, inf) via t = s/(1-s).
///
/// The half s in (1/2, 1) is integrated in the reflected variable 1-s, so
/// power decay at infinity turns into an endpoint singularity at a
/// representable point.
EvalResult integrate_semi_infinite(const Integrand& f, const QuadratureControl& ctl = {});

}  // namespace zb
