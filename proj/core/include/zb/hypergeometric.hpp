#pragma once

#include "zb/control.hpp"

#include <span>

namespace zb {

struct HypParams2F1 {
    double a;
    double b;
    double c;
};

/// Parameters of 3F2(a1, a2, a3; b1, b2; z).
struct HypParams3F2 {
    double a1;
    double a2;
    double a3;
    double b1;
    double b2;
};

/// True when x is 0, -1, -2, ... (a pole of the series coefficients).
bool is_nonpositive_integer(double x) noexcept;

/// Truncated pFq series.
///
/// For p = q+1 the series needs |z| < 1, or z = 1 with sum(den) - sum(num) > 0;
/// the unit-argument case converges algebraically and is summed with a
/// fitted power-law tail. Terminating series (a numerator parameter that is a
/// non-positive integer) are summed exactly for any z.
EvalResult pfq_series(std::span<const double> num, std::span<const double> den, double z,
                      const SeriesControl& ctl = {});

/// Gauss 2F1 for real z < 1, dispatching between the direct series, the
/// zero-balanced log expansion, the Euler transformation and the Pfaff map.
EvalResult f2f1(const HypParams2F1& p, double z, const SeriesControl& ctl = {});

/// Gauss's sum 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)),
/// for c, c-a, c-b and c-a-b all positive.
double f2f1_unit(const HypParams2F1& p);

/// B(a,b) 2F1(a, b; a+b; z) summed in powers of 1-z:
///   sum_n (a)_n (b)_n / (n!)^2 [-ln(1-z) + 2 psi(n+1) - psi(a+n) - psi(b+n)] (1-z)^n.
EvalResult zb_2f1_log_expansion(double a, double b, double z, const SeriesControl& ctl = {});

/// Ramanujan's leading-order approximation -ln(1-x) + gamma(a,b) to B(a,b) 2F1(a,b;a+b;x).
double ramanujan_2f1_approx(double a, double b, double x);

/// Additive constant L in
///   Gamma(a1)Gamma(a2)Gamma(a3)/(Gamma(b1)Gamma(b2)) 3F2(x) = -ln(1-x) + L + o(1), x -> 1-,
/// for zero-balanced parameters with a3 > 0.
EvalResult zb_3f2_constant_L(const HypParams3F2& p, const SeriesControl& ctl = {});

/// 3F2 by direct series. At z = 1 the pattern (1, 1, c; 2, e) uses the
/// closed form f3f2_unit(); other unit-argument cases need b1+b2-a1-a2-a3 > 0.
EvalResult f3f2(const HypParams3F2& p, double z, const SeriesControl& ctl = {});

/// 3F2(1, 1, 3/2; 2, 2; z) = -(4/z) ln(1/2 + sqrt(1-z)/2), z <= 1 (value 1 at z = 0).
double f3f2_special_cg(double z);

/// 3F2(1, 1, c; 2, e; 1) = ((e-1)/(c-1)) (psi(e-1) - psi(e-c)); requires e > c.
/// At c = 1 returns the limit (e-1) psi'(e-1).
double f3f2_unit(double c, double e);

/// d/da 2F1(a, b; c; z) for 0 <= z < 1. a = 0 dispatches to f2f1_tail().
EvalResult f2f1_param_deriv(const HypParams2F1& p, double z, const SeriesControl& ctl = {});

/// d/da 2F1(a, b; c; z) at a = 0:
///   sum_{k>=1} (b)_k z^k / ((c)_k k) = (b z / c) 3F2(1, 1, b+1; 2, c+1; z),
/// for z in (-1, 1]. z = 1 returns psi(c) - psi(c-b).
/// For z above kTailSwitch (with c > b > 0) the value comes from the Euler
/// integral (1/B(b,c-b)) int_0^1 t^{b-1} (1-t)^{c-b-1} (-ln(1 - z t)) dt.
EvalResult f2f1_tail(double b, double c, double z, const SeriesControl& ctl = {});

inline constexpr double kTailSwitch = 0.75;

/// 3F2(1, b, c; 2, e; z/(z-1)) evaluated through series in z, z in [0, 1).
/// b = 1 uses the logarithmic form of the relation.
EvalResult f3f2_lemma_transform(double b, double c, double e, double z, const SeriesControl& ctl = {});

/// 3F2(1, b, c; 2, e; z) = ((e-1)/((b-1)(c-1)z)) [2F1(b-1, c-1; e-1; z) - 1].
/// |z| < 1e-4 falls back to the direct series.
EvalResult f3f2_to_2f1(double b, double c, double e, double z, const SeriesControl& ctl = {});

}  // namespace zb
