#include "zb/appell.hpp"

#include "series.hpp"
#include "zb/error.hpp"
#include "zb/hypergeometric.hpp"
#include "zb/quadrature.hpp"
#include "zb/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace zb {
namespace {

void require_unit_disc(double x, double y, const char* fn) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(std::abs(x) < 1.0) || !(std::abs(y) < 1.0)) {
        throw DivergenceError(std::string(fn) + ": |x| < 1 and |y| < 1 required");
    }
}

void require_half_open_square(double x, double y, const char* fn) {
    if (!(x >= 0.0 && x < 1.0) || !(y >= 0.0 && y < 1.0)) {
        throw DomainError(std::string(fn) + ": (x, y) must lie in [0, 1)^2");
    }
}

void require_gamma(const AppellParams& p, const char* fn) {
    if (is_nonpositive_integer(p.gamma_c)) {
        throw DomainError(std::string(fn) + ": gamma is a non-positive integer");
    }
}

}  // namespace

bool AppellParams::zero_balanced() const noexcept {
    const double s = alpha + beta1 + beta2;
    return std::abs(gamma_c - s) <= 1e-13 * std::max({1.0, std::abs(gamma_c), std::abs(s)});
}

bool AppellParams::integral_eligible() const noexcept {
    return zero_balanced() && alpha > 0.0 && beta1 > 0.0 && beta2 > 0.0;
}

EvalResult f1_double_series(const AppellParams& p, double x, double y, const SeriesControl& ctl) {
    require_unit_disc(x, y, "f1_double_series");
    require_gamma(p, "f1_double_series");

    // term(k, n) = A_{k+n} X_k Y_n with A_N = (alpha)_N/(gamma)_N,
    // X_k = (beta1)_k x^k / k!, Y_n = (beta2)_n y^n / n!.
    std::vector<double> xs{1.0};
    std::vector<double> ys{1.0};
    double a_n = 1.0;
    detail::SeriesAccumulator acc(ctl, "f1_double_series");
    for (std::size_t n = 0;; ++n) {
        if (n > 0) {
            const double nn = static_cast<double>(n);
            xs.push_back(xs.back() * (p.beta1 + nn - 1.0) / nn * x);
            ys.push_back(ys.back() * (p.beta2 + nn - 1.0) / nn * y);
        }
        double diagonal = 0.0;
        for (std::size_t k = 0; k <= n; ++k) diagonal += xs[k] * ys[n - k];
        if (acc.add(a_n * diagonal)) break;
        const double nn = static_cast<double>(n);
        a_n *= (p.alpha + nn) / (p.gamma_c + nn);
    }
    return acc.result(Method::DirectSeries);
}

EvalResult f1_single_series(const AppellParams& p, double x, double y, const SeriesControl& ctl) {
    require_unit_disc(x, y, "f1_single_series");
    require_gamma(p, "f1_single_series");

    detail::SeriesAccumulator acc(ctl, "f1_single_series");
    double coeff = 1.0;  // (alpha)_k (beta1)_k x^k / ((gamma)_k k!)
    double inner_err = 0.0;
    std::size_t inner_terms = 0;
    for (std::size_t k = 0;; ++k) {
        const double kk = static_cast<double>(k);
        double term = 0.0;
        if (coeff != 0.0) {
            const EvalResult inner = f2f1({p.alpha + kk, p.beta2, p.gamma_c + kk}, y, ctl);
            term = coeff * inner.value;
            inner_err += std::abs(coeff) * inner.est_error;
            inner_terms += inner.terms_used;
        }
        if (acc.add(term)) break;
        coeff *= (p.alpha + kk) * (p.beta1 + kk) / ((p.gamma_c + kk) * (kk + 1.0)) * x;
    }
    EvalResult r = acc.result(Method::DirectSeries);
    r.est_error += inner_err;
    return r;
}

EvalResult f1_integral(double a, double b1, double b2, double x, double y, const QuadratureControl& qctl) {
    if (!(a > 0.0) || !(b1 > 0.0) || !(b2 > 0.0)) {
        throw DomainError("f1_integral: a, b1, b2 > 0 required");
    }
    require_half_open_square(x, y, "f1_integral");

    const double u = 1.0 - x;
    const double v = 1.0 - y;
    const double bsum = b1 + b2;

    // log of (1+t)^{-a} (1+ut)^{-b1} (1+vt)^{-b2}
    auto log_core = [=](double t) {
        return -a * std::log1p(t) - b1 * std::log1p(u * t) - b2 * std::log1p(v * t);
    };

    std::vector<double> breaks{1.0, 1.0 / std::max(u, v), 1.0 / std::min(u, v)};
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double l, double r) { return r <= l * (1.0 + 1e-12); }),
                 breaks.end());
    const double last = breaks.back();

    std::vector<QuadraturePiece> pieces;
    if (a < 1.0) {
        // t = tau^{1/a}: t^{a-1} dt = dtau / a
        pieces.push_back({[=](double tau) { return std::exp(log_core(std::pow(tau, 1.0 / a))) / a; }, 0.0, 1.0});
    } else {
        pieces.push_back({[=](double t) { return std::pow(t, a - 1.0) * std::exp(log_core(t)); }, 0.0, 1.0});
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        // t = e^s: t^{a-1} dt = t^a ds
        pieces.push_back({[=](double s) { return std::exp(a * s + log_core(std::exp(s))); },
                          std::log(breaks[i]), std::log(breaks[i + 1])});
    }
    // t = P tau^{-1/B} on (P, inf); the integrand becomes bounded at tau = 0.
    const double tail_scale = std::pow(last, -bsum) / bsum;
    pieces.push_back({[=](double tau) {
                          const double inv_t = std::pow(tau, 1.0 / bsum) / last;
                          return tail_scale * std::exp(-a * std::log1p(inv_t) - b1 * std::log(u + inv_t) -
                                                       b2 * std::log(v + inv_t));
                      },
                      0.0, 1.0});

    EvalResult r = integrate_pieces(pieces, qctl);
    const double prefactor = 1.0 / beta(a, bsum);
    r.value *= prefactor;
    r.est_error *= prefactor;
    r.method = Method::Quadrature;
    return r;
}

F1Transform f1_transform_line(const AppellParams& p, double x, double y) {
    if (!p.zero_balanced()) throw DomainError("f1_transform_line: zero-balanced parameters required");
    if (!std::isfinite(x) || !std::isfinite(y) || x == 1.0) {
        throw DomainError("f1_transform_line: finite x != 1 required");
    }
    const double ratio = (1.0 - y) / (1.0 - x);
    return {{p.beta1 + p.beta2, p.beta1, p.alpha, p.gamma_c},
            {(y - x) / (1.0 - x), y},
            std::pow(ratio, p.beta1)};
}

F1Transform f1_transform_inverse(const AppellParams& p, double x, double y) {
    if (!(p.gamma_c - p.alpha > 0.0)) throw DomainError("f1_transform_inverse: gamma - alpha > 0 required");
    const double u = 1.0 - x;
    const double v = 1.0 - y;
    if (!(u > 0.0) || !(v > 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
        throw DomainError("f1_transform_inverse: x, y < 1 required");
    }
    const Point mapped{1.0 - 1.0 / u, 1.0 - 1.0 / v};
    if (!(std::abs(mapped.x) < 1.0) || !(std::abs(mapped.y) < 1.0)) {
        throw DomainError("f1_transform_inverse: transformed arguments leave (-1, 1)");
    }
    return {{p.gamma_c - p.alpha, p.beta1, p.beta2, p.gamma_c},
            mapped,
            std::pow(u, -p.beta1) * std::pow(v, -p.beta2)};
}

EvalResult f1_eval(const AppellParams& p, double x, double y, const SeriesControl& ctl,
                   const QuadratureControl& qctl, double series_threshold) {
    require_half_open_square(x, y, "f1_eval");
    require_gamma(p, "f1_eval");
    if (std::max(x, y) <= series_threshold) return f1_double_series(p, x, y, ctl);
    if (p.integral_eligible()) return f1_integral(p.alpha, p.beta1, p.beta2, x, y, qctl);
    if (x > y) {
        EvalResult r = f1_single_series({p.alpha, p.beta2, p.beta1, p.gamma_c}, y, x, ctl);
        r.method = Method::Transformed;
        return r;
    }
    return f1_single_series(p, x, y, ctl);
}

EvalResult elliptic_f(double lambda, double k, const SeriesControl& ctl, const QuadratureControl& qctl) {
    if (!(lambda >= 0.0 && lambda < 1.0) || !(k >= 0.0 && k <= 1.0)) {
        throw DomainError("elliptic_f: 0 <= lambda < 1 and 0 <= k <= 1 required");
    }
    if (lambda == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    if (k == 1.0) return {std::atanh(lambda), 0.0, 0, Method::ClosedForm};
    const double x = lambda * lambda;
    EvalResult r = f1_eval({0.5, 0.5, 0.5, 1.5}, x, k * k * x, ctl, qctl);
    r.value *= lambda;
    r.est_error *= lambda;
    return r;
}

}  // namespace zb
