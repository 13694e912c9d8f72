#include "zb/approx.hpp"

#include "zb/appell.hpp"
#include "zb/error.hpp"
#include "zb/hypergeometric.hpp"
#include "zb/quadrature.hpp"
#include "zb/scalar.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <vector>

namespace zb {
namespace {

void require_square(double x, double y, const char* fn) {
    if (!(x >= 0.0 && x < 1.0) || !(y >= 0.0 && y < 1.0)) {
        throw DomainError(std::string(fn) + ": (x, y) must lie in [0, 1)^2");
    }
}

void require_closed_square(double x, double y, const char* fn) {
    if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
        throw DomainError(std::string(fn) + ": (x, y) must lie in [0, 1]^2");
    }
    if (x == 1.0 && y == 1.0) {
        throw SingularPointError(std::string(fn) + ": (1, 1) is the singular corner");
    }
}

}  // namespace

void Params::validate() const {
    if (!(a > 0.0) || !(b1 > 0.0) || !(b2 > 0.0) || !std::isfinite(a + b1 + b2)) {
        throw DomainError("Params: a, b1, b2 must be finite and > 0");
    }
}

EvalResult f_zb(const Params& p, double x, double y, const SeriesControl& ctl, const QuadratureControl& qctl) {
    p.validate();
    require_square(x, y, "f_zb");
    const double bsum = p.bsum();
    EvalResult r = f1_eval({p.a, p.b1, p.b2, p.a + bsum}, x, y, ctl, qctl);
    const double scale = beta(p.a, bsum);
    r.value *= scale;
    r.est_error *= scale;
    return r;
}

EvalResult g_approx_direct(const Params& p, double x, double y, const SeriesControl& ctl) {
    p.validate();
    if (!(x >= 0.0 && x < 1.0) || !(y >= 0.0 && y <= 1.0)) {
        throw DomainError("g_approx_direct: x in [0, 1) and y in [0, 1] required");
    }
    const double bsum = p.bsum();
    const double base = -std::log1p(-x) + ramanujan_gamma(p.a, bsum);
    const double w = (y - x) / (1.0 - x);

    EvalResult term;
    if (w >= 0.0) {
        term = f2f1_tail(p.b2, bsum, w, ctl);
    } else {
        // w = z/(z-1) with z = (x-y)/(1-y) in (0, 1)
        const double z = (x - y) / (1.0 - y);
        const EvalResult h = f3f2_lemma_transform(1.0, p.b2 + 1.0, bsum + 1.0, z, ctl);
        const double s = p.b2 * w / bsum;
        term = {s * h.value, std::abs(s) * h.est_error, h.terms_used, h.method};
    }
    term.value += base;
    return term;
}

EvalResult g_approx(const Params& p, double x, double y, const SeriesControl& ctl) {
    p.validate();
    require_closed_square(x, y, "g_approx");
    if (y < x) return g_approx_direct(p.swapped(), y, x, ctl);
    return g_approx_direct(p, x, y, ctl);
}

double remainder_bound(const Params& p, double x, double y) {
    p.validate();
    const double r = (1.0 - x) * p.b1 + (1.0 - y) * p.b2;
    if (!(r > 0.0)) return 0.0;
    return r * (1.0 + p.a - p.a * std::log(r));
}

double kernel_f_trunc(double a, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("kernel_f_trunc: t > 0 required");
    return std::expm1(-a * std::log1p(1.0 / t)) / t;
}

double kernel_h_trunc(double b1, double b2, double u, double v, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("kernel_h_trunc: t > 0 required");
    if (!(u >= 0.0) || !(v >= 0.0)) throw DomainError("kernel_h_trunc: u, v >= 0 required");
    return std::expm1(-b1 * std::log1p(t * u) - b2 * std::log1p(t * v));
}

EvalResult remainder_integral(const Params& p, double x, double y, const QuadratureControl& qctl) {
    p.validate();
    if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
        throw DomainError("remainder_integral: (x, y) must lie in [0, 1]^2");
    }
    const double u = 1.0 - x;
    const double v = 1.0 - y;
    if (u == 0.0 && v == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};

    const double r = u * p.b1 + v * p.b2;
    auto product = [=](double t) {
        return kernel_f_trunc(p.a, t) * kernel_h_trunc(p.b1, p.b2, u, v, t);
    };

    std::vector<QuadraturePiece> pieces;
    pieces.push_back({product, 0.0, 1.0});
    const double split = std::max(1.0, 1.0 / r);
    if (split > 1.0) {
        // t = e^s on [1, 1/r]
        pieces.push_back({[=](double s) {
                              const double t = std::exp(s);
                              return product(t) * t;
                          },
                          0.0, std::log(split)});
    }
    // t = split / tau on [split, inf)
    pieces.push_back({[=](double tau) { return product(split / tau) * split / (tau * tau); }, 0.0, 1.0});
    return integrate_pieces(pieces, qctl);
}

double rough_log(double x, double y) {
    const double xy = x * y;
    if (!(xy < 1.0)) throw DomainError("rough_log: x y < 1 required");
    return -std::log1p(-xy);
}

ApproxReport approx_report(const Params& p, double x, double y, const SeriesControl& ctl,
                           const QuadratureControl& qctl) {
    ApproxReport rep;
    rep.x = x;
    rep.y = y;
    try {
        p.validate();
        require_square(x, y, "approx_report");
        const EvalResult f = f_zb(p, x, y, ctl, qctl);
        const EvalResult g = g_approx(p, x, y, ctl);
        const EvalResult ri = remainder_integral(p, x, y, qctl);

        rep.f_value = f.value;
        rep.f_error = f.est_error;
        rep.f_method = f.method;
        rep.g_value = g.value;
        rep.g_error = g.est_error;
        rep.remainder = f.value - g.value;
        rep.remainder_integral = ri.value;
        rep.remainder_integral_error = ri.est_error;
        rep.rhombic_r = (1.0 - x) * p.b1 + (1.0 - y) * p.b2;
        rep.bound = remainder_bound(p, x, y);

        const double margin = rep.margin();
        rep.positive = rep.remainder > margin;
        rep.within_bound = rep.positive && rep.remainder + margin < rep.bound;
    } catch (const std::exception& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        rep.f_value = rep.g_value = rep.remainder = rep.remainder_integral = nan;
        rep.bound = rep.rhombic_r = nan;
        rep.f_error = rep.g_error = rep.remainder_integral_error = nan;
        rep.within_bound = rep.positive = false;
        rep.valid = false;
        rep.error = e.what();
    }
    return rep;
}

EvalResult log_expansion_series(const Params& p, double x, double y, std::size_t n_terms,
                                const SeriesControl& ctl) {
    p.validate();
    require_square(x, y, "log_expansion_series");
    if (n_terms < 1) throw DomainError("log_expansion_series: n_terms >= 1 required");
    if (x > y) return log_expansion_series(p.swapped(), y, x, n_terms, ctl);

    const double bsum = p.bsum();
    const double m = (1.0 - y) / (1.0 - x);
    const double w = (y - x) / (1.0 - x);
    const double log_y = -std::log1p(-y);

    double coeff = 1.0;  // (a)_n (b1+b2)_n / (n!)^2 (1-y)^n
    double psi_1n = -kEulerGamma;
    double psi_an = digamma(p.a);
    double psi_bn = digamma(bsum);
    double sum = 0.0;
    double err = 0.0;
    std::size_t work = 0;
    for (std::size_t n = 0; n < n_terms; ++n) {
        const double nn = static_cast<double>(n);
        const HypParams2F1 hp{bsum + nn, p.b1, bsum};
        const EvalResult f = f2f1(hp, w, ctl);
        const EvalResult fd = f2f1_param_deriv(hp, w, ctl);
        const double bracket = log_y + 2.0 * psi_1n - psi_an - psi_bn;
        sum += coeff * (bracket * f.value - fd.value);
        err += std::abs(coeff) * (std::abs(bracket) * f.est_error + fd.est_error);
        work += f.terms_used + fd.terms_used;

        coeff *= (p.a + nn) * (bsum + nn) / ((nn + 1.0) * (nn + 1.0)) * (1.0 - y);
        psi_1n += 1.0 / (nn + 1.0);
        psi_an += 1.0 / (p.a + nn);
        psi_bn += 1.0 / (bsum + nn);
    }
    const double prefactor = std::pow(m, p.b1);
    return {prefactor * sum, prefactor * err, work, Method::LogExpansion};
}

}  // namespace zb
