#include "zb/hypergeometric.hpp"

#include "series.hpp"
#include "zb/error.hpp"
#include "zb/quadrature.hpp"
#include "zb/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace zb {
namespace {

bool nearly(double x, double y) {
    return std::abs(x - y) <= 1e-13 * std::max({1.0, std::abs(x), std::abs(y)});
}

void require_finite(double z, const char* fn) {
    if (!std::isfinite(z)) throw DomainError(std::string(fn) + ": argument must be finite");
}

// Sum_{k=N+1}^inf k^{-q}, Euler-Maclaurin with three correction terms.
double power_tail(double n, double q) {
    return std::pow(n, 1.0 - q) / (q - 1.0) - 0.5 * std::pow(n, -q) +
           q * std::pow(n, -q - 1.0) / 12.0;
}

// Sums t_0 + t_1 + ... with t_{k+1} = t_k * ratio(k), where the terms decay
// algebraically like k^{-p}, p > 1. Partial sums are extended by a power-law
// tail fitted to t_{N/4}, t_{N/2}, t_N at N = 256, 512, ...; the estimate is
// accepted when two successive checkpoints agree. If max_terms runs out while
// the tail model is valid, the last estimate is returned with the checkpoint
// difference as its error.
EvalResult sum_algebraic(double first, const std::function<double(std::size_t)>& ratio, double p,
                         const SeriesControl& ctl, const char* name) {
    ctl.validate();
    double term = first;
    double sum = 0.0;
    std::vector<double> checkpoint_terms;  // t at k = 64, 128, 256, ...
    std::optional<double> previous_estimate;
    double last_diff = INFINITY;
    std::size_t small = 0;

    for (std::size_t k = 0;; ++k) {
        sum += term;
        if (term == 0.0) return {sum, 0.0, k + 1, Method::DirectSeries};
        if (std::abs(term) <= std::max(ctl.rel_tol * std::abs(sum), ctl.abs_tol)) {
            if (++small >= ctl.consecutive_small) {
                return {sum, 10.0 * std::abs(term), k + 1, Method::DirectSeries};
            }
        } else {
            small = 0;
        }

        if (k >= 64 && std::has_single_bit(k)) {
            checkpoint_terms.push_back(term);
            const std::size_t m = checkpoint_terms.size();
            if (m >= 3) {
                const double n0 = static_cast<double>(k);
                const double t0 = checkpoint_terms[m - 1];
                const double t1 = checkpoint_terms[m - 2];
                const double t2 = checkpoint_terms[m - 3];
                if ((t0 > 0) == (t1 > 0) && (t1 > 0) == (t2 > 0)) {
                    // y(s) = t_j j^p = A + B s + D s^2 with s = 1/j, j in {n0, n0/2, n0/4}.
                    const double s0 = 1.0 / n0, s1 = 2.0 / n0, s2 = 4.0 / n0;
                    const double y0 = t0 * std::pow(n0, p);
                    const double y1 = t1 * std::pow(n0 / 2.0, p);
                    const double y2 = t2 * std::pow(n0 / 4.0, p);
                    const double d01 = (y1 - y0) / (s1 - s0);
                    const double d12 = (y2 - y1) / (s2 - s1);
                    const double D = (d12 - d01) / (s2 - s0);
                    const double B = d01 - D * (s0 + s1);
                    const double A = y0 - B * s0 - D * s0 * s0;
                    const double tail =
                        A * power_tail(n0, p) + B * power_tail(n0, p + 1.0) + D * power_tail(n0, p + 2.0);
                    const double estimate = sum + tail;
                    if (previous_estimate) {
                        last_diff = std::abs(estimate - *previous_estimate);
                        if (last_diff <= std::max(ctl.rel_tol * std::abs(estimate), ctl.abs_tol)) {
                            return {estimate, last_diff, k + 1, Method::DirectSeries};
                        }
                    }
                    previous_estimate = estimate;
                }
            }
        }

        if (k + 1 >= ctl.max_terms) {
            if (previous_estimate && std::isfinite(last_diff)) {
                return {*previous_estimate, last_diff, k + 1, Method::DirectSeries};
            }
            throw ConvergenceError(std::string(name) + ": series did not converge within max_terms", sum,
                                   INFINITY);
        }
        term *= ratio(k);
    }
}

double tail_by_quadrature(double b, double c, double z, const SeriesControl& ctl, double& err,
                          std::size_t& evals) {
    const double nu = c - b;
    const double one_minus_z = 1.0 - z;
    // -ln(1 - z t), with 1 - t passed separately so 1 - z t keeps its digits near t = 1.
    auto ell = [z, one_minus_z](double t, double one_minus_t) {
        if (z * t <= 0.5) return -std::log1p(-z * t);
        return -std::log(one_minus_z + z * one_minus_t);
    };

    std::vector<QuadraturePiece> pieces;
    if (b < 1.0) {
        pieces.push_back({[=](double tau) {
                              const double t = std::pow(tau, 1.0 / b);
                              return std::pow(1.0 - t, nu - 1.0) * ell(t, 1.0 - t) / b;
                          },
                          0.0, std::pow(0.5, b)});
    } else {
        pieces.push_back({[=](double t) {
                              return std::pow(t, b - 1.0) * std::pow(1.0 - t, nu - 1.0) * ell(t, 1.0 - t);
                          },
                          0.0, 0.5});
    }
    if (nu < 1.0) {
        pieces.push_back({[=](double sigma) {
                              const double m = std::pow(sigma, 1.0 / nu);
                              const double t = 1.0 - m;
                              return std::pow(t, b - 1.0) * ell(t, m) / nu;
                          },
                          0.0, std::pow(0.5, nu)});
    } else {
        pieces.push_back({[=](double t) {
                              return std::pow(t, b - 1.0) * std::pow(1.0 - t, nu - 1.0) * ell(t, 1.0 - t);
                          },
                          0.5, 1.0});
    }
    QuadratureControl qctl;
    qctl.rel_tol = std::max(10.0 * ctl.rel_tol, 1e-13);
    const EvalResult r = integrate_pieces(pieces, qctl);
    const double scale = 1.0 / beta(b, nu);
    err = r.est_error * scale;
    evals = r.terms_used;
    return r.value * scale;
}

}  // namespace

bool is_nonpositive_integer(double x) noexcept {
    return x <= 0.0 && std::floor(x) == x;
}

EvalResult pfq_series(std::span<const double> num, std::span<const double> den, double z,
                      const SeriesControl& ctl) {
    require_finite(z, "pfq_series");
    for (double b : den) {
        if (is_nonpositive_integer(b)) throw DomainError("pfq_series: denominator parameter is a non-positive integer");
    }
    const bool terminating = std::any_of(num.begin(), num.end(), is_nonpositive_integer);
    const std::size_t p = num.size();
    const std::size_t q = den.size();

    auto ratio = [&](std::size_t k) {
        const double kk = static_cast<double>(k);
        double r = z / (kk + 1.0);
        for (double a : num) r *= a + kk;
        for (double b : den) r /= b + kk;
        return r;
    };

    if (!terminating) {
        if (p > q + 1 && z != 0.0) throw DivergenceError("pfq_series: p > q+1 diverges for z != 0");
        if (p == q + 1 && std::abs(z) >= 1.0) {
            const double excess = std::accumulate(den.begin(), den.end(), 0.0) -
                                  std::accumulate(num.begin(), num.end(), 0.0);
            if (z == 1.0 && excess > 0.0) {
                return sum_algebraic(1.0, ratio, 1.0 + excess, ctl, "pfq_series");
            }
            throw DivergenceError("pfq_series: |z| >= 1 outside the convergent unit-argument case");
        }
    }

    detail::SeriesAccumulator acc(ctl, "pfq_series");
    double term = 1.0;
    for (std::size_t k = 0;; ++k) {
        if (acc.add(term)) break;
        if (term == 0.0) break;
        term *= ratio(k);
    }
    return acc.result(Method::DirectSeries);
}

EvalResult f2f1(const HypParams2F1& p, double z, const SeriesControl& ctl) {
    require_finite(z, "f2f1");
    if (is_nonpositive_integer(p.c)) throw DomainError("f2f1: c is a non-positive integer");
    if (z >= 1.0) throw DomainError("f2f1: real argument z < 1 required");

    if (z < 0.0) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        EvalResult r = f2f1({p.a, p.c - p.b, p.c}, z / (z - 1.0), ctl);
        const double factor = std::pow(1.0 - z, -p.a);
        r.value *= factor;
        r.est_error *= std::abs(factor);
        r.method = Method::Transformed;
        return r;
    }

    const double num[] = {p.a, p.b};
    const double den[] = {p.c};
    if (z <= 0.5) return pfq_series(num, den, z, ctl);

    const double excess = p.c - p.a - p.b;
    if (nearly(p.c, p.a + p.b) && p.a > 0.0 && p.b > 0.0) {
        EvalResult r = zb_2f1_log_expansion(p.a, p.b, z, ctl);
        const double scale = 1.0 / beta(p.a, p.b);
        r.value *= scale;
        r.est_error *= scale;
        return r;
    }
    if (excess < 0.0) {
        // Euler: 2F1(a,b;c;z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)
        const double enum_[] = {p.c - p.a, p.c - p.b};
        EvalResult r = pfq_series(enum_, den, z, ctl);
        const double factor = std::pow(1.0 - z, excess);
        r.value *= factor;
        r.est_error *= factor;
        r.method = Method::Transformed;
        return r;
    }
    return pfq_series(num, den, z, ctl);
}

double f2f1_unit(const HypParams2F1& p) {
    const double cab = p.c - p.a - p.b;
    if (!(p.c > 0.0 && p.c - p.a > 0.0 && p.c - p.b > 0.0 && cab > 0.0)) {
        throw DomainError("f2f1_unit: needs c, c-a, c-b, c-a-b > 0");
    }
    return std::exp(ln_gamma(p.c) + ln_gamma(cab) - ln_gamma(p.c - p.a) - ln_gamma(p.c - p.b));
}

EvalResult zb_2f1_log_expansion(double a, double b, double z, const SeriesControl& ctl) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("zb_2f1_log_expansion: a, b > 0 required");
    if (!(z > 0.0 && z < 1.0)) throw DivergenceError("zb_2f1_log_expansion: 1-z must lie in (0,1)");

    const double log_term = -std::log1p(-z);
    const double q = 1.0 - z;
    double coeff = 1.0;  // (a)_n (b)_n / (n!)^2 (1-z)^n
    double psi_1n = -kEulerGamma;
    double psi_an = digamma(a);
    double psi_bn = digamma(b);

    detail::SeriesAccumulator acc(ctl, "zb_2f1_log_expansion");
    for (std::size_t n = 0;; ++n) {
        const double term = coeff * (log_term + 2.0 * psi_1n - psi_an - psi_bn);
        if (acc.add(term)) break;
        const double nn = static_cast<double>(n);
        coeff *= (a + nn) * (b + nn) / ((nn + 1.0) * (nn + 1.0)) * q;
        psi_1n += 1.0 / (nn + 1.0);
        psi_an += 1.0 / (a + nn);
        psi_bn += 1.0 / (b + nn);
    }
    return acc.result(Method::LogExpansion);
}

double ramanujan_2f1_approx(double a, double b, double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("ramanujan_2f1_approx: x must lie in (0,1)");
    return -std::log1p(-x) + ramanujan_gamma(a, b);
}

EvalResult zb_3f2_constant_L(const HypParams3F2& p, const SeriesControl& ctl) {
    if (!nearly(p.a1 + p.a2 + p.a3, p.b1 + p.b2)) {
        throw DomainError("zb_3f2_constant_L: parameters must be zero-balanced");
    }
    if (!(p.a3 > 0.0)) throw DomainError("zb_3f2_constant_L: a3 > 0 required");
    if (!(p.a1 > 0.0) || !(p.a2 > 0.0)) throw DomainError("zb_3f2_constant_L: a1, a2 > 0 required");

    const double u = p.b2 - p.a3;
    const double w = p.b1 - p.a3;
    // k-th term (k >= 1): (u)_k (w)_k / (k (a1)_k (a2)_k); terms decay like k^{-1-a3}.
    const double first = u * w / (p.a1 * p.a2);
    auto ratio = [&](std::size_t i) {
        const double k = static_cast<double>(i + 1);
        return (u + k) * (w + k) * k / ((p.a1 + k) * (p.a2 + k) * (k + 1.0));
    };
    EvalResult series = sum_algebraic(first, ratio, 1.0 + p.a3, ctl, "zb_3f2_constant_L");
    series.value += -2.0 * kEulerGamma - digamma(p.a1) - digamma(p.a2);
    return series;
}

namespace {

// Matches 3F2(1, 1, c; 2, e) up to ordering; returns (c, e).
std::optional<std::pair<double, double>> unit_pattern(const HypParams3F2& p) {
    const double a[3] = {p.a1, p.a2, p.a3};
    double e = 0.0;
    if (p.b1 == 2.0) {
        e = p.b2;
    } else if (p.b2 == 2.0) {
        e = p.b1;
    } else {
        return std::nullopt;
    }
    for (int skip = 0; skip < 3; ++skip) {
        bool ones = true;
        for (int i = 0; i < 3; ++i) {
            if (i != skip && a[i] != 1.0) ones = false;
        }
        if (ones) return std::make_pair(a[skip], e);
    }
    return std::nullopt;
}

}  // namespace

EvalResult f3f2(const HypParams3F2& p, double z, const SeriesControl& ctl) {
    require_finite(z, "f3f2");
    if (z == 1.0) {
        if (auto ce = unit_pattern(p)) {
            return {f3f2_unit(ce->first, ce->second), 0.0, 0, Method::ClosedForm};
        }
    }
    const double num[] = {p.a1, p.a2, p.a3};
    const double den[] = {p.b1, p.b2};
    return pfq_series(num, den, z, ctl);
}

double f3f2_special_cg(double z) {
    require_finite(z, "f3f2_special_cg");
    if (z > 1.0) throw DomainError("f3f2_special_cg: z <= 1 required");
    if (z == 0.0) return 1.0;
    // ln(1/2 + sqrt(1-z)/2) = log1p(-z / (2 (1 + sqrt(1-z))))
    const double s = std::sqrt(1.0 - z);
    return -(4.0 / z) * std::log1p(-z / (2.0 * (1.0 + s)));
}

double f3f2_unit(double c, double e) {
    if (!(e > c)) throw DomainError("f3f2_unit: e > c required for convergence at z = 1");
    if (c == 1.0) return (e - 1.0) * trigamma(e - 1.0);
    return (e - 1.0) / (c - 1.0) * (digamma(e - 1.0) - digamma(e - c));
}

EvalResult f2f1_param_deriv(const HypParams2F1& p, double z, const SeriesControl& ctl) {
    require_finite(z, "f2f1_param_deriv");
    if (is_nonpositive_integer(p.c)) throw DomainError("f2f1_param_deriv: c is a non-positive integer");
    if (!(std::abs(z) < 1.0)) throw DivergenceError("f2f1_param_deriv: |z| < 1 required");
    if (p.a < 0.0) throw DomainError("f2f1_param_deriv: a >= 0 required");
    if (p.a == 0.0) return f2f1_tail(p.b, p.c, z, ctl);

    // sum_k [psi(a+k) - psi(a)] (a)_k (b)_k z^k / ((c)_k k!)
    detail::SeriesAccumulator acc(ctl, "f2f1_param_deriv");
    double term = 1.0;
    double harmonic = 0.0;
    for (std::size_t k = 0;; ++k) {
        if (acc.add(term * harmonic)) break;
        const double kk = static_cast<double>(k);
        term *= (p.a + kk) * (p.b + kk) / ((p.c + kk) * (kk + 1.0)) * z;
        harmonic += 1.0 / (p.a + kk);
    }
    return acc.result(Method::DirectSeries);
}

EvalResult f2f1_tail(double b, double c, double z, const SeriesControl& ctl) {
    require_finite(z, "f2f1_tail");
    if (!(b > 0.0) || !(c > 0.0)) throw DomainError("f2f1_tail: b, c > 0 required");
    if (!(z > -1.0 && z <= 1.0)) throw DivergenceError("f2f1_tail: z must lie in (-1, 1]");

    if (z == 1.0) {
        if (!(c - b > 0.0)) throw DivergenceError("f2f1_tail: c - b > 0 required at z = 1");
        return {digamma(c) - digamma(c - b), 0.0, 0, Method::ClosedForm};
    }
    if (z > kTailSwitch && c > b) {
        double err = 0.0;
        std::size_t evals = 0;
        const double v = tail_by_quadrature(b, c, z, ctl, err, evals);
        return {v, err, evals, Method::Quadrature};
    }

    detail::SeriesAccumulator acc(ctl, "f2f1_tail");
    double term = b * z / c;
    for (std::size_t k = 1;; ++k) {
        if (acc.add(term)) break;
        const double kk = static_cast<double>(k);
        term *= (b + kk) / (c + kk) * z * kk / (kk + 1.0);
    }
    return acc.result(Method::DirectSeries);
}

EvalResult f3f2_lemma_transform(double b, double c, double e, double z, const SeriesControl& ctl) {
    require_finite(z, "f3f2_lemma_transform");
    if (c == 1.0) throw DegenerateParameterError("f3f2_lemma_transform: c = 1 is degenerate");
    if (!(z >= 0.0 && z < 1.0)) throw DomainError("f3f2_lemma_transform: z must lie in [0, 1)");
    if (z == 0.0) return {1.0, 0.0, 0, Method::ClosedForm};

    const double c2 = e - c + 1.0;
    EvalResult inner;
    if (b == 1.0 && z > kTailSwitch && c2 > 1.0 && e > c2) {
        // 3F2(1,1,c2;2,e;z) = ((e-1)/((c2-1) z)) * tail(c2-1, e-1, z)
        inner = f2f1_tail(c2 - 1.0, e - 1.0, z, ctl);
        const double s = (e - 1.0) / ((c2 - 1.0) * z);
        inner.value *= s;
        inner.est_error *= std::abs(s);
    } else {
        inner = f3f2({1.0, b, c2, 2.0, e}, z, ctl);
    }

    const double log_one_minus_z = std::log1p(-z);
    double value = 0.0;
    double scale = 0.0;
    if (b == 1.0) {
        scale = (z - 1.0) * (e - c) / (c - 1.0);
        value = scale * inner.value + (e - 1.0) * (1.0 - z) / ((c - 1.0) * z) * (-log_one_minus_z);
    } else {
        scale = std::pow(1.0 - z, b) * (c - e) / (c - 1.0);
        // (1 - (1-z)^{b-1}) / (b-1)
        const double ratio = -std::expm1((b - 1.0) * log_one_minus_z) / (b - 1.0);
        value = scale * inner.value + (e - 1.0) * (1.0 - z) * ratio / ((c - 1.0) * z);
    }
    return {value, std::abs(scale) * inner.est_error, inner.terms_used, Method::Transformed};
}

EvalResult f3f2_to_2f1(double b, double c, double e, double z, const SeriesControl& ctl) {
    require_finite(z, "f3f2_to_2f1");
    if (b == 1.0 || c == 1.0) {
        throw DegenerateParameterError("f3f2_to_2f1: b = 1 or c = 1 is degenerate");
    }
    if (std::abs(z) < 1e-4) {
        const double num[] = {1.0, b, c};
        const double den[] = {2.0, e};
        return pfq_series(num, den, z, ctl);
    }
    EvalResult r = f2f1({b - 1.0, c - 1.0, e - 1.0}, z, ctl);
    const double s = (e - 1.0) / ((b - 1.0) * (c - 1.0) * z);
    return {s * (r.value - 1.0), std::abs(s) * r.est_error, r.terms_used, Method::Transformed};
}

}  // namespace zb
