#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: long double arithmetic, tanh-sinh quadrature, the AGM, and
// Cohen-Villegas-Zagier acceleration of alternating series.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using ld = long double;

/// Brute-force pFq partial sums in long double until terms stay below rel * |sum|.
inline ld pfq(const std::vector<ld>& num, const std::vector<ld>& den, ld z, std::size_t max_terms = 2000000,
              ld rel = 1e-21L) {
    ld term = 1.0L;
    ld sum = 1.0L;
    std::size_t small = 0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        const ld kk = static_cast<ld>(k);
        for (ld a : num) term *= a + kk;
        for (ld b : den) term /= b + kk;
        term *= z / (kk + 1.0L);
        sum += term;
        if (std::fabs(term) <= rel * std::fabs(sum)) {
            if (++small >= 5) break;
        } else {
            small = 0;
        }
    }
    return sum;
}

/// sum_{k>=0} t_k for terms that decay like C k^{-1-s}, s > 0: N terms plus the
/// Euler-Maclaurin tail estimate t_N (N/s + 1/2 + ...) fitted from the last term.
inline ld algebraic_sum(const std::function<ld(std::size_t)>& term, std::size_t n, ld s) {
    ld sum = 0.0L;
    for (std::size_t k = 0; k < n; ++k) sum += term(k);
    const ld tn = term(n);
    const ld nn = static_cast<ld>(n);
    // sum_{k>=N} C k^{-1-s} ~ C N^{-s}/s + C N^{-1-s}/2 + (1+s) C N^{-2-s}/12
    return sum + tn * (nn / s + 0.5L + (1.0L + s) / (12.0L * nn));
}

/// Tanh-sinh quadrature of f over (0, 1). The integrand receives t and 1 - t,
/// both computed without cancellation, so endpoint singularities are resolved.
inline ld tanh_sinh01(const std::function<ld(ld, ld)>& f, ld rel = 1e-18L) {
    const ld pi = std::numbers::pi_v<ld>;
    auto node = [&](ld u, ld& weight) {
        const ld s = pi * std::sinh(u);
        const ld t = 1.0L / (1.0L + std::exp(-s));
        const ld m = 1.0L / (1.0L + std::exp(s));
        weight = t * m * pi * std::cosh(u);
        if (!(t > 0.0L) || !(m > 0.0L) || !(weight > 0.0L)) {
            weight = 0.0L;
            return 0.0L;
        }
        return f(t, m);
    };
    const ld umax = 4.0L;
    ld h = 0.5L;
    ld w0 = 0.0L;
    ld sum = node(0.0L, w0) * w0;
    for (ld u = h; u <= umax; u += h) {
        ld w1 = 0.0L;
        ld w2 = 0.0L;
        sum += node(u, w1) * w1 + node(-u, w2) * w2;
    }
    ld prev = sum * h;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5L;
        for (ld u = h; u <= umax; u += 2.0L * h) {
            ld w1 = 0.0L;
            ld w2 = 0.0L;
            sum += node(u, w1) * w1 + node(-u, w2) * w2;
        }
        const ld cur = sum * h;
        if (level >= 3 && std::fabs(cur - prev) <= rel * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

/// Integral over (a, b) by tanh-sinh.
inline ld tanh_sinh(const std::function<ld(ld)>& f, ld a, ld b) {
    return (b - a) * tanh_sinh01([&](ld t, ld) { return f(a + (b - a) * t); });
}

/// Integral over (0, inf) through t = s / (1 - s).
inline ld tanh_sinh_semi_infinite(const std::function<ld(ld)>& f) {
    return tanh_sinh01([&](ld s, ld m) { return f(s / m) / (m * m); });
}

/// Complete elliptic integral K(m) with m = k^2, by the arithmetic-geometric mean.
inline ld ellipk_agm(ld m) {
    ld a = 1.0L;
    ld b = std::sqrt(1.0L - m);
    for (int i = 0; i < 40 && std::fabs(a - b) > 1e-20L * a; ++i) {
        const ld an = 0.5L * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi_v<ld> / (2.0L * a);
}

/// sum_{k>=0} (-1)^k a_k for a totally monotone a_k (Cohen-Villegas-Zagier, algorithm 1).
inline ld alternating_sum(const std::function<ld(std::size_t)>& a, std::size_t n = 40) {
    ld d = std::pow(3.0L + std::sqrt(8.0L), static_cast<ld>(n));
    d = 0.5L * (d + 1.0L / d);
    ld b = -1.0L;
    ld c = -d;
    ld s = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        const ld kk = static_cast<ld>(k);
        const ld nn = static_cast<ld>(n);
        c = b - c;
        s += c * a(k);
        b = (kk + nn) * (kk - nn) * b / ((kk + 0.5L) * (kk + 1.0L));
    }
    return s / d;
}

/// Beta function through lgamma in long double.
inline ld beta(ld a, ld b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

/// Euler integral for 2F1(a, b; c; z), c > b > 0, z < 1.
inline ld f2f1_euler(ld a, ld b, ld c, ld z) {
    const ld p = b;
    const ld q = c - b;
    // split at 1/2 with power substitutions so both endpoint singularities vanish
    const ld left = tanh_sinh01([&](ld s, ld) {
        const ld t = 0.5L * std::pow(s, 1.0L / p);
        return std::pow(1.0L - t, q - 1.0L) * std::pow(1.0L - z * t, -a);
    });
    const ld right = tanh_sinh01([&](ld s, ld) {
        const ld m = 0.5L * std::pow(s, 1.0L / q);
        const ld t = 1.0L - m;
        return std::pow(t, p - 1.0L) * std::pow(1.0L - z + z * m, -a);
    });
    // t = (1/2) s^{1/p}: t^{p-1} dt = 2^{-p} ds / p
    return (std::pow(0.5L, p) / p * left + std::pow(0.5L, q) / q * right) / beta(p, q);
}

/// Digamma by recurrence and the asymptotic series, long double.
inline ld digamma(ld x) {
    ld acc = 0.0L;
    while (x < 20.0L) {
        acc -= 1.0L / x;
        x += 1.0L;
    }
    const ld x2 = 1.0L / (x * x);
    return acc + std::log(x) - 0.5L / x -
           x2 * (1.0L / 12 - x2 * (1.0L / 120 - x2 * (1.0L / 252 - x2 * (1.0L / 240 - x2 / 132))));
}

}  // namespace oracle
