#include "zb/verify.hpp"

#include "zb/appell.hpp"
#include "zb/approx.hpp"
#include "zb/error.hpp"
#include "zb/hypergeometric.hpp"
#include "zb/quadrature.hpp"
#include "zb/scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace zb {

Rng::Rng(std::uint64_t seed) noexcept : state_(seed) {}

// splitmix64
std::uint64_t Rng::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) noexcept {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double Rng::log_uniform(double lo, double hi) noexcept {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

bool SuiteReport::ok() const noexcept {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.informational || p.ok(); });
}

const PropertyResult* SuiteReport::find(std::string_view name) const noexcept {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

namespace {

const std::array<Params, 3> kParamSets{{{0.5, 0.5, 0.5}, {1.0, 0.3, 1.7}, {2.0, 1.0, 0.25}}};

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
    std::string s;
    char buf[64];
    for (const auto& [k, v] : fields) {
        std::snprintf(buf, sizeof buf, "%s%s=%.17g", s.empty() ? "" : " ", k, v);
        s += buf;
    }
    return s;
}

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    // measure: size of the violation (<= 0 when the case passes)
    void record(bool ok, double measure, const std::function<std::string()>& context) {
        if (ok) {
            ++r_.passed;
            return;
        }
        ++r_.failed;
        if (!(measure <= r_.worst)) r_.worst = std::isnan(measure) ? r_.worst : measure;
        if (r_.first_failure.empty()) r_.first_failure = context();
    }

    // Runs a case that may throw; an exception counts as a failure.
    void run(const std::function<void(Tally&)>& body, const std::function<std::string()>& context) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            ++r_.failed;
            if (r_.first_failure.empty()) r_.first_failure = context() + ": " + e.what();
        }
    }

    void within(double got, double want, double tol, const std::function<std::string()>& context) {
        const double diff = std::abs(got - want);
        record(diff <= tol, diff / tol, context);
    }

    PropertyResult take() { return std::move(r_); }

private:
    PropertyResult r_;
};

double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double rel_scale(double v) { return std::max(1.0, std::abs(v)); }

// 3F2(1, 1, c; 2, e; z) for any z < 1 from the Euler integral of the a = 0
// derivative: ((e-1)/((c-1) z)) (1/B(c-1, e-c)) int_0^1 t^{c-2} (1-t)^{e-c-1} (-ln(1 - z t)) dt.
double f3f2_11_by_quadrature(double c, double e, double z) {
    const double p = c - 1.0;
    const double q = e - c;
    auto g = [=](double t) { return -std::log1p(-z * t); };
    QuadratureControl qc;
    qc.rel_tol = 1e-14;
    // t = s^{1/p} on [0, 1/2], 1 - t = s^{1/q} on [1/2, 1]
    const std::array<QuadraturePiece, 2> pieces{{
        {[=](double s) {
             const double t = std::pow(s, 1.0 / p);
             return std::pow(1.0 - t, q - 1.0) * g(t) / p;
         },
         0.0, std::pow(0.5, p)},
        {[=](double s) {
             const double t = std::pow(s, 1.0 / q);
             return std::pow(1.0 - t, p - 1.0) * g(1.0 - t) / q;
         },
         0.0, std::pow(0.5, q)},
    }};
    const double integral = integrate_pieces(pieces, qc).value / beta(p, q);
    return (e - 1.0) / ((c - 1.0) * z) * integral;
}

// F(lambda, k) = int_0^{asin lambda} dtheta / sqrt(1 - k^2 sin^2 theta)
double elliptic_by_quadrature(double lambda, double k) {
    QuadratureControl qc;
    qc.rel_tol = 1e-14;
    auto f = [=](double th) {
        const double s = k * std::sin(th);
        return 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
    };
    return integrate(f, 0.0, std::asin(lambda), qc).value;
}

double cg_closed_form(double lambda, double k) {
    return std::log(4.0 / (std::sqrt(1.0 - lambda * lambda) + std::sqrt(1.0 - k * k * lambda * lambda)));
}

// ---------------------------------------------------------------- bounds

void suite_bounds(const VerifyOptions&, std::vector<PropertyResult>& out) {
    Tally positivity("positivity");
    Tally bound("certified bound");
    Tally identity("remainder identity");
    for (const Params& p : kParamSets) {
        for (std::size_t i = 0; i < 9; ++i) {
            for (std::size_t j = 0; j < 9; ++j) {
                const double x = grid_point(0.05, 0.95, i, 9);
                const double y = grid_point(0.05, 0.95, j, 9);
                auto ctx = [&] { return describe({{"a", p.a}, {"b1", p.b1}, {"b2", p.b2}, {"x", x}, {"y", y}}); };
                const ApproxReport rep = approx_report(p, x, y);
                if (!rep.valid) {
                    auto fail = [&] { return ctx() + ": " + rep.error; };
                    positivity.record(false, 1.0, fail);
                    bound.record(false, 1.0, fail);
                    identity.record(false, 1.0, fail);
                    continue;
                }
                positivity.record(rep.positive, -rep.remainder, ctx);
                if (rep.rhombic_r <= 2.0) bound.record(rep.within_bound, rep.remainder - rep.bound, ctx);
                identity.within(rep.remainder, rep.remainder_integral, 1e-8, ctx);
            }
        }
    }

    Tally order("asymptotic order");
    Tally monotone("asymptotic monotone");
    const std::array<std::pair<double, double>, 3> rays{{{1.0, 1.0}, {1.0, 3.0}, {5.0, 1.0}}};
    for (const Params& p : kParamSets) {
        for (const auto& [g1, g2] : rays) {
            double prev = 0.0;
            bool have_prev = false;
            for (double eps : {1e-2, 1e-3, 1e-4}) {
                const double x = 1.0 - g1 * eps;
                const double y = 1.0 - g2 * eps;
                auto ctx = [&] { return describe({{"a", p.a}, {"b1", p.b1}, {"b2", p.b2}, {"eps", eps}}); };
                const ApproxReport rep = approx_report(p, x, y);
                if (!rep.valid) {
                    order.record(false, 1.0, [&] { return ctx() + ": " + rep.error; });
                    have_prev = false;
                    continue;
                }
                const double ratio = rep.remainder / rep.bound;
                order.record(ratio > 0.0 && ratio < 1.0, ratio, ctx);
                // non-increasing in eps: the ratio at the larger eps may not exceed this one by more than 10%
                if (have_prev) monotone.record(prev <= 1.1 * ratio, prev / ratio - 1.1, ctx);
                prev = ratio;
                have_prev = true;
            }
        }
    }

    out.push_back(positivity.take());
    out.push_back(bound.take());
    out.push_back(identity.take());
    out.push_back(order.take());
    out.push_back(monotone.take());
}

// ---------------------------------------------------------------- lemma

void suite_lemma(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Tally f_a("f kernel: -a/t^2 < f < 0");
    Tally f_t("f kernel: -1/t < f < 0");
    Tally h_one("h kernel: -1 < h < 0");
    Tally h_r("h kernel: -t(u b1 + v b2) < h < 0");
    Tally h_strong("h kernel: stronger bound (all draws)");
    Tally h_strong_b("h kernel: stronger bound");

    Rng rng(opt.seed);
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const double a = rng.log_uniform(0.05, 5.0);
        const double b1 = rng.log_uniform(0.05, 5.0);
        const double b2 = rng.log_uniform(0.05, 5.0);
        const double u = rng.uniform(1e-3, 1.0);
        const double v = rng.uniform(1e-3, 1.0);
        const double t = rng.log_uniform(1e-3, 1e3);
        auto ctx = [&] {
            return describe({{"a", a}, {"b1", b1}, {"b2", b2}, {"u", u}, {"v", v}, {"t", t}});
        };

        const double f = kernel_f_trunc(a, t);
        const double h = kernel_h_trunc(b1, b2, u, v, t);
        f_a.record(-a / (t * t) < f && f < 0.0, f, ctx);
        f_t.record(-1.0 / t < f && f < 0.0, f, ctx);
        // h > -1 means (1+tu)^{-b1} (1+tv)^{-b2} > 0, which 1 + h cannot resolve
        // once the product drops below the rounding unit of 1.
        const double product = std::exp(-b1 * std::log1p(t * u) - b2 * std::log1p(t * v));
        h_one.record(product > 0.0 && h < 0.0, h, ctx);
        const double tr = t * (u * b1 + v * b2);
        h_r.record(-tr < h && h < 0.0, h, ctx);
        const double rhs = tr - t * t * u * v * b1 * b2;
        if (rhs > 0.0) {
            h_strong.record(-h < rhs, -h - rhs, ctx);
            // the product of the two Bernoulli bounds needs b1 t u <= 1 or b2 t v <= 1
            if (b1 * t * u <= 1.0 || b2 * t * v <= 1.0) h_strong_b.record(-h < rhs, -h - rhs, ctx);
        }
    }
    out.push_back(f_a.take());
    out.push_back(f_t.take());
    out.push_back(h_one.take());
    out.push_back(h_r.take());
    PropertyResult literal = h_strong.take();
    literal.informational = true;
    literal.note = "the bound multiplies two Bernoulli inequalities and can fail when b1 t u > 1 and b2 t v > 1";
    out.push_back(h_strong_b.take());
    out.push_back(std::move(literal));
}

// ---------------------------------------------------------------- symmetry

void suite_symmetry(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Tally grid("g symmetry grid");
    for (const Params& p : kParamSets) {
        for (std::size_t i = 0; i < 9; ++i) {
            for (std::size_t j = 0; j < 9; ++j) {
                const double x = grid_point(0.05, 0.95, i, 9);
                const double y = grid_point(0.05, 0.95, j, 9);
                auto ctx = [&] { return describe({{"a", p.a}, {"b1", p.b1}, {"b2", p.b2}, {"x", x}, {"y", y}}); };
                grid.run(
                    [&](Tally& t) {
                        const double lhs = g_approx_direct(p, x, y).value;
                        const double rhs = g_approx_direct(p.swapped(), y, x).value;
                        t.within(lhs, rhs, 1e-11, ctx);
                    },
                    ctx);
            }
        }
    }

    Tally random_g("g symmetry random");
    Tally f1_perm("F1 permutation symmetry");
    Rng rng(opt.seed);
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const Params p{rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0)};
        const double x = rng.uniform(0.02, 0.98);
        const double y = rng.uniform(0.02, 0.98);
        auto ctx = [&] { return describe({{"a", p.a}, {"b1", p.b1}, {"b2", p.b2}, {"x", x}, {"y", y}}); };
        random_g.run(
            [&](Tally& t) {
                t.within(g_approx_direct(p, x, y).value, g_approx_direct(p.swapped(), y, x).value, 1e-11, ctx);
            },
            ctx);

        const AppellParams ap{rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0),
                              rng.uniform(0.05, 2.0)};
        const double fx = rng.uniform(0.0, 0.8);
        const double fy = rng.uniform(0.0, 0.8);
        auto fctx = [&] {
            return describe({{"alpha", ap.alpha}, {"beta1", ap.beta1}, {"beta2", ap.beta2},
                             {"gamma", ap.gamma_c}, {"x", fx}, {"y", fy}});
        };
        f1_perm.run(
            [&](Tally& t) {
                const double lhs = f1_single_series(ap, fx, fy).value;
                const double rhs = f1_single_series({ap.alpha, ap.beta2, ap.beta1, ap.gamma_c}, fy, fx).value;
                t.within(lhs, rhs, 1e-12 * std::abs(rhs), fctx);
            },
            fctx);
    }
    out.push_back(grid.take());
    out.push_back(random_g.take());
    out.push_back(f1_perm.take());
}

// ---------------------------------------------------------------- reductions

void suite_reductions(const VerifyOptions& opt, std::vector<PropertyResult>& out) {
    Rng rng(opt.seed);
    const SeriesControl ctl;

    Tally diag("F1 diagonal reduction");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const AppellParams ap{rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0),
                              rng.uniform(0.05, 2.0)};
        const double z = rng.uniform(0.0, 0.9);
        auto ctx = [&] {
            return describe({{"alpha", ap.alpha}, {"beta1", ap.beta1}, {"beta2", ap.beta2},
                             {"gamma", ap.gamma_c}, {"z", z}});
        };
        diag.run(
            [&](Tally& t) {
                const double lhs = f1_double_series(ap, z, z).value;
                const double rhs = f2f1({ap.alpha, ap.beta1 + ap.beta2, ap.gamma_c}, z).value;
                t.within(lhs, rhs, 1e-12 * std::abs(rhs), ctx);
            },
            ctx);
    }

    Tally side("F1 side reduction limit");
    const std::array<AppellParams, 3> side_sets{{{0.5, 0.5, 0.5, 2.0}, {1.0, 0.3, 0.7, 2.5}, {0.3, 1.0, 0.4, 1.5}}};
    for (const AppellParams& ap : side_sets) {
        for (double z : {0.2, 0.5}) {
            auto ctx = [&] {
                return describe({{"alpha", ap.alpha}, {"beta1", ap.beta1}, {"beta2", ap.beta2},
                                 {"gamma", ap.gamma_c}, {"z", z}});
            };
            side.run(
                [&](Tally& t) {
                    const double limit = f2f1_unit({ap.alpha, ap.beta2, ap.gamma_c}) *
                                         f2f1({ap.alpha, ap.beta1, ap.gamma_c - ap.beta2}, z).value;
                    double prev = INFINITY;
                    bool ok = true;
                    for (double y : {0.9, 0.99, 0.999}) {
                        const double d = std::abs(f1_eval(ap, z, y).value - limit);
                        ok = ok && d < prev;
                        prev = d;
                    }
                    t.record(ok, prev, ctx);
                },
                ctx);
        }
    }

    Tally contiguous("2F1 contiguous relation");
    Tally euler("2F1 Euler transformation");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const double a = rng.uniform(0.5, 3.0);
        const double b = rng.uniform(0.1, 3.0);
        const double c = rng.uniform(0.5, 4.0);
        const double z = rng.uniform(0.0, 0.9);
        auto ctx = [&] { return describe({{"a", a}, {"b", b}, {"c", c}, {"z", z}}); };
        contiguous.run(
            [&](Tally& t) {
                const double t1 = (c - a - b) * f2f1({a, b, c}, z).value;
                const double t2 = (c - a) * f2f1({a - 1.0, b, c}, z).value;
                const double t3 = b * (1.0 - z) * f2f1({a, b + 1.0, c}, z).value;
                const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
                t.within(t1 - t2 + t3, 0.0, 1e-10 * scale, ctx);
            },
            ctx);
        euler.run(
            [&](Tally& t) {
                const std::array<double, 2> num{a, b};
                const std::array<double, 2> num_e{c - a, c - b};
                const std::array<double, 1> den{c};
                const double lhs = pfq_series(num, den, z, ctl).value;
                const double rhs = std::pow(1.0 - z, c - a - b) * pfq_series(num_e, den, z, ctl).value;
                t.within(lhs, rhs, 1e-12 * std::abs(lhs), ctx);
            },
            ctx);
    }

    Tally wolfram("3F2 contiguous relation");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        double a = 0.0;
        double e = 0.0;
        do {
            a = rng.uniform(0.1, 3.0);
            e = rng.uniform(1.5, 4.0);
        } while (std::abs(a - e + 1.0) < 0.1);
        const double b = rng.uniform(0.1, 3.0);
        const double c = rng.uniform(0.1, 3.0);
        const double z = rng.uniform(0.0, 0.9);
        auto ctx = [&] { return describe({{"a", a}, {"b", b}, {"c", c}, {"e", e}, {"z", z}}); };
        wolfram.run(
            [&](Tally& t) {
                const double lhs = f3f2({a, b, c, a + 1.0, e}, z).value;
                const double k = 1.0 / (a - e + 1.0);
                const double p1 = k * a * f2f1({b, c, e}, z).value;
                const double p2 = k * (e - 1.0) * f3f2({a, b, c, a + 1.0, e - 1.0}, z).value;
                const double scale = std::max({std::abs(lhs), std::abs(p1), std::abs(p2)});
                t.within(lhs, p1 - p2, 1e-10 * scale, ctx);
            },
            ctx);
    }

    Tally tail("2F1 a-derivative at a = 0 equals 3F2");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const double b = rng.uniform(0.1, 3.0);
        const double c = rng.uniform(0.1, 4.0);
        const double z = rng.uniform(-0.95, 0.95);
        auto ctx = [&] { return describe({{"b", b}, {"c", c}, {"z", z}}); };
        tail.run(
            [&](Tally& t) {
                const double lhs = f2f1_tail(b, c, z).value;
                const double rhs = b * z / c * f3f2({1.0, 1.0, b + 1.0, 2.0, c + 1.0}, z).value;
                t.within(lhs, rhs, 1e-12 * std::abs(rhs), ctx);
            },
            ctx);
    }

    Tally logexp("2F1 log expansion vs series");
    const std::array<double, 4> ab{0.3, 0.5, 1.0, 2.0};
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const double a = ab[n % 4];
        const double b = ab[(n / 4) % 4];
        const double z = rng.uniform(0.5, 0.9);
        auto ctx = [&] { return describe({{"a", a}, {"b", b}, {"z", z}}); };
        logexp.run(
            [&](Tally& t) {
                const std::array<double, 2> num{a, b};
                const std::array<double, 1> den{a + b};
                const double lhs = zb_2f1_log_expansion(a, b, z).value;
                const double rhs = beta(a, b) * pfq_series(num, den, z, ctl).value;
                t.within(lhs, rhs, 1e-10, ctx);
            },
            ctx);
    }

    Tally lemma_log("3F2 argument map, log case");
    const std::array<std::pair<double, double>, 3> ce{{{1.5, 2.0}, {1.25, 2.5}, {2.0, 3.5}}};
    for (const auto& [c, e] : ce) {
        for (int i = 1; i <= 9; ++i) {
            const double z = 0.1 * i;
            auto ctx = [&] { return describe({{"c", c}, {"e", e}, {"z", z}}); };
            lemma_log.run(
                [&](Tally& t) {
                    const double lhs = f3f2_lemma_transform(1.0, c, e, z).value;
                    const double rhs = f3f2_11_by_quadrature(c, e, z / (z - 1.0));
                    t.within(lhs, rhs, 1e-10 * rel_scale(rhs), ctx);
                },
                ctx);
        }
    }

    Tally lemma_gen("3F2 argument map, general case");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        double b = 0.0;
        do {
            b = rng.uniform(0.2, 3.0);
        } while (std::abs(b - 1.0) < 0.05);
        const double c = rng.uniform(1.2, 3.0);
        const double e = c + rng.uniform(0.2, 3.0);
        const double z = rng.uniform(0.02, 0.45);
        auto ctx = [&] { return describe({{"b", b}, {"c", c}, {"e", e}, {"z", z}}); };
        lemma_gen.run(
            [&](Tally& t) {
                const std::array<double, 3> num{1.0, b, c};
                const std::array<double, 2> den{2.0, e};
                const double lhs = f3f2_lemma_transform(b, c, e, z).value;
                const double rhs = pfq_series(num, den, z / (z - 1.0), ctl).value;
                t.within(lhs, rhs, 1e-10 * rel_scale(rhs), ctx);
            },
            ctx);
    }

    Tally g_diag("g diagonal");
    Tally g_bdry("g boundary y = 1");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const Params p{rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0)};
        const double x = rng.uniform(0.0, 0.99);
        auto ctx = [&] { return describe({{"a", p.a}, {"b1", p.b1}, {"b2", p.b2}, {"x", x}}); };
        g_diag.run(
            [&](Tally& t) {
                const double want = -std::log1p(-x) + 2.0 * digamma(1.0) - digamma(p.a) - digamma(p.bsum());
                t.within(g_approx(p, x, x).value, want, 1e-13 * rel_scale(want), ctx);
            },
            ctx);
        g_bdry.run(
            [&](Tally& t) {
                const double want = -std::log1p(-x) + 2.0 * digamma(1.0) - digamma(p.a) - digamma(p.b1);
                t.within(g_approx(p, x, 1.0).value, want, 1e-10, ctx);
            },
            ctx);
    }

    Tally cross("F1 cross-method");
    for (std::size_t n = 0; n < opt.samples; ++n) {
        const double a = rng.uniform(0.1, 2.0);
        const double b1 = rng.uniform(0.1, 2.0);
        const double b2 = rng.uniform(0.1, 2.0);
        const double x = rng.uniform(0.85, 0.95);
        const double y = rng.uniform(0.85, 0.95);
        auto ctx = [&] { return describe({{"a", a}, {"b1", b1}, {"b2", b2}, {"x", x}, {"y", y}}); };
        cross.run(
            [&](Tally& t) {
                const AppellParams ap{a, b1, b2, a + b1 + b2};
                const double d = f1_double_series(ap, x, y).value;
                const double s = f1_single_series(ap, x, y).value;
                const double q = f1_integral(a, b1, b2, x, y).value;
                const double spread = std::max({d, s, q}) - std::min({d, s, q});
                const double tol = 1e-9 * std::abs(q);
                t.record(spread <= tol, spread / tol, ctx);
            },
            ctx);
    }

    Tally triple("F1 triple-method grid");
    const std::array<AppellParams, 5> tri_sets{{{0.5, 0.5, 0.5, 1.5},
                                                {1.0, 0.3, 1.7, 3.0},
                                                {2.0, 1.0, 0.25, 3.25},
                                                {0.5, 0.5, 0.5, 2.0},
                                                {1.5, 0.7, 0.2, 1.2}}};
    for (const AppellParams& ap : tri_sets) {
        for (std::size_t i = 0; i < 7; ++i) {
            for (std::size_t j = 0; j < 7; ++j) {
                const double x = grid_point(0.1, 0.9, i, 7);
                const double y = grid_point(0.1, 0.9, j, 7);
                auto ctx = [&] {
                    return describe({{"alpha", ap.alpha}, {"beta1", ap.beta1}, {"beta2", ap.beta2},
                                     {"gamma", ap.gamma_c}, {"x", x}, {"y", y}});
                };
                triple.run(
                    [&](Tally& t) {
                        const double d = f1_double_series(ap, x, y).value;
                        double lo = d;
                        double hi = d;
                        const double s = f1_single_series(ap, x, y).value;
                        lo = std::min(lo, s);
                        hi = std::max(hi, s);
                        if (ap.integral_eligible()) {
                            const double q = f1_integral(ap.alpha, ap.beta1, ap.beta2, x, y).value;
                            lo = std::min(lo, q);
                            hi = std::max(hi, q);
                        }
                        const double tol = 1e-9 * std::abs(d);
                        t.record(hi - lo <= tol, (hi - lo) / tol, ctx);
                    },
                    ctx);
            }
        }
    }

    out.push_back(diag.take());
    out.push_back(side.take());
    out.push_back(contiguous.take());
    out.push_back(euler.take());
    out.push_back(wolfram.take());
    out.push_back(tail.take());
    out.push_back(logexp.take());
    out.push_back(lemma_log.take());
    out.push_back(lemma_gen.take());
    out.push_back(g_diag.take());
    out.push_back(g_bdry.take());
    out.push_back(cross.take());
    out.push_back(triple.take());
}

// ---------------------------------------------------------------- elliptic

void suite_elliptic(const VerifyOptions&, std::vector<PropertyResult>& out) {
    Tally quad("elliptic F vs quadrature");
    Tally mono("elliptic F monotone");
    constexpr std::size_t kN = 10;
    std::array<std::array<double, kN>, kN> values{};
    bool grid_ok = true;
    for (std::size_t i = 0; i < kN; ++i) {
        for (std::size_t j = 0; j < kN; ++j) {
            const double lambda = grid_point(0.09, 0.99, i, kN);
            const double k = grid_point(0.0, 1.0, j, kN);
            auto ctx = [&] { return describe({{"lambda", lambda}, {"k", k}}); };
            quad.run(
                [&](Tally& t) {
                    const double got = elliptic_f(lambda, k).value;
                    values[i][j] = got;
                    const double want = elliptic_by_quadrature(lambda, k);
                    t.within(got, want, 1e-10 * rel_scale(want), ctx);
                },
                [&] {
                    grid_ok = false;
                    return ctx();
                });
        }
    }
    if (grid_ok) {
        for (std::size_t i = 0; i < kN; ++i) {
            for (std::size_t j = 0; j < kN; ++j) {
                auto ctx = [&] { return describe({{"i", double(i)}, {"j", double(j)}}); };
                if (i + 1 < kN) mono.record(values[i + 1][j] > values[i][j], values[i][j] - values[i + 1][j], ctx);
                if (j + 1 < kN) mono.record(values[i][j + 1] > values[i][j], values[i][j] - values[i][j + 1], ctx);
            }
        }
    }

    Tally cg("Carlson-Gustafson closed form");
    const Params half{0.5, 0.5, 0.5};
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const double lambda = grid_point(0.5, 0.99, i, 8);
            const double k = grid_point(0.0, 1.0, j, 8);
            auto ctx = [&] { return describe({{"lambda", lambda}, {"k", k}}); };
            cg.run(
                [&](Tally& t) {
                    const double x = lambda * lambda;
                    const double got = g_approx(half, x, k * k * x).value;
                    t.within(got, 2.0 * cg_closed_form(lambda, k), 1e-11, ctx);
                },
                ctx);
        }
    }

    Tally cg_err("Carlson-Gustafson error bound");
    for (double lambda : {0.9, 0.99}) {
        for (double k : {0.9, 0.99}) {
            auto ctx = [&] { return describe({{"lambda", lambda}, {"k", k}}); };
            cg_err.run(
                [&](Tally& t) {
                    const double x = lambda * lambda;
                    const double err = std::abs(elliptic_f(lambda, k).value - cg_closed_form(lambda, k));
                    const double lim = remainder_bound(half, x, k * k * x) / 2.0;
                    t.record(err <= lim, err - lim, ctx);
                },
                ctx);
        }
    }

    out.push_back(quad.take());
    out.push_back(mono.take());
    out.push_back(cg.take());
    out.push_back(cg_err.take());
}

using SuiteFn = void (*)(const VerifyOptions&, std::vector<PropertyResult>&);

const std::array<std::pair<std::string_view, SuiteFn>, 5> kSuites{{
    {"bounds", suite_bounds},
    {"lemma", suite_lemma},
    {"symmetry", suite_symmetry},
    {"reductions", suite_reductions},
    {"elliptic", suite_elliptic},
}};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bounds", "lemma", "symmetry", "reductions", "elliptic", "all"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = std::string(name);
    if (name == "all") {
        for (const auto& [n, fn] : kSuites) fn(opt, rep.properties);
        return rep;
    }
    for (const auto& [n, fn] : kSuites) {
        if (n == name) {
            fn(opt, rep.properties);
            return rep;
        }
    }
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace zb
