#include "zb/quadrature.hpp"

#include "zb/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace zb {
namespace {

// Kronrod abscissae and weights of the 15-point rule; Gauss weights of the
// embedded 7-point rule (odd Kronrod nodes plus the centre).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct RuleResult {
    double value;
    double error;
    // The error estimate is the roundoff floor; bisection cannot reduce it.
    bool at_floor;
};

double checked(const Integrand& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
        throw DomainError("integrate: integrand is not finite at an interior node");
    }
    return y;
}

// QUADPACK qk15 error heuristics.
RuleResult gauss_kronrod_15(const Integrand& f, double lo, double hi) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double abs_half = std::abs(half);

    std::array<double, 7> fv1{};
    std::array<double, 7> fv2{};
    const double fc = checked(f, centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);

    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = half * kXgk[jtw];
        const double f1 = checked(f, centre - absc);
        const double f2 = checked(f, centre + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = half * kXgk[jtwm1];
        const double f1 = checked(f, centre - absc);
        const double f2 = checked(f, centre + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }

    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    const double value = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    bool at_floor = false;
    if (resabs > uflow / (50.0 * eps) && 50.0 * eps * resabs >= err) {
        err = 50.0 * eps * resabs;
        at_floor = true;
    }
    return {value, err, at_floor};
}

struct Segment {
    const Integrand* f;
    double lo;
    double hi;
};

struct Interval {
    double lo;
    double hi;
    double value;
    double error;
    bool at_floor;
    const Integrand* f;

    bool operator<(const Interval& other) const { return error < other.error; }
};

EvalResult adaptive(const std::vector<Segment>& segments, const QuadratureControl& ctl) {
    ctl.validate();
    std::priority_queue<Interval> heap;
    std::vector<Interval> frozen;
    double total = 0.0;
    double total_err = 0.0;
    std::size_t count = 0;

    for (const Segment& s : segments) {
        if (!(s.hi > s.lo)) continue;
        const RuleResult r = gauss_kronrod_15(*s.f, s.lo, s.hi);
        heap.push({s.lo, s.hi, r.value, r.error, r.at_floor, s.f});
        total += r.value;
        total_err += r.error;
        ++count;
    }

    auto resum = [&] {
        total = 0.0;
        total_err = 0.0;
        auto copy = heap;
        while (!copy.empty()) {
            total += copy.top().value;
            total_err += copy.top().error;
            copy.pop();
        }
        for (const Interval& iv : frozen) {
            total += iv.value;
            total_err += iv.error;
        }
    };

    while (!heap.empty()) {
        if (total_err <= std::max(ctl.rel_tol * std::abs(total), ctl.abs_tol)) break;
        if (count >= ctl.max_subdivisions) {
            resum();
            throw ConvergenceError("integrate: subdivision limit reached", total, total_err);
        }
        const Interval worst = heap.top();
        heap.pop();
        const double mid = worst.lo + 0.5 * (worst.hi - worst.lo);
        if (worst.at_floor || !(mid > worst.lo && mid < worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        const RuleResult left = gauss_kronrod_15(*worst.f, worst.lo, mid);
        const RuleResult right = gauss_kronrod_15(*worst.f, mid, worst.hi);
        heap.push({worst.lo, mid, left.value, left.error, left.at_floor, worst.f});
        heap.push({mid, worst.hi, right.value, right.error, right.at_floor, worst.f});
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        ++count;
    }

    resum();
    if (heap.empty()) {
        double unresolved = 0.0;
        for (const Interval& iv : frozen) {
            if (!iv.at_floor) unresolved += iv.error;
        }
        if (unresolved > std::max(ctl.rel_tol * std::abs(total), ctl.abs_tol)) {
            throw ConvergenceError("integrate: intervals exhausted at machine resolution", total, total_err);
        }
    }
    return {total, total_err, count, Method::Quadrature};
}

}  // namespace

EvalResult integrate(const Integrand& f, double lo, double hi, const QuadratureControl& ctl) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate: limits must be finite");
    }
    if (lo == hi) return {0.0, 0.0, 0, Method::Quadrature};
    if (hi < lo) {
        EvalResult r = integrate(f, hi, lo, ctl);
        r.value = -r.value;
        return r;
    }
    return adaptive({{&f, lo, hi}}, ctl);
}

EvalResult integrate(const Integrand& f, std::span<const double> points, const QuadratureControl& ctl) {
    if (points.size() < 2) throw DomainError("integrate: need at least two points");
    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!std::isfinite(points[i]) || !std::isfinite(points[i + 1]) || points[i + 1] < points[i]) {
            throw DomainError("integrate: breakpoints must be finite and non-decreasing");
        }
        segments.push_back({&f, points[i], points[i + 1]});
    }
    return adaptive(segments, ctl);
}

EvalResult integrate_pieces(std::span<const QuadraturePiece> pieces, const QuadratureControl& ctl) {
    std::vector<Segment> segments;
    for (const QuadraturePiece& p : pieces) {
        if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || p.hi < p.lo) {
            throw DomainError("integrate_pieces: limits must be finite with lo <= hi");
        }
        segments.push_back({&p.f, p.lo, p.hi});
    }
    return adaptive(segments, ctl);
}

EvalResult integrate_semi_infinite(const Integrand& f, const QuadratureControl& ctl) {
    // s in (0, 1/2]: t = s/(1-s), dt = ds/(1-s)^2
    const Integrand lower = [&f](double s) {
        const double q = 1.0 - s;
        return f(s / q) / (q * q);
    };
    // sigma = 1-s in (0, 1/2]: t = (1-sigma)/sigma, dt = dsigma/sigma^2
    const Integrand upper = [&f](double sigma) {
        const double y = f((1.0 - sigma) / sigma);
        return y == 0.0 ? 0.0 : (y / sigma) / sigma;
    };
    return adaptive({{&lower, 0.0, 0.5}, {&upper, 0.0, 0.5}}, ctl);
}

}  // namespace zb
