#include "zb/scalar.hpp"

#include "zb/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace zb {
namespace {

void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be finite and > 0");
    }
}

// zeta(k) - 1 for k = 2..40.
constexpr std::array<double, 39> kZetaMinusOne = {
    6.44934066848226406e-01, 2.02056903159594292e-01, 8.23232337111381857e-02,
    3.69277551433699266e-02, 1.73430619844491402e-02, 8.34927738192282713e-03,
    4.07735619794433960e-03, 2.00839282608221426e-03, 9.94575127818085256e-04,
    4.94188604119464529e-04, 2.46086553308048320e-04, 1.22713347578489145e-04,
    6.12481350587048277e-05, 3.05882363070204933e-05, 1.52822594086518710e-05,
    7.63719763789976257e-06, 3.81729326499984022e-06, 1.90821271655393897e-06,
    9.53962033872796212e-07, 4.76932986787806447e-07, 2.38450502727733004e-07,
    1.19219925965311064e-07, 5.96081890512594801e-08, 2.98035035146522793e-08,
    1.49015548283650427e-08, 7.45071178983543006e-09, 3.72533402478845728e-09,
    1.86265972351304914e-09, 9.31327432419668166e-10, 4.65662906503378366e-10,
    2.32831183367650534e-10, 1.16415501727005193e-10, 5.82077208790270145e-11,
    2.91038504449710001e-11, 1.45519218910419849e-11, 7.27595983505748180e-12,
    3.63797954737865086e-12, 1.81898965030706607e-12, 9.09494784026388841e-13,
};

// ln Gamma(1 + eps) for |eps| <= 1/2, accurate relative to the value near eps = 0.
double ln_gamma_1p(double eps) {
    double sum = 0.0;
    double power = -eps;
    for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
        const double k = static_cast<double>(i + 2);
        power *= -eps;
        const double term = kZetaMinusOne[i] * power / k;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return -std::log1p(eps) + eps * (1.0 - kEulerGamma) + sum;
}

double stirling_ln_gamma(double x) {
    constexpr double half_ln_2pi = 0.91893853320467274178032973640562;
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_{2k} / (2k (2k-1)), k = 1..8
    const double series =
        inv * (1.0 / 12.0 +
        inv2 * (-1.0 / 360.0 +
        inv2 * (1.0 / 1260.0 +
        inv2 * (-1.0 / 1680.0 +
        inv2 * (1.0 / 1188.0 +
        inv2 * (-691.0 / 360360.0 +
        inv2 * (1.0 / 156.0 +
        inv2 * (-3617.0 / 122400.0))))))));
    return (x - 0.5) * std::log(x) - x + half_ln_2pi + series;
}

constexpr double kShift = 10.0;

}  // namespace

double ln_gamma(double x) {
    require_positive(x, "ln_gamma");
    if (x < 0.5) return ln_gamma_1p(x) - std::log(x);
    if (x < 1.5) return ln_gamma_1p(x - 1.0);
    if (x < 2.5) return std::log1p(x - 2.0) + ln_gamma_1p(x - 2.0);
    if (x < kShift) {
        double y = x;
        double product = 1.0;
        while (y >= 2.5) {
            y -= 1.0;
            product *= y;
        }
        return std::log1p(y - 2.0) + ln_gamma_1p(y - 2.0) + std::log(product);
    }
    return stirling_ln_gamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double shift_sum = 0.0;
    while (x < kShift) {
        shift_sum += 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // B_{2k} / (2k), k = 1..7
    const double series =
        inv2 * (1.0 / 12.0 +
        inv2 * (-1.0 / 120.0 +
        inv2 * (1.0 / 252.0 +
        inv2 * (-1.0 / 240.0 +
        inv2 * (1.0 / 132.0 +
        inv2 * (-691.0 / 32760.0 +
        inv2 * (1.0 / 12.0)))))));
    return std::log(x) - 0.5 / x - series - shift_sum;
}

double trigamma(double x) {
    require_positive(x, "trigamma");
    double shift_sum = 0.0;
    while (x < kShift) {
        shift_sum += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_{2k} / x^{2k+1}, k = 1..7
    const double series =
        inv * inv2 * (1.0 / 6.0 +
        inv2 * (-1.0 / 30.0 +
        inv2 * (1.0 / 42.0 +
        inv2 * (-1.0 / 30.0 +
        inv2 * (5.0 / 66.0 +
        inv2 * (-691.0 / 2730.0 +
        inv2 * (7.0 / 6.0)))))));
    return inv + 0.5 * inv2 + series + shift_sum;
}

double beta(double a, double b) {
    require_positive(a, "beta");
    require_positive(b, "beta");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double pochhammer(double a, std::uint64_t k) noexcept {
    double p = 1.0;
    for (std::uint64_t j = 0; j < k; ++j) p *= a + static_cast<double>(j);
    return p;
}

double ramanujan_gamma(double a, double b) {
    require_positive(a, "ramanujan_gamma");
    require_positive(b, "ramanujan_gamma");
    return -2.0 * kEulerGamma - digamma(a) - digamma(b);
}

}  // namespace zb
