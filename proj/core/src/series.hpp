#pragma once

// Summation helpers shared by the series evaluators. Internal header.

#include "zb/control.hpp"
#include "zb/error.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace zb::detail {

/// Partial sum under the SeriesControl stop rule.
class SeriesAccumulator {
public:
    SeriesAccumulator(const SeriesControl& ctl, std::string name) : ctl_(ctl), name_(std::move(name)) {
        ctl_.validate();
    }

    /// Adds a term. Returns true once the stop rule is satisfied; throws
    /// ConvergenceError when max_terms terms have been added without it.
    bool add(double term) {
        if (!std::isfinite(term)) {
            throw ConvergenceError(name_ + ": non-finite term", sum_, INFINITY);
        }
        sum_ += term;
        last_ = term;
        ++count_;
        if (std::abs(term) <= std::max(ctl_.rel_tol * std::abs(sum_), ctl_.abs_tol)) {
            ++small_;
        } else {
            small_ = 0;
        }
        if (small_ >= ctl_.consecutive_small) return true;
        if (count_ >= ctl_.max_terms) {
            throw ConvergenceError(name_ + ": series did not converge within max_terms", sum_,
                                   10.0 * std::abs(last_));
        }
        return false;
    }

    double sum() const noexcept { return sum_; }
    std::size_t count() const noexcept { return count_; }
    double error() const noexcept { return 10.0 * std::abs(last_); }

    EvalResult result(Method m) const { return {sum_, error(), count_, m}; }

private:
    SeriesControl ctl_;
    std::string name_;
    double sum_ = 0.0;
    double last_ = 0.0;
    std::size_t count_ = 0;
    std::size_t small_ = 0;
};

}  // namespace zb::detail
