#pragma once

#include <cstddef>
#include <string_view>

namespace zb {

/// Truncation policy shared by every hypergeometric series in the library.
///
/// A series stops after `consecutive_small` successive terms satisfy
/// |term| <= max(rel_tol * |partial sum|, abs_tol).
struct SeriesControl {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    std::size_t max_terms = 200000;
    std::size_t consecutive_small = 3;

    /// Throws DomainError when a field violates its invariant.
    void validate() const;
};

struct QuadratureControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    std::size_t max_subdivisions = 2000;

    void validate() const;
};

enum class Method {
    DirectSeries,
    LogExpansion,
    ClosedForm,
    Transformed,
    Quadrature,
};

std::string_view to_string(Method m) noexcept;

struct EvalResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t terms_used = 0;
    Method method = Method::DirectSeries;
};

}  // namespace zb
