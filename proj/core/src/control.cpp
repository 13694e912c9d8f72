#include "zb/control.hpp"

#include "zb/error.hpp"

#include <cmath>

namespace zb {

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_terms < 1 || consecutive_small < 1) {
        throw DomainError("SeriesControl: rel_tol, abs_tol must be > 0; max_terms, consecutive_small >= 1");
    }
}

void QuadratureControl::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
        throw DomainError("QuadratureControl: rel_tol, abs_tol must be > 0; max_subdivisions >= 1");
    }
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::DirectSeries: return "direct-series";
        case Method::LogExpansion: return "log-expansion";
        case Method::ClosedForm: return "closed-form";
        case Method::Transformed: return "transformed";
        case Method::Quadrature: return "quadrature";
    }
    return "unknown";
}

}  // namespace zb
