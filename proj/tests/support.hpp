#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace zbtest {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace zbtest

// |got - want| <= tol, reporting both values on failure.
#define CHECK_CLOSE(got, want, tol)                                                          \
    do {                                                                                     \
        const double got_ = static_cast<double>(got);                                        \
        const double want_ = static_cast<double>(want);                                      \
        INFO("got " << zbtest::fmt(got_) << ", want " << zbtest::fmt(want_) << ", diff "    \
                    << zbtest::fmt(got_ - want_));                                           \
        CHECK(std::abs(got_ - want_) <= static_cast<double>(tol));                           \
    } while (false)

// |got - want| <= rel * |want|
#define CHECK_REL(got, want, rel)                                       \
    do {                                                                \
        const double w_ = static_cast<double>(want);                    \
        CHECK_CLOSE(got, w_, (rel) * std::abs(w_));                     \
    } while (false)
