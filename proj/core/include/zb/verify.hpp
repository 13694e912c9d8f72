#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zb {

/// Pass/fail tally of one property over all of its checked cases.
struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Largest observed violation measure (0 when every case passed).
    double worst = 0.0;
    /// First failing case, for diagnostics.
    std::string first_failure;
    /// Reported but not part of the suite verdict.
    bool informational = false;
    std::string note;

    bool ok() const noexcept { return failed == 0 && passed > 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    /// All non-informational properties pass.
    bool ok() const noexcept;
    /// nullptr when no property has that name.
    const PropertyResult* find(std::string_view name) const noexcept;
};

struct VerifyOptions {
    /// Random draws per randomized property; grid properties ignore it.
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
};

/// bounds, lemma, symmetry, reductions, elliptic, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opt = {});

/// Deterministic generator whose output does not depend on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept;
    std::uint64_t next() noexcept;
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept;
    /// Log-uniform on [lo, hi), lo > 0.
    double log_uniform(double lo, double hi) noexcept;

private:
    std::uint64_t state_;
};

}  // namespace zb
