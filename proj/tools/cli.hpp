#pragma once

#include "zb/approx.hpp"
#include "zb/control.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace zb::cli {

/// Process exit codes.
enum Exit : int {
    kPass = 0,
    kBoundFail = 1,
    kEvalError = 2,
    kUsage = 64,
    kDataError = 65,
    kIoError = 74,
};

enum class Format { Csv, Json };

struct CliConfig {
    std::string subcommand;
    Params params{0.0, 0.0, 0.0};
    double x = 0.0;
    double y = 0.0;
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
    std::size_t steps = 0;
    double lambda = 0.0;
    double k = 0.0;
    /// gamma of F1 for eval-f1; a + b1 + b2 when absent.
    std::optional<double> gamma;
    std::string method = "auto";
    std::optional<double> tol;
    Format format = Format::Csv;
    std::optional<std::string> out;
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    std::string suite = "all";

    SeriesControl series() const;
    QuadratureControl quadrature() const;
};

/// Each run_* writes its record(s) to `out`, diagnostics to `err`, and returns an Exit code.
int run_approx(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_grid(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_elliptic(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_eval_f1(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches, and honours --out. `env_tol` is the ZB_TOL value, if set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const char* env_tol = nullptr);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

}  // namespace zb::cli
