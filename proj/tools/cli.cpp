#include "cli.hpp"

#include "zb/appell.hpp"
#include "zb/error.hpp"
#include "zb/hypergeometric.hpp"
#include "zb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace zb::cli {
namespace {

using Json = nlohmann::ordered_json;

// Invalid configuration detected after parsing (exit 65).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_params(const Params& p) {
    if (!(p.a > 0.0 && p.b1 > 0.0 && p.b2 > 0.0) || !std::isfinite(p.a + p.b1 + p.b2)) {
        throw DataError("a, b1, b2 must be finite and > 0");
    }
}

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v < 1.0)) throw DataError(std::string(name) + " must lie in [0, 1)");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

Json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

const char* kReportHeader = "x,y,f,g,remainder,bound,r,within_bound";

void write_report_csv_row(std::ostream& out, const ApproxReport& r) {
    out << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.f_value) << ','
        << format_number(r.g_value) << ',' << format_number(r.remainder) << ',' << format_number(r.bound) << ','
        << format_number(r.rhombic_r) << ',' << (r.within_bound ? "true" : "false") << '\n';
}

Json report_json(const ApproxReport& r) {
    Json j;
    j["x"] = json_number(r.x);
    j["y"] = json_number(r.y);
    j["f"] = json_number(r.f_value);
    j["g"] = json_number(r.g_value);
    j["remainder"] = json_number(r.remainder);
    j["bound"] = json_number(r.bound);
    j["r"] = json_number(r.rhombic_r);
    j["within_bound"] = r.within_bound;
    j["method"] = r.valid ? std::string(to_string(r.f_method)) : std::string("error");
    return j;
}

int report_status(const ApproxReport& r) {
    if (!r.valid) return kEvalError;
    return r.within_bound && r.positive ? kPass : kBoundFail;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

SeriesControl CliConfig::series() const {
    SeriesControl c;
    if (tol) c.rel_tol = *tol;
    return c;
}

QuadratureControl CliConfig::quadrature() const {
    QuadratureControl c;
    if (tol) c.rel_tol = *tol;
    return c;
}

int run_approx(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    require_params(cfg.params);
    require_unit(cfg.x, "x");
    require_unit(cfg.y, "y");
    const ApproxReport r = approx_report(cfg.params, cfg.x, cfg.y, cfg.series(), cfg.quadrature());
    if (cfg.format == Format::Json) {
        out << report_json(r).dump(2) << '\n';
    } else {
        out << kReportHeader << '\n';
        write_report_csv_row(out, r);
    }
    if (!r.valid) err << "zb: evaluation failed: " << r.error << '\n';
    return report_status(r);
}

int run_grid(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    require_params(cfg.params);
    if (cfg.steps < 2) throw DataError("steps must be >= 2");
    require_unit(cfg.xmin, "xmin");
    require_unit(cfg.xmax, "xmax");
    require_unit(cfg.ymin, "ymin");
    require_unit(cfg.ymax, "ymax");
    if (!(cfg.xmin < cfg.xmax) || !(cfg.ymin < cfg.ymax)) throw DataError("grid needs xmin < xmax and ymin < ymax");

    const std::size_t n = cfg.steps;
    auto at = [n](double lo, double hi, std::size_t i) {
        return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    std::vector<ApproxReport> rows(n * n);
    const SeriesControl ctl = cfg.series();
    const QuadratureControl qctl = cfg.quadrature();

    // Rows are computed concurrently and emitted in index order (x outer, y inner).
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
            const double x = at(cfg.xmin, cfg.xmax, idx / n);
            const double y = at(cfg.ymin, cfg.ymax, idx % n);
            rows[idx] = approx_report(cfg.params, x, y, ctl, qctl);
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(rows.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int status = kPass;
    if (cfg.format == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(report_json(r));
        out << arr.dump(2) << '\n';
    } else {
        out << kReportHeader << '\n';
        for (const auto& r : rows) write_report_csv_row(out, r);
    }
    for (const auto& r : rows) {
        const int s = report_status(r);
        if (s == kEvalError) err << "zb: evaluation failed at (" << format_number(r.x) << ", " << format_number(r.y)
                                 << "): " << r.error << '\n';
        status = std::max(status, s);
    }
    return status;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        err << "zb: unknown suite '" << cfg.suite << "'\n";
        return kUsage;
    }
    if (cfg.samples < 1) throw DataError("samples must be >= 1");
    const SuiteReport rep = run_suite(cfg.suite, {cfg.samples, cfg.seed});

    auto status_of = [](const PropertyResult& p) {
        if (p.informational) return "info";
        return p.ok() ? "pass" : "fail";
    };
    if (cfg.format == Format::Json) {
        Json j;
        j["suite"] = rep.suite;
        j["samples"] = cfg.samples;
        j["seed"] = cfg.seed;
        Json props = Json::array();
        for (const auto& p : rep.properties) {
            Json e;
            e["property"] = p.name;
            e["passed"] = p.passed;
            e["failed"] = p.failed;
            e["status"] = status_of(p);
            if (!p.first_failure.empty()) e["first_failure"] = p.first_failure;
            if (!p.note.empty()) e["note"] = p.note;
            props.push_back(std::move(e));
        }
        j["properties"] = std::move(props);
        j["ok"] = rep.ok();
        out << j.dump(2) << '\n';
    } else {
        out << "property,passed,failed,status\n";
        for (const auto& p : rep.properties) {
            out << csv_field(p.name) << ',' << p.passed << ',' << p.failed << ',' << status_of(p) << '\n';
        }
    }
    for (const auto& p : rep.properties) {
        if (p.failed > 0) {
            err << "zb: " << p.name << ": " << p.failed << " failing case(s); first: " << p.first_failure << '\n';
            if (!p.note.empty()) err << "zb:   note: " << p.note << '\n';
        }
    }
    return rep.ok() ? kPass : kBoundFail;
}

int run_elliptic(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!(cfg.lambda >= 0.0 && cfg.lambda < 1.0)) throw DataError("lambda must lie in [0, 1)");
    if (!(cfg.k >= 0.0 && cfg.k <= 1.0)) throw DataError("k must lie in [0, 1]");
    EvalResult f;
    try {
        f = elliptic_f(cfg.lambda, cfg.k, cfg.series(), cfg.quadrature());
    } catch (const std::exception& e) {
        err << "zb: evaluation failed: " << e.what() << '\n';
        return kEvalError;
    }
    const double l2 = cfg.lambda * cfg.lambda;
    const double cg = std::log(4.0 / (std::sqrt(1.0 - l2) + std::sqrt(1.0 - cfg.k * cfg.k * l2)));
    if (cfg.format == Format::Json) {
        Json j;
        j["lambda"] = json_number(cfg.lambda);
        j["k"] = json_number(cfg.k);
        j["F"] = json_number(f.value);
        j["approx"] = json_number(cg);
        j["difference"] = json_number(f.value - cg);
        j["method"] = std::string(to_string(f.method));
        out << j.dump(2) << '\n';
    } else {
        out << "lambda,k,F,approx,difference\n"
            << format_number(cfg.lambda) << ',' << format_number(cfg.k) << ',' << format_number(f.value) << ','
            << format_number(cg) << ',' << format_number(f.value - cg) << '\n';
    }
    return kPass;
}

int run_eval_f1(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    require_params(cfg.params);
    require_unit(cfg.x, "x");
    require_unit(cfg.y, "y");
    const Params& p = cfg.params;
    const AppellParams ap{p.a, p.b1, p.b2, cfg.gamma.value_or(p.a + p.b1 + p.b2)};
    if (is_nonpositive_integer(ap.gamma_c)) throw DataError("gamma must not be a non-positive integer");
    if (cfg.method == "integral" && !ap.integral_eligible()) {
        throw DataError("the integral method needs gamma = a + b1 + b2");
    }
    EvalResult r;
    try {
        if (cfg.method == "double") {
            r = f1_double_series(ap, cfg.x, cfg.y, cfg.series());
        } else if (cfg.method == "single") {
            r = f1_single_series(ap, cfg.x, cfg.y, cfg.series());
        } else if (cfg.method == "integral") {
            r = f1_integral(p.a, p.b1, p.b2, cfg.x, cfg.y, cfg.quadrature());
        } else {
            r = f1_eval(ap, cfg.x, cfg.y, cfg.series(), cfg.quadrature());
        }
    } catch (const std::exception& e) {
        err << "zb: evaluation failed: " << e.what() << '\n';
        return kEvalError;
    }
    if (cfg.format == Format::Json) {
        Json j;
        j["x"] = json_number(cfg.x);
        j["y"] = json_number(cfg.y);
        j["f1"] = json_number(r.value);
        j["est_error"] = json_number(r.est_error);
        j["terms_used"] = r.terms_used;
        j["method"] = std::string(to_string(r.method));
        out << j.dump(2) << '\n';
    } else {
        out << "x,y,f1,est_error,terms_used,method\n"
            << format_number(cfg.x) << ',' << format_number(cfg.y) << ',' << format_number(r.value) << ','
            << format_number(r.est_error) << ',' << r.terms_used << ',' << to_string(r.method) << '\n';
    }
    return kPass;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_tol) {
    CliConfig cfg;
    CLI::App app{"Zero-balanced Appell F1 approximation near (1, 1)", "zb"};
    app.require_subcommand(1);

    std::string format = "csv";
    double tol = 0.0;
    std::string out_path;
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", tol, "Relative tolerance (default from ZB_TOL)")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "Output file (default: standard output)");
    };
    auto params = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.params.a, "Parameter a > 0")->required();
        sub->add_option("--b1", cfg.params.b1, "Parameter b1 > 0")->required();
        sub->add_option("--b2", cfg.params.b2, "Parameter b2 > 0")->required();
    };
    auto point = [&](CLI::App* sub) {
        sub->add_option("--x", cfg.x, "x in [0, 1)")->required();
        sub->add_option("--y", cfg.y, "y in [0, 1)")->required();
    };

    CLI::App* approx = app.add_subcommand("approx", "f, g, remainder and bound at one point");
    params(approx);
    point(approx);
    common(approx);

    CLI::App* grid = app.add_subcommand("grid", "Approximation report on a steps x steps grid");
    params(grid);
    grid->add_option("--xmin", cfg.xmin)->required();
    grid->add_option("--xmax", cfg.xmax)->required();
    grid->add_option("--ymin", cfg.ymin)->required();
    grid->add_option("--ymax", cfg.ymax)->required();
    grid->add_option("--steps", cfg.steps)->required();
    common(grid);

    CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", cfg.suite, "bounds, lemma, symmetry, reductions, elliptic or all");
    verify->add_option("--samples", cfg.samples, "Random draws per property");
    verify->add_option("--seed", cfg.seed, "Seed for the random draws");
    common(verify);

    CLI::App* elliptic = app.add_subcommand("elliptic", "Incomplete elliptic integral F(lambda, k)");
    elliptic->add_option("--lambda", cfg.lambda, "lambda in [0, 1)")->required();
    elliptic->add_option("--k", cfg.k, "k in [0, 1]")->required();
    common(elliptic);

    CLI::App* eval = app.add_subcommand("eval-f1", "F1(a; b1, b2; gamma; x, y)");
    params(eval);
    point(eval);
    eval->add_option("--gamma", cfg.gamma, "gamma (default a + b1 + b2)");
    eval->add_option("--method", cfg.method, "auto, double, single or integral")
        ->check(CLI::IsMember({"auto", "double", "single", "integral"}));
    common(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "zb: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = formats.at(format);
    if (tol > 0.0) {
        cfg.tol = tol;
    } else if (env_tol != nullptr && *env_tol != '\0') {
        const std::string s(env_tol);
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !(v > 0.0) || !std::isfinite(v)) {
            err << "zb: ZB_TOL must be a positive number, got '" << s << "'\n";
            return kUsage;
        }
        cfg.tol = v;
    }
    if (!out_path.empty()) cfg.out = out_path;

    std::ostringstream buffer;
    int status = kPass;
    try {
        if (cfg.subcommand == "approx") {
            status = run_approx(cfg, buffer, err);
        } else if (cfg.subcommand == "grid") {
            status = run_grid(cfg, buffer, err);
        } else if (cfg.subcommand == "verify") {
            status = run_verify(cfg, buffer, err);
        } else if (cfg.subcommand == "elliptic") {
            status = run_elliptic(cfg, buffer, err);
        } else {
            status = run_eval_f1(cfg, buffer, err);
        }
    } catch (const DataError& e) {
        err << "zb: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError& e) {
        err << "zb: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        err << "zb: evaluation failed: " << e.what() << '\n';
        return kEvalError;
    }
    if (status == kUsage) return status;

    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "zb: cannot open '" << *cfg.out << "' for writing\n";
            return kIoError;
        }
        file << buffer.str();
        file.flush();
        if (!file) {
            err << "zb: write to '" << *cfg.out << "' failed\n";
            return kIoError;
        }
    } else {
        out << buffer.str();
        out.flush();
    }
    return status;
}

}  // namespace zb::cli
