#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sofa/sofa.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Exit codes: 0 success, 1 validation or usage error, 2 numerical check failed.
struct Failure {
    int code;
    std::string message;
};

using CapPtr = std::unique_ptr<sofa_cap, decltype(&sofa_cap_free)>;

void check(sofa_status s) {
    if (s == SOFA_OK) return;
    throw Failure{s == SOFA_ERR_NUMERIC ? 2 : 1, sofa_last_error()};
}

std::string take(char *s) {
    std::string out = s ? s : "";
    sofa_string_free(s);
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{1, "cannot open '" + path + "'"};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, const std::string &text) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{1, "cannot write '" + path + "'"};
    out << text;
}

CapPtr load_cap(const std::string &path) {
    sofa_cap *cap = nullptr;
    check(sofa_cap_from_json(read_file(path).c_str(), &cap));
    return CapPtr(cap, sofa_cap_free);
}

CapPtr maximizer(double omega, int n) {
    sofa_cap *cap = nullptr;
    check(sofa_cap_build_maximizer(omega, n, &cap));
    return CapPtr(cap, sofa_cap_free);
}

std::uint64_t seed_from_env() {
    const char *s = std::getenv("SOFA_SEED");
    if (!s || !*s) return 0;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end) throw Failure{1, "SOFA_SEED must be a nonnegative integer"};
    return v;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", v);
    return buf;
}

struct AngleOptions {
    double omega = kPi / 2.0;
    double omega_deg = 0.0;
    CLI::Option *deg = nullptr;

    void add(CLI::App *app) {
        auto *rad = app->add_option("--omega", omega, "rotation angle in radians, in (0, pi/2]");
        deg = app->add_option("--omega-deg", omega_deg, "rotation angle in degrees");
        rad->excludes(deg);
    }
    double value() const { return deg && deg->count() ? omega_deg * kPi / 180.0 : omega; }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Caps, niches and the A1 maximizer for the moving sofa problem"};
    app.require_subcommand(1);

    // build-maximizer
    auto *build = app.add_subcommand("build-maximizer", "build K_{omega,1} and report A1");
    AngleOptions build_angle;
    build_angle.add(build);
    int build_n = 2000, build_m = 0, build_trials = 0;
    std::string build_out, build_report, build_csv;
    build->add_option("--n", build_n, "cells per half of J_omega")->check(CLI::PositiveNumber);
    build->add_option("--m", build_m, "rotation path samples (default n)");
    build->add_option("--out", build_out, "cap JSON output");
    build->add_option("--trials", build_trials, "random caps for the optimality report");
    build->add_option("--report", build_report, "optimality report JSON output");
    build->add_option("--report-csv", build_csv, "optimality report CSV output");

    // area
    auto *area = app.add_subcommand("area", "cap area and A1 of a cap");
    std::string area_in;
    int area_m = 0;
    area->add_option("--in", area_in, "cap JSON")->required();
    area->add_option("--m", area_m, "rotation path samples (0 integrates piecewise)");

    // niche
    auto *niche = app.add_subcommand("niche", "niche region and sofa area of a cap");
    std::string niche_in, niche_out;
    int niche_t = 4096, niche_x = 4096;
    niche->add_option("--in", niche_in, "cap JSON")->required();
    niche->add_option("--t-samples", niche_t, "angle samples");
    niche->add_option("--x-samples", niche_x, "vertical slabs");
    niche->add_option("--out", niche_out, "niche CSV output");

    // monotonize
    auto *mono = app.add_subcommand("monotonize", "cap and sofa area from raw support samples");
    std::string mono_in, mono_out;
    int mono_t = 1024, mono_x = 1024;
    mono->add_option("--in", mono_in, "support samples JSON in standard position")->required();
    mono->add_option("--out", mono_out, "cap JSON output");
    mono->add_option("--t-samples", mono_t, "angle samples");
    mono->add_option("--x-samples", mono_x, "vertical slabs");

    // check-cap
    auto *checkc = app.add_subcommand("check-cap", "validate a cap and test niche containment");
    std::string check_in;
    int check_t = 4096;
    checkc->add_option("--in", check_in, "cap JSON")->required();
    checkc->add_option("--t-samples", check_t, "angle samples");

    // optimize
    auto *opt = app.add_subcommand("optimize", "maximize the discretized A1 over boundary weights");
    AngleOptions opt_angle;
    opt_angle.add(opt);
    int opt_n = 200, opt_iters = 100000;
    double opt_tol = 1e-3;
    std::string opt_start = "uniform", opt_trace, opt_out;
    opt->add_option("--n", opt_n, "cells per half of J_omega")->check(CLI::PositiveNumber);
    opt->add_option("--start", opt_start, "uniform or maximizer")->check(CLI::IsMember({"uniform", "maximizer"}));
    opt->add_option("--max-iters", opt_iters, "iteration budget");
    opt->add_option("--tol", opt_tol, "certificate tolerance");
    opt->add_option("--trace", opt_trace, "trace CSV output");
    opt->add_option("--out", opt_out, "solution measure JSON output");

    // hammersley
    auto *ham = app.add_subcommand("hammersley", "area bound of H intersected with rotated hallways");
    std::vector<double> ham_theta;
    ham->add_option("--theta", ham_theta, "hallway angles in radians, in (0, pi/2)")->required();

    // verify
    auto *ver = app.add_subcommand("verify", "run the acceptance checks");
    std::string ver_suite, ver_out, ver_format = "text";
    ver->add_option("suite", ver_suite, "fast or full")->required();
    ver->add_option("--out", ver_out, "report JSON output");
    ver->add_option("--format", ver_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // render
    auto *ren = app.add_subcommand("render", "SVG figure of a cap, its niche and rotation path");
    AngleOptions ren_angle;
    ren_angle.add(ren);
    std::string ren_in, ren_out;
    int ren_n = 500, ren_t = 512, ren_x = 512;
    bool ren_niche = false, ren_path = false, ren_s1 = false, ren_nocap = false;
    ren->add_option("--in", ren_in, "cap JSON (default: the maximizer)");
    ren->add_option("--n", ren_n, "maximizer resolution when --in is absent");
    ren->add_flag("--niche", ren_niche, "shade the niche");
    ren->add_flag("--path", ren_path, "stroke the rotation path");
    ren->add_flag("--s1", ren_s1, "overlay the S1 boundary curves");
    ren->add_flag("--no-cap", ren_nocap, "omit the cap (S1 curves only)");
    ren->add_option("--t-samples", ren_t, "angle samples");
    ren->add_option("--x-samples", ren_x, "vertical slabs");
    ren->add_option("--out", ren_out, "SVG output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*build) {
            const double omega = build_angle.value();
            CapPtr cap = maximizer(omega, build_n);
            double a1 = 0.0;
            check(sofa_cap_a1(cap.get(), build_m > 0 ? build_m : build_n, &a1));
            if (!build_out.empty()) {
                char *json = nullptr;
                check(sofa_cap_to_json(cap.get(), &json));
                write_file(build_out, take(json));
            }
            const double gap = std::abs(a1 - (1.0 + 0.5 * omega * omega));
            const bool ok = gap <= 1e-4;
            std::cout << "A1 = " << fixed(a1, 4) << "  (|A1 - (1 + omega^2/2)| = " << sci(gap) << ", tol 1e-4, "
                      << (ok ? "ok" : "FAILED") << ")\n";
            int passed = 1;
            if (build_trials > 0) {
                char *json = nullptr, *csv = nullptr;
                check(sofa_verify_maximizer(omega, build_n, build_trials, seed_from_env(), 1e-3, &passed, &json, &csv));
                const std::string js = take(json), cs = take(csv);
                write_file(build_report, js);
                write_file(build_csv, cs);
                std::cout << "optimality report: " << (passed ? "passed" : "FAILED") << "\n";
            }
            return ok && passed ? 0 : 2;
        }
        if (*area) {
            CapPtr cap = load_cap(area_in);
            double k = 0.0, a1 = 0.0;
            check(sofa_cap_area(cap.get(), &k));
            check(sofa_cap_a1(cap.get(), area_m, &a1));
            std::cout << "|K| = " << fixed(k, 6) << ", A1 = " << fixed(a1, 6) << "\n";
            return 0;
        }
        if (*niche) {
            CapPtr cap = load_cap(niche_in);
            sofa_shape_info info{};
            char *csv = nullptr;
            check(sofa_cap_sofa_area(cap.get(), niche_t, niche_x, &info, niche_out.empty() ? nullptr : &csv));
            if (!niche_out.empty()) write_file(niche_out, take(csv));
            std::cout << "niche area = " << fixed(info.niche_area, 6) << ", sofa area = " << fixed(info.sofa_area, 6)
                      << ", niche_contained = " << (info.contained ? "true" : "false") << "\n";
            return info.contained ? 0 : 2;
        }
        if (*mono) {
            sofa_cap *raw = nullptr;
            sofa_shape_info info{};
            check(sofa_monotonize_json(read_file(mono_in).c_str(), mono_t, mono_x, &raw, &info));
            CapPtr cap(raw, sofa_cap_free);
            if (!mono_out.empty()) {
                char *json = nullptr;
                check(sofa_cap_to_json(cap.get(), &json));
                write_file(mono_out, take(json));
            }
            std::cout << "sofa area = " << fixed(info.sofa_area, 6) << ", cap area = " << fixed(info.cap_area, 6)
                      << ", niche_contained = " << (info.contained ? "true" : "false") << "\n";
            return 0;
        }
        if (*checkc) {
            const std::string text = read_file(check_in);
            int failed = 0;
            if (sofa_check_cap_json(text.c_str(), &failed) != SOFA_OK) {
                std::cout << "valid = false, failed condition = " << failed << ": " << sofa_last_error() << "\n";
                return 1;
            }
            CapPtr cap = load_cap(check_in);
            sofa_shape_info info{};
            check(sofa_cap_sofa_area(cap.get(), check_t, 1024, &info, nullptr));
            std::cout << "valid = true, niche_contained = " << (info.contained ? "true" : "false")
                      << ", injective = " << (info.injective ? "true" : "false") << "\n";
            return info.contained ? 0 : 2;
        }
        if (*opt) {
            const double omega = opt_angle.value();
            sofa_optimize_info info{};
            char *trace = nullptr, *measure = nullptr;
            check(sofa_optimize(omega, opt_n, opt_start == "uniform" ? 0 : 1, opt_iters, opt_tol, &info,
                                opt_trace.empty() ? nullptr : &trace, opt_out.empty() ? nullptr : &measure));
            if (!opt_trace.empty()) write_file(opt_trace, take(trace));
            if (!opt_out.empty()) write_file(opt_out, take(measure));
            const bool ok = info.converged && info.monotone;
            std::cout << "A1* = " << fixed(info.value, 6) << "  (certificate " << sci(info.certificate) << ", tol "
                      << sci(opt_tol) << ", " << info.iterations << " iterations, "
                      << (ok ? "ok" : "FAILED") << ")\n";
            return ok ? 0 : 2;
        }
        if (*ham) {
            double bound = 0.0;
            check(sofa_hammersley_bound(ham_theta.data(), static_cast<int>(ham_theta.size()), &bound));
            std::cout << "bound = " << fixed(bound, 4) << "\n";
            return 0;
        }
        if (*ver) {
            int passed = 0;
            char *json = nullptr, *lines = nullptr;
            check(sofa_verify_suite(ver_suite.c_str(), seed_from_env(), &passed, &json, &lines));
            const std::string js = take(json), text = take(lines);
            write_file(ver_out, js);
            if (ver_format == "json") {
                std::cout << js << "\n";
            } else {
                std::cout << text << (passed ? "all checks passed" : "some checks FAILED") << "\n";
            }
            return passed ? 0 : 2;
        }
        if (*ren) {
            CapPtr cap(nullptr, sofa_cap_free);
            if (!ren_nocap) cap = ren_in.empty() ? maximizer(ren_angle.value(), ren_n) : load_cap(ren_in);
            const int flags = (ren_niche ? SOFA_RENDER_NICHE : 0) | (ren_path ? SOFA_RENDER_PATH : 0) |
                              (ren_s1 ? SOFA_RENDER_S1 : 0);
            char *svg = nullptr;
            check(sofa_render_svg(cap.get(), flags, ren_t, ren_x, &svg));
            const std::string doc = take(svg);
            if (ren_out.empty()) {
                std::cout << doc;
            } else {
                write_file(ren_out, doc);
                std::cout << "wrote " << ren_out << "\n";
            }
            return 0;
        }
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return 1;
}
