#include "sofa/sofa.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "sofa/functional.hpp"
#include "sofa/io.hpp"
#include "sofa/maximizer.hpp"
#include "sofa/optimize.hpp"
#include "sofa/sofa.hpp"
#include "sofa/verify.hpp"

struct sofa_cap {
    sofa::Cap cap;
};

namespace {

thread_local std::string last_error;

template <class F>
sofa_status guarded(F &&f) {
    try {
        last_error.clear();
        return f();
    } catch (const sofa::ValidationError &e) {
        last_error = e.what();
        return SOFA_ERR_VALIDATION;
    } catch (const sofa::Error &e) {
        last_error = e.what();
        return SOFA_ERR_NUMERIC;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SOFA_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SOFA_ERR_INTERNAL;
    }
}

sofa_status fail(sofa_status s, const char *msg) {
    last_error = msg;
    return s;
}

char *dup(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char **dst, const std::string &s) {
    if (dst) *dst = dup(s);
}

sofa_status give(sofa::Cap cap, sofa_cap **out) {
    *out = new sofa_cap{std::move(cap)};
    return SOFA_OK;
}

void fill(const sofa::SofaShape &s, sofa_shape_info *info) {
    info->cap_area = s.cap.area();
    info->niche_area = s.niche.area;
    info->sofa_area = s.area;
    info->contained = s.contained ? 1 : 0;
    info->injective =
        sofa::injectivity_check(sofa::rotation_path(s.cap.samples(), 1024), sofa::Fan{s.cap.omega()}) ? 1 : 0;
}

} // namespace

extern "C" {

const char *sofa_last_error(void) { return last_error.c_str(); }

void sofa_string_free(char *s) { std::free(s); }

sofa_status sofa_cap_build_maximizer(double omega, int n, sofa_cap **out) {
    if (!out) return fail(SOFA_ERR_ARGUMENT, "null output");
    return guarded([&] { return give(sofa::build_maximizer({omega, n}), out); });
}

sofa_status sofa_cap_half_disk(int n, sofa_cap **out) {
    if (!out) return fail(SOFA_ERR_ARGUMENT, "null output");
    return guarded([&] { return give(sofa::half_disk_cap(n), out); });
}

sofa_status sofa_cap_from_json(const char *json, sofa_cap **out) {
    if (!json || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] { return give(sofa::cap_from_json(json), out); });
}

sofa_status sofa_cap_from_weights(const double *w, int count, double omega, int n, sofa_cap **out) {
    if (!w || !out || count <= 0) return fail(SOFA_ERR_ARGUMENT, "null or empty weights");
    return guarded([&] { return give(sofa::cap_from_weights(std::vector<double>(w, w + count), omega, n), out); });
}

sofa_status sofa_cap_to_json(const sofa_cap *cap, char **out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        put(out, sofa::cap_to_json(cap->cap));
        return SOFA_OK;
    });
}

void sofa_cap_free(sofa_cap *cap) { delete cap; }

#define SOFA_SCALAR(name, expr)                                                                                        \
    sofa_status name(const sofa_cap *cap, double *out) {                                                               \
        if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");                                              \
        return guarded([&] {                                                                                           \
            *out = (expr);                                                                                             \
            return SOFA_OK;                                                                                            \
        });                                                                                                            \
    }

SOFA_SCALAR(sofa_cap_omega, cap->cap.omega())
SOFA_SCALAR(sofa_cap_area, cap->cap.area())

#undef SOFA_SCALAR

sofa_status sofa_cap_support(const sofa_cap *cap, double t, double *out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = cap->cap.support(t);
        return SOFA_OK;
    });
}

sofa_status sofa_cap_width(const sofa_cap *cap, double t, double *out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = sofa::width(cap->cap.samples(), t);
        return SOFA_OK;
    });
}

sofa_status sofa_cap_a1(const sofa_cap *cap, int m, double *out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = m > 0 ? sofa::a1(cap->cap, m) : sofa::a1_exact(cap->cap);
        return SOFA_OK;
    });
}

sofa_status sofa_cap_boundary_json(const sofa_cap *cap, char **out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        put(out, sofa::measure_to_json(sofa::boundary_measure(cap->cap)));
        return SOFA_OK;
    });
}

sofa_status sofa_cap_rotation_path_csv(const sofa_cap *cap, int m, char **out) {
    if (!cap || !out) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const sofa::Polyline path = sofa::rotation_path(cap->cap.samples(), m);
        std::ostringstream os;
        os.precision(17);
        os << "t,x,y\n";
        for (std::size_t k = 0; k < path.size(); ++k)
            os << cap->cap.omega() * static_cast<double>(k) / static_cast<double>(path.size() - 1) << ','
               << path[k].x << ',' << path[k].y << '\n';
        put(out, os.str());
        return SOFA_OK;
    });
}

sofa_status sofa_cap_sofa_area(const sofa_cap *cap, int t_samples, int x_samples, sofa_shape_info *info,
                               char **niche_csv) {
    if (!cap || !info) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const sofa::SofaShape s = sofa::sofa_area(cap->cap, t_samples, x_samples);
        fill(s, info);
        put(niche_csv, s.niche.to_csv());
        return SOFA_OK;
    });
}

sofa_status sofa_check_cap_json(const char *json, int *failed_condition) {
    if (!json || !failed_condition) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        double omega = 0.0;
        const sofa::SupportSamples p = sofa::samples_from_json(json, omega);
        const sofa::CapCheck c = sofa::check_cap(p, omega);
        *failed_condition = c.failed_condition;
        if (!c.ok) return fail(SOFA_ERR_VALIDATION, c.detail.c_str());
        return SOFA_OK;
    });
}

sofa_status sofa_monotonize_json(const char *json, int t_samples, int x_samples, sofa_cap **out_cap,
                                 sofa_shape_info *info) {
    if (!json || !out_cap || !info) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        double omega = 0.0;
        const sofa::SupportSamples p = sofa::samples_from_json(json, omega);
        const sofa::SofaShape s = sofa::monotonize(p, omega, t_samples, x_samples);
        fill(s, info);
        return give(s.cap, out_cap);
    });
}

sofa_status sofa_hammersley_bound(const double *thetas, int count, double *out) {
    if (!thetas || !out || count <= 0) return fail(SOFA_ERR_ARGUMENT, "null or empty angle list");
    return guarded([&] {
        *out = sofa::polygonal_bound(std::vector<double>(thetas, thetas + count));
        return SOFA_OK;
    });
}

sofa_status sofa_optimize(double omega, int n, int start, int max_iters, double tol, sofa_optimize_info *info,
                          char **trace_csv, char **measure_json) {
    if (!info) return fail(SOFA_ERR_ARGUMENT, "null argument");
    if (start != 0 && start != 1) return fail(SOFA_ERR_ARGUMENT, "start must be 0 (uniform) or 1 (maximizer)");
    return guarded([&] {
        const sofa::Cap anchor = sofa::build_maximizer({omega, n});
        const sofa::QpProblem p = sofa::assemble(omega, n, anchor);
        Eigen::VectorXd w0;
        if (start == 0) {
            w0 = sofa::uniform_start(p);
        } else {
            const std::vector<double> w = sofa::boundary_weights(anchor);
            w0 = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
        }
        const sofa::QpSolution s = sofa::solve(p, w0, max_iters, tol);
        bool monotone = true;
        for (std::size_t i = 1; i < s.trace.size(); ++i)
            monotone = monotone && s.trace[i].objective >= s.trace[i - 1].objective - 1e-12;
        info->value = s.value;
        info->certificate = s.certificate;
        info->iterations = s.iterations;
        info->converged = s.converged ? 1 : 0;
        info->monotone = monotone ? 1 : 0;
        info->dimension = static_cast<int>(p.dimension());
        info->assembly_residual = p.residual;
        info->max_eigenvalue = p.max_feasible_eigenvalue;
        put(trace_csv, s.trace_csv());
        put(measure_json, s.measure_json(p));
        return SOFA_OK;
    });
}

sofa_status sofa_verify_maximizer(double omega, int n, int trials, uint64_t seed, double tol, int *passed,
                                  char **json, char **csv) {
    if (!passed) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const sofa::MaximizerReport r = sofa::verify_maximizer({omega, n}, trials, seed, tol);
        *passed = r.passed ? 1 : 0;
        put(json, r.to_json());
        put(csv, r.to_csv());
        return SOFA_OK;
    });
}

sofa_status sofa_verify_suite(const char *suite, uint64_t seed, int *passed, char **report_json, char **lines) {
    if (!suite || !passed) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const sofa::SuiteReport r = sofa::run_suite(suite, seed);
        *passed = r.passed() ? 1 : 0;
        put(report_json, r.to_json());
        std::string text;
        for (const sofa::CheckResult &c : r.checks) text += r.summary_line(c) + "\n";
        put(lines, text);
        return SOFA_OK;
    });
}

sofa_status sofa_render_svg(const sofa_cap *cap, int flags, int t_samples, int x_samples, char **svg) {
    if (!svg) return fail(SOFA_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        sofa::SvgScene scene;
        sofa::NicheRegion niche;
        sofa::Polyline path;
        sofa::S1Curves s1;
        if (cap) {
            scene.cap = &cap->cap;
            if (flags & SOFA_RENDER_NICHE) {
                niche = sofa::niche(cap->cap, t_samples, x_samples);
                scene.niche = &niche;
            }
            if (flags & SOFA_RENDER_PATH) {
                path = sofa::rotation_path(cap->cap.samples(), t_samples);
                scene.path = &path;
            }
        }
        if (flags & SOFA_RENDER_S1) {
            s1 = sofa::s1_curves(1000);
            scene.s1 = &s1;
        }
        put(svg, sofa::render_svg(scene));
        return SOFA_OK;
    });
}

} // extern "C"
