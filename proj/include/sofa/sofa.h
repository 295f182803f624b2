/* C interface to the sofa library. Every call returns a status; on failure
 * sofa_last_error() describes the problem for the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * sofa_string_free. */
#ifndef SOFA_SOFA_H
#define SOFA_SOFA_H

#include <stdint.h>

#if defined(__GNUC__)
#define SOFA_API __attribute__((visibility("default")))
#else
#define SOFA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SOFA_OK = 0,
    SOFA_ERR_VALIDATION = 1, /* invalid input: bad cap, constraint violation, parse error */
    SOFA_ERR_NUMERIC = 2,    /* a numerical certificate or tolerance check failed */
    SOFA_ERR_IO = 3,
    SOFA_ERR_ARGUMENT = 4, /* null pointer or out-of-range argument */
    SOFA_ERR_INTERNAL = 5
} sofa_status;

typedef struct sofa_cap sofa_cap;

SOFA_API const char *sofa_last_error(void);
SOFA_API void sofa_string_free(char *s);

/* Caps */
SOFA_API sofa_status sofa_cap_build_maximizer(double omega, int n, sofa_cap **out);
SOFA_API sofa_status sofa_cap_half_disk(int n, sofa_cap **out);
/* {"omega", "grid", "support"} or {"omega", "vertices"} */
SOFA_API sofa_status sofa_cap_from_json(const char *json, sofa_cap **out);
SOFA_API sofa_status sofa_cap_from_weights(const double *w, int count, double omega, int n, sofa_cap **out);
SOFA_API sofa_status sofa_cap_to_json(const sofa_cap *cap, char **out);
SOFA_API void sofa_cap_free(sofa_cap *cap);

SOFA_API sofa_status sofa_cap_omega(const sofa_cap *cap, double *out);
SOFA_API sofa_status sofa_cap_area(const sofa_cap *cap, double *out);
SOFA_API sofa_status sofa_cap_support(const sofa_cap *cap, double t, double *out);
SOFA_API sofa_status sofa_cap_width(const sofa_cap *cap, double t, double *out);
/* m > 0 samples the rotation path; m <= 0 integrates it piecewise. */
SOFA_API sofa_status sofa_cap_a1(const sofa_cap *cap, int m, double *out);
/* Boundary measure as AngularMeasure JSON. */
SOFA_API sofa_status sofa_cap_boundary_json(const sofa_cap *cap, char **out);
SOFA_API sofa_status sofa_cap_rotation_path_csv(const sofa_cap *cap, int m, char **out);

typedef struct {
    double cap_area;
    double niche_area;
    double sofa_area;
    int contained; /* niche inside the cap */
    int injective; /* rotation path injective and on the fan */
} sofa_shape_info;

/* niche_csv may be null. */
SOFA_API sofa_status sofa_cap_sofa_area(const sofa_cap *cap, int t_samples, int x_samples, sofa_shape_info *info,
                               char **niche_csv);

/* Validates support samples; on a cap violation returns SOFA_ERR_VALIDATION
 * with failed_condition set to 1 or 2 (0 for grid problems). */
SOFA_API sofa_status sofa_check_cap_json(const char *json, int *failed_condition);

/* Monotonization of raw support samples in standard position. */
SOFA_API sofa_status sofa_monotonize_json(const char *json, int t_samples, int x_samples, sofa_cap **out_cap,
                                 sofa_shape_info *info);

SOFA_API sofa_status sofa_hammersley_bound(const double *thetas, int count, double *out);

typedef struct {
    double value;
    double certificate;
    int iterations;
    int converged;
    int monotone;
    int dimension;
    double assembly_residual;
    double max_eigenvalue;
} sofa_optimize_info;

/* start: 0 = uniform feasible weights, 1 = the maximizer's weights.
 * trace_csv and measure_json may be null. */
SOFA_API sofa_status sofa_optimize(double omega, int n, int start, int max_iters, double tol, sofa_optimize_info *info,
                          char **trace_csv, char **measure_json);

/* Maximizer report as JSON and CSV (either may be null); passed set to 0/1. */
SOFA_API sofa_status sofa_verify_maximizer(double omega, int n, int trials, uint64_t seed, double tol, int *passed,
                                  char **json, char **csv);

/* suite: "fast" or "full". report_json and lines may be null; lines gets one
 * summary line per check. */
SOFA_API sofa_status sofa_verify_suite(const char *suite, uint64_t seed, int *passed, char **report_json, char **lines);

/* Scene flags. */
enum { SOFA_RENDER_NICHE = 1, SOFA_RENDER_PATH = 2, SOFA_RENDER_S1 = 4 };

/* cap may be null (for an S1-only figure). */
SOFA_API sofa_status sofa_render_svg(const sofa_cap *cap, int flags, int t_samples, int x_samples, char **svg);

#ifdef __cplusplus
}
#endif

#endif
