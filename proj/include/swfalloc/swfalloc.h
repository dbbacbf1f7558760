/* C interface to the swfalloc library. */
#ifndef SWFALLOC_H
#define SWFALLOC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SWF_API __declspec(dllexport)
#else
#define SWF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swf_status {
  SWF_OK = 0,
  SWF_E_INVALID_ARGUMENT = 1,
  SWF_E_DIMENSION = 2,
  SWF_E_DOMAIN = 3,
  SWF_E_NOT_CONVERGED = 4,
  SWF_E_CONFIG = 5,
  SWF_E_IO = 6,
  SWF_E_CHECK_FAILED = 7,
  SWF_E_INTERNAL = 99
} swf_status;

typedef enum swf_family { SWF_WPM = 0, SWF_KOLM = 1, SWF_GINI = 2 } swf_family;

typedef struct swf_welfare swf_welfare;
typedef struct swf_confstate swf_confstate;
typedef struct swf_rng swf_rng;

/* Message for the last failing call on this thread ("" if none). */
SWF_API const char* swf_last_error(void);
SWF_API const char* swf_version(void);
SWF_API const char* swf_status_name(swf_status s);

/* Welfare functions. Pass q = -INFINITY for the min branch; Gini ignores q. */
SWF_API swf_status swf_welfare_create(swf_family family, const double* w, size_t n, double q,
                                      swf_welfare** out);
SWF_API void swf_welfare_destroy(swf_welfare* h);
SWF_API size_t swf_welfare_size(const swf_welfare* h);
SWF_API swf_status swf_welfare_eval(const swf_welfare* h, const double* v, size_t n, double* out);
SWF_API swf_status swf_welfare_lipschitz(const swf_welfare* h, double v_min, double v_max,
                                         double* out);

/* Exact maximizer of M(u * p) over the capped simplex; p_out has n entries. */
SWF_API swf_status swf_solve(const swf_welfare* h, const double* u, size_t n, int k,
                             double* p_out);
/* Projected subgradient reference solver. converged may be NULL. */
SWF_API swf_status swf_solve_reference(const swf_welfare* h, const double* u, size_t n, int k,
                                       int iters, double tol, double* p_out, int* converged);

SWF_API swf_status swf_rng_create(uint64_t seed, swf_rng** out);
SWF_API void swf_rng_destroy(swf_rng* h);

/* Dependent rounding. idx_out needs room for k = sum(pi) entries (0-based);
   *count receives k. */
SWF_API swf_status swf_dependent_round(const double* pi, size_t n, swf_rng* rng,
                                       size_t* idx_out, size_t capacity, size_t* count);

/* Forced exploration set for round t (1-based); idx_out has k entries. */
SWF_API swf_status swf_forced_exploration_set(uint64_t t, size_t n, int k, size_t* idx_out);

/* Confidence sequences. two_sided selects delta / (2n) per side. Pass
   -INFINITY / INFINITY to disable support clipping. */
SWF_API swf_status swf_confstate_create(size_t n, double delta, double sigma, int two_sided,
                                        double support_lo, double support_hi,
                                        swf_confstate** out);
SWF_API void swf_confstate_destroy(swf_confstate* h);
SWF_API swf_status swf_confstate_update(swf_confstate* h, size_t i, double u);
/* Any of lo/hi/counts may be NULL; each non-NULL buffer has n entries. */
SWF_API swf_status swf_confstate_get(const swf_confstate* h, double* lo, double* hi,
                                     uint64_t* counts);
SWF_API double swf_cs_radius(uint64_t m, double delta_i, double sigma);

/* Lifted interval for the optimal policy; p_lo/p_hi may be NULL. */
SWF_API swf_status swf_lift(const swf_welfare* w, const swf_confstate* cs, int k, double* w_lo,
                            double* w_hi, double* p_lo, double* p_hi);
SWF_API swf_status swf_fixed_policy_bounds(const swf_welfare* w, const swf_confstate* cs,
                                           const double* p, size_t n, double* w_lo,
                                           double* w_hi);

/* Harness entry points used by the command-line tool. */
typedef struct swf_harness_options {
  const char* config_path; /* may be NULL for validate */
  const char* out_dir;     /* NULL keeps the config value */
  int has_seed;
  uint64_t seed;
  unsigned jobs; /* 0: SWF_ALLOC_JOBS, else 1 */
  int has_snapshot_every;
  uint64_t snapshot_every;
} swf_harness_options;

SWF_API swf_status swf_harness_run(const swf_harness_options* opts);
SWF_API swf_status swf_harness_sweep(const swf_harness_options* opts);
SWF_API swf_status swf_harness_infer(const swf_harness_options* opts);
/* Returns SWF_E_CHECK_FAILED when a check fails. */
SWF_API swf_status swf_harness_validate(const swf_harness_options* opts);

#ifdef __cplusplus
}
#endif

#endif
