#ifndef EITNOISE_H
#define EITNOISE_H

/* eitnoise -- phase-noise-to-intensity-noise conversion in three-level
 * lambda (EIT/CPT) systems.
 *
 * C API of the shared library.  All objects are opaque handles created and
 * destroyed through this interface; every fallible call returns an
 * eitn_status.  On failure a thread-local message is available through
 * eitn_last_error().  Angular frequencies are in rad/us throughout, times
 * in us.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define EITN_API __declspec(dllexport)
#else
#  define EITN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eitn_status {
  EITN_OK = 0,
  EITN_ERR_INVALID_PARAMS = 1,  /* bad physical parameters or arguments */
  EITN_ERR_SINGULAR = 2,        /* stationary solve rank-deficient */
  EITN_ERR_DEGENERATE = 3,      /* variance below floor (trace analysis) */
  EITN_ERR_UNSTABLE = 4,        /* trajectory integration diverged */
  EITN_ERR_GRID = 5,            /* grid missing center / peak not bracketed */
  EITN_ERR_NOT_SATURATED = 6,   /* saturation precondition failed */
  EITN_ERR_FIT = 7,             /* ill-conditioned polynomial fit */
  EITN_ERR_DATA = 8,            /* malformed trace data */
  EITN_ERR_CONFIG = 9,          /* config file unreadable / unknown key / bad unit */
  EITN_ERR_IO = 10,             /* filesystem failure */
  EITN_ERR_INTERNAL = 11
} eitn_status;

/* Last error message for the calling thread; empty string if none. */
EITN_API const char* eitn_last_error(void);

/* ------------------------------------------------------------------ */
/* Model                                                               */

typedef struct eitn_model eitn_model;

/* params[7] = { rabi, one_photon_detuning, two_photon_detuning,
 *               excited_decay, ground_pop_decay, ground_coh_decay,
 *               laser_hwhm }  (all rad/us; rabi is the total Rabi
 * frequency of the two equal arms). */
EITN_API eitn_status eitn_model_create(const double params[7], eitn_model** out);
EITN_API void eitn_model_free(eitn_model*);

/* 1 if the weak-drive assumption rabi < excited_decay/5 holds. */
EITN_API int eitn_model_weak_drive_ok(const eitn_model*);

/* Optical pumping rate  rabi^2 / (2*(excited_decay + 2*laser_hwhm)). */
EITN_API double eitn_pump_rate(double rabi, double excited_decay, double laser_hwhm);

/* Parse a frequency literal with explicit unit ("pi*78 kHz", "2pi*1 MHz",
 * "0.3 rad/us") into an angular frequency in rad/us. */
EITN_API eitn_status eitn_parse_frequency(const char* text, double* rad_per_us);

/* ------------------------------------------------------------------ */
/* Stationary moments and cross-correlation                            */

typedef struct eitn_moments eitn_moments;

EITN_API eitn_status eitn_solve_moments(const eitn_model*, eitn_moments** out);
EITN_API void eitn_moments_free(eitn_moments*);

/* Stationary mean <u>, components ordered
 * (rho_g1g1, rho_g2g2, rho_eg1, rho_g1e, rho_eg2, rho_g2e, rho_g1g2, rho_g2g1). */
EITN_API eitn_status eitn_moments_mean(const eitn_moments*, double re[8], double im[8]);
/* Stationary bilinear covariance <u_j,u_k>, row-major 8x8. */
EITN_API eitn_status eitn_moments_covariance(const eitn_moments*, double re[64], double im[64]);

typedef struct eitn_correlation {
  double g2_zero;       /* NaN when degenerate */
  double var_im_coh1;
  double var_im_coh2;
  double cov_im;
  int degenerate;
} eitn_correlation;

EITN_API eitn_status eitn_cross_correlation(const eitn_moments*, double variance_floor,
                                            eitn_correlation* out);

/* ------------------------------------------------------------------ */
/* Spectra                                                             */

typedef struct eitn_spectrum eitn_spectrum;

EITN_API eitn_status eitn_g2_spectrum(const eitn_model*, const double* deltas, size_t n,
                                      int threads, eitn_spectrum** out);
/* Adaptive grid: log-dense near zero two-photon detuning. */
EITN_API eitn_status eitn_g2_spectrum_auto(const eitn_model*, size_t points_per_side,
                                           int threads, eitn_spectrum** out);
EITN_API eitn_status eitn_eit_spectrum(const eitn_model*, const double* deltas, size_t n,
                                       int threads, eitn_spectrum** out);
EITN_API void eitn_spectrum_free(eitn_spectrum*);

EITN_API size_t eitn_spectrum_size(const eitn_spectrum*);
EITN_API eitn_status eitn_spectrum_data(const eitn_spectrum*, double* deltas, double* values);
/* Full width at half the central peak amplitude; fills *width (rad/us). */
EITN_API eitn_status eitn_spectrum_central_width(eitn_spectrum*, double* width);
EITN_API eitn_status eitn_spectrum_write_csv(const eitn_spectrum*, const char* path);

/* ------------------------------------------------------------------ */
/* Monte-Carlo oracle                                                  */

typedef struct eitn_oracle_config {
  double time_step;          /* us */
  double total_time;         /* averaging time per trajectory, us */
  double burn_in;            /* us */
  uint64_t trajectories;
  uint64_t seed;
  double additive_noise_rms; /* detector-noise emulation, 0 disables */
} eitn_oracle_config;

typedef struct eitn_oracle_result eitn_oracle_result;

EITN_API eitn_status eitn_oracle_run(const eitn_model*, const eitn_oracle_config*,
                                     int threads, eitn_oracle_result** out);
EITN_API void eitn_oracle_result_free(eitn_oracle_result*);
EITN_API eitn_status eitn_oracle_g2(const eitn_oracle_result*, double* g2, double* std_error);
EITN_API eitn_status eitn_oracle_mean(const eitn_oracle_result*, double re[8], double im[8]);
EITN_API eitn_status eitn_oracle_covariance(const eitn_oracle_result*, double re[64], double im[64]);

/* Integrate one trajectory and write its two intensity channels as
 * `<basename>.csv` plus a `<basename>.json` sidecar. */
EITN_API eitn_status eitn_oracle_emit_traces(const eitn_model*, const eitn_oracle_config*,
                                             double delta_label, const char* basename);

/* ------------------------------------------------------------------ */
/* Command-level entry points (what the CLI binds)                     */

/* cmd is one of "spectrum", "trends", "oracle", "eit".  Reads the config
 * file, writes CSV/JSON outputs under out_dir.  seed < 0 keeps the config
 * value.  threads <= 0 selects machine parallelism; deterministic != 0
 * forces serial reduction. */
EITN_API eitn_status eitn_run_command(const char* cmd, const char* config_path,
                                      const char* out_dir, int64_t seed, int threads,
                                      int deterministic);

/* Trace-analysis pipeline over trace CSV files (sidecar JSON located by
 * basename).  delta_override_count may be 0; if 1 and n_paths == 1 the
 * label of the single trace is overridden. */
EITN_API eitn_status eitn_run_analyze(const char* const* paths, size_t n_paths,
                                      const char* out_dir,
                                      const double* delta_override, size_t delta_override_count,
                                      int threads);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EITNOISE_H */
