#ifndef FOCKCP_H
#define FOCKCP_H

/* C API for the fockcp library: resonant Casimir-Polder energy shift of a
 * driven ground-state two-level atom near a non-dispersive half-space.
 *
 * Usage: create a scenario handle, set atom / drive / medium / distance,
 * then evaluate. Handles are immutable while an evaluation runs; evaluation
 * functions are pure and may be called concurrently on the same handle.
 * Every function returns a status code; fockcp_last_error() gives a
 * thread-local message for the last failure on the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FOCKCP_API __declspec(dllexport)
#else
#define FOCKCP_API __attribute__((visibility("default")))
#endif

typedef enum fockcp_status {
  FOCKCP_OK = 0,
  FOCKCP_ERR_INVALID = 1,        /* bad argument or inconsistent scenario */
  FOCKCP_ERR_RESONANT_DRIVE = 2, /* omega0 == omegaL */
  FOCKCP_ERR_TOLERANCE = 3,      /* quadrature tolerance not met */
  FOCKCP_ERR_NONFINITE = 4,      /* integrand produced a non-finite value */
  FOCKCP_ERR_NONDECAYING = 5,    /* evanescent integrand grows past cutoff */
  FOCKCP_ERR_DEGENERATE = 6,     /* reflection denominator underflow */
  FOCKCP_ERR_UNKNOWN = 99
} fockcp_status;

typedef struct fockcp_scenario fockcp_scenario; /* opaque */

FOCKCP_API fockcp_scenario* fockcp_scenario_create(void);
FOCKCP_API void fockcp_scenario_free(fockcp_scenario* s);

/* Atom: transition angular frequency (rad/s) and squared dipole components
 * (C^2 m^2). */
FOCKCP_API fockcp_status fockcp_scenario_set_atom(fockcp_scenario* s,
                                                  double omega0_rad_per_s,
                                                  double dx2_c2m2,
                                                  double dy2_c2m2,
                                                  double dz2_c2m2);

/* Drive, Fock route: photon number plus squared amplitude components in
 * natural units (hbar = c = eps0 = 1, lengths in meters -> 1/m^3). */
FOCKCP_API fockcp_status fockcp_scenario_set_drive_fock(
    fockcp_scenario* s, double omega_l_rad_per_s, double photons,
    double ex2_natural, double ey2_natural, double ez2_natural);

/* Drive, classical route: intensity (W/m^2) plus dimensionless direction
 * weights for the squared amplitude components. */
FOCKCP_API fockcp_status fockcp_scenario_set_drive_classical(
    fockcp_scenario* s, double omega_l_rad_per_s, double intensity_w_per_m2,
    double weight_x2, double weight_y2, double weight_z2);

FOCKCP_API fockcp_status fockcp_scenario_set_medium_conductor(fockcp_scenario* s);
FOCKCP_API fockcp_status fockcp_scenario_set_medium_dielectric(
    fockcp_scenario* s, double refractive_index);

FOCKCP_API fockcp_status fockcp_scenario_set_distance(fockcp_scenario* s,
                                                      double z_m);

FOCKCP_API fockcp_status fockcp_scenario_validate(const fockcp_scenario* s);

typedef struct fockcp_quad_settings {
  double rel_tol;
  double abs_tol;
  int max_panels;
  double oscillations_per_panel;
} fockcp_quad_settings;

FOCKCP_API void fockcp_quad_settings_default(fockcp_quad_settings* out);

typedef struct fockcp_shift_result {
  double traveling_j;
  double evanescent_j;
  double total_j; /* traveling + evanescent */
  double zeta;    /* 2 omega_L z / c */
  double traveling_error_j;
  double evanescent_error_j;
  int traveling_panels;
  int evanescent_panels;
  /* |Im| of the evanescent integral (J): the dissipative residue discarded
   * from the conservative potential; zero for a perfect conductor. */
  double evanescent_imag_residue_j;
  int near_resonance; /* 1 if |omega0 - omegaL| < 1e-6 omega0 */
} fockcp_shift_result;

/* General-alignment shift: quadrature of the total diagram integrand.
 * settings may be NULL for defaults. */
FOCKCP_API fockcp_status fockcp_shift_general(const fockcp_scenario* s,
                                              const fockcp_quad_settings* settings,
                                              fockcp_shift_result* out);

/* Parallel alignment near a dielectric, classical intensity required. */
FOCKCP_API fockcp_status fockcp_shift_parallel_dielectric(
    const fockcp_scenario* s, const fockcp_quad_settings* settings,
    fockcp_shift_result* out);

typedef enum fockcp_pc_part {
  FOCKCP_PART_EVANESCENT = 0,
  FOCKCP_PART_TRAVELING = 1,
  FOCKCP_PART_TOTAL = 2
} fockcp_pc_part;

/* Closed-form perfect-conductor shift (parallel alignment, classical
 * intensity). */
FOCKCP_API fockcp_status fockcp_pc_shift(const fockcp_scenario* s,
                                         fockcp_pc_part part, double* out_j);

typedef enum fockcp_pc_regime {
  FOCKCP_REGIME_NEAR_FIELD = 0,
  FOCKCP_REGIME_RETARDED = 1
} fockcp_pc_regime;

FOCKCP_API fockcp_status fockcp_pc_asymptotic(const fockcp_scenario* s,
                                              fockcp_pc_regime regime,
                                              double* out_j);

/* Three-term split of the conductor total: out_terms_j = { -cos z/z^3 term,
 * -sin z/z^2 term, +cos z/z term }, common prefactor included. The first
 * term alone is the prior-literature model curve. */
FOCKCP_API fockcp_status fockcp_pc_decompose(const fockcp_scenario* s,
                                             double out_terms_j[3]);

FOCKCP_API fockcp_status fockcp_zeta(const fockcp_scenario* s, double* out);

/* alpha(omega_L), C^2 m^2 / J. */
FOCKCP_API fockcp_status fockcp_polarizability(const fockcp_scenario* s,
                                               double* out);

typedef enum fockcp_intensity_mode {
  FOCKCP_INTENSITY_EXACT = 0,
  FOCKCP_INTENSITY_CLASSICAL = 1
} fockcp_intensity_mode;

FOCKCP_API fockcp_status fockcp_intensity(const fockcp_scenario* s,
                                          fockcp_intensity_mode mode,
                                          double* out_w_per_m2);

/* Resolved scenario in natural units, for config echo / diagnostics. */
typedef struct fockcp_natural_params {
  double omega0;  /* 1/m */
  double omega_l; /* 1/m */
  double z_m;
  double zeta;
  double photons;
  double ex2, ey2, ez2; /* 1/m^3 */
  double dx2, dy2, dz2; /* m^2 */
  double refractive_index; /* HUGE_VAL for a perfect conductor */
  double polarizability_si;
  double classical_intensity_si; /* W/m^2 (from the correspondence if Fock) */
} fockcp_natural_params;

FOCKCP_API fockcp_status fockcp_scenario_resolve(const fockcp_scenario* s,
                                                 fockcp_natural_params* out);

/* Thread-local message for the last failed call on this thread. */
FOCKCP_API const char* fockcp_last_error(void);

FOCKCP_API const char* fockcp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FOCKCP_H */
