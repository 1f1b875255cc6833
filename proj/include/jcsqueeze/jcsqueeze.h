/* jcsqueeze.h: C API for transient squeezing of a cavity field coupled to a
 * two-level atom inside a lossy resonator (zero/one excitation sector,
 * dressed-basis description with a Lorentzian structured reservoir).
 *
 * Conventions. Rates are measured in units of the resonant Markovian decay
 * rate and times in its inverse; the reservoir spectrum is peaked on the
 * lower dressed transition at omega0 - coupling. Dressed-basis matrices are
 * 3x3 row-major over [|E1+>, |E1->, |E0>]; field matrices are 2x2 row-major
 * over photon numbers [|0>, |1>].
 *
 * Every function returns a jcsq_status; results travel through out
 * parameters. On failure the out values are untouched and a thread-local
 * message is available via jcsq_last_error(). Handles are destroyed with
 * their matching _destroy function; destroying NULL is a no-op.
 */
#ifndef JCSQUEEZE_H
#define JCSQUEEZE_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(JCSQ_BUILD)
#define JCSQ_API __declspec(dllexport)
#else
#define JCSQ_API __declspec(dllimport)
#endif
#else
#define JCSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jcsq_status {
    JCSQ_OK = 0,
    JCSQ_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or malformed input state */
    JCSQ_ERROR_NUMERIC = 2           /* integrator/quadrature failed to converge */
} jcsq_status;

/* Quadrature normalisation: vacuum variance 1/4 (quarter) or 1 (unit).
 * Squeezing factors are var - 1/4 and 4*var - 1 respectively. */
typedef enum jcsq_convention {
    JCSQ_CONVENTION_QUARTER = 0,
    JCSQ_CONVENTION_UNIT = 1
} jcsq_convention;

typedef struct jcsq_complex {
    double re;
    double im;
} jcsq_complex;

/* Dressed-basis density matrix, row-major. Writers must keep it Hermitian
 * with unit trace; functions producing it guarantee that. */
typedef struct jcsq_state {
    jcsq_complex m[9];
} jcsq_state;

/* Reduced cavity state over [|0>, |1>], row-major. m[2] equals <1|rho|0>,
 * the mean field amplitude <a> in this sector. */
typedef struct jcsq_field_state {
    jcsq_complex m[4];
} jcsq_field_state;

/* Coefficients of the exact one-excitation propagator. Populations scale by
 * c11/c22; coherences rotate and damp with c12/c13/c23. The magnitudes obey
 * |c12|^2 = c11*c22, |c13|^2 = c11, |c23|^2 = c22. */
typedef struct jcsq_propagator {
    double c11;
    double c22;
    jcsq_complex c12;
    jcsq_complex c13;
    jcsq_complex c23;
} jcsq_propagator;

/* One sample of the observable set (CSV column order of the CLI). F1/F2 are
 * squeezing factors in the convention the sample was taken with. */
typedef struct jcsq_record {
    double t;
    double F1;
    double F2;
    double Pe;          /* atomic excited population */
    double mean_n;      /* mean photon number */
    double re_a;        /* Re <a> */
    double im_a;        /* Im <a> */
    double x1_var;
    double x2_var;
    double uncertainty; /* x1_var * x2_var */
    double min_eig;     /* smallest density-matrix eigenvalue */
    double gamma_minus;
    double gamma_plus;
    double damp_f1;
    double damp_f2;
} jcsq_record;

typedef struct jcsq_verify_report {
    double max_ode_dev;  /* closed form vs integrated master equation */
    double max_rate_dev; /* closed-form rates/damping vs quadrature */
    double trace_drift;  /* max |Tr - 1| along the integrated trajectory */
    double min_eig;      /* smallest eigenvalue along the trajectory */
    int gates_passed;
} jcsq_verify_report;

typedef struct jcsq_model jcsq_model;
typedef struct jcsq_trajectory jcsq_trajectory;
typedef struct jcsq_envelope jcsq_envelope;

JCSQ_API const char* jcsq_version(void);

/* Message describing the most recent failure on this thread. Never NULL;
 * empty string when no failure has occurred. */
JCSQ_API const char* jcsq_last_error(void);

JCSQ_API const char* jcsq_status_name(jcsq_status status);

/* --- model ----------------------------------------------------------- */

/* Requires lambda > 0, coupling >= 0 and omega0 > coupling. lambda is the
 * reservoir memory bandwidth (lambda > 2 is the Markovian regime), coupling
 * the vacuum Rabi frequency, omega0 the bare transition frequency. */
JCSQ_API jcsq_status jcsq_model_create(double lambda, double coupling, double omega0,
                                       jcsq_model** out);

/* Closed-system limit: both decay rates identically zero. */
JCSQ_API jcsq_status jcsq_model_create_undamped(double coupling, double omega0,
                                                jcsq_model** out);

JCSQ_API void jcsq_model_destroy(jcsq_model* model);

JCSQ_API jcsq_status jcsq_model_lambda(const jcsq_model* model, double* out);
JCSQ_API jcsq_status jcsq_model_coupling(const jcsq_model* model, double* out);
JCSQ_API jcsq_status jcsq_model_omega0(const jcsq_model* model, double* out);
JCSQ_API jcsq_status jcsq_model_is_markovian(const jcsq_model* model, int* out);
JCSQ_API jcsq_status jcsq_model_is_undamped(const jcsq_model* model, int* out);

/* --- closed forms ----------------------------------------------------- */

/* Lorentzian reservoir spectrum at omega; peak value 1/(2*pi) at
 * omega0 - coupling regardless of lambda. */
JCSQ_API jcsq_status jcsq_spectral_density(const jcsq_model* model, double omega,
                                           double* out);

/* Time-dependent rates of the lower (minus) and upper (plus) dressed
 * transitions. gamma_plus oscillates at twice the coupling and may go
 * negative outside the Markovian regime; it is reported unclamped. */
JCSQ_API jcsq_status jcsq_rate_minus(const jcsq_model* model, double t, double* out);
JCSQ_API jcsq_status jcsq_rate_plus(const jcsq_model* model, double t, double* out);

/* Integrated damping exponents f1 = int gamma_minus/2, f2 = int gamma_plus/2. */
JCSQ_API jcsq_status jcsq_damping_f1(const jcsq_model* model, double t, double* out);
JCSQ_API jcsq_status jcsq_damping_f2(const jcsq_model* model, double t, double* out);

JCSQ_API jcsq_status jcsq_propagator_at(const jcsq_model* model, double t,
                                        jcsq_propagator* out);

/* Product state (cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>) x |vacuum>
 * expressed in the dressed basis. theta in [0, pi], phi in [0, 2*pi). */
JCSQ_API jcsq_status jcsq_initial_state(double theta, double phi, jcsq_state* out);

/* Exact state at time t >= 0. The initial state must be Hermitian with unit
 * trace (as produced by jcsq_initial_state). */
JCSQ_API jcsq_status jcsq_evolve(const jcsq_model* model, const jcsq_state* initial,
                                 double t, jcsq_state* out);

/* --- observables ------------------------------------------------------ */

JCSQ_API jcsq_status jcsq_reduce_field(const jcsq_state* state, jcsq_field_state* out);
JCSQ_API jcsq_status jcsq_excited_population(const jcsq_state* state, double* out);
JCSQ_API jcsq_status jcsq_min_eigenvalue(const jcsq_state* state, double* out);

/* Full observable sample of the state evolved to time t. */
JCSQ_API jcsq_status jcsq_observe(const jcsq_model* model, const jcsq_state* initial,
                                  double t, jcsq_convention convention,
                                  jcsq_record* out);

/* Phase-floor of F1 at time t: the value F1 dips to when the fast optical
 * oscillation aligns, n/2 - |<a>|^2 in the quarter convention. Independent of
 * the initial phase phi. */
JCSQ_API jcsq_status jcsq_envelope_f1(const jcsq_model* model, const jcsq_state* initial,
                                      double t, jcsq_convention convention, double* out);

/* Global minimum of the phase floor over [0, t_max] (coarse scan plus local
 * refinement). Either out pointer may be NULL. */
JCSQ_API jcsq_status jcsq_envelope_f1_min(const jcsq_model* model,
                                          const jcsq_state* initial, double t_max,
                                          jcsq_convention convention, double* t_at,
                                          double* value);

/* --- trajectories ----------------------------------------------------- */

/* Uniform sampling of [0, t_max] with samples_per_fast_period (>= 40) points
 * per optical period 2*pi/(omega0 + coupling). */
JCSQ_API jcsq_status jcsq_trajectory_run(const jcsq_model* model,
                                         const jcsq_state* initial, double t_max,
                                         int samples_per_fast_period,
                                         jcsq_convention convention,
                                         jcsq_trajectory** out);

JCSQ_API size_t jcsq_trajectory_length(const jcsq_trajectory* trajectory);

/* Borrowed pointer to length() contiguous records; valid until destroy. */
JCSQ_API const jcsq_record* jcsq_trajectory_records(const jcsq_trajectory* trajectory);

JCSQ_API void jcsq_trajectory_destroy(jcsq_trajectory* trajectory);

/* --- envelope analysis ------------------------------------------------ */

/* Collapse/revival analysis of a sampled trajectory: sliding-window lower
 * envelope (window one period 2*pi/omega0 wide), interior quiet intervals
 * (|env| below 5% of the global minimum), revival minima, their mean
 * spacing, and the dominant fast angular frequency. */
JCSQ_API jcsq_status jcsq_envelope_extract(const jcsq_model* model,
                                           const jcsq_trajectory* trajectory,
                                           jcsq_envelope** out);

/* Borrowed array of per-sample lower-envelope values (trajectory length). */
JCSQ_API const double* jcsq_envelope_lower(const jcsq_envelope* env, size_t* length);

JCSQ_API const double* jcsq_envelope_collapse_times(const jcsq_envelope* env,
                                                    size_t* length);
JCSQ_API const double* jcsq_envelope_revival_times(const jcsq_envelope* env,
                                                   size_t* length);
JCSQ_API const double* jcsq_envelope_revival_values(const jcsq_envelope* env,
                                                    size_t* length);

/* Mean revival spacing; NaN with fewer than two revivals. */
JCSQ_API double jcsq_envelope_period(const jcsq_envelope* env);

/* Dominant fast angular frequency; NaN for structureless traces. */
JCSQ_API double jcsq_envelope_fast_frequency(const jcsq_envelope* env);

JCSQ_API void jcsq_envelope_destroy(jcsq_envelope* env);

/* --- independent numerical routes ------------------------------------- */

/* Master-equation integration (embedded Runge-Kutta with dense output) at
 * the given strictly increasing times starting at 0. Writes n states. */
JCSQ_API jcsq_status jcsq_oracle_evolve(const jcsq_model* model,
                                        const jcsq_state* initial, const double* times,
                                        size_t n, jcsq_state* out);

/* Damping exponents by adaptive quadrature of the rates; which = 1 or 2. */
JCSQ_API jcsq_status jcsq_oracle_damping(const jcsq_model* model, double t, int which,
                                         double* out);

/* Decay rate at frequency omega as a finite-time reservoir-correlation
 * integral, evaluated by quadrature. */
JCSQ_API jcsq_status jcsq_oracle_rate(const jcsq_model* model, double omega, double t,
                                      double* out);

/* Full cross-check of the closed forms against the independent routes over
 * [0, t_max]. Gates: ODE deviation <= 1e-8, rate deviation <= 1e-8, trace
 * drift <= 1e-10, and (Markovian regime only) min eigenvalue >= -1e-9. */
JCSQ_API jcsq_status jcsq_verify_run(const jcsq_model* model, double theta, double phi,
                                     double t_max, jcsq_verify_report* out);

#ifdef __cplusplus
}
#endif

#endif /* JCSQUEEZE_H */
