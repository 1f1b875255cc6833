// capi.cpp: extern "C" surface. Exceptions from the core are mapped to
// status codes; the message lands in a thread-local slot for
// jcsq_last_error(). Out parameters stay untouched on failure.
#include "jcsqueeze/jcsqueeze.h"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "envelope.hpp"
#include "model.hpp"
#include "observables.hpp"
#include "oracle.hpp"
#include "types.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

template <typename F>
jcsq_status try_(F&& f) {
    try {
        f();
        g_last_error.clear();
        return JCSQ_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return JCSQ_ERROR_INVALID_ARGUMENT;
    } catch (const jcsq::NumericError& e) {
        g_last_error = e.what();
        return JCSQ_ERROR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return JCSQ_ERROR_NUMERIC;
    }
}

void require_ptr(const void* p, const char* name) {
    if (p == nullptr) throw std::invalid_argument(std::string("null pointer: ") + name);
}

jcsq_complex to_c(jcsq::Complex z) { return {z.real(), z.imag()}; }

jcsq_state to_c(const jcsq::DressedState& s) {
    jcsq_state out;
    const auto m = s.full();
    for (int i = 0; i < 9; ++i) out.m[i] = to_c(m[i]);
    return out;
}

jcsq::DressedState from_c(const jcsq_state& s) {
    // Upper triangle is authoritative; Hermiticity of the input is the
    // caller's contract and is re-validated only through the trace check
    // and the structural use of the upper triangle.
    jcsq::DressedState d;
    d.l11 = s.m[0].re;
    d.l22 = s.m[4].re;
    d.l33 = s.m[8].re;
    d.l12 = jcsq::Complex(s.m[1].re, s.m[1].im);
    d.l13 = jcsq::Complex(s.m[2].re, s.m[2].im);
    d.l23 = jcsq::Complex(s.m[5].re, s.m[5].im);
    return d;
}

jcsq::Convention from_c(jcsq_convention c) {
    switch (c) {
        case JCSQ_CONVENTION_QUARTER: return jcsq::Convention::quarter;
        case JCSQ_CONVENTION_UNIT: return jcsq::Convention::unit;
    }
    throw std::invalid_argument("convention must be JCSQ_CONVENTION_QUARTER or "
                                "JCSQ_CONVENTION_UNIT");
}

jcsq_record to_c(const jcsq::ObservableRecord& r) {
    return {r.t, r.F1, r.F2, r.Pe, r.mean_n, r.re_a, r.im_a, r.x1_var, r.x2_var,
            r.uncertainty, r.min_eig, r.gamma_minus, r.gamma_plus, r.damp_f1, r.damp_f2};
}

}  // namespace

struct jcsq_model {
    jcsq::ModelParams params;
};

struct jcsq_trajectory {
    jcsq::ModelParams params;
    std::vector<jcsq::ObservableRecord> records;
    std::vector<jcsq_record> c_records;
};

struct jcsq_envelope {
    jcsq::EnvelopeSummary summary;
    std::vector<double> revival_times;
    std::vector<double> revival_values;
};

extern "C" {

const char* jcsq_version(void) { return "1.0.0"; }

const char* jcsq_last_error(void) { return g_last_error.c_str(); }

const char* jcsq_status_name(jcsq_status status) {
    switch (status) {
        case JCSQ_OK: return "JCSQ_OK";
        case JCSQ_ERROR_INVALID_ARGUMENT: return "JCSQ_ERROR_INVALID_ARGUMENT";
        case JCSQ_ERROR_NUMERIC: return "JCSQ_ERROR_NUMERIC";
    }
    return "JCSQ_UNKNOWN_STATUS";
}

jcsq_status jcsq_model_create(double lambda, double coupling, double omega0,
                              jcsq_model** out) {
    return try_([&] {
        require_ptr(out, "out");
        *out = new jcsq_model{jcsq::ModelParams::create(lambda, coupling, omega0)};
    });
}

jcsq_status jcsq_model_create_undamped(double coupling, double omega0,
                                       jcsq_model** out) {
    return try_([&] {
        require_ptr(out, "out");
        *out = new jcsq_model{jcsq::ModelParams::undamped_model(coupling, omega0)};
    });
}

void jcsq_model_destroy(jcsq_model* model) { delete model; }

#define JCSQ_MODEL_GETTER(name, expr)                                    \
    jcsq_status name(const jcsq_model* model, double* out) {             \
        return try_([&] {                                                \
            require_ptr(model, "model");                                 \
            require_ptr(out, "out");                                     \
            *out = (expr);                                               \
        });                                                              \
    }

JCSQ_MODEL_GETTER(jcsq_model_lambda, model->params.lambda)
JCSQ_MODEL_GETTER(jcsq_model_coupling, model->params.coupling)
JCSQ_MODEL_GETTER(jcsq_model_omega0, model->params.omega0)

#undef JCSQ_MODEL_GETTER

jcsq_status jcsq_model_is_markovian(const jcsq_model* model, int* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        *out = model->params.markovian() ? 1 : 0;
    });
}

jcsq_status jcsq_model_is_undamped(const jcsq_model* model, int* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        *out = model->params.undamped ? 1 : 0;
    });
}

#define JCSQ_MODEL_FN1(name, fn)                                            \
    jcsq_status name(const jcsq_model* model, double x, double* out) {      \
        return try_([&] {                                                   \
            require_ptr(model, "model");                                    \
            require_ptr(out, "out");                                        \
            *out = fn(model->params, x);                                    \
        });                                                                 \
    }

JCSQ_MODEL_FN1(jcsq_spectral_density, jcsq::spectral_density)
JCSQ_MODEL_FN1(jcsq_rate_minus, jcsq::gamma_minus)
JCSQ_MODEL_FN1(jcsq_rate_plus, jcsq::gamma_plus)
JCSQ_MODEL_FN1(jcsq_damping_f1, jcsq::damping_f1)
JCSQ_MODEL_FN1(jcsq_damping_f2, jcsq::damping_f2)

#undef JCSQ_MODEL_FN1

jcsq_status jcsq_propagator_at(const jcsq_model* model, double t, jcsq_propagator* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        const auto c = jcsq::propagator_at(model->params, t);
        out->c11 = c.c11;
        out->c22 = c.c22;
        out->c12 = to_c(c.c12);
        out->c13 = to_c(c.c13);
        out->c23 = to_c(c.c23);
    });
}

jcsq_status jcsq_initial_state(double theta, double phi, jcsq_state* out) {
    return try_([&] {
        require_ptr(out, "out");
        *out = to_c(jcsq::initial_dressed_state(jcsq::InitialAtomSpec::create(theta, phi)));
    });
}

jcsq_status jcsq_evolve(const jcsq_model* model, const jcsq_state* initial, double t,
                        jcsq_state* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        require_ptr(out, "out");
        *out = to_c(jcsq::evolve(model->params, from_c(*initial), t));
    });
}

jcsq_status jcsq_reduce_field(const jcsq_state* state, jcsq_field_state* out) {
    return try_([&] {
        require_ptr(state, "state");
        require_ptr(out, "out");
        const jcsq::FieldState f = jcsq::reduce_field(from_c(*state));
        out->m[0] = {f.p_vacuum, 0.0};
        out->m[1] = to_c(std::conj(f.coherence));
        out->m[2] = to_c(f.coherence);
        out->m[3] = {f.p_photon, 0.0};
    });
}

jcsq_status jcsq_excited_population(const jcsq_state* state, double* out) {
    return try_([&] {
        require_ptr(state, "state");
        require_ptr(out, "out");
        *out = jcsq::atom_excited_population(from_c(*state));
    });
}

jcsq_status jcsq_min_eigenvalue(const jcsq_state* state, double* out) {
    return try_([&] {
        require_ptr(state, "state");
        require_ptr(out, "out");
        *out = jcsq::min_eigenvalue(from_c(*state));
    });
}

jcsq_status jcsq_observe(const jcsq_model* model, const jcsq_state* initial, double t,
                         jcsq_convention convention, jcsq_record* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        require_ptr(out, "out");
        *out = to_c(jcsq::observe(model->params, from_c(*initial), t, from_c(convention)));
    });
}

jcsq_status jcsq_envelope_f1(const jcsq_model* model, const jcsq_state* initial,
                             double t, jcsq_convention convention, double* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        require_ptr(out, "out");
        *out = jcsq::envelope_f1(model->params, from_c(*initial), t, from_c(convention));
    });
}

jcsq_status jcsq_envelope_f1_min(const jcsq_model* model, const jcsq_state* initial,
                                 double t_max, jcsq_convention convention, double* t_at,
                                 double* value) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        const auto m = jcsq::envelope_f1_min(model->params, from_c(*initial), t_max,
                                             from_c(convention));
        if (t_at != nullptr) *t_at = m.t;
        if (value != nullptr) *value = m.value;
    });
}

jcsq_status jcsq_trajectory_run(const jcsq_model* model, const jcsq_state* initial,
                                double t_max, int samples_per_fast_period,
                                jcsq_convention convention, jcsq_trajectory** out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        require_ptr(out, "out");
        auto traj = std::make_unique<jcsq_trajectory>();
        traj->params = model->params;
        traj->records = jcsq::run_timeseries(model->params, from_c(*initial), t_max,
                                             samples_per_fast_period, from_c(convention));
        traj->c_records.reserve(traj->records.size());
        for (const auto& r : traj->records) traj->c_records.push_back(to_c(r));
        *out = traj.release();
    });
}

size_t jcsq_trajectory_length(const jcsq_trajectory* trajectory) {
    return trajectory == nullptr ? 0 : trajectory->records.size();
}

const jcsq_record* jcsq_trajectory_records(const jcsq_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->c_records.data();
}

void jcsq_trajectory_destroy(jcsq_trajectory* trajectory) { delete trajectory; }

jcsq_status jcsq_envelope_extract(const jcsq_model* model,
                                  const jcsq_trajectory* trajectory,
                                  jcsq_envelope** out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(trajectory, "trajectory");
        require_ptr(out, "out");
        auto env = std::make_unique<jcsq_envelope>();
        env->summary = jcsq::extract_envelope(trajectory->records, model->params);
        for (const auto& pk : env->summary.revival_peaks) {
            env->revival_times.push_back(pk.t);
            env->revival_values.push_back(pk.value);
        }
        *out = env.release();
    });
}

#define JCSQ_ENVELOPE_ARRAY(name, member)                                    \
    const double* name(const jcsq_envelope* env, size_t* length) {           \
        if (env == nullptr) {                                                \
            if (length != nullptr) *length = 0;                              \
            return nullptr;                                                  \
        }                                                                    \
        if (length != nullptr) *length = (member).size();                    \
        return (member).data();                                              \
    }

JCSQ_ENVELOPE_ARRAY(jcsq_envelope_lower, env->summary.lower)
JCSQ_ENVELOPE_ARRAY(jcsq_envelope_collapse_times, env->summary.collapse_times)
JCSQ_ENVELOPE_ARRAY(jcsq_envelope_revival_times, env->revival_times)
JCSQ_ENVELOPE_ARRAY(jcsq_envelope_revival_values, env->revival_values)

#undef JCSQ_ENVELOPE_ARRAY

double jcsq_envelope_period(const jcsq_envelope* env) {
    return env == nullptr ? std::nan("") : env->summary.period_estimate;
}

double jcsq_envelope_fast_frequency(const jcsq_envelope* env) {
    return env == nullptr ? std::nan("") : env->summary.fast_frequency;
}

void jcsq_envelope_destroy(jcsq_envelope* env) { delete env; }

jcsq_status jcsq_oracle_evolve(const jcsq_model* model, const jcsq_state* initial,
                               const double* times, size_t n, jcsq_state* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(initial, "initial");
        require_ptr(times, "times");
        require_ptr(out, "out");
        if (n == 0) throw std::invalid_argument("times array must not be empty");
        const auto states = jcsq::integrate_master_equation(
            model->params, from_c(*initial), std::span<const double>(times, n));
        for (size_t i = 0; i < n; ++i) out[i] = to_c(states[i]);
    });
}

jcsq_status jcsq_oracle_damping(const jcsq_model* model, double t, int which,
                                double* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        if (which != 1 && which != 2)
            throw std::invalid_argument("which must be 1 (f1) or 2 (f2)");
        *out = jcsq::quad_damping(model->params, t,
                                  which == 1 ? jcsq::DampingIntegral::f1
                                             : jcsq::DampingIntegral::f2);
    });
}

jcsq_status jcsq_oracle_rate(const jcsq_model* model, double omega, double t,
                             double* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        *out = jcsq::rate_from_correlation(model->params, omega, t);
    });
}

jcsq_status jcsq_verify_run(const jcsq_model* model, double theta, double phi,
                            double t_max, jcsq_verify_report* out) {
    return try_([&] {
        require_ptr(model, "model");
        require_ptr(out, "out");
        const auto rep = jcsq::verify_run(model->params,
                                          jcsq::InitialAtomSpec::create(theta, phi), t_max);
        out->max_ode_dev = rep.max_ode_dev;
        out->max_rate_dev = rep.max_rate_dev;
        out->trace_drift = rep.trace_drift;
        out->min_eig = rep.min_eig;
        out->gates_passed = rep.gates_passed ? 1 : 0;
    });
}

}  // extern "C"
