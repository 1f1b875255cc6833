// test_capi.cpp: exercises the shared-library boundary: handles, error
// reporting, and numeric agreement with frozen reference values.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "jcsqueeze/jcsqueeze.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTheta = 2.0 * kPi / 3.0;

std::complex<double> cval(jcsq_complex z) { return {z.re, z.im}; }

struct ModelGuard {
    jcsq_model* m = nullptr;
    ~ModelGuard() { jcsq_model_destroy(m); }
};

jcsq_state opt_state() {
    jcsq_state s;
    REQUIRE(jcsq_initial_state(kTheta, 0.0, &s) == JCSQ_OK);
    return s;
}
}

TEST_CASE("version and status strings") {
    CHECK(jcsq_version() != nullptr);
    CHECK(std::string(jcsq_version()).find('.') != std::string::npos);
    CHECK(std::string(jcsq_status_name(JCSQ_OK)) == "JCSQ_OK");
    CHECK(std::string(jcsq_status_name(JCSQ_ERROR_INVALID_ARGUMENT)) ==
          "JCSQ_ERROR_INVALID_ARGUMENT");
    CHECK(std::string(jcsq_status_name(JCSQ_ERROR_NUMERIC)) ==
          "JCSQ_ERROR_NUMERIC");
}

TEST_CASE("model lifecycle and validation") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    REQUIRE(g.m != nullptr);
    double v = 0.0;
    int flag = -1;
    REQUIRE(jcsq_model_lambda(g.m, &v) == JCSQ_OK);
    CHECK(v == 5.0);
    REQUIRE(jcsq_model_coupling(g.m, &v) == JCSQ_OK);
    CHECK(v == 1.0);
    REQUIRE(jcsq_model_omega0(g.m, &v) == JCSQ_OK);
    CHECK(v == 10.0);
    REQUIRE(jcsq_model_is_markovian(g.m, &flag) == JCSQ_OK);
    CHECK(flag == 1);
    REQUIRE(jcsq_model_is_undamped(g.m, &flag) == JCSQ_OK);
    CHECK(flag == 0);

    jcsq_model* bad = nullptr;
    CHECK(jcsq_model_create(-1.0, 1.0, 10.0, &bad) ==
          JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(std::strlen(jcsq_last_error()) > 0);

    CHECK(jcsq_model_create(5.0, 1.0, 0.5, &bad) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(jcsq_model_create(5.0, 1.0, 10.0, nullptr) ==
          JCSQ_ERROR_INVALID_ARGUMENT);

    ModelGuard u;
    REQUIRE(jcsq_model_create_undamped(1.0, 10.0, &u.m) == JCSQ_OK);
    REQUIRE(jcsq_model_is_undamped(u.m, &flag) == JCSQ_OK);
    CHECK(flag == 1);
    REQUIRE(jcsq_model_is_markovian(u.m, &flag) == JCSQ_OK);
    CHECK(flag == 0);

    ModelGuard nm;
    REQUIRE(jcsq_model_create(0.3, 1.0, 10.0, &nm.m) == JCSQ_OK);
    REQUIRE(jcsq_model_is_markovian(nm.m, &flag) == JCSQ_OK);
    CHECK(flag == 0);

    jcsq_model_destroy(nullptr);  // must be a no-op
}

TEST_CASE("spectral density and rates match reference values") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    double v = 0.0;

    REQUIRE(jcsq_spectral_density(g.m, 9.0, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.15915494309189534).epsilon(1e-15));
    REQUIRE(jcsq_spectral_density(g.m, 11.0, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.13720253714818563).epsilon(1e-15));

    ModelGuard narrow;
    REQUIRE(jcsq_model_create(0.3, 1.0, 10.0, &narrow.m) == JCSQ_OK);
    REQUIRE(jcsq_spectral_density(narrow.m, 9.0, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.15915494309189534).epsilon(1e-15));

    REQUIRE(jcsq_rate_minus(g.m, 0.5 * kPi, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.99961179679607323).epsilon(1e-15));
    REQUIRE(jcsq_rate_plus(g.m, 1.0, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.86659887454813290).epsilon(1e-15));

    // The upper-transition rate dips negative outside the Markovian regime.
    REQUIRE(jcsq_rate_plus(narrow.m, 0.75 * kPi, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(-0.050345897560384483).epsilon(1e-12));

    REQUIRE(jcsq_damping_f1(g.m, 0.5 * kPi, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.68543698371784099).epsilon(1e-14));
    REQUIRE(jcsq_damping_f2(g.m, 0.5 * kPi, &v) == JCSQ_OK);
    CHECK(v == doctest::Approx(0.61461746467888685).epsilon(1e-14));

    CHECK(jcsq_rate_minus(g.m, -1.0, &v) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(jcsq_rate_minus(nullptr, 1.0, &v) == JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("propagator entries carry the damping integrals") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    jcsq_propagator p;
    REQUIRE(jcsq_propagator_at(g.m, 0.0, &p) == JCSQ_OK);
    CHECK(p.c11 == 1.0);
    CHECK(p.c22 == 1.0);
    CHECK(cval(p.c12) == std::complex<double>(1.0, 0.0));

    REQUIRE(jcsq_propagator_at(g.m, 0.5 * kPi, &p) == JCSQ_OK);
    CHECK(std::abs(cval(p.c12)) ==
          doctest::Approx(0.52203156467669164).epsilon(1e-13));
    CHECK(cval(p.c12).real() < 0.0);  // phase -2*coupling*t = -pi
    CHECK(p.c11 == doctest::Approx(std::exp(-0.61461746467888685)).epsilon(1e-13));
    CHECK(p.c22 == doctest::Approx(std::exp(-0.68543698371784099)).epsilon(1e-13));
    CHECK(std::norm(cval(p.c13)) == doctest::Approx(p.c11).epsilon(1e-13));
    CHECK(std::norm(cval(p.c23)) == doctest::Approx(p.c22).epsilon(1e-13));

    CHECK(jcsq_propagator_at(g.m, -0.1, &p) == JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("initial state layout in the packed matrix") {
    jcsq_state s;
    REQUIRE(jcsq_initial_state(kTheta, 0.0, &s) == JCSQ_OK);
    const double r6o8 = std::sqrt(6.0) / 8.0;  // 0.30618621784789724
    CHECK(s.m[0].re == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(s.m[4].re == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(s.m[8].re == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s.m[1].re == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(s.m[2].re == doctest::Approx(r6o8).epsilon(1e-14));
    CHECK(s.m[5].re == doctest::Approx(-r6o8).epsilon(1e-14));
    // Lower triangle mirrors the upper one.
    CHECK(s.m[3].re == s.m[1].re);
    CHECK(s.m[3].im == -s.m[1].im);
    CHECK(s.m[6].re == s.m[2].re);
    CHECK(s.m[6].im == -s.m[2].im);
    CHECK(s.m[7].re == s.m[5].re);
    CHECK(s.m[7].im == -s.m[5].im);

    jcsq_state rot;
    REQUIRE(jcsq_initial_state(kTheta, 0.5 * kPi, &rot) == JCSQ_OK);
    CHECK(rot.m[2].re == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rot.m[2].im == doctest::Approx(-r6o8).epsilon(1e-14));

    CHECK(jcsq_initial_state(-0.1, 0.0, &s) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(jcsq_initial_state(kPi + 0.1, 0.0, &s) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(jcsq_initial_state(kTheta, 2.0 * kPi, &s) ==
          JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("evolution preserves trace and matches the closed form") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();
    jcsq_state st;
    REQUIRE(jcsq_evolve(g.m, &s0, 1.7, &st) == JCSQ_OK);

    double f2 = 0.0;
    REQUIRE(jcsq_damping_f2(g.m, 1.7, &f2) == JCSQ_OK);
    CHECK(st.m[0].re == doctest::Approx(0.125 * std::exp(-f2)).epsilon(1e-13));

    const double tr = st.m[0].re + st.m[4].re + st.m[8].re;
    CHECK(tr == doctest::Approx(1.0).epsilon(1e-13));

    CHECK(jcsq_evolve(g.m, &s0, -0.5, &st) == JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("field reduction and derived observables") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();

    jcsq_field_state f;
    REQUIRE(jcsq_reduce_field(&s0, &f) == JCSQ_OK);
    CHECK(f.m[3].re == 0.0);  // no photon yet
    CHECK(f.m[2].re == 0.0);
    CHECK(f.m[2].im == 0.0);
    CHECK(f.m[0].re == doctest::Approx(1.0).epsilon(1e-15));

    double pe = 0.0;
    REQUIRE(jcsq_excited_population(&s0, &pe) == JCSQ_OK);
    CHECK(pe == doctest::Approx(0.25).epsilon(1e-14));

    double mev = 0.0;
    REQUIRE(jcsq_min_eigenvalue(&s0, &mev) == JCSQ_OK);
    CHECK(mev == doctest::Approx(0.0).epsilon(1e-13));

    jcsq_record r;
    REQUIRE(jcsq_observe(g.m, &s0, 0.8, JCSQ_CONVENTION_QUARTER, &r) == JCSQ_OK);
    CHECK(r.t == 0.8);
    CHECK(r.F1 == doctest::Approx(r.x1_var - 0.25).epsilon(1e-14));
    CHECK(r.uncertainty == doctest::Approx(r.x1_var * r.x2_var).epsilon(1e-14));

    CHECK(jcsq_observe(g.m, &s0, 0.8, (jcsq_convention)7, &r) ==
          JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("trajectory handle produces the documented grid") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();
    jcsq_trajectory* tr = nullptr;
    REQUIRE(jcsq_trajectory_run(g.m, &s0, 20.0, 40, JCSQ_CONVENTION_QUARTER,
                                &tr) == JCSQ_OK);
    REQUIRE(tr != nullptr);
    // 20 / (2*pi/11) fast periods at 40 samples each: ceil(1400.56) steps.
    CHECK(jcsq_trajectory_length(tr) == 1402);
    const jcsq_record* recs = jcsq_trajectory_records(tr);
    REQUIRE(recs != nullptr);
    CHECK(recs[0].t == 0.0);
    CHECK(recs[1401].t == 20.0);
    CHECK(recs[0].F1 == 0.0);
    jcsq_trajectory_destroy(tr);

    tr = nullptr;
    CHECK(jcsq_trajectory_run(g.m, &s0, 20.0, 8, JCSQ_CONVENTION_QUARTER,
                              &tr) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(tr == nullptr);
    jcsq_trajectory_destroy(nullptr);  // must be a no-op
}

TEST_CASE("envelope handle reports period and frequency") {
    ModelGuard g;
    REQUIRE(jcsq_model_create_undamped(1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();
    jcsq_trajectory* tr = nullptr;
    REQUIRE(jcsq_trajectory_run(g.m, &s0, 20.0, 60, JCSQ_CONVENTION_QUARTER,
                                &tr) == JCSQ_OK);
    jcsq_envelope* env = nullptr;
    REQUIRE(jcsq_envelope_extract(g.m, tr, &env) == JCSQ_OK);
    REQUIRE(env != nullptr);

    size_t n_lower = 0;
    CHECK(jcsq_envelope_lower(env, &n_lower) != nullptr);
    CHECK(n_lower == jcsq_trajectory_length(tr));

    size_t n_rev = 0, n_val = 0;
    const double* rt = jcsq_envelope_revival_times(env, &n_rev);
    const double* rv = jcsq_envelope_revival_values(env, &n_val);
    REQUIRE(rt != nullptr);
    REQUIRE(rv != nullptr);
    REQUIRE(n_rev == n_val);
    REQUIRE(n_rev >= 5);  // one minimum per beat up to t = 20
    // Reported times sit on fast-oscillation floor touches, within one
    // touch spacing pi/omega0 of the beat antinodes at pi/2 + k*pi.
    CHECK(std::abs(rt[0] - 0.5 * kPi) < kPi / 10.0 + 0.02);
    CHECK(rt[1] - rt[0] == doctest::Approx(kPi).epsilon(0.02));
    CHECK(rv[0] == doctest::Approx(-0.0625).epsilon(0.02));

    CHECK(jcsq_envelope_period(env) == doctest::Approx(kPi).epsilon(0.03));
    CHECK(jcsq_envelope_fast_frequency(env) ==
          doctest::Approx(20.0).epsilon(0.02));

    jcsq_envelope_destroy(env);
    jcsq_trajectory_destroy(tr);
    jcsq_envelope_destroy(nullptr);  // must be a no-op
}

TEST_CASE("direct envelope minimum lookup") {
    ModelGuard g;
    REQUIRE(jcsq_model_create_undamped(1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();
    double t_at = 0.0, value = 0.0;
    REQUIRE(jcsq_envelope_f1_min(g.m, &s0, 20.0, JCSQ_CONVENTION_UNIT, &t_at,
                                 &value) == JCSQ_OK);
    CHECK(std::abs(value - (-0.25)) <= 4e-10);
    CHECK(std::abs(std::cos(t_at)) <= 1e-5);  // beat antinodes
    // Output pointers are optional.
    REQUIRE(jcsq_envelope_f1_min(g.m, &s0, 20.0, JCSQ_CONVENTION_UNIT, nullptr,
                                 &value) == JCSQ_OK);
    REQUIRE(jcsq_envelope_f1_min(g.m, &s0, 20.0, JCSQ_CONVENTION_UNIT, &t_at,
                                 nullptr) == JCSQ_OK);
}

TEST_CASE("reference integrator agrees with the closed form") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    const jcsq_state s0 = opt_state();
    const std::vector<double> times = {0.0, 0.5, 1.0, 2.0, 4.0};
    std::vector<jcsq_state> out(times.size());
    REQUIRE(jcsq_oracle_evolve(g.m, &s0, times.data(), times.size(),
                               out.data()) == JCSQ_OK);
    for (std::size_t i = 0; i < times.size(); ++i) {
        jcsq_state ref;
        REQUIRE(jcsq_evolve(g.m, &s0, times[i], &ref) == JCSQ_OK);
        for (int k = 0; k < 9; ++k) {
            CHECK(std::abs(out[i].m[k].re - ref.m[k].re) <= 1e-8);
            CHECK(std::abs(out[i].m[k].im - ref.m[k].im) <= 1e-8);
        }
    }
    CHECK(jcsq_oracle_evolve(g.m, &s0, times.data(), 0, out.data()) ==
          JCSQ_ERROR_INVALID_ARGUMENT);
    const double backwards[2] = {0.0, -1.0};
    CHECK(jcsq_oracle_evolve(g.m, &s0, backwards, 2, out.data()) ==
          JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("quadrature route reproduces rates and damping integrals") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(0.3, 1.0, 10.0, &g.m) == JCSQ_OK);
    double v = 0.0, ref = 0.0;

    REQUIRE(jcsq_oracle_damping(g.m, 2.5, 1, &v) == JCSQ_OK);
    REQUIRE(jcsq_damping_f1(g.m, 2.5, &ref) == JCSQ_OK);
    CHECK(std::abs(v - ref) <= 1e-8 * std::abs(ref));

    REQUIRE(jcsq_oracle_damping(g.m, 2.5, 2, &v) == JCSQ_OK);
    REQUIRE(jcsq_damping_f2(g.m, 2.5, &ref) == JCSQ_OK);
    CHECK(std::abs(v - ref) <= 1e-8 * std::abs(ref) + 1e-14);

    // Upper dressed transition sits at omega0 + coupling.
    REQUIRE(jcsq_oracle_rate(g.m, 11.0, 0.75 * kPi, &v) == JCSQ_OK);
    CHECK(std::abs(v - (-0.050345897560384483)) <= 1e-8);
    REQUIRE(jcsq_oracle_rate(g.m, 9.0, 0.75 * kPi, &v) == JCSQ_OK);
    REQUIRE(jcsq_rate_minus(g.m, 0.75 * kPi, &ref) == JCSQ_OK);
    CHECK(std::abs(v - ref) <= 1e-8);

    CHECK(jcsq_oracle_damping(g.m, 2.5, 3, &v) == JCSQ_ERROR_INVALID_ARGUMENT);
    CHECK(jcsq_oracle_rate(g.m, 9.0, -1.0, &v) == JCSQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("self-check pass for the reference parameter point") {
    ModelGuard g;
    REQUIRE(jcsq_model_create(5.0, 1.0, 10.0, &g.m) == JCSQ_OK);
    jcsq_verify_report rep;
    REQUIRE(jcsq_verify_run(g.m, kTheta, 0.0, 5.0, &rep) == JCSQ_OK);
    CHECK(rep.max_ode_dev <= 1e-8);
    CHECK(rep.max_rate_dev <= 1e-8);
    CHECK(rep.trace_drift <= 1e-10);
    CHECK(rep.min_eig >= -1e-9);
    CHECK(rep.gates_passed == 1);
}
