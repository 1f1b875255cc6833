// observables.cpp
#include "observables.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace jcsq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Convention convention_from_string(std::string_view name) {
    if (name == "quarter") return Convention::quarter;
    if (name == "unit") return Convention::unit;
    throw std::invalid_argument("unknown convention '" + std::string(name) +
                                "' (accepted: quarter, unit)");
}

std::array<Complex, 9> dressed_to_bare(const DressedState& s) {
    // V maps dressed coordinates to bare ones; rho_b = V rho_d V+.
    const double pop_sum = 0.5 * (s.l11 + s.l22);
    const double re12 = s.l12.real();
    const Complex b11(pop_sum + re12, 0.0);
    const Complex b22(pop_sum - re12, 0.0);
    const Complex b12(0.5 * (s.l11 - s.l22), -s.l12.imag());
    const Complex b13 = (s.l13 + s.l23) * kInvSqrt2;
    const Complex b23 = (s.l13 - s.l23) * kInvSqrt2;
    const Complex b33(s.l33, 0.0);
    return {b11, b12, b13,
            std::conj(b12), b22, b23,
            std::conj(b13), std::conj(b23), b33};
}

FieldState reduce_field(const DressedState& s) {
    FieldState f;
    f.p_photon = 0.5 * (s.l11 + s.l22) + s.l12.real();  // |1g> population
    f.p_vacuum = 1.0 - f.p_photon;
    f.coherence = (s.l13 + s.l23) * kInvSqrt2;          // <1|rho_f|0> = <a>
    return f;
}

double atom_excited_population(const DressedState& s) {
    return 0.5 * (s.l11 + s.l22) - s.l12.real();
}

QuadratureMoments quadrature_moments(const FieldState& f) {
    QuadratureMoments m;
    m.mean_a = f.coherence;
    m.mean_n = f.p_photon;
    const double second = 0.25 * (1.0 + 2.0 * m.mean_n);  // <a^2> = 0 here
    const double re = m.mean_a.real(), im = m.mean_a.imag();
    m.x1_var = second - re * re;
    m.x2_var = second - im * im;
    return m;
}

std::pair<double, double> squeezing_factors(const QuadratureMoments& m, Convention conv) {
    if (conv == Convention::quarter)
        return {m.x1_var - 0.25, m.x2_var - 0.25};
    return {4.0 * m.x1_var - 1.0, 4.0 * m.x2_var - 1.0};
}

double uncertainty_product(const QuadratureMoments& m) {
    return m.x1_var * m.x2_var;
}

double min_eigenvalue(const DressedState& s) {
    Eigen::Matrix3cd rho;
    const auto m = s.full();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) rho(r, c) = m[3 * r + c];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double envelope_f1(const ModelParams& p, const DressedState& initial, double t,
                   Convention conv) {
    const FieldState f = reduce_field(evolve(p, initial, t));
    const double env = 0.5 * f.p_photon - std::norm(f.coherence);
    return conv == Convention::quarter ? env : 4.0 * env;
}

EnvelopeMin envelope_f1_min(const ModelParams& p, const DressedState& initial,
                            double t_max, Convention conv) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("t_max must be finite and > 0");
    auto env = [&](double t) { return envelope_f1(p, initial, t, conv); };

    // Coarse scan resolving the slow scales (beat 2*Omega and decay lambda).
    double dt = t_max / 64.0;
    if (p.coupling > 0.0) dt = std::min(dt, kPi / (2.0 * p.coupling) / 16.0);
    if (!p.undamped) dt = std::min(dt, 0.25 / p.lambda);
    const int n = static_cast<int>(std::ceil(t_max / dt));
    int best = 0;
    double best_v = env(0.0);
    std::vector<double> vals(n + 1);
    vals[0] = best_v;
    for (int i = 1; i <= n; ++i) {
        const double t = (i == n) ? t_max : t_max * i / n;
        vals[i] = env(t);
        if (vals[i] < best_v) {
            best_v = vals[i];
            best = i;
        }
    }
    auto node = [&](int i) { return (i == n) ? t_max : t_max * i / n; };
    double a = node(std::max(0, best - 1));
    double b = node(std::min(n, best + 1));

    // Golden-section refinement.
    const double gr = 0.61803398874989485;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = env(x1), f2 = env(x2);
    while (b - a > 1e-11 * (1.0 + std::abs(a))) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a);
            f1 = env(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a);
            f2 = env(x2);
        }
    }
    const double tm = 0.5 * (a + b);
    const double vm = env(tm);
    if (vm <= best_v) return {tm, vm};
    return {node(best), best_v};
}

ObservableRecord observe(const ModelParams& p, const DressedState& initial, double t,
                         Convention conv) {
    const DressedState s = evolve(p, initial, t);
    const FieldState f = reduce_field(s);
    const QuadratureMoments m = quadrature_moments(f);
    const auto [F1, F2] = squeezing_factors(m, conv);
    const DampingValues d = damping_at(p, t);

    ObservableRecord r;
    r.t = t;
    r.F1 = F1;
    r.F2 = F2;
    r.Pe = atom_excited_population(s);
    r.mean_n = m.mean_n;
    r.re_a = m.mean_a.real();
    r.im_a = m.mean_a.imag();
    r.x1_var = m.x1_var;
    r.x2_var = m.x2_var;
    r.uncertainty = uncertainty_product(m);
    r.min_eig = min_eigenvalue(s);
    r.gamma_minus = d.rate_minus;
    r.gamma_plus = d.rate_plus;
    r.damp_f1 = d.f1;
    r.damp_f2 = d.f2;
    return r;
}

std::vector<ObservableRecord> run_timeseries(const ModelParams& p,
                                             const DressedState& initial, double t_max,
                                             int samples_per_fast_period,
                                             Convention conv) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("t_max must be finite and > 0");
    if (samples_per_fast_period < 40) {
        std::ostringstream os;
        os << "samples_per_fast_period must be >= 40 (got " << samples_per_fast_period
           << "); the envelope extraction needs at least that density";
        throw std::invalid_argument(os.str());
    }
    const double fast_period = 2.0 * kPi / (p.omega0 + p.coupling);
    const long steps = static_cast<long>(
        std::ceil(t_max / fast_period * samples_per_fast_period));
    const long n = steps + 1;

    std::vector<ObservableRecord> out;
    out.reserve(n);
    for (long i = 0; i < n; ++i) {
        const double t = (i == steps) ? t_max : t_max * static_cast<double>(i) / steps;
        out.push_back(observe(p, initial, t, conv));
    }
    return out;
}

}  // namespace jcsq
