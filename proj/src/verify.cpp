// verify.cpp
#include "verify.hpp"

#include <cmath>

#include "observables.hpp"

namespace jcsq {

namespace {

double state_deviation(const DressedState& a, const DressedState& b) {
    double d = std::abs(a.l11 - b.l11);
    d = std::max(d, std::abs(a.l22 - b.l22));
    d = std::max(d, std::abs(a.l33 - b.l33));
    d = std::max(d, std::abs(a.l12 - b.l12));
    d = std::max(d, std::abs(a.l13 - b.l13));
    d = std::max(d, std::abs(a.l23 - b.l23));
    return d;
}

}  // namespace

VerifyReport verify_run(const ModelParams& p, const InitialAtomSpec& spec, double t_max) {
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("t_max must be finite and > 0");
    const DressedState init = initial_dressed_state(spec);

    const int n = 2001;
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = (i == n - 1) ? t_max : t_max * i / (n - 1.0);

    const auto ode = integrate_master_equation(p, init, grid);

    VerifyReport rep{0.0, 0.0, 0.0, 1.0, false};
    for (int i = 0; i < n; ++i) {
        const DressedState closed = evolve(p, init, grid[i]);
        rep.max_ode_dev = std::max(rep.max_ode_dev, state_deviation(closed, ode[i]));
        rep.trace_drift = std::max(rep.trace_drift, std::abs(ode[i].trace() - 1.0));
        rep.min_eig = std::min(rep.min_eig, min_eigenvalue(ode[i]));
    }

    // Quadrature routes vs closed forms on a log-spaced grid. Rates are
    // compared absolutely (gamma_plus crosses zero); damping relatively.
    const double t_lo = std::min(0.02, 0.5 * t_max);
    const int m = 50;
    for (int i = 0; i < m; ++i) {
        const double t = t_lo * std::pow(t_max / t_lo, i / (m - 1.0));
        const double f1c = damping_f1(p, t), f2c = damping_f2(p, t);
        const double f1q = quad_damping(p, t, DampingIntegral::f1);
        const double f2q = quad_damping(p, t, DampingIntegral::f2);
        const double gm = rate_from_correlation(p, p.omega0 - p.coupling, t);
        const double gp = rate_from_correlation(p, p.omega0 + p.coupling, t);
        double d = std::abs(f1q - f1c) / std::max(std::abs(f1c), 1e-12);
        d = std::max(d, std::abs(f2q - f2c) / std::max(std::abs(f2c), 1e-12));
        d = std::max(d, std::abs(gm - gamma_minus(p, t)));
        d = std::max(d, std::abs(gp - gamma_plus(p, t)));
        rep.max_rate_dev = std::max(rep.max_rate_dev, d);
    }

    bool ok = rep.max_ode_dev <= tolerances::gate_ode &&
              rep.max_rate_dev <= tolerances::gate_rate &&
              rep.trace_drift <= tolerances::gate_trace;
    if (p.markovian() && rep.min_eig < tolerances::gate_min_eig) ok = false;
    rep.gates_passed = ok;
    return rep;
}

}  // namespace jcsq
