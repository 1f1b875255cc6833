// verify.hpp: self-check comparing the closed-form propagator against the
// independent ODE and quadrature routes, with pass/fail gates.
#pragma once

#include "model.hpp"
#include "oracle.hpp"

namespace jcsq {

struct VerifyReport {
    // Largest element-wise deviation between the closed-form state and the
    // integrated one over a dense grid on [0, t_max].
    double max_ode_dev;
    // Largest deviation of quadrature-based rates/damping from the closed
    // forms: absolute for the rates (they cross zero), relative for f1/f2.
    double max_rate_dev;
    // Largest |Tr - 1| along the integrated trajectory.
    double trace_drift;
    // Smallest density-matrix eigenvalue along the integrated trajectory.
    double min_eig;
    bool gates_passed;
};

// Gates: max_ode_dev <= 1e-8, max_rate_dev <= 1e-8, trace_drift <= 1e-10,
// and min_eig >= -1e-9 in the Markovian regime (lambda > 2). Outside that
// regime transient negativity is genuine physics, not an error.
VerifyReport verify_run(const ModelParams& p, const InitialAtomSpec& spec, double t_max);

}  // namespace jcsq
