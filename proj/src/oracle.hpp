// oracle.hpp: independent numerical routes to the same dynamics: direct
// integration of the TCL2 generator, quadrature of the rate integrands, and
// the rate as a reservoir-correlation integral. Used to cross-check the
// closed forms in model.hpp; shares no derivation with them beyond the
// generator itself.
#pragma once

#include <span>
#include <vector>

#include "model.hpp"
#include "types.hpp"

namespace jcsq {

// Real 9-vector packing of a dressed state:
// (l11, l22, l33, Re l12, Im l12, Re l13, Im l13, Re l23, Im l23).
using GeneratorState = std::array<double, 9>;

GeneratorState pack_state(const DressedState& s);
DressedState unpack_state(const GeneratorState& v);

// Right-hand side of the master equation at time t: populations relax with
// the instantaneous rates, coherences rotate at the dressed frequencies and
// damp at half rates. Trace is conserved identically.
DressedState liouvillian_apply(const ModelParams& p, const DressedState& s, double t);

struct IntegratorConfig {
    double rel_tol = tolerances::ode_rel;
    double abs_tol = tolerances::ode_abs;
    // Upper bound on the step. 0 selects a bound small enough that the dense
    // output (cubic Hermite) stays well below the integration tolerance even
    // for the fastest coherence phase.
    double max_step = 0.0;
};

// Integrates the master equation from the state at t_grid.front() (which must
// be 0) and returns the solution at every grid point. The grid only drives
// dense-output interpolation; it never constrains step selection. Throws
// NumericError with the failing time on step-size underflow.
std::vector<DressedState> integrate_master_equation(const ModelParams& p,
                                                    const DressedState& initial,
                                                    std::span<const double> t_grid,
                                                    const IntegratorConfig& cfg = {});

enum class DampingIntegral { f1, f2 };

// Adaptive-Simpson value of int_0^t gamma/2 for the selected branch.
// Initial panels never span more than a quarter period of the oscillating
// integrand; tolerance is absolute 1e-10 tightened to relative 1e-10 when
// the integral is small. Throws NumericError if subdivision fails to converge.
double quad_damping(const ModelParams& p, double t, DampingIntegral which);

// Decay rate at frequency omega as the finite-time reservoir correlation
// integral 2 Re int_0^t C(s) e^{i omega s} ds with the Lorentzian correlation
// function. Evaluated by quadrature; reproduces both closed-form rates.
double rate_from_correlation(const ModelParams& p, double omega, double t);

}  // namespace jcsq
