// observables.hpp: reduction to the cavity field, quadrature statistics,
// squeezing factors, and time series assembly.
#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "model.hpp"
#include "types.hpp"

namespace jcsq {

// Commutator convention for the quadrature pair. `quarter` uses
// X1 = (a + a+)/2, X2 = (a - a+)/(2i) with vacuum variance 1/4 and squeezing
// factor F_i = var(X_i) - 1/4; `unit` rescales to vacuum variance 1 with
// F_i = 4 var(X_i) - 1. Squeezing means F_i < 0 in either convention.
enum class Convention { quarter, unit };

// Parses "quarter" or "unit"; throws std::invalid_argument listing the
// accepted names otherwise.
Convention convention_from_string(std::string_view name);

// Density matrix in the bare product basis [|1g>, |0e>, |0g>], row-major.
std::array<Complex, 9> dressed_to_bare(const DressedState& s);

// Partial trace over the atom; photon-number basis [|0>, |1>].
FieldState reduce_field(const DressedState& s);

// Population of the atomic excited level, Tr_field <e|rho|e>.
double atom_excited_population(const DressedState& s);

struct QuadratureMoments {
    Complex mean_a;
    double mean_n;
    double x1_var;
    double x2_var;
};

// First and second quadrature moments of the field state. <a^2> vanishes
// identically in the zero/one photon sector, so both variances share the
// same (1 + 2<n>)/4 second moment.
QuadratureMoments quadrature_moments(const FieldState& f);

// (F1, F2) in the requested convention.
std::pair<double, double> squeezing_factors(const QuadratureMoments& m, Convention conv);

// var(X1) * var(X2); bounded below by 1/16 for physical states.
double uncertainty_product(const QuadratureMoments& m);

// Smallest eigenvalue of the dressed density matrix.
double min_eigenvalue(const DressedState& s);

// Lower envelope of F1(t) over the optical phase: the fast factor
// sin^2(omega0 t + ...) is replaced by its extremal value, giving the
// phase-independent bound n/2 - |<a>|^2 (scaled by the convention). The raw
// F1 touches this curve twice per optical period.
double envelope_f1(const ModelParams& p, const DressedState& initial, double t,
                   Convention conv);

struct EnvelopeMin {
    double t;
    double value;
};

// Global minimum of envelope_f1 over [0, t_max]: coarse scan on the slow
// time scales followed by golden-section refinement.
EnvelopeMin envelope_f1_min(const ModelParams& p, const DressedState& initial,
                            double t_max, Convention conv);

// One sample of everything the CSV schema exposes.
struct ObservableRecord {
    double t;
    double F1;
    double F2;
    double Pe;
    double mean_n;
    double re_a;
    double im_a;
    double x1_var;
    double x2_var;
    double uncertainty;
    double min_eig;
    double gamma_minus;
    double gamma_plus;
    double damp_f1;
    double damp_f2;
};

ObservableRecord observe(const ModelParams& p, const DressedState& initial, double t,
                         Convention conv);

// Uniform grid over [0, t_max] with at least samples_per_fast_period points
// per fast optical period 2*pi/(omega0 + coupling). samples_per_fast_period
// below 40 is rejected: the envelope extraction needs that density.
std::vector<ObservableRecord> run_timeseries(const ModelParams& p,
                                             const DressedState& initial, double t_max,
                                             int samples_per_fast_period,
                                             Convention conv);

}  // namespace jcsq
