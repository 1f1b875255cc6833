// model.hpp: closed-form TCL2 dynamics of the dissipative Jaynes-Cummings
// model restricted to the zero/one excitation sector, dressed basis
// [|E1+>, |E1->, |E0>] with |E1±> = (|1g> ± |0e>)/sqrt(2).
//
// Everything here is analytic: Lorentzian reservoir spectrum, time-dependent
// decay rates, their integrals f1/f2, and the resulting propagator. Rates are
// expressed in units of the resonant Markovian rate (gamma0 = 1), times in
// units of 1/gamma0.
#pragma once

#include "types.hpp"

namespace jcsq {

// Model parameters. `coupling` is the vacuum Rabi frequency Omega of the
// atom-cavity doublet; `lambda` the reservoir memory bandwidth; `omega0` the
// bare transition frequency. The reservoir spectrum is peaked at
// omega0 - coupling, i.e. resonant with the lower dressed transition.
struct ModelParams {
    double lambda;
    double coupling;
    double omega0;
    bool undamped = false;

    // Throws std::invalid_argument unless lambda > 0, coupling >= 0 and
    // omega0 > coupling (the dressed energies must stay ordered).
    static ModelParams create(double lambda, double coupling, double omega0);

    // Closed-system limit: both decay rates identically zero. lambda is kept
    // positive (value 1) so spectral quantities remain well defined.
    static ModelParams undamped_model(double coupling, double omega0);

    // Markovian regime of the resonant Lorentzian reservoir.
    bool markovian() const { return lambda > 2.0; }

    // Spectrum peak frequency, resonant with |E1-> -> |E0>.
    double peak_frequency() const { return omega0 - coupling; }
};

// Reservoir spectral density J(omega), a Lorentzian of half-width lambda
// centred on peak_frequency(). Peak value 1/(2*pi), independent of lambda.
double spectral_density(const ModelParams& p, double omega);

// Time-dependent decay rate of the lower dressed transition at
// omega0 - coupling (the spectrum peak). Monotonic, ~gamma0 for t >> 1/lambda.
// Negative t throws std::invalid_argument; same for all time arguments below.
double gamma_minus(const ModelParams& p, double t);

// Decay rate of the upper dressed transition at omega0 + coupling, detuned by
// 2*coupling from the peak. Oscillates at 2*coupling and may transiently turn
// negative outside the Markovian regime; no clamping is applied.
double gamma_plus(const ModelParams& p, double t);

// Integrated damping: f1 = int_0^t gamma_minus/2, f2 = int_0^t gamma_plus/2.
double damping_f1(const ModelParams& p, double t);
double damping_f2(const ModelParams& p, double t);

struct DampingValues {
    double f1;
    double f2;
    double rate_minus;
    double rate_plus;
};
DampingValues damping_at(const ModelParams& p, double t);

// Coefficients of the one-excitation propagator: populations relax as
// l11 -> c11*l11, l22 -> c22*l22 and coherences pick up phase plus damping.
// They satisfy |c12|^2 = c11*c22, |c13|^2 = c11, |c23|^2 = c22 exactly.
struct PropagatorCoefficients {
    double c11;
    double c22;
    Complex c12;
    Complex c13;
    Complex c23;
};
PropagatorCoefficients propagator_at(const ModelParams& p, double t);

// Pure initial state: atom in cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>,
// cavity in vacuum. theta in [0, pi], phi in [0, 2*pi).
struct InitialAtomSpec {
    double theta;
    double phi;

    static InitialAtomSpec create(double theta, double phi);
};

// Dressed-basis density matrix of the initial state. Amplitudes are
// a± = ±cos(theta/2)/sqrt(2) on |E1±> and e^{i phi} sin(theta/2) on |E0>.
DressedState initial_dressed_state(const InitialAtomSpec& spec);

// Exact state at time t for a valid initial state (Hermitian, unit trace).
// The map is trace preserving: l33 absorbs the population lost by l11, l22.
DressedState evolve(const ModelParams& p, const DressedState& initial, double t);

}  // namespace jcsq
