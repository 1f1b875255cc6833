// types.hpp: shared value types for the dressed-state squeezing library
#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace jcsq {

using Complex = std::complex<double>;

// Thrown when an iterative numerical scheme fails to converge (step-size
// underflow, quadrature subdivision limit). Carries the failing time in
// the message.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Central numeric tolerances. Unit tests and the verification gates read
// these instead of scattering literals.
namespace tolerances {
inline constexpr double trace = 1e-12;            // |Tr - 1| bound for valid states
inline constexpr double ode_rel = 1e-10;          // default integrator tolerances
inline constexpr double ode_abs = 1e-12;
inline constexpr double quad_abs = 1e-10;         // default quadrature tolerance
inline constexpr double quad_rel = 1e-10;         // tightens the absolute goal for small integrals
inline constexpr double gate_ode = 1e-8;          // closed form vs ODE, element-wise
inline constexpr double gate_rate = 1e-8;         // quadrature vs closed-form rates/damping
inline constexpr double gate_trace = 1e-10;       // trace drift along an ODE trajectory
inline constexpr double gate_min_eig = -1e-9;     // positivity floor (Markovian regime only)
inline constexpr double uncertainty_slack = 1e-10; // x1_var*x2_var >= 1/16 - slack
}

// Hermitian 3x3 density matrix in the dressed basis [|E1+>, |E1->, |E0>].
// Only the upper triangle is stored; Hermiticity holds by construction.
struct DressedState {
    double l11 = 0.0;
    double l22 = 0.0;
    double l33 = 1.0;   // defaults to the joint ground state |E0><E0|
    Complex l12{0.0, 0.0};
    Complex l13{0.0, 0.0};
    Complex l23{0.0, 0.0};

    double trace() const { return l11 + l22 + l33; }

    // Full row-major 3x3 matrix, lower triangle by conjugation.
    std::array<Complex, 9> full() const {
        return {Complex(l11, 0.0), l12, l13,
                std::conj(l12), Complex(l22, 0.0), l23,
                std::conj(l13), std::conj(l23), Complex(l33, 0.0)};
    }
};

// 2x2 cavity-field density matrix in the photon basis [|0>, |1>].
// coherence = <1|rho_f|0>, which equals <a> in the one-excitation sector.
struct FieldState {
    double p_vacuum = 1.0;
    double p_photon = 0.0;
    Complex coherence{0.0, 0.0};

    double trace() const { return p_vacuum + p_photon; }
};

}  // namespace jcsq
