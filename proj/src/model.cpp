// model.cpp: closed forms for rates, damping integrals and the propagator.
#include "model.hpp"

#include <cmath>
#include <sstream>

namespace jcsq {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "time must be finite and >= 0 (got " << t << ")";
        throw std::invalid_argument(os.str());
    }
}

// (x - 1 + exp(-x)) evaluated without cancellation for small x.
double expm1_defect(double x) {
    if (x < 1e-3) {
        // x^2/2 * (1 - x/3 + x^2/12 - x^3/60 + x^4/360), error below 1e-18
        return 0.5 * x * x *
               (1.0 - x / 3.0 + x * x / 12.0 - x * x * x / 60.0 + x * x * x * x / 360.0);
    }
    return x - 1.0 + std::exp(-x);
}

}  // namespace

ModelParams ModelParams::create(double lambda, double coupling, double omega0) {
    require(std::isfinite(lambda) && lambda > 0.0, "lambda must be > 0");
    require(std::isfinite(coupling) && coupling >= 0.0, "coupling must be >= 0");
    require(std::isfinite(omega0) && omega0 > coupling,
            "omega0 must exceed coupling (dressed energies must stay ordered)");
    return ModelParams{lambda, coupling, omega0, false};
}

ModelParams ModelParams::undamped_model(double coupling, double omega0) {
    ModelParams p = create(1.0, coupling, omega0);
    p.undamped = true;
    return p;
}

double spectral_density(const ModelParams& p, double omega) {
    require(std::isfinite(omega), "omega must be finite");
    const double d = p.peak_frequency() - omega;
    return (1.0 / (2.0 * kPi)) * p.lambda * p.lambda / (d * d + p.lambda * p.lambda);
}

double gamma_minus(const ModelParams& p, double t) {
    require_time(t);
    if (p.undamped) return 0.0;
    return -std::expm1(-p.lambda * t);
}

double gamma_plus(const ModelParams& p, double t) {
    require_time(t);
    if (p.undamped) return 0.0;
    const double om = p.coupling;
    const double la = p.lambda;
    const double pre = la * la / (4.0 * om * om + la * la);
    const double osc = (2.0 * om / la) * std::sin(2.0 * om * t) - std::cos(2.0 * om * t);
    return pre * (1.0 + osc * std::exp(-la * t));
}

double damping_f1(const ModelParams& p, double t) {
    require_time(t);
    if (p.undamped) return 0.0;
    return 0.5 / p.lambda * expm1_defect(p.lambda * t);
}

double damping_f2(const ModelParams& p, double t) {
    require_time(t);
    if (p.undamped) return 0.0;
    const double om = p.coupling;
    const double la = p.lambda;
    if (om == 0.0) return damping_f1(p, t);  // degenerate doublet: both rates coincide
    const double den = 4.0 * om * om + la * la;
    const double pre = la * la / den;
    const double e = std::exp(-la * t);
    const double s = std::sin(2.0 * om * t);
    const double c = std::cos(2.0 * om * t);
    const double term = t - 4.0 * om * e * s / den + (la * la - 4.0 * om * om) * (e * c - 1.0) / (la * den);
    return 0.5 * pre * term;
}

DampingValues damping_at(const ModelParams& p, double t) {
    return DampingValues{damping_f1(p, t), damping_f2(p, t), gamma_minus(p, t), gamma_plus(p, t)};
}

PropagatorCoefficients propagator_at(const ModelParams& p, double t) {
    require_time(t);
    const double f1 = damping_f1(p, t);
    const double f2 = damping_f2(p, t);
    const double om = p.coupling;
    const double w0 = p.omega0;
    PropagatorCoefficients c;
    c.c11 = std::exp(-f2);
    c.c22 = std::exp(-f1);
    c.c12 = std::polar(std::exp(-0.5 * (f1 + f2)), -2.0 * om * t);
    c.c13 = std::polar(std::exp(-0.5 * f2), -(w0 + om) * t);
    c.c23 = std::polar(std::exp(-0.5 * f1), -(w0 - om) * t);
    return c;
}

InitialAtomSpec InitialAtomSpec::create(double theta, double phi) {
    require(std::isfinite(theta) && theta >= 0.0 && theta <= kPi,
            "theta must lie in [0, pi]");
    require(std::isfinite(phi) && phi >= 0.0 && phi < 2.0 * kPi,
            "phi must lie in [0, 2*pi)");
    return InitialAtomSpec{theta, phi};
}

DressedState initial_dressed_state(const InitialAtomSpec& spec) {
    const double ce = std::cos(0.5 * spec.theta);
    const double sg = std::sin(0.5 * spec.theta);
    const Complex a0 = std::polar(sg, spec.phi);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex ap(ce * inv_sqrt2, 0.0);
    const Complex am(-ce * inv_sqrt2, 0.0);

    DressedState s;
    s.l11 = std::norm(ap);
    s.l22 = std::norm(am);
    s.l33 = std::norm(a0);
    s.l12 = ap * std::conj(am);
    s.l13 = ap * std::conj(a0);
    s.l23 = am * std::conj(a0);
    return s;
}

DressedState evolve(const ModelParams& p, const DressedState& initial, double t) {
    require_time(t);
    const double tr = initial.trace();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > tolerances::trace) {
        std::ostringstream os;
        os << "initial state must have unit trace (got " << tr << ")";
        throw std::invalid_argument(os.str());
    }
    const PropagatorCoefficients c = propagator_at(p, t);
    DressedState out;
    out.l11 = c.c11 * initial.l11;
    out.l22 = c.c22 * initial.l22;
    out.l33 = initial.l33 + (1.0 - c.c11) * initial.l11 + (1.0 - c.c22) * initial.l22;
    out.l12 = c.c12 * initial.l12;
    out.l13 = c.c13 * initial.l13;
    out.l23 = c.c23 * initial.l23;
    return out;
}

}  // namespace jcsq
