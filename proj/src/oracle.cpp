// oracle.cpp: embedded Dormand-Prince 5(4) with cubic Hermite dense output,
// and adaptive Simpson quadrature for the damping/rate integrals.
#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace jcsq {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Vec9 = std::array<double, 9>;

Vec9 rhs(const ModelParams& p, double t, const Vec9& y) {
    const double gm = gamma_minus(p, t);
    const double gp = gamma_plus(p, t);
    const double om = p.coupling;
    const double w0 = p.omega0;

    Vec9 d;
    d[0] = -0.5 * gp * y[0];
    d[1] = -0.5 * gm * y[1];
    d[2] = 0.5 * gp * y[0] + 0.5 * gm * y[1];
    // l12: frequency 2*Omega, damping (gp+gm)/4
    {
        const double a = -0.25 * (gp + gm), w = -2.0 * om;
        d[3] = a * y[3] - w * y[4];
        d[4] = a * y[4] + w * y[3];
    }
    // l13: frequency omega0+Omega, damping gp/4
    {
        const double a = -0.25 * gp, w = -(w0 + om);
        d[5] = a * y[5] - w * y[6];
        d[6] = a * y[6] + w * y[5];
    }
    // l23: frequency omega0-Omega, damping gm/4
    {
        const double a = -0.25 * gm, w = -(w0 - om);
        d[7] = a * y[7] - w * y[8];
        d[8] = a * y[8] + w * y[7];
    }
    return d;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-order weights minus the embedded 4th-order ones.
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

Vec9 axpy(const Vec9& y, double h, const Vec9& k, double w) {
    Vec9 r;
    for (int i = 0; i < 9; ++i) r[i] = y[i] + h * w * k[i];
    return r;
}

// Cubic Hermite interpolant on [t0, t0+h] given endpoint values and slopes.
Vec9 hermite(const Vec9& y0, const Vec9& f0, const Vec9& y1, const Vec9& f1,
             double h, double theta) {
    const double t2 = theta * theta, t3 = t2 * theta;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + theta;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    Vec9 r;
    for (int i = 0; i < 9; ++i)
        r[i] = h00 * y0[i] + h * h10 * f0[i] + h01 * y1[i] + h * h11 * f1[i];
    return r;
}

double auto_max_step(const ModelParams& p) {
    // Keep the fastest phase advance per step near 0.018 rad so the cubic
    // Hermite dense output (error ~ (w*h)^4/384) stays below ~1e-10.
    const double w_fast = std::max({p.omega0 + p.coupling, 2.0 * p.coupling, p.lambda, 1.0});
    return 0.018 / w_fast;
}

[[noreturn]] void throw_underflow(double t) {
    std::ostringstream os;
    os << "step size underflow at t = " << t;
    throw NumericError(os.str());
}

// --- adaptive Simpson ---

struct Quad {
    const std::function<double(double)>& f;
    int evals = 0;

    double simpson(double a, double fa, double fm, double fb, double b) const {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    }

    double adapt(double a, double fa, double m, double fm, double b, double fb,
                 double whole, double tol, int depth) {
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        evals += 2;
        const double sl = simpson(a, fa, flm, fm, m);
        const double sr = simpson(m, fm, frm, fb, b);
        const double s2 = sl + sr;
        if (std::abs(s2 - whole) <= 15.0 * tol || (b - a) < 1e-13 * (std::abs(a) + 1.0))
            return s2 + (s2 - whole) / 15.0;
        if (depth <= 0) {
            std::ostringstream os;
            os << "quadrature failed to converge on [" << a << ", " << b << "]";
            throw NumericError(os.str());
        }
        return adapt(a, fa, lm, flm, m, fm, sl, 0.5 * tol, depth - 1) +
               adapt(m, fm, rm, frm, b, fb, sr, 0.5 * tol, depth - 1);
    }
};

// Integrates f over [0, b]. osc_freq is the angular frequency of the fastest
// oscillatory factor (0 if none); initial panels never exceed a quarter of
// its period. decay is the exponential scale of the integrand, used only to
// bound the initial panel width.
double integrate(const std::function<double(double)>& f, double b, double osc_freq,
                 double decay) {
    if (b == 0.0) return 0.0;
    double panel = b;
    if (osc_freq > 0.0) panel = std::min(panel, 0.5 * kPi / osc_freq);
    if (decay > 0.0) panel = std::min(panel, 2.0 / decay);
    const int n = std::max(1, static_cast<int>(std::ceil(b / panel)));
    const double w = b / n;

    Quad q{f};
    // Coarse pass: fixes the magnitude so the relative goal can tighten the
    // absolute one for small integrals.
    std::vector<double> xs(n + 1), fs(n + 1), mids(n), fmids(n);
    for (int i = 0; i <= n; ++i) {
        xs[i] = (i == n) ? b : w * i;
        fs[i] = f(xs[i]);
    }
    double coarse = 0.0;
    double f_scale = 0.0;
    for (int i = 0; i <= n; ++i) f_scale = std::max(f_scale, std::abs(fs[i]));
    for (int i = 0; i < n; ++i) {
        mids[i] = 0.5 * (xs[i] + xs[i + 1]);
        fmids[i] = f(mids[i]);
        f_scale = std::max(f_scale, std::abs(fmids[i]));
        coarse += q.simpson(xs[i], fs[i], fmids[i], fs[i + 1], xs[i + 1]);
    }
    // The noise floor scales with the integrand, not with 1: tiny smooth
    // integrals are resolvable far below 1e-15 in absolute terms, and the
    // relative goal needs that headroom.
    const double floor = 1e-16 * (std::abs(coarse) + b * f_scale);
    const double tol = std::max(floor, std::min(tolerances::quad_abs,
                                                tolerances::quad_rel * std::abs(coarse)));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = q.simpson(xs[i], fs[i], fmids[i], fs[i + 1], xs[i + 1]);
        total += q.adapt(xs[i], fs[i], mids[i], fmids[i], xs[i + 1], fs[i + 1], s,
                         tol * (xs[i + 1] - xs[i]) / b, 48);
    }
    return total;
}

}  // namespace

GeneratorState pack_state(const DressedState& s) {
    return {s.l11, s.l22, s.l33,
            s.l12.real(), s.l12.imag(),
            s.l13.real(), s.l13.imag(),
            s.l23.real(), s.l23.imag()};
}

DressedState unpack_state(const GeneratorState& v) {
    DressedState s;
    s.l11 = v[0];
    s.l22 = v[1];
    s.l33 = v[2];
    s.l12 = Complex(v[3], v[4]);
    s.l13 = Complex(v[5], v[6]);
    s.l23 = Complex(v[7], v[8]);
    return s;
}

DressedState liouvillian_apply(const ModelParams& p, const DressedState& s, double t) {
    return unpack_state(rhs(p, t, pack_state(s)));
}

std::vector<DressedState> integrate_master_equation(const ModelParams& p,
                                                    const DressedState& initial,
                                                    std::span<const double> t_grid,
                                                    const IntegratorConfig& cfg) {
    if (t_grid.empty()) throw std::invalid_argument("time grid must not be empty");
    if (t_grid.front() != 0.0)
        throw std::invalid_argument("time grid must start at t = 0");
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
        if (!(t_grid[i] < t_grid[i + 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
    if (!std::isfinite(t_grid.back()))
        throw std::invalid_argument("time grid must be finite");

    const double max_step = cfg.max_step > 0.0 ? cfg.max_step : auto_max_step(p);
    const double t_end = t_grid.back();

    std::vector<DressedState> out;
    out.reserve(t_grid.size());
    out.push_back(initial);
    if (t_grid.size() == 1) return out;

    Vec9 y = pack_state(initial);
    Vec9 k1 = rhs(p, 0.0, y);
    double t = 0.0;
    double h = max_step;
    std::size_t next = 1;

    while (t < t_end) {
        h = std::min(h, max_step);
        if (t + h > t_end) h = t_end - t;
        if (h < 4.0 * 2.220446049250313e-16 * std::max(std::abs(t), 1.0))
            throw_underflow(t);

        Vec9 k2, k3, k4, k5, k6, k7, y5;
        {
            Vec9 s = axpy(y, h, k1, a21);
            k2 = rhs(p, t + c2 * h, s);
            for (int i = 0; i < 9; ++i) s[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            k3 = rhs(p, t + c3 * h, s);
            for (int i = 0; i < 9; ++i)
                s[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            k4 = rhs(p, t + c4 * h, s);
            for (int i = 0; i < 9; ++i)
                s[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            k5 = rhs(p, t + c5 * h, s);
            for (int i = 0; i < 9; ++i)
                s[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                   a65 * k5[i]);
            k6 = rhs(p, t + h, s);
            for (int i = 0; i < 9; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                    b6 * k6[i]);
            k7 = rhs(p, t + h, y5);
        }

        double err = 0.0;
        for (int i = 0; i < 9; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / 9.0);

        if (err <= 1.0) {
            const double t_new = t + h;
            while (next < t_grid.size() && t_grid[next] <= t_new) {
                const double theta = (t_grid[next] - t) / h;
                out.push_back(unpack_state(hermite(y, k1, y5, k7, h, theta)));
                ++next;
            }
            t = t_new;
            y = y5;
            k1 = k7;  // first-same-as-last
            const double fac = std::clamp(0.9 * std::pow(err > 1e-12 ? err : 1e-12, -0.2),
                                          0.2, 5.0);
            h *= fac;
        } else {
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9);
        }
    }
    // Guard against grid points left dangling by rounding of t_end.
    while (next < t_grid.size()) {
        out.push_back(out.back());
        ++next;
    }
    return out;
}

double quad_damping(const ModelParams& p, double t, DampingIntegral which) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("time must be finite and >= 0");
    if (p.undamped) return 0.0;
    std::function<double(double)> f;
    double osc = 0.0;
    if (which == DampingIntegral::f1) {
        f = [&p](double s) { return 0.5 * gamma_minus(p, s); };
    } else {
        f = [&p](double s) { return 0.5 * gamma_plus(p, s); };
        osc = 2.0 * p.coupling;
    }
    return integrate(f, t, osc, p.lambda);
}

double rate_from_correlation(const ModelParams& p, double omega, double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("time must be finite and >= 0");
    if (!std::isfinite(omega)) throw std::invalid_argument("omega must be finite");
    if (p.undamped) return 0.0;
    const double detune = omega - p.peak_frequency();
    const double la = p.lambda;
    auto f = [la, detune](double s) { return la * std::exp(-la * s) * std::cos(detune * s); };
    return integrate(f, t, std::abs(detune), la);
}

}  // namespace jcsq
