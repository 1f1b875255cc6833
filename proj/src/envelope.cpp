// envelope.cpp
#include "envelope.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

namespace jcsq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sliding_min(const std::vector<double>& v, int half) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(n);
    std::deque<int> dq;
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int right = std::min(i + half, n - 1);
        for (; next <= right; ++next) {
            while (!dq.empty() && v[dq.back()] >= v[next]) dq.pop_back();
            dq.push_back(next);
        }
        while (dq.front() < i - half) dq.pop_front();
        out[i] = v[dq.front()];
    }
    return out;
}

std::vector<double> sliding_mean(const std::vector<double>& v, int half) {
    const int n = static_cast<int>(v.size());
    std::vector<double> prefix(n + 1, 0.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        out[i] = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
    }
    return out;
}

// Hysteresis descent: a minimum is committed once the curve has risen by
// delta above it; symmetric for the next descent. Emits committed minima
// deeper than -delta only. A sliding-min curve is flat for a full window
// around each locally deepest sample, so the plateau midpoint, not its
// first index, marks that sample's position.
std::vector<int> find_minima(const std::vector<double>& v, double delta) {
    std::vector<int> minima;
    bool descending = true;
    int cand = 0, cand_hi = 0;
    double cand_v = v.empty() ? 0.0 : v[0];
    for (int i = 1; i < static_cast<int>(v.size()); ++i) {
        if (descending) {
            if (v[i] < cand_v) {
                cand = cand_hi = i;
                cand_v = v[i];
            } else if (v[i] == cand_v) {
                cand_hi = i;
            } else if (v[i] > cand_v + delta) {
                if (cand_v < -delta) minima.push_back(cand + (cand_hi - cand) / 2);
                descending = false;
                cand = i;
                cand_v = v[i];
            }
        } else {
            if (v[i] > cand_v) {
                cand = i;
                cand_v = v[i];
            } else if (v[i] < cand_v - delta) {
                descending = true;
                cand = cand_hi = i;
                cand_v = v[i];
            }
        }
    }
    return minima;
}

// Interpolated peak of the Hann-windowed spectrum, scanned above DC.
double dominant_frequency(const std::vector<double>& residual, double dt) {
    const int n = static_cast<int>(residual.size());
    if (n < 64) return kNaN;
    std::vector<Complex> in(n);
    for (int i = 0; i < n; ++i) {
        const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * i / (n - 1)));
        in[i] = Complex(residual[i] * w, 0.0);
    }
    Eigen::FFT<double> fft;
    std::vector<Complex> spec;
    fft.fwd(spec, in);

    const int half = n / 2;
    int k_best = -1;
    double m_best = 0.0;
    for (int k = 2; k < half; ++k) {
        const double m = std::abs(spec[k]);
        if (m > m_best) {
            m_best = m;
            k_best = k;
        }
    }
    if (k_best < 3 || m_best <= 0.0) return kNaN;

    // Quadratic interpolation on log magnitude across the peak bin.
    const double m0 = std::abs(spec[k_best - 1]);
    const double m2 = std::abs(spec[k_best + 1]);
    double shift = 0.0;
    if (m0 > 0.0 && m2 > 0.0) {
        const double l0 = std::log(m0), l1 = std::log(m_best), l2 = std::log(m2);
        const double den = l0 - 2.0 * l1 + l2;
        if (den < 0.0) shift = std::clamp(0.5 * (l0 - l2) / den, -0.5, 0.5);
    }
    return 2.0 * kPi * (k_best + shift) / (n * dt);
}

}  // namespace

EnvelopeSummary extract_envelope(std::span<const ObservableRecord> trace,
                                 const ModelParams& p) {
    const int n = static_cast<int>(trace.size());
    if (n < 16) throw std::invalid_argument("trace too short for envelope extraction");

    const double dt = (trace.back().t - trace.front().t) / (n - 1);
    if (!(dt > 0.0)) throw std::invalid_argument("trace times must increase");
    for (int i = 0; i + 1 < n; ++i) {
        const double step = trace[i + 1].t - trace[i].t;
        if (std::abs(step - dt) > 1e-6 * dt)
            throw std::invalid_argument("trace must be uniformly sampled");
    }
    const double fast_period = 2.0 * kPi / (p.omega0 + p.coupling);
    const double dt_required = fast_period / 40.0;
    if (dt > dt_required * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "sampling too coarse for envelope extraction: dt = " << dt
           << " but the fast period 2*pi/(omega0+coupling) = " << fast_period
           << " requires dt <= " << dt_required << " (>= 40 samples per period)";
        throw std::invalid_argument(os.str());
    }

    std::vector<double> f1(n);
    for (int i = 0; i < n; ++i) f1[i] = trace[i].F1;

    const double window = 2.0 * kPi / p.omega0;
    const int half = std::max(1, static_cast<int>(std::lround(window / dt)) / 2);

    EnvelopeSummary out;
    out.lower = sliding_min(f1, half);
    out.period_estimate = kNaN;
    out.fast_frequency = kNaN;

    double global_min = 0.0;
    for (double v : out.lower) global_min = std::min(global_min, v);
    if (std::abs(global_min) < 1e-20) return out;  // structureless trace

    const double tau = 0.05 * std::abs(global_min);

    // Interior quiet intervals: |envelope| < tau.
    int run_start = -1;
    for (int i = 0; i <= n; ++i) {
        const bool quiet = i < n && std::abs(out.lower[i]) < tau;
        if (quiet && run_start < 0) run_start = i;
        if (!quiet && run_start >= 0) {
            if (run_start > 0 && i < n)
                out.collapse_times.push_back(0.5 * (trace[run_start].t + trace[i - 1].t));
            run_start = -1;
        }
    }

    for (int idx : find_minima(out.lower, tau))
        out.revival_peaks.push_back({trace[idx].t, out.lower[idx]});

    if (out.revival_peaks.size() >= 2) {
        double sum = 0.0;
        for (std::size_t i = 1; i < out.revival_peaks.size(); ++i)
            sum += out.revival_peaks[i].t - out.revival_peaks[i - 1].t;
        out.period_estimate = sum / (out.revival_peaks.size() - 1);
    }

    std::vector<double> residual = sliding_mean(f1, half);
    for (int i = 0; i < n; ++i) residual[i] = f1[i] - residual[i];
    out.fast_frequency = dominant_frequency(residual, dt);
    return out;
}

}  // namespace jcsq
