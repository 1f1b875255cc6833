// envelope.hpp: collapse/revival analysis of a sampled F1(t) trace:
// sliding-window lower envelope, collapse intervals, revival minima, their
// mean spacing, and the dominant fast oscillation frequency.
#pragma once

#include <span>
#include <vector>

#include "observables.hpp"

namespace jcsq {

struct RevivalPeak {
    double t;
    double value;  // envelope value at the squeezing maximum (negative)
};

struct EnvelopeSummary {
    // Per-sample lower envelope of F1: minimum over a centred window one
    // optical period 2*pi/omega0 wide. Same length as the input trace.
    std::vector<double> lower;
    // Midpoints of interior intervals where |envelope| stays below 5% of the
    // global minimum magnitude. Leading/trailing intervals are not collapses.
    std::vector<double> collapse_times;
    // Envelope minima found by hysteresis descent (prominence = the same 5%
    // threshold), in time order; includes the initial squeezing maximum.
    std::vector<RevivalPeak> revival_peaks;
    // Mean spacing of revival minima; NaN with fewer than two.
    double period_estimate;
    // Dominant angular frequency of the fast component (sliding mean removed,
    // Hann window, interpolated DFT peak); NaN if the trace is too short or
    // structureless.
    double fast_frequency;
};

// Requires a uniform grid sampled at >= 40 points per fast period
// 2*pi/(omega0 + coupling); throws std::invalid_argument naming the required
// rate otherwise.
EnvelopeSummary extract_envelope(std::span<const ObservableRecord> trace,
                                 const ModelParams& p);

}  // namespace jcsq
