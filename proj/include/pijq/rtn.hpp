// rtn.hpp — random telegraph fluctuator ensembles and PSD estimation
//
// A fluctuator switches between +-amplitude with exponential waiting times
// (rate per direction), so its autocorrelation is a^2 e^{-2 rate tau} and
// its power spectrum a Lorentzian ~ rate / (omega^2 + 4 rate^2).  Many
// fluctuators with log-uniform rates average to 1/f (Dutta-Horn).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pijq {

struct Fluctuator {
    double rate{1.0};        // switch rate > 0 (per direction)
    double amplitude{1.0};
};

enum class RateDistribution { LogUniform, Explicit };

struct RTNEnsemble {
    std::vector<Fluctuator> fluctuators;
    RateDistribution rate_distribution{RateDistribution::Explicit};
    std::uint64_t seed{0};

    void validate() const;
};

// n_fluctuators with rates log-uniform in [rate_min, rate_max] (deterministic
// grid, not sampled) and amplitudes amplitude/sqrt(n) so the ensemble
// variance is size-independent.
RTNEnsemble make_log_uniform_ensemble(int n_fluctuators, double rate_min, double rate_max,
                                      double amplitude, std::uint64_t seed);

// Sum of telegraph trajectories sampled on t = 0, dt, ..., <= t_max.
// Deterministic per (seed, fluctuator index); warns (returns flag) when dt
// under-resolves the fastest rate.
struct RTNTrajectory {
    std::vector<double> samples;
    double dt{0.0};
    bool dt_under_resolved{false};
};

RTNTrajectory simulate_rtn(const RTNEnsemble& ensemble, double t_max, double dt);

struct PSDPoint {
    double omega{0.0};   // angular frequency
    double power{0.0};
};

// Segment-averaged one-sided periodogram (rectangular window, mean removed per
// segment).  Parseval: sum of power * d_omega matches the signal variance.
std::vector<PSDPoint> psd_estimate(const std::vector<double>& samples, double dt, int segments);

// Least-squares slope of log(power) vs log(omega) over [omega_lo, omega_hi].
double psd_log_slope(const std::vector<PSDPoint>& psd, double omega_lo, double omega_hi);

// Key-value text serialization (same style as the wire format).
void save_rtn(const RTNEnsemble& ensemble, std::ostream& out);
RTNEnsemble load_rtn(std::istream& in);

}  // namespace pijq
