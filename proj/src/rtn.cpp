#include "pijq/rtn.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace pijq {

namespace {

// splitmix64, used to decorrelate per-fluctuator streams from one seed
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa in (0, 1]; avoids implementation-defined distributions
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

double exponential(std::mt19937_64& rng, double rate) { return -std::log(uniform01(rng)) / rate; }

// In-place iterative radix-2 FFT; n must be a power of two.
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void RTNEnsemble::validate() const {
    if (fluctuators.empty()) throw std::invalid_argument("rtn: ensemble has no fluctuators");
    for (const auto& f : fluctuators) {
        if (!(f.rate > 0.0)) throw std::invalid_argument("rtn: all switch rates must be positive");
    }
}

RTNEnsemble make_log_uniform_ensemble(int n_fluctuators, double rate_min, double rate_max,
                                      double amplitude, std::uint64_t seed) {
    if (n_fluctuators < 1) throw std::invalid_argument("rtn: need at least one fluctuator");
    if (!(rate_min > 0.0) || !(rate_min < rate_max)) {
        throw std::invalid_argument("rtn: need 0 < rate_min < rate_max");
    }
    RTNEnsemble e;
    e.rate_distribution = RateDistribution::LogUniform;
    e.seed = seed;
    const double a = amplitude / std::sqrt(static_cast<double>(n_fluctuators));
    const double log_lo = std::log(rate_min);
    const double log_hi = std::log(rate_max);
    for (int i = 0; i < n_fluctuators; ++i) {
        const double frac =
            n_fluctuators == 1 ? 0.5 : static_cast<double>(i) / (n_fluctuators - 1.0);
        e.fluctuators.push_back({std::exp(log_lo + frac * (log_hi - log_lo)), a});
    }
    return e;
}

RTNTrajectory simulate_rtn(const RTNEnsemble& ensemble, double t_max, double dt) {
    ensemble.validate();
    if (!(dt > 0.0) || t_max < dt) {
        throw std::invalid_argument("rtn: need dt > 0 and t_max >= dt");
    }
    const std::size_t n = static_cast<std::size_t>(std::floor(t_max / dt)) + 1;
    RTNTrajectory out;
    out.dt = dt;
    out.samples.assign(n, 0.0);

    double max_rate = 0.0;
    for (const auto& f : ensemble.fluctuators) max_rate = std::max(max_rate, f.rate);
    out.dt_under_resolved = max_rate * dt > 0.1;

    // Trajectories are generated per fluctuator from independent streams and
    // summed in fixed index order; results are bit-reproducible per seed.
    for (std::size_t fi = 0; fi < ensemble.fluctuators.size(); ++fi) {
        const auto& f = ensemble.fluctuators[fi];
        std::mt19937_64 rng(mix64(ensemble.seed ^ mix64(fi)));
        double state = (rng() & 1ULL) ? f.amplitude : -f.amplitude;
        double next_flip = exponential(rng, f.rate);
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i, t += dt) {
            while (next_flip <= t) {
                state = -state;
                next_flip += exponential(rng, f.rate);
            }
            out.samples[i] += state;
        }
    }
    return out;
}

std::vector<PSDPoint> psd_estimate(const std::vector<double>& samples, double dt, int segments) {
    if (samples.empty()) throw std::invalid_argument("psd: empty input");
    if (segments < 1) throw std::invalid_argument("psd: need at least one segment");
    const std::size_t seg_len = samples.size() / static_cast<std::size_t>(segments);
    if (seg_len < 2 || seg_len * static_cast<std::size_t>(segments) != samples.size()) {
        throw std::invalid_argument("psd: sample count must divide evenly into segments");
    }
    if (!is_pow2(seg_len)) {
        throw std::invalid_argument("psd: segment length must be a power of two");
    }

    const std::size_t n_bins = seg_len / 2;
    std::vector<PSDPoint> psd(n_bins);
    const double d_omega = 2.0 * M_PI / (static_cast<double>(seg_len) * dt);
    for (std::size_t k = 0; k < n_bins; ++k) psd[k].omega = d_omega * static_cast<double>(k + 1);

    std::vector<std::complex<double>> buf(seg_len);
    for (int s = 0; s < segments; ++s) {
        const double* x = samples.data() + static_cast<std::size_t>(s) * seg_len;
        const double mean = std::accumulate(x, x + seg_len, 0.0) / static_cast<double>(seg_len);
        for (std::size_t i = 0; i < seg_len; ++i) buf[i] = x[i] - mean;
        fft(buf);
        // one-sided density: P(omega_k) = 2 |X_k|^2 dt / L (Nyquist unpaired)
        for (std::size_t k = 1; k <= n_bins; ++k) {
            const double mag2 = std::norm(buf[k]);
            const double w = (k == n_bins) ? 1.0 : 2.0;
            psd[k - 1].power += w * mag2 * dt / static_cast<double>(seg_len);
        }
    }
    const double inv_omega_norm = 1.0 / (2.0 * M_PI);  // density per angular frequency
    for (auto& p : psd) p.power *= inv_omega_norm / static_cast<double>(segments);
    return psd;
}

double psd_log_slope(const std::vector<PSDPoint>& psd, double omega_lo, double omega_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& p : psd) {
        if (p.omega < omega_lo || p.omega > omega_hi || p.power <= 0.0) continue;
        const double x = std::log(p.omega);
        const double y = std::log(p.power);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("psd_log_slope: fewer than two points in band");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void save_rtn(const RTNEnsemble& ensemble, std::ostream& out) {
    char buf[96];
    out << "n_fluctuators " << ensemble.fluctuators.size() << "\n";
    out << "rate_distribution "
        << (ensemble.rate_distribution == RateDistribution::LogUniform ? "log_uniform" : "explicit")
        << "\n";
    out << "seed " << ensemble.seed << "\n";
    for (std::size_t i = 0; i < ensemble.fluctuators.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", i, ensemble.fluctuators[i].rate,
                      ensemble.fluctuators[i].amplitude);
        out << buf;
    }
}

RTNEnsemble load_rtn(std::istream& in) {
    RTNEnsemble e;
    std::string key, value;
    std::size_t count = 0;
    if (!(in >> key >> count) || key != "n_fluctuators") {
        throw std::runtime_error("rtn parse: expected 'n_fluctuators <N>'");
    }
    if (!(in >> key >> value) || key != "rate_distribution") {
        throw std::runtime_error("rtn parse: expected 'rate_distribution <kind>'");
    }
    e.rate_distribution =
        value == "log_uniform" ? RateDistribution::LogUniform : RateDistribution::Explicit;
    if (!(in >> key >> e.seed) || key != "seed") {
        throw std::runtime_error("rtn parse: expected 'seed <value>'");
    }
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t idx = 0;
        Fluctuator f;
        if (!(in >> idx >> f.rate >> f.amplitude) || idx != i) {
            throw std::runtime_error("rtn parse: bad fluctuator line");
        }
        e.fluctuators.push_back(f);
    }
    e.validate();
    return e;
}

}  // namespace pijq
