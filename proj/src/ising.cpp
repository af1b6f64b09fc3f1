#include "pijq/ising.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pijq {

void KernelSpec::validate() const {
    spec.validate();
    if (variant == KernelVariant::FrustratedSubOhmic && !(spec.s > 0.0 && spec.s < 1.0)) {
        throw std::invalid_argument("kernel: frustrated sub-Ohmic requires 0 < s < 1");
    }
    if (variant == KernelVariant::FrustratedOhmic && spec.s != 1.0) {
        throw std::invalid_argument("kernel: frustrated Ohmic requires s = 1");
    }
}

double kernel_g(const BathSpec& spec, double dtau) {
    if (dtau < 0.0) throw std::invalid_argument("kernel_g: dtau must be >= 0");
    const double s = spec.s;
    const double wc = spec.omega_uc;
    return std::tgamma(s + 1.0) * std::pow(2.0, -(s + 1.0)) * wc * wc *
           std::pow(1.0 + 0.5 * wc * dtau, -(s + 1.0));
}

double kernel_g_asymptotic(const BathSpec& spec, double dtau) {
    if (!(dtau > 0.0)) throw std::invalid_argument("kernel_g_asymptotic: dtau must be > 0");
    const double wc = spec.omega_uc;
    return std::tgamma(spec.s + 1.0) * wc * wc * std::pow(wc * dtau, -(spec.s + 1.0));
}

double frustrated_kernel(double lambda, double s, double dtau) {
    if (!(dtau > 0.0)) throw std::invalid_argument("frustrated_kernel: dtau must be > 0");
    if (s > 1.0) {
        throw std::invalid_argument("frustrated_kernel: defined only for s <= 1");
    }
    const double l2 = lambda * lambda;
    if (s == 1.0) {
        return l2 * std::pow(dtau, -2.0 * (1.0 + l2));
    }
    return l2 * std::exp(-l2 * std::pow(dtau, 1.0 - s)) / (dtau * dtau);
}

double kernel_value(const KernelSpec& kernel, double dtau) {
    switch (kernel.variant) {
        case KernelVariant::PureDephasing:
            return kernel_g(kernel.spec, dtau);
        case KernelVariant::FrustratedOhmic:
            return frustrated_kernel(kernel.spec.lambda, 1.0, dtau);
        case KernelVariant::FrustratedSubOhmic:
            return frustrated_kernel(kernel.spec.lambda, kernel.spec.s, dtau);
    }
    return 0.0;
}

double kernel_decay_exponent(const KernelSpec& kernel) {
    switch (kernel.variant) {
        case KernelVariant::PureDephasing:
            return kernel.spec.s + 1.0;
        case KernelVariant::FrustratedOhmic:
            return 2.0 * (1.0 + kernel.spec.lambda * kernel.spec.lambda);
        case KernelVariant::FrustratedSubOhmic:
            return std::numeric_limits<double>::infinity();  // exponential damping
    }
    return 0.0;
}

IsingInstance build_instance(const KernelSpec& kernel, int n_slices, double delta_tau) {
    kernel.validate();
    if (n_slices < 2 || n_slices > kMaxEnumerationSlices) {
        throw std::invalid_argument("ising: n_slices must be in [2, " +
                                    std::to_string(kMaxEnumerationSlices) +
                                    "] for exact enumeration");
    }
    if (!(delta_tau > 0.0)) throw std::invalid_argument("ising: delta_tau must be > 0");

    IsingInstance inst;
    inst.n_slices = n_slices;
    inst.delta_tau = delta_tau;
    inst.lambda = kernel.spec.lambda;
    inst.couplings = Eigen::MatrixXd::Zero(n_slices, n_slices);
    // The frustrated kernels already carry their lambda^2 prefactor; the bare
    // boson propagator does not.
    const double l2 = kernel.variant == KernelVariant::PureDephasing
                          ? kernel.spec.lambda * kernel.spec.lambda
                          : 1.0;
    for (int i = 0; i < n_slices; ++i) {
        for (int j = i + 1; j < n_slices; ++j) {
            const double sep = static_cast<double>(j - i) * delta_tau;  // midpoint sampling
            const double coupling = l2 * kernel_value(kernel, sep) * delta_tau * delta_tau;
            inst.couplings(i, j) = coupling;
            inst.couplings(j, i) = coupling;
        }
    }
    return inst;
}

PartitionResult enumerate_partition(const IsingInstance& instance) {
    const int L = instance.n_slices;
    if (L < 1 || L > kMaxEnumerationSlices) {
        throw std::invalid_argument("ising: enumeration limited to L <= " +
                                    std::to_string(kMaxEnumerationSlices));
    }
    const Eigen::MatrixXd& J = instance.couplings;

    // Maximum energy is the aligned configuration (J >= 0), so weights
    // exp(E - E_max) never overflow.
    double e_max = 0.0;
    for (int i = 0; i < L; ++i) {
        for (int j = i + 1; j < L; ++j) e_max += J(i, j);
    }

    // Global Z2 symmetry: enumerate the half-space with the last spin fixed
    // to +1 and double the weights; <sigma_r> vanishes identically and the
    // correlators are unchanged.
    std::vector<double> spins(static_cast<std::size_t>(L), 1.0);
    double energy = e_max;
    double z = 0.0;
    std::vector<double> corr(static_cast<std::size_t>(L), 0.0);

    const std::uint64_t half = L == 1 ? 1 : (1ULL << (L - 1));
    for (std::uint64_t g = 0;; ++g) {
        const double w = std::exp(energy - e_max);
        z += w;
        const double s0 = spins[0];
        for (int r = 0; r < L; ++r) {
            corr[static_cast<std::size_t>(r)] += w * s0 * spins[static_cast<std::size_t>(r)];
        }
        if (g + 1 == half) break;
        // Gray-code step over the first L-1 spins.
        const int flip = __builtin_ctzll(g + 1);
        double delta = 0.0;
        for (int j = 0; j < L; ++j) {
            if (j != flip) delta += J(flip, j) * spins[static_cast<std::size_t>(j)];
        }
        energy -= 2.0 * spins[static_cast<std::size_t>(flip)] * delta;
        spins[static_cast<std::size_t>(flip)] = -spins[static_cast<std::size_t>(flip)];
    }

    PartitionResult out;
    out.z_ratio = z / static_cast<double>(half);
    out.correlations.resize(static_cast<std::size_t>(L));
    out.magnetizations.assign(static_cast<std::size_t>(L), 0.0);
    for (int r = 0; r < L; ++r) {
        out.correlations[static_cast<std::size_t>(r)] = corr[static_cast<std::size_t>(r)] / z;
    }
    return out;
}

PhaseTendency ferro_para_diagnostic(const KernelSpec& kernel) {
    kernel.validate();
    const double exponent = kernel_decay_exponent(kernel);
    if (exponent < 2.0) return PhaseTendency::FerromagneticTendency;
    if (exponent > 2.0) return PhaseTendency::ParamagneticTendency;
    return PhaseTendency::Marginal;
}

}  // namespace pijq
