// ising.hpp — imaginary-time long-range Ising mapping of the dephasing and
// frustrated models: coupling kernels, exact small-instance enumeration, and
// the ferromagnetic/paramagnetic decay diagnostic.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pijq/bath.hpp"

namespace pijq {

enum class KernelVariant { PureDephasing, FrustratedOhmic, FrustratedSubOhmic };

struct KernelSpec {
    KernelVariant variant{KernelVariant::PureDephasing};
    BathSpec spec;   // lambda reused inside the frustrated kernels

    void validate() const;
};

struct IsingInstance {
    int n_slices{0};           // L
    double delta_tau{0.0};
    Eigen::MatrixXd couplings; // L x L, symmetric, zero diagonal, J(|i-j|)
    double lambda{0.0};
};

inline constexpr int kMaxEnumerationSlices = 24;

// Boson propagator G(dtau) = [Gamma(s+1)/2^{s+1}] Omega_c^2
//                            (1 + Omega_c dtau / 2)^{-(s+1)}
double kernel_g(const BathSpec& spec, double dtau);

// Large-separation approximation Gamma(s+1) Omega_c^2 (Omega_c dtau)^{-(s+1)}
double kernel_g_asymptotic(const BathSpec& spec, double dtau);

// Domain-wall kernels of the frustrated model:
//   s = 1:  lambda^2 / dtau^{2 (1 + lambda^2)}
//   s < 1:  lambda^2 e^{-lambda^2 dtau^{1-s}} / dtau^2
double frustrated_kernel(double lambda, double s, double dtau);

double kernel_value(const KernelSpec& kernel, double dtau);

// Asymptotic power-law decay exponent of the kernel (infinity for
// exponentially damped kernels).
double kernel_decay_exponent(const KernelSpec& kernel);

// J(i,j) = lambda^2 kernel(|i-j| dtau) dtau^2, midpoint discretization.
IsingInstance build_instance(const KernelSpec& kernel, int n_slices, double delta_tau);

struct PartitionResult {
    double z_ratio{0.0};                 // Z / 2^L, equals 1 at J = 0
    std::vector<double> correlations;    // <sigma_0 sigma_r>, r = 0 .. L-1
    std::vector<double> magnetizations;  // <sigma_r>
};

// Exact sum over all 2^L configurations of exp[sum_{i<j} J_ij s_i s_j]
// (ferromagnetic convention: J > 0 favors alignment).  Log-sum-exp guarded.
PartitionResult enumerate_partition(const IsingInstance& instance);

enum class PhaseTendency { FerromagneticTendency, ParamagneticTendency, Marginal };

// Classifies by the kernel's asymptotic decay exponent relative to the 1/dtau^2
// confinement threshold.
PhaseTendency ferro_para_diagnostic(const KernelSpec& kernel);

}  // namespace pijq
