// modes.hpp — spectrum and zero modes of the single-particle problem
//
// The full Nambu spectrum is {+Lambda_k, -Lambda_k} where Lambda_k are the
// singular values of M.  For Lambda_k != 0 the paired vectors satisfy
// M^t phi_k = Lambda_k xi_k and M xi_k = Lambda_k phi_k.  Zero modes split
// into two sectors: kernel of M^t (eta components) and kernel of M (nu
// components); each kernel vector is one Majorana mode.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pijq/wire.hpp"

namespace pijq {

struct Level {
    double lambda{0.0};       // >= 0
    Eigen::VectorXd phi;      // unit norm
    Eigen::VectorXd xi;       // unit norm
};

struct ModeSet {
    std::vector<Level> levels;   // ascending lambda
    int first_site{0};

    int zero_level_count(double tol) const;
    // Majorana zero modes = 2 per zero level (one in each kernel sector),
    // i.e. the number of Nambu eigenvalues with |Lambda| < tol.
    int zero_mode_count(double tol) const { return 2 * zero_level_count(tol); }
};

enum class ZeroModeSector { EtaSector, NuSector };
enum class ZeroModeSymmetry { Symmetric, Antisymmetric, EdgeLeft, EdgeRight, Unclassified };

struct ZeroMode {
    Eigen::VectorXd profile;   // unit norm, over Majorana components
    ZeroModeSector sector{ZeroModeSector::EtaSector};
    ZeroModeSymmetry symmetry{ZeroModeSymmetry::Unclassified};
    double energy_residual{0.0};   // ||M^t profile|| (eta) or ||M profile|| (nu)
    int first_site{0};
};

struct DispersionPoint {
    double k{0.0};
    double e_plus{0.0};
    double e_minus{0.0};
};

inline constexpr double kZeroTolerance = 1e-10;   // kernel/band separation, hopping units

ModeSet solve_modes(const SingleParticleMatrix& m);

// Zero modes from the boundary-propagated three-term recursions of both
// kernel sectors.  Solutions are kept when the residual is <= tol.
std::vector<ZeroMode> zero_modes_by_recursion(const WireParameters& params,
                                              double tol = kZeroTolerance);

// Closed-form junction Majoranas for the short junction in the Kitaev limit
// (gamma = 1, bulk hopping 1), truncated to N sites and normalized.
// Requires |mu| < 1.  Returns (zeta_s, zeta_a).
std::pair<ZeroMode, ZeroMode> analytic_junction_modes(double mu, double t, double upsilon, int n);

struct SplittingPoint {
    int n_sites{0};
    double min_edge_lambda{0.0};   // smallest nonzero |Lambda| from edge modes
};

std::vector<SplittingPoint> edge_splitting_scan(const JunctionProfile& profile, double mu,
                                                const std::vector<int>& n_list);

// E(k) = k^2 + k_so^2 +- sqrt((2 k_so k)^2 + |Delta|^2), units hbar^2/2m = 1.
DispersionPoint dispersion(double k, double k_so, double delta_abs);

// Parity about the junction center (n -> -n) used for symmetry labels.
ZeroModeSymmetry classify_symmetry(const Eigen::VectorXd& profile, int first_site, double tol);

}  // namespace pijq
