// rg.hpp — renormalization-group flow of the two-bath frustrated coupling
//
// Flow equation d lambda / d ell = (1 - s) lambda - lambda^3 (reduces to
// -lambda^3 at s = 1).  The closed-form Bernoulli solution ships alongside
// the integrator as its oracle.

#pragma once

#include <string>
#include <vector>

namespace pijq {

enum class IntegrationMethod { RK4, ClosedForm };

struct RGTrajectory {
    std::vector<std::pair<double, double>> samples;   // (ell, lambda), ell ascending
    double s{1.0};
    IntegrationMethod method{IntegrationMethod::RK4};

    double terminal_lambda() const { return samples.empty() ? 0.0 : samples.back().second; }
};

enum class FixedPointStability { Stable, Unstable, Marginal };

struct FixedPoint {
    double lambda_star{0.0};
    FixedPointStability stability{FixedPointStability::Stable};
};

enum class DecoherencePhase {
    SuperOhmicPerturbative,
    OhmicFrustrated,
    CriticalIntermediate,
    Localized
};

enum class EntropyClass { Ln2, BetweenZeroAndLn2, Zero };

struct PhaseLabel {
    DecoherencePhase label{DecoherencePhase::SuperOhmicPerturbative};
    EntropyClass entropy_class{EntropyClass::Ln2};
    bool zero_coupling{false};            // lambda0 = 0, free-qubit convention
    bool beyond_perturbative{false};      // lambda0 > sqrt(1-s) warning flag

    static EntropyClass entropy_for(DecoherencePhase phase);
};

inline constexpr double kDefaultSStar = 0.76;   // localized/critical boundary, +-0.01

double beta_function(double lambda, double s);

std::vector<FixedPoint> fixed_points(double s);

// Bernoulli closed form:
//   s != 1:  lambda^2(ell) = (1-s) l0^2 e^{2(1-s)ell} /
//                            [(1-s) + l0^2 (e^{2(1-s)ell} - 1)]
//   s  = 1:  lambda^2(ell) = l0^2 / (1 + 2 l0^2 ell)
double closed_form_lambda(double lambda0, double s, double ell);

// Fourth-order Runge-Kutta with step-doubling error control; rejects steps
// whose local error estimate exceeds the tolerance.
RGTrajectory integrate_flow(double lambda0, double s, double ell_max, double step,
                            double local_tol = 1e-10);

RGTrajectory closed_form_trajectory(double lambda0, double s, double ell_max, double step);

PhaseLabel classify_phase(double s, double lambda0, double s_star = kDefaultSStar);

std::string phase_name(DecoherencePhase phase);
std::string entropy_name(EntropyClass entropy);

}  // namespace pijq
