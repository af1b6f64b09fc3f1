#include "pijq/rg.hpp"

#include <cmath>
#include <stdexcept>

namespace pijq {

double beta_function(double lambda, double s) {
    if (lambda < 0.0) throw std::invalid_argument("rg: lambda must be >= 0");
    return (1.0 - s) * lambda - lambda * lambda * lambda;
}

std::vector<FixedPoint> fixed_points(double s) {
    if (s < 1.0) {
        return {{0.0, FixedPointStability::Unstable},
                {std::sqrt(1.0 - s), FixedPointStability::Stable}};
    }
    if (s == 1.0) {
        return {{0.0, FixedPointStability::Marginal}};   // approached as 1/sqrt(ell)
    }
    return {{0.0, FixedPointStability::Stable}};
}

double closed_form_lambda(double lambda0, double s, double ell) {
    if (lambda0 < 0.0) throw std::invalid_argument("rg: lambda0 must be >= 0");
    const double l02 = lambda0 * lambda0;
    if (lambda0 == 0.0) return 0.0;
    if (s == 1.0) {
        return std::sqrt(l02 / (1.0 + 2.0 * l02 * ell));
    }
    const double eps = 1.0 - s;
    const double growth = std::exp(2.0 * eps * ell);
    return std::sqrt(eps * l02 * growth / (eps + l02 * (growth - 1.0)));
}

namespace {

double rk4_step(double lambda, double s, double h) {
    const double k1 = beta_function(lambda, s);
    const double k2 = beta_function(std::max(lambda + 0.5 * h * k1, 0.0), s);
    const double k3 = beta_function(std::max(lambda + 0.5 * h * k2, 0.0), s);
    const double k4 = beta_function(std::max(lambda + h * k3, 0.0), s);
    return std::max(lambda + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), 0.0);
}

}  // namespace

RGTrajectory integrate_flow(double lambda0, double s, double ell_max, double step,
                            double local_tol) {
    if (lambda0 < 0.0) throw std::invalid_argument("rg: lambda0 must be >= 0");
    if (!(step > 0.0)) throw std::invalid_argument("rg: step must be > 0");
    if (!(ell_max >= 0.0)) throw std::invalid_argument("rg: ell_max must be >= 0");

    RGTrajectory traj;
    traj.s = s;
    traj.method = IntegrationMethod::RK4;
    traj.samples.emplace_back(0.0, lambda0);

    double ell = 0.0;
    double lambda = lambda0;
    double h = step;
    while (ell < ell_max) {
        if (ell + h > ell_max) h = ell_max - ell;
        // step-doubling error estimate for the local truncation error
        const double full = rk4_step(lambda, s, h);
        const double half = rk4_step(rk4_step(lambda, s, 0.5 * h), s, 0.5 * h);
        const double err = std::abs(full - half) / 15.0;
        const double tol = local_tol * std::max(1.0, std::abs(lambda));
        if (err > tol && h > 1e-12) {
            h *= 0.5;   // reject and retry with a smaller step
            continue;
        }
        lambda = half + (half - full) / 15.0;   // local extrapolation
        ell += h;
        traj.samples.emplace_back(ell, lambda);
        if (err < 0.03 * tol && h < step) h = std::min(2.0 * h, step);
    }
    return traj;
}

RGTrajectory closed_form_trajectory(double lambda0, double s, double ell_max, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("rg: step must be > 0");
    RGTrajectory traj;
    traj.s = s;
    traj.method = IntegrationMethod::ClosedForm;
    for (double ell = 0.0;; ell += step) {
        if (ell > ell_max) ell = ell_max;
        traj.samples.emplace_back(ell, closed_form_lambda(lambda0, s, ell));
        if (ell >= ell_max) break;
    }
    return traj;
}

EntropyClass PhaseLabel::entropy_for(DecoherencePhase phase) {
    switch (phase) {
        case DecoherencePhase::SuperOhmicPerturbative:
        case DecoherencePhase::OhmicFrustrated:
            return EntropyClass::Ln2;
        case DecoherencePhase::CriticalIntermediate:
            return EntropyClass::BetweenZeroAndLn2;
        case DecoherencePhase::Localized:
            return EntropyClass::Zero;
    }
    return EntropyClass::Ln2;
}

PhaseLabel classify_phase(double s, double lambda0, double s_star) {
    if (s < 0.0) throw std::invalid_argument("rg: s must be >= 0");
    if (lambda0 < 0.0) throw std::invalid_argument("rg: lambda0 must be >= 0");

    PhaseLabel out;
    if (lambda0 == 0.0) {
        // free qubit: reported with the disentangled label and flagged
        out.label = DecoherencePhase::SuperOhmicPerturbative;
        out.zero_coupling = true;
    } else if (s > 1.0) {
        out.label = DecoherencePhase::SuperOhmicPerturbative;
    } else if (s == 1.0) {
        out.label = DecoherencePhase::OhmicFrustrated;
    } else if (s > s_star) {
        out.label = DecoherencePhase::CriticalIntermediate;
        out.beyond_perturbative = lambda0 > std::sqrt(1.0 - s);
    } else {
        // the boundary point s = s_star is assigned to the localized side
        out.label = DecoherencePhase::Localized;
    }
    out.entropy_class = PhaseLabel::entropy_for(out.label);
    return out;
}

std::string phase_name(DecoherencePhase phase) {
    switch (phase) {
        case DecoherencePhase::SuperOhmicPerturbative: return "super_ohmic_perturbative";
        case DecoherencePhase::OhmicFrustrated: return "ohmic_frustrated";
        case DecoherencePhase::CriticalIntermediate: return "critical_intermediate";
        case DecoherencePhase::Localized: return "localized";
    }
    return "unknown";
}

std::string entropy_name(EntropyClass entropy) {
    switch (entropy) {
        case EntropyClass::Ln2: return "ln2";
        case EntropyClass::BetweenZeroAndLn2: return "between_zero_and_ln2";
        case EntropyClass::Zero: return "zero";
    }
    return "unknown";
}

}  // namespace pijq
