// dephasing.hpp — exact pure-dephasing decoherence function I(t)
//
// Closed forms:
//   s != 1:  I(t) = exp[-lambda^2 Gamma(s-1) 2^{1-s} (1 - (1 + i Omega_c t/2)^{-(s-1)})]
//            (Gamma analytically continued for 0 < s < 1)
//   s  = 1:  I(t) = (1 + i Omega_c t/2)^{-lambda^2}   (removable limit)
//
// The quadrature route integrates the equivalent exponent
//   lambda^2 Omega_c^{1-s} Int_0^inf domega omega^{s-2} e^{-2 omega/Omega_c}
//            (1 - e^{-i omega t}),
// whose effective cutoff e^{-2 omega/Omega_c} is the one consistent with the
// closed forms above.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pijq/bath.hpp"

namespace pijq {

enum class CurveMethod { ClosedForm, Quadrature };

struct DecoherenceCurve {
    std::vector<double> times;                   // ascending
    std::vector<std::complex<double>> values;    // I(t) samples
    CurveMethod method{CurveMethod::ClosedForm};
    BathSpec spec;
};

struct QubitState {
    Eigen::Matrix2cd rho;

    void validate(double tol = 1e-9) const;   // Hermitian, unit trace, eigenvalues >= -1e-12
    double purity() const { return (rho * rho).trace().real(); }
};

std::complex<double> decoherence_closed_form(const BathSpec& spec, double t);

std::complex<double> decoherence_quadrature(const BathSpec& spec, double t,
                                            double rel_tol = 1e-10);

DecoherenceCurve decoherence_curve(const BathSpec& spec, const std::vector<double>& times,
                                   CurveMethod method, double rel_tol = 1e-10);

// Leading-order |I(t)| for a descending grid of s -> 0+, tracking the
// Gamma(s-1) ~ -1/s divergence of the 1/f limit: halving s roughly doubles
// -log|I|.
std::vector<std::pair<double, double>> one_over_f_divergence_probe(
    double lambda, double omega_uc, double t, const std::vector<double>& s_grid);

// Pure dephasing on the density matrix: diagonal fixed, off-diagonal scaled
// by I(t).  One output state per curve sample.
std::vector<QubitState> evolve_offdiagonal(const QubitState& initial,
                                           const DecoherenceCurve& curve);

}  // namespace pijq
