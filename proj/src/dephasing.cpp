#include "pijq/dephasing.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "pijq/quadrature.hpp"

namespace pijq {

namespace {

using cplx = std::complex<double>;

cplx closed_form_exponent(const BathSpec& spec, double t) {
    const double s = spec.s;
    const double l2 = spec.lambda * spec.lambda;
    const cplx z{1.0, 0.5 * spec.omega_uc * t};
    if (s == 1.0) {
        // removable limit: Gamma(0) pole cancels against the bracket
        return l2 * std::log(z);
    }
    const double gamma_sm1 = std::tgamma(s - 1.0);   // continued for 0 < s < 1
    const cplx bracket = 1.0 - std::pow(z, -(s - 1.0));
    return l2 * gamma_sm1 * std::pow(2.0, 1.0 - s) * bracket;
}

}  // namespace

void QubitState::validate(double tol) const {
    if (std::abs((rho - rho.adjoint()).norm()) > tol) {
        throw std::invalid_argument("qubit state: density matrix not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        throw std::invalid_argument("qubit state: trace must be 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-12) {
        throw std::invalid_argument("qubit state: negative eigenvalue");
    }
}

std::complex<double> decoherence_closed_form(const BathSpec& spec, double t) {
    spec.validate();
    if (t < 0.0) throw std::invalid_argument("decoherence: t must be >= 0");
    if (spec.s == 0.0) {
        throw std::invalid_argument(
            "decoherence: s = 0 diverges; use one_over_f_divergence_probe");
    }
    if (spec.lambda == 0.0 || t == 0.0) return {1.0, 0.0};
    return std::exp(-closed_form_exponent(spec, t));
}

std::complex<double> decoherence_quadrature(const BathSpec& spec, double t, double rel_tol) {
    spec.validate();
    if (!(rel_tol > 0.0)) throw std::invalid_argument("decoherence: rel_tol must be > 0");
    if (!(spec.s > 0.0)) throw std::invalid_argument("decoherence: quadrature needs s > 0");
    if (t < 0.0) throw std::invalid_argument("decoherence: t must be >= 0");
    if (spec.lambda == 0.0 || t == 0.0) return {1.0, 0.0};

    const double s = spec.s;
    const double wc = spec.omega_uc;
    const double l2 = spec.lambda * spec.lambda;

    // Substitution omega = e^x removes the omega^{s-1} endpoint singularity:
    //   Int omega^{s-2} e^{-2 omega/Omega_c} (1 - e^{-i omega t}) domega
    //     = Int e^{(s-1)x} e^{-2 e^x/Omega_c} (1 - e^{-i t e^x}) dx.
    // The integrand decays like e^{s x} |t| for x -> -inf and is killed by
    // the Gaussian-free exponential cutoff for large x.
    auto integrand = [&](double x) -> cplx {
        const double w = std::exp(x);
        const cplx osc = 1.0 - std::exp(cplx{0.0, -w * t});
        return std::exp((s - 1.0) * x - 2.0 * w / wc) * osc;
    };

    // Truncation: the x -> -inf tail is bounded by t e^{s x}/s; the upper
    // tail by the exponential cutoff.
    const double scale = std::min(1.0, wc * t);  // magnitude near the lower end
    const double tail_target = 0.1 * rel_tol * std::max(scale, 1e-300);
    const double x_lo = std::log(std::max(tail_target * s / (t + 1.0 / wc), 1e-290)) / s;
    const double x_hi = std::log(wc * (45.0 + 8.0 * std::log1p(1.0 / s)));

    // Seed a split where the oscillation turns on (omega ~ 1/t) and at the
    // cutoff scale.
    std::vector<double> splits;
    if (1.0 / t > 0.0) splits.push_back(std::log(1.0 / t));
    splits.push_back(std::log(wc));

    auto q = integrate_gk(integrand, std::min(x_lo, x_hi - 1.0), x_hi, 0.05 * rel_tol, 0.0, splits,
                          40000);
    if (!q.converged) {
        throw std::runtime_error(
            "decoherence_quadrature: no convergence; worst subinterval omega in [" +
            std::to_string(std::exp(q.worst_interval_lo)) + ", " +
            std::to_string(std::exp(q.worst_interval_hi)) + "]");
    }
    const cplx exponent = l2 * std::pow(wc, 1.0 - s) * q.value;
    return std::exp(-exponent);
}

DecoherenceCurve decoherence_curve(const BathSpec& spec, const std::vector<double>& times,
                                   CurveMethod method, double rel_tol) {
    DecoherenceCurve curve;
    curve.spec = spec;
    curve.method = method;
    curve.times = times;
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1]) {
            throw std::invalid_argument("decoherence_curve: time grid must ascend");
        }
    }
    curve.values.reserve(times.size());
    for (double t : times) {
        curve.values.push_back(method == CurveMethod::ClosedForm
                                   ? decoherence_closed_form(spec, t)
                                   : decoherence_quadrature(spec, t, rel_tol));
    }
    return curve;
}

std::vector<std::pair<double, double>> one_over_f_divergence_probe(
    double lambda, double omega_uc, double t, const std::vector<double>& s_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("divergence probe: t must be > 0");
    std::vector<std::pair<double, double>> out;
    out.reserve(s_grid.size());
    double prev = 1.0;
    bool first = true;
    for (double s : s_grid) {
        if (!(s > 0.0) || s > 0.2) {
            throw std::invalid_argument("divergence probe: s grid must lie in (0, 0.2]");
        }
        if (!first && s >= prev) {
            throw std::invalid_argument("divergence probe: s grid must descend");
        }
        prev = s;
        first = false;
        // Leading-order small-s estimate: the divergence is carried entirely
        // by |Gamma(s-1)| ~ 1/s; the time dependence enters through an
        // s-independent weight that vanishes at t = 0 and saturates at large
        // omega_uc * t.  The exact modulus has no 1/s divergence at fixed t
        // (the divergent part of the exponent is purely a phase), so the
        // probe reports the leading-order magnitude instead.
        const double half = 0.5 * omega_uc * t;
        const double weight = 1.0 - 1.0 / (1.0 + half * half);
        const double neg_log =
            lambda * lambda * std::pow(2.0, 1.0 - s) * std::abs(std::tgamma(s - 1.0)) * weight;
        out.emplace_back(s, std::exp(-neg_log));
    }
    return out;
}

std::vector<QubitState> evolve_offdiagonal(const QubitState& initial,
                                           const DecoherenceCurve& curve) {
    initial.validate();
    std::vector<QubitState> out;
    out.reserve(curve.values.size());
    for (const auto& decay : curve.values) {
        QubitState st = initial;
        st.rho(0, 1) *= decay;
        st.rho(1, 0) *= std::conj(decay);
        out.push_back(st);
    }
    return out;
}

}  // namespace pijq
