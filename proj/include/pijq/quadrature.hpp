// quadrature.hpp — adaptive Gauss-Kronrod integration for complex integrands

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pijq {

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate{0.0};
    bool converged{true};
    int intervals_used{0};
    double worst_interval_lo{0.0};
    double worst_interval_hi{0.0};
};

// Adaptive (G7, K15) on [a, b] with worst-interval-first subdivision.
// initial_splits seeds extra break points (e.g. where the integrand changes
// character) before refinement starts.
QuadratureResult integrate_gk(const std::function<std::complex<double>(double)>& f, double a,
                              double b, double rel_tol, double abs_tol,
                              const std::vector<double>& initial_splits = {},
                              int max_intervals = 20000);

}  // namespace pijq
