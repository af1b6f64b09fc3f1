#include "pijq/bath.hpp"

#include <cmath>
#include <stdexcept>

namespace pijq {

void BathSpec::validate() const {
    if (s < 0.0) throw std::invalid_argument("bath: spectral exponent s must be >= 0");
    if (lambda < 0.0) throw std::invalid_argument("bath: coupling lambda must be >= 0");
    if (!(omega_c > 0.0) || !(omega_uc > 0.0)) {
        throw std::invalid_argument("bath: cutoffs must be positive");
    }
    if (omega_c > omega_uc) {
        throw std::invalid_argument("bath: infrared cutoff exceeds ultraviolet cutoff");
    }
}

void FrustratedPair::validate() const {
    bath_z.validate();
    bath_x.validate();
    if (symmetric && !(bath_z == bath_x)) {
        throw std::invalid_argument("frustrated pair: symmetric = true requires identical baths");
    }
}

bool operator==(const BathSpec& a, const BathSpec& b) {
    return a.s == b.s && a.lambda == b.lambda && a.omega_c == b.omega_c &&
           a.omega_uc == b.omega_uc;
}

double coupling_f(const BathSpec& spec, double omega) {
    if (omega < 0.0) throw std::invalid_argument("coupling_f: omega must be >= 0");
    if (omega == 0.0) {
        // omega^{s/2} -> 0 for s > 0; at s = 0 only the prefactors survive.
        return spec.s > 0.0 ? 0.0 : std::sqrt(spec.omega_c * spec.omega_uc);
    }
    return std::sqrt(spec.omega_c) * std::pow(spec.omega_uc, 0.5 * (1.0 - spec.s)) *
           std::pow(omega, 0.5 * spec.s) * std::exp(-0.5 * omega / spec.omega_uc);
}

double polaron_g(const BathSpec& spec, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("polaron_g: omega must be > 0");
    return coupling_f(spec, omega) / omega;
}

double noise_spectrum(const BathSpec& spec, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("noise_spectrum: omega must be > 0");
    return std::pow(omega, spec.s - 1.0) * std::exp(-omega / spec.omega_uc);
}

}  // namespace pijq
