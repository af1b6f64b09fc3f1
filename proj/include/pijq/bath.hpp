// bath.hpp — spectral models of the effective bosonic environment
//
// Cutoff convention: Omega_c is the sole ultraviolet cutoff appearing in
// exponentials; omega_c normalizes the mode density (it cancels in every
// closed form and enters F only through the sqrt prefactor).

#pragma once

#include <string>
#include <vector>

namespace pijq {

struct BathSpec {
    double s{1.0};          // spectral exponent >= 0; s = 1 Ohmic, s -> 0 the 1/f limit
    double lambda{0.0};     // dimensionless coupling >= 0
    double omega_c{1.0};    // infrared / density cutoff > 0
    double omega_uc{1.0};   // ultraviolet cutoff Omega_c > 0

    void validate() const;
    bool is_ohmic() const { return s == 1.0; }
    bool is_sub_ohmic() const { return s > 0.0 && s < 1.0; }
    bool is_super_ohmic() const { return s > 1.0; }
};

// Two-bath frustration model: one bath couples to sigma^z, the other to
// sigma^x.  symmetric = true encodes the emergent U(1) assumption.
struct FrustratedPair {
    BathSpec bath_z;
    BathSpec bath_x;
    bool symmetric{true};

    void validate() const;
    FrustratedPair exchanged() const { return {bath_x, bath_z, symmetric}; }
};

bool operator==(const BathSpec& a, const BathSpec& b);

// F(omega) = sqrt(omega_c) Omega_c^{(1-s)/2} omega^{s/2} e^{-omega/2 Omega_c}
double coupling_f(const BathSpec& spec, double omega);

// G(omega) = F(omega)/omega, the polaron rotation kernel (omega > 0)
double polaron_g(const BathSpec& spec, double omega);

// S(omega) = omega^{s-1} e^{-omega/Omega_c}, unit prefactor convention
double noise_spectrum(const BathSpec& spec, double omega);

}  // namespace pijq
