// wire.hpp — Majorana-chain parameter profiles and the single-particle matrix

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pijq {

// Per-bond couplings (alpha_n, beta_n) = (t_n + gamma_n, t_n - gamma_n).
// Sites are labeled n = -N/2 ... N/2-1, bonds n = -N/2 ... N/2-2.
struct Bond {
    double alpha{0.0};
    double beta{0.0};

    double hopping() const { return 0.5 * (alpha + beta); }
    double pairing() const { return 0.5 * (alpha - beta); }
};

struct WireParameters {
    int n_sites{0};             // N, even, >= 4
    double mu{0.0};             // chemical potential in units of the bulk hopping
    std::vector<Bond> bonds;    // N-1 entries

    int first_site() const { return -n_sites / 2; }
    int last_site() const { return n_sites / 2 - 1; }

    // bond index n -> storage index
    const Bond& bond_at(int n) const { return bonds.at(static_cast<std::size_t>(n - first_site())); }
};

enum class JunctionKind { UniformKitaev, ShortJunction, LongJunction };

struct JunctionProfile {
    JunctionKind kind{JunctionKind::ShortJunction};
    double gamma{1.0};        // bulk pairing
    double tunneling{0.5};    // t at the junction bonds, < 1 for ShortJunction
    double upsilon{0.2};      // transition pairing, < gamma for ShortJunction
    int normal_length{0};     // LongJunction: number of gamma = 0 bonds
    double normal_hopping{1.0};  // hopping inside the normal region (not fixed by the model)
};

// The block M of the Nambu form H = (1/4) v^dag [[0, iM], [-iM^t, 0]] v.
// Layout: diagonal mu, subdiagonal alpha_n, superdiagonal beta_n.
struct SingleParticleMatrix {
    Eigen::MatrixXd m;
    int first_site{0};
};

struct PairingParameters {
    double alpha_so{1.0};               // spin-orbit strength
    std::complex<double> delta{0.0};    // s-wave gap
    double g_factor{1.0};
    double b_field{1.0};                // |B0| > 0
    double e_hat_arg{0.0};              // arg(e_hat) in radians
    double mu_bohr{1.0};                // Bohr magneton; 1 in natural units
};

WireParameters build_uniform_kitaev(int n, double t, double gamma, double mu);
WireParameters build_pi_junction(int n, const JunctionProfile& profile, double mu);
SingleParticleMatrix assemble_m(const WireParameters& params);

// gamma e^{i phi} = alpha Delta e^{i arg(e_hat)} / (g mu_B |B0|)
std::complex<double> effective_pairing(const PairingParameters& p);

// Plain-text key-value serialization: n_sites, mu, then one "n alpha beta" line per bond.
void save_wire(const WireParameters& params, std::ostream& out);
WireParameters load_wire(std::istream& in);
std::string wire_to_string(const WireParameters& params);
WireParameters wire_from_string(const std::string& text);

}  // namespace pijq
