#include "pijq/wire.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pijq {

namespace {

void check_size(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("wire: N must be even and >= 4, got " + std::to_string(n));
    }
}

}  // namespace

WireParameters build_uniform_kitaev(int n, double t, double gamma, double mu) {
    check_size(n);
    WireParameters w;
    w.n_sites = n;
    w.mu = mu;
    w.bonds.assign(static_cast<std::size_t>(n - 1), Bond{t + gamma, t - gamma});
    return w;
}

WireParameters build_pi_junction(int n, const JunctionProfile& profile, double mu) {
    check_size(n);
    WireParameters w;
    w.n_sites = n;
    w.mu = mu;
    w.bonds.resize(static_cast<std::size_t>(n - 1));

    const double g = profile.gamma;
    switch (profile.kind) {
        case JunctionKind::UniformKitaev:
            for (auto& b : w.bonds) b = Bond{profile.tunneling + g, profile.tunneling - g};
            break;
        case JunctionKind::ShortJunction: {
            if (profile.tunneling >= 1.0) {
                throw std::invalid_argument("short junction: tunneling t must be < 1");
            }
            if (profile.upsilon >= g) {
                throw std::invalid_argument("short junction: upsilon must be < gamma");
            }
            const double t = profile.tunneling;
            const double u = profile.upsilon;
            for (int bn = w.first_site(); bn <= w.last_site() - 1; ++bn) {
                Bond b;
                if (bn <= -2) {
                    b = Bond{1.0 - g, 1.0 + g};
                } else if (bn == -1) {
                    b = Bond{t - u, t + u};
                } else if (bn == 0) {
                    b = Bond{t + u, t - u};
                } else {
                    b = Bond{1.0 + g, 1.0 - g};
                }
                w.bonds[static_cast<std::size_t>(bn - w.first_site())] = b;
            }
            break;
        }
        case JunctionKind::LongJunction: {
            if (profile.normal_length < 1 || profile.normal_length > n - 3) {
                throw std::invalid_argument("long junction: normal_length out of range");
            }
            // Two Kitaev segments with opposite pairing sign separated by
            // normal_length zero-pairing bonds centered on the chain.
            const int n_bonds = n - 1;
            const int start = (n_bonds - profile.normal_length) / 2;  // first normal bond index
            for (int i = 0; i < n_bonds; ++i) {
                if (i < start) {
                    w.bonds[static_cast<std::size_t>(i)] = Bond{1.0 - g, 1.0 + g};
                } else if (i < start + profile.normal_length) {
                    const double tn = profile.normal_hopping;
                    w.bonds[static_cast<std::size_t>(i)] = Bond{tn, tn};
                } else {
                    w.bonds[static_cast<std::size_t>(i)] = Bond{1.0 + g, 1.0 - g};
                }
            }
            break;
        }
    }
    return w;
}

SingleParticleMatrix assemble_m(const WireParameters& params) {
    const int n = params.n_sites;
    SingleParticleMatrix out;
    out.first_site = params.first_site();
    out.m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) out.m(i, i) = params.mu;
    for (int i = 0; i < n - 1; ++i) {
        const Bond& b = params.bonds[static_cast<std::size_t>(i)];
        out.m(i + 1, i) = b.alpha;
        out.m(i, i + 1) = b.beta;
    }
    return out;
}

std::complex<double> effective_pairing(const PairingParameters& p) {
    if (p.b_field <= 0.0) {
        throw std::invalid_argument("effective_pairing: |B0| must be positive");
    }
    if (p.g_factor == 0.0) {
        throw std::invalid_argument("effective_pairing: g factor must be nonzero");
    }
    const std::complex<double> phase{std::cos(p.e_hat_arg), std::sin(p.e_hat_arg)};
    return p.alpha_so * p.delta * phase / (p.g_factor * p.mu_bohr * p.b_field);
}

void save_wire(const WireParameters& params, std::ostream& out) {
    char buf[96];
    out << "n_sites " << params.n_sites << "\n";
    std::snprintf(buf, sizeof(buf), "mu %.17g\n", params.mu);
    out << buf;
    for (int bn = params.first_site(); bn <= params.last_site() - 1; ++bn) {
        const Bond& b = params.bond_at(bn);
        std::snprintf(buf, sizeof(buf), "%d %.17g %.17g\n", bn, b.alpha, b.beta);
        out << buf;
    }
}

WireParameters load_wire(std::istream& in) {
    WireParameters w;
    std::string key;
    if (!(in >> key) || key != "n_sites" || !(in >> w.n_sites)) {
        throw std::runtime_error("wire parse: expected 'n_sites <N>'");
    }
    check_size(w.n_sites);
    if (!(in >> key) || key != "mu" || !(in >> w.mu)) {
        throw std::runtime_error("wire parse: expected 'mu <value>'");
    }
    w.bonds.resize(static_cast<std::size_t>(w.n_sites - 1));
    for (int i = 0; i < w.n_sites - 1; ++i) {
        int bn = 0;
        Bond b;
        if (!(in >> bn >> b.alpha >> b.beta)) {
            throw std::runtime_error("wire parse: truncated bond list");
        }
        if (bn != i + w.first_site()) {
            throw std::runtime_error("wire parse: bond index out of order");
        }
        w.bonds[static_cast<std::size_t>(i)] = b;
    }
    return w;
}

std::string wire_to_string(const WireParameters& params) {
    std::ostringstream os;
    save_wire(params, os);
    return os.str();
}

WireParameters wire_from_string(const std::string& text) {
    std::istringstream is(text);
    return load_wire(is);
}

}  // namespace pijq
