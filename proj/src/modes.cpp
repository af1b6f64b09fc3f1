#include "pijq/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace pijq {

namespace {

constexpr double kPivotEps = 1e-14;

// Kernel recursions, one per sector.  With the matrix layout (alpha below,
// beta above) the eta-sector equation (M^t phi = 0) reads
//   beta_{n-1} phi_{n-1} + mu phi_n + alpha_n phi_{n+1} = 0,
// and the nu-sector equation (M xi = 0) swaps alpha and beta.
struct Recursion {
    const WireParameters* w{nullptr};
    ZeroModeSector sector{ZeroModeSector::EtaSector};

    double left_coef(int bond) const {   // multiplies phi_{n-1}, bond = n-1
        const Bond& b = w->bond_at(bond);
        return sector == ZeroModeSector::EtaSector ? b.beta : b.alpha;
    }
    double right_coef(int bond) const {  // multiplies phi_{n+1}, bond = n
        const Bond& b = w->bond_at(bond);
        return sector == ZeroModeSector::EtaSector ? b.alpha : b.beta;
    }
};

Eigen::VectorXd apply_kernel_op(const Recursion& r, const Eigen::VectorXd& phi) {
    const int n = r.w->n_sites;
    const int first = r.w->first_site();
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
        double v = r.w->mu * phi[i];
        if (i > 0) v += r.left_coef(first + i - 1) * phi[i - 1];
        if (i < n - 1) v += r.right_coef(first + i) * phi[i + 1];
        out[i] = v;
    }
    return out;
}

// Forward sweep of the three-term recursion.  Each amplitude is kept as a
// linear combination of free parameters: phi_0 seeds the first parameter,
// and whenever the pivot coefficient vanishes the corresponding row becomes
// a constraint and phi_{i+1} starts a fresh parameter.  The kernel is the
// null space of the accumulated constraint rows, so vectors that span
// several decoupled segments (zero pivots) are still found.
std::vector<Eigen::VectorXd> kernel_by_recursion(const Recursion& r) {
    const int n = r.w->n_sites;
    const int first = r.w->first_site();

    // coef.row(i) expresses phi_i over the free parameters found so far.
    Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(n, 1);
    coef(0, 0) = 1.0;
    std::vector<Eigen::RowVectorXd> constraints;

    auto widen = [&](const Eigen::RowVectorXd& row) {
        Eigen::RowVectorXd wide = Eigen::RowVectorXd::Zero(coef.cols());
        wide.head(row.size()) = row;
        return wide;
    };
    auto rescale = [&](Eigen::Index rows_done) {
        for (Eigen::Index k = 0; k < coef.cols(); ++k) {
            const double peak = coef.col(k).head(rows_done).cwiseAbs().maxCoeff();
            if (peak > 1e100) {
                coef.col(k) /= peak;
                for (auto& c : constraints) {
                    if (c.size() > k) c[k] /= peak;
                }
            }
        }
    };

    for (int i = 0; i < n; ++i) {
        Eigen::RowVectorXd expr = r.w->mu * coef.row(i);
        if (i > 0) expr += r.left_coef(first + i - 1) * coef.row(i - 1);
        if (i == n - 1) {
            constraints.push_back(expr);
            break;
        }
        const double pivot = r.right_coef(first + i);
        if (std::abs(pivot) > kPivotEps) {
            coef.row(i + 1) = -expr / pivot;
        } else {
            constraints.push_back(expr);
            coef.conservativeResize(Eigen::NoChange, coef.cols() + 1);
            coef.col(coef.cols() - 1).setZero();
            coef(i + 1, coef.cols() - 1) = 1.0;
        }
        rescale(i + 2);
    }

    Eigen::MatrixXd c(static_cast<Eigen::Index>(constraints.size()), coef.cols());
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        c.row(i) = widen(constraints[static_cast<std::size_t>(i)]);
    }

    // Null space of the (small) constraint system over the free parameters.
    // The cut is deliberately loose: finite-size tails lift the smallest
    // singular value slightly, and the caller re-checks every candidate
    // against the requested residual tolerance.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
    const double sv_tol =
        1e-6 * std::max(1.0, svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0);
    std::vector<Eigen::VectorXd> kernel;
    for (Eigen::Index k = 0; k < svd.matrixV().cols(); ++k) {
        if (k < svd.singularValues().size() && svd.singularValues()[k] > sv_tol) continue;
        kernel.push_back(coef * svd.matrixV().col(k));
    }
    return kernel;
}

}  // namespace

int ModeSet::zero_level_count(double tol) const {
    int count = 0;
    for (const auto& lv : levels) {
        if (lv.lambda < tol) ++count;
    }
    return count;
}

ModeSet solve_modes(const SingleParticleMatrix& m) {
    const auto n = m.m.rows();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m.m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
        throw std::runtime_error("solve_modes: SVD did not converge (N = " + std::to_string(n) +
                                 ")");
    }
    ModeSet out;
    out.first_site = m.first_site;
    out.levels.resize(static_cast<std::size_t>(n));
    // Eigen returns singular values descending; store ascending.
    for (Eigen::Index k = 0; k < n; ++k) {
        Level& lv = out.levels[static_cast<std::size_t>(n - 1 - k)];
        lv.lambda = svd.singularValues()[k];
        lv.phi = svd.matrixU().col(k);
        lv.xi = svd.matrixV().col(k);
    }
    return out;
}

ZeroModeSymmetry classify_symmetry(const Eigen::VectorXd& profile, int first_site, double tol) {
    const int n = static_cast<int>(profile.size());
    // Edge detection: dominant weight within a few sites of one end.
    const int edge_width = std::max(2, n / 10);
    double left_mass = 0.0, right_mass = 0.0;
    for (int i = 0; i < edge_width; ++i) {
        left_mass += profile[i] * profile[i];
        right_mass += profile[n - 1 - i] * profile[n - 1 - i];
    }
    if (left_mass > 0.9) return ZeroModeSymmetry::EdgeLeft;
    if (right_mass > 0.9) return ZeroModeSymmetry::EdgeRight;

    // Parity about the junction center: site n <-> site -n.  Site -N/2 has
    // no partner and must carry negligible weight for a parity label.
    double even = 0.0, odd = 0.0;
    for (int i = 0; i < n; ++i) {
        const int site = first_site + i;
        const int partner = -site - first_site;  // storage index of -site
        if (partner < 0 || partner >= n) {
            even += profile[i] * profile[i];
            odd += profile[i] * profile[i];
            continue;
        }
        const double s = profile[i] - profile[partner];
        const double a = profile[i] + profile[partner];
        even += 0.25 * s * s;
        odd += 0.25 * a * a;
    }
    if (even < tol * tol) return ZeroModeSymmetry::Symmetric;
    if (odd < tol * tol) return ZeroModeSymmetry::Antisymmetric;
    return ZeroModeSymmetry::Unclassified;
}

std::vector<ZeroMode> zero_modes_by_recursion(const WireParameters& params, double tol) {
    std::vector<ZeroMode> out;
    for (ZeroModeSector sector : {ZeroModeSector::EtaSector, ZeroModeSector::NuSector}) {
        Recursion rec{&params, sector};
        std::vector<Eigen::VectorXd> kept;
        auto consider = [&](Eigen::VectorXd phi) {
            const double norm = phi.norm();
            if (!(norm > 0.0) || !std::isfinite(norm)) return;
            phi /= norm;
            const double residual = apply_kernel_op(rec, phi).norm();
            if (residual > tol) return;
            // orthogonalize against already accepted modes of this sector
            Eigen::VectorXd ortho = phi;
            for (const auto& k : kept) ortho -= k.dot(ortho) * k;
            if (ortho.norm() < 1e-6) return;  // duplicate direction
            kept.push_back(ortho / ortho.norm());
            ZeroMode zm;
            zm.profile = phi;
            zm.sector = sector;
            zm.energy_residual = residual;
            zm.first_site = params.first_site();
            zm.symmetry = classify_symmetry(phi, params.first_site(), 1e-8);
            out.push_back(std::move(zm));
        };
        // Prefer parity-pure combinations when the kernel is degenerate: offer
        // the symmetrized and antisymmetrized projections first, then the raw
        // vector (the orthogonality filter drops whatever is redundant).
        auto reflect = [&](const Eigen::VectorXd& phi) {
            const int n = params.n_sites;
            const int first = params.first_site();
            Eigen::VectorXd r = Eigen::VectorXd::Zero(n);
            for (int i = 0; i < n; ++i) {
                const int partner = -(first + i) - first;  // storage index of -site
                if (partner >= 0 && partner < n) r[partner] = phi[i];
            }
            return r;
        };
        for (auto& phi : kernel_by_recursion(rec)) {
            const Eigen::VectorXd mirrored = reflect(phi);
            consider(phi + mirrored);
            consider(phi - mirrored);
            consider(std::move(phi));
        }
    }
    return out;
}

std::pair<ZeroMode, ZeroMode> analytic_junction_modes(double mu, double t, double upsilon, int n) {
    if (std::abs(mu) >= 1.0) {
        throw std::invalid_argument("analytic_junction_modes: requires |mu| < 1");
    }
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("analytic_junction_modes: N must be even and >= 4");
    }
    const int first = -n / 2;
    auto idx = [&](int site) { return site - first; };

    // Exact kernel solution of the short-junction chain in the Kitaev limit
    // (gamma = 1, bulk hopping 1): geometric tails with ratio -mu/2.
    Eigen::VectorXd zs = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd za = Eigen::VectorXd::Zero(n);

    const double r = -mu / 2.0;
    zs[idx(0)] = 1.0;
    zs[idx(1)] = zs[idx(-1)] = -mu / (2.0 * (t + upsilon));
    const double c2 = -((t - upsilon) / 2.0 - mu * mu / (4.0 * (t + upsilon)));
    double cur = c2;
    for (int site = 2; site <= n / 2 - 1; ++site) {
        zs[idx(site)] = zs[idx(-site)] = cur;
        cur *= r;
    }
    double ca = 1.0;
    for (int site = 1; site <= n / 2 - 1; ++site) {
        za[idx(site)] = ca;
        za[idx(-site)] = -ca;
        ca *= r;
    }
    zs /= zs.norm();
    za /= za.norm();

    JunctionProfile profile;
    profile.kind = JunctionKind::ShortJunction;
    profile.gamma = 1.0;
    profile.tunneling = t;
    profile.upsilon = upsilon;
    const auto m = assemble_m(build_pi_junction(n, profile, mu));

    ZeroMode sym, ant;
    sym.profile = zs;
    sym.sector = ZeroModeSector::EtaSector;
    sym.symmetry = ZeroModeSymmetry::Symmetric;
    sym.energy_residual = (m.m.transpose() * zs).norm();
    sym.first_site = first;
    ant.profile = za;
    ant.sector = ZeroModeSector::EtaSector;
    ant.symmetry = ZeroModeSymmetry::Antisymmetric;
    ant.energy_residual = (m.m.transpose() * za).norm();
    ant.first_site = first;
    return {sym, ant};
}

std::vector<SplittingPoint> edge_splitting_scan(const JunctionProfile& profile, double mu,
                                                const std::vector<int>& n_list) {
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("edge_splitting_scan: N list must be ascending");
        }
    }
    std::vector<SplittingPoint> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        const auto modes = solve_modes(assemble_m(build_pi_junction(n, profile, mu)));
        // Junction profiles carry two sub-gap levels (the pinned junction pair
        // comes first); the edge-attributable splitting is the larger one.
        // A uniform chain has a single sub-gap level.
        const std::size_t edge_index = profile.kind == JunctionKind::UniformKitaev ? 0 : 1;
        out.push_back({n, modes.levels.at(edge_index).lambda});
    }
    return out;
}

DispersionPoint dispersion(double k, double k_so, double delta_abs) {
    const double base = k * k + k_so * k_so;
    const double split = std::sqrt(4.0 * k_so * k_so * k * k + delta_abs * delta_abs);
    return {k, base + split, base - split};
}

}  // namespace pijq
