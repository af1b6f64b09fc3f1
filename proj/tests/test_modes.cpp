#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pijq/modes.hpp"
#include "pijq/wire.hpp"

using namespace pijq;

namespace {

JunctionProfile short_profile(double gamma, double t, double upsilon) {
    JunctionProfile p;
    p.kind = JunctionKind::ShortJunction;
    p.gamma = gamma;
    p.tunneling = t;
    p.upsilon = upsilon;
    return p;
}

}  // namespace

TEST_CASE("perfectly dimerized Kitaev chain: one zero level, remainder at 2") {
    // With t = gamma = 1 and mu = 0 the matrix is twice a pure shift:
    // N - 1 singular values at 2 and a single exact zero, i.e. one
    // unpaired Majorana per chain end (two zero modes in the doubled
    // Nambu spectrum).
    auto modes = solve_modes(assemble_m(build_uniform_kitaev(8, 1.0, 1.0, 0.0)));
    REQUIRE(modes.levels.size() == 8);
    CHECK(modes.zero_level_count(kZeroTolerance) == 1);
    CHECK(modes.zero_mode_count(kZeroTolerance) == 2);
    for (std::size_t k = 1; k < 8; ++k) {
        CHECK(modes.levels[k].lambda == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("uniform topological chain: edge level near zero, bulk gapped") {
    // mu = 0, gamma > 0 is deep in the topological phase: the lowest level
    // is an exponentially split edge pair, the rest sit at the band scale.
    auto modes = solve_modes(assemble_m(build_uniform_kitaev(40, 1.0, 0.5, 0.0)));
    CHECK(modes.levels.front().lambda < 1e-8);
    // bulk gap ~ 2 gamma
    CHECK(modes.levels[1].lambda > 0.5);
    CHECK(modes.levels[1].lambda < 2.0 * 0.5 * 1.1);
}

TEST_CASE("short junction carries exactly 4 zero Nambu levels, mu-independent") {
    for (double mu : {-0.5, -0.2, 0.0, 0.2, 0.5}) {
        auto modes = solve_modes(assemble_m(build_pi_junction(40, short_profile(1.0, 0.5, 0.2), mu)));
        CHECK(modes.zero_mode_count(kZeroTolerance) == 4);
        // everything else sits at band scale
        CHECK(modes.levels[2].lambda > 0.1);
    }
}

TEST_CASE("singular pairs satisfy M^t phi = Lambda xi and M xi = Lambda phi") {
    auto m = assemble_m(build_pi_junction(20, short_profile(1.0, 0.5, 0.2), 0.3));
    auto modes = solve_modes(m);
    for (const auto& lv : modes.levels) {
        if (lv.lambda < kZeroTolerance) continue;
        CHECK((m.m.transpose() * lv.phi - lv.lambda * lv.xi).norm() < 1e-10);
        CHECK((m.m * lv.xi - lv.lambda * lv.phi).norm() < 1e-10);
    }
}

TEST_CASE("completeness: sum of |phi><phi| is the identity") {
    auto modes = solve_modes(assemble_m(build_pi_junction(16, short_profile(1.0, 0.5, 0.2), 0.2)));
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(16, 16);
    for (const auto& lv : modes.levels) acc += lv.phi * lv.phi.transpose();
    CHECK((acc - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("five-term recursion holds for every interior site") {
    const int n = 14;
    auto w = build_pi_junction(n, short_profile(1.0, 0.5, 0.2), 0.3);
    auto m = assemble_m(w);
    auto modes = solve_modes(m);
    const double mu = w.mu;
    auto alpha = [&](int bn) { return w.bond_at(bn).alpha; };
    auto beta = [&](int bn) { return w.bond_at(bn).beta; };
    const int first = w.first_site();
    for (const auto& lv : modes.levels) {
        const auto& v = lv.xi;   // kernel-sector vectors of M (the recursion's sector)
        for (int i = 2; i < n - 2; ++i) {
            const int s = first + i;
            const double lhs = alpha(s) * beta(s + 1) * v[i + 2] +
                               mu * (alpha(s) + beta(s)) * v[i + 1] +
                               (alpha(s) * alpha(s) + beta(s - 1) * beta(s - 1) + mu * mu) * v[i] +
                               mu * (alpha(s - 1) + beta(s - 1)) * v[i - 1] +
                               beta(s - 1) * alpha(s - 2) * v[i - 2];
            CHECK(lhs == doctest::Approx(lv.lambda * lv.lambda * v[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("Kitaev-limit recursion: edge mode on a single boundary component") {
    auto w = build_uniform_kitaev(12, 1.0, 1.0, 0.0);
    auto zm = zero_modes_by_recursion(w);
    REQUIRE(!zm.empty());
    bool found_single_site_edge = false;
    for (const auto& m : zm) {
        int support = 0;
        for (int i = 0; i < m.profile.size(); ++i) {
            if (std::abs(m.profile[i]) > 1e-12) ++support;
        }
        if (support == 1) found_single_site_edge = true;
    }
    CHECK(found_single_site_edge);
}

TEST_CASE("mu = 0 short junction: antisymmetric mode supported only on n = +-1") {
    auto w = build_pi_junction(12, short_profile(1.0, 0.5, 0.2), 0.0);
    auto zm = zero_modes_by_recursion(w);
    bool found = false;
    for (const auto& m : zm) {
        if (m.symmetry != ZeroModeSymmetry::Antisymmetric) continue;
        const int first = m.first_site;
        bool only_pm1 = true;
        for (int i = 0; i < m.profile.size(); ++i) {
            const int site = first + i;
            if (std::abs(site) != 1 && std::abs(m.profile[i]) > 1e-12) only_pm1 = false;
        }
        if (only_pm1) found = true;
    }
    CHECK(found);
}

TEST_CASE("mu = 0.3 junction tail ratio is -mu/2") {
    const double mu = 0.3;
    auto w = build_pi_junction(40, short_profile(1.0, 0.5, 0.2), mu);
    auto zm = zero_modes_by_recursion(w);
    bool checked = false;
    for (const auto& m : zm) {
        if (m.symmetry != ZeroModeSymmetry::Antisymmetric) continue;
        const int first = m.first_site;
        // geometric envelope on the right tail
        for (int site = 2; site <= 8; ++site) {
            const double a = m.profile[site - first];
            const double b = m.profile[site - 1 - first];
            REQUIRE(std::abs(b) > 0.0);
            CHECK(a / b == doctest::Approx(-mu / 2.0).epsilon(1e-8));
        }
        checked = true;
    }
    CHECK(checked);
}

TEST_CASE("recursion and SVD span the same zero subspace") {
    // |mu| kept modest so the finite-size kernel residuals sit well below
    // the zero tolerance for both methods.
    for (double mu : {0.0, 0.2, -0.2}) {
        auto w = build_pi_junction(30, short_profile(1.0, 0.5, 0.2), mu);
        auto zm = zero_modes_by_recursion(w);
        auto modes = solve_modes(assemble_m(w));

        // SVD basis for each sector: eta = phi (ker M^t), nu = xi (ker M)
        for (ZeroModeSector sector : {ZeroModeSector::EtaSector, ZeroModeSector::NuSector}) {
            std::vector<Eigen::VectorXd> rec_basis, svd_basis;
            for (const auto& m : zm) {
                if (m.sector == sector) rec_basis.push_back(m.profile);
            }
            for (const auto& lv : modes.levels) {
                if (lv.lambda < kZeroTolerance) {
                    svd_basis.push_back(sector == ZeroModeSector::EtaSector ? lv.phi : lv.xi);
                }
            }
            REQUIRE(rec_basis.size() == svd_basis.size());
            REQUIRE(!rec_basis.empty());
            Eigen::MatrixXd a(w.n_sites, rec_basis.size());
            Eigen::MatrixXd b(w.n_sites, svd_basis.size());
            for (std::size_t i = 0; i < rec_basis.size(); ++i) a.col(i) = rec_basis[i];
            for (std::size_t i = 0; i < svd_basis.size(); ++i) b.col(i) = svd_basis[i];
            Eigen::MatrixXd qa = Eigen::HouseholderQR<Eigen::MatrixXd>(a)
                                     .householderQ() * Eigen::MatrixXd::Identity(w.n_sites, a.cols());
            Eigen::MatrixXd qb = Eigen::HouseholderQR<Eigen::MatrixXd>(b)
                                     .householderQ() * Eigen::MatrixXd::Identity(w.n_sites, b.cols());
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb);
            // principal angles: acos of singular values
            for (int k = 0; k < svd.singularValues().size(); ++k) {
                const double c = std::min(1.0, svd.singularValues()[k]);
                CHECK(std::acos(c) < 1e-6);
            }
        }
    }
}

TEST_CASE("analytic junction modes: mu = 0 support structure") {
    auto [zs, za] = analytic_junction_modes(0.0, 0.5, 0.2, 12);
    const int first = zs.first_site;
    for (int i = 0; i < zs.profile.size(); ++i) {
        const int site = first + i;
        if (site == 0 || std::abs(site) == 2) {
            CHECK(std::abs(zs.profile[i]) > 1e-12);
        } else {
            CHECK(std::abs(zs.profile[i]) < 1e-14);
        }
        if (std::abs(site) == 1) {
            CHECK(std::abs(za.profile[i]) > 1e-12);
        } else {
            CHECK(std::abs(za.profile[i]) < 1e-14);
        }
    }
}

TEST_CASE("analytic junction modes have exact +-parity and small residuals") {
    auto [zs, za] = analytic_junction_modes(0.2, 0.5, 0.2, 60);
    CHECK(zs.symmetry == ZeroModeSymmetry::Symmetric);
    CHECK(za.symmetry == ZeroModeSymmetry::Antisymmetric);
    CHECK(classify_symmetry(zs.profile, zs.first_site, 1e-10) == ZeroModeSymmetry::Symmetric);
    CHECK(classify_symmetry(za.profile, za.first_site, 1e-10) == ZeroModeSymmetry::Antisymmetric);
    CHECK(zs.energy_residual < 1e-10);
    CHECK(za.energy_residual < 1e-10);
    CHECK_THROWS_AS(analytic_junction_modes(1.0, 0.5, 0.2, 20), std::invalid_argument);
}

TEST_CASE("analytic vs numeric overlap exceeds 0.999 at mu = 0.2, N = 60") {
    const int n = 60;
    auto [zs, za] = analytic_junction_modes(0.2, 0.5, 0.2, n);
    auto modes = solve_modes(assemble_m(build_pi_junction(n, short_profile(1.0, 0.5, 0.2), 0.2)));
    // junction modes live in ker M^t (phi side); project analytic forms
    std::vector<Eigen::VectorXd> kernel;
    for (const auto& lv : modes.levels) {
        if (lv.lambda < kZeroTolerance) kernel.push_back(lv.phi);
    }
    REQUIRE(kernel.size() == 2);
    for (const auto* mode : {&zs, &za}) {
        double proj = 0.0;
        for (const auto& k : kernel) {
            const double c = k.dot(mode->profile);
            proj += c * c;
        }
        CHECK(std::sqrt(proj) > 0.999);
    }
}

TEST_CASE("edge splitting: exact zero in the Kitaev limit") {
    JunctionProfile uniform;
    uniform.kind = JunctionKind::UniformKitaev;
    uniform.gamma = 1.0;
    uniform.tunneling = 1.0;
    auto scan = edge_splitting_scan(uniform, 0.0, {8, 12, 16});
    for (const auto& pt : scan) CHECK(pt.min_edge_lambda < 1e-14);
}

TEST_CASE("edge splitting decays log-linearly away from the Kitaev limit") {
    auto scan = edge_splitting_scan(short_profile(0.5, 0.3, 0.2), 0.4, {20, 30, 40, 60});
    REQUIRE(scan.size() == 4);
    std::vector<double> logs;
    for (const auto& pt : scan) {
        REQUIRE(pt.min_edge_lambda > 0.0);
        logs.push_back(std::log(pt.min_edge_lambda));
    }
    for (std::size_t i = 1; i < logs.size(); ++i) CHECK(logs[i] < logs[i - 1]);
    // slope of log splitting vs N is negative
    const double slope = (logs.back() - logs.front()) / (60.0 - 20.0);
    CHECK(slope < -0.01);

    auto single = edge_splitting_scan(short_profile(0.5, 0.3, 0.2), 0.4, {20});
    CHECK(single.size() == 1);
    CHECK_THROWS_AS(edge_splitting_scan(short_profile(0.5, 0.3, 0.2), 0.4, {30, 20}),
                    std::invalid_argument);
}

TEST_CASE("dispersion branches") {
    auto p0 = dispersion(0.0, 1.0, 0.3);
    CHECK(p0.e_plus == doctest::Approx(1.3));
    CHECK(p0.e_minus == doctest::Approx(0.7));
    CHECK(p0.e_plus - p0.e_minus == doctest::Approx(2.0 * 0.3));

    for (double k : {-2.0, -0.7, 0.0, 0.4, 1.3}) {
        auto p = dispersion(k, 0.8, 0.0);
        CHECK(p.e_plus == doctest::Approx((std::abs(k) + 0.8) * (std::abs(k) + 0.8)));
        CHECK(p.e_minus == doctest::Approx((std::abs(k) - 0.8) * (std::abs(k) - 0.8)));
        auto pm = dispersion(-k, 0.8, 0.25);
        auto pp = dispersion(k, 0.8, 0.25);
        CHECK(pm.e_plus == doctest::Approx(pp.e_plus));
        CHECK(pm.e_minus == doctest::Approx(pp.e_minus));
        CHECK(pp.e_plus >= pp.e_minus);
    }
}
