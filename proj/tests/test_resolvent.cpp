#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "lambda_elim/analysis.hpp"
#include "lambda_elim/elim.hpp"
#include "lambda_elim/resolvent.hpp"
#include "test_util.hpp"

using namespace lambda_elim;

namespace {

// H_eff matrix exponential via its eigensystem, as a local oracle.
Eigen::Matrix2cd heff_exponential(const Eigen::Matrix2cd& h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    Eigen::Vector2cd ph;
    for (int k = 0; k < 2; ++k) ph(k) = std::exp(complexd(0.0, -es.eigenvalues()(k) * t));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST_CASE("displacement operator") {
    SUBCASE("no perturbation gives the zero matrix") {
        LambdaParams p;
        p.delta = 0.1;
        p.big_delta = 1.0;
        CHECK(displacement_operator(p, 0.3).norm() <= 1e-16);
    }
    SUBCASE("z = 0 formula at the reference scenario") {
        const auto p = testutil::fig2_params();
        const auto r0 = displacement_operator(p, 0.0);
        CHECK(std::abs(r0(0, 0) - complexd(-0.0025, 0.0)) <= 1e-16);
        CHECK(std::abs(r0(1, 1) - complexd(-0.0025, 0.0)) <= 1e-16);
        // off-diagonal -(1/4) Omega_a* Omega_b / Delta = -0.0025 e^{-i pi/6}
        CHECK(std::abs(r0(0, 1) + 0.0025 * std::polar(1.0, -std::numbers::pi / 6.0)) <= 1e-16);
        CHECK(std::abs(r0(1, 0) - std::conj(r0(0, 1))) <= 1e-16);
    }
    SUBCASE("coupling block is hermitian rank one") {
        std::mt19937 rng(19);
        for (int i = 0; i < 30; ++i) {
            const auto p = testutil::random_params(rng);
            const auto r = displacement_operator(p, -0.2 * p.big_delta);
            CHECK((r - r.adjoint()).norm() <= 1e-15 * std::max(r.norm(), 1.0));
            CHECK(std::abs(r.determinant()) <= 1e-15 * std::max(r.norm(), 1.0));
        }
    }
    SUBCASE("pole at z = Delta") {
        CHECK_THROWS_AS(displacement_operator(testutil::fig2_params(), 1.0),
                        PoleOfDisplacementError);
    }
}

TEST_CASE("projected resolvent") {
    const auto p = testutil::fig2_params();
    SUBCASE("matrix structure") {
        const auto m = projected_resolvent(p);
        for (complexd z : {complexd(0.07, 0.0), complexd(-0.3, 0.2)}) {
            const Eigen::Matrix2cd mz = m(z);
            CHECK(std::abs(mz(0, 0) - (z + 0.05 - 0.0025 / (z - 1.0))) <= 1e-15);
            CHECK(std::abs(mz(1, 1) - (z - 0.05 - 0.0025 / (z - 1.0))) <= 1e-15);
            CHECK(std::abs(mz(0, 1) + 0.25 * std::conj(p.omega_a) * p.omega_b / (z - 1.0)) <= 1e-15);
        }
    }
    SUBCASE("reference energy translates the argument") {
        const auto m = projected_resolvent(p);
        const auto ms = projected_resolvent(p, 0.04);
        CHECK((ms(complexd(0.1, 0.0)) - m(complexd(0.06, 0.0))).norm() <= 1e-15);
    }
    SUBCASE("det M(z) (z - Delta) reproduces the characteristic cubic") {
        std::mt19937 rng(29);
        for (int i = 0; i < 30; ++i) {
            const auto q = testutil::random_params(rng);
            const auto r = reduce(q);
            const auto c = characteristic_cubic(r);
            const auto m = projected_resolvent(q);
            const double dd = q.big_delta;
            for (double x : {-0.37, 0.12, 2.4}) {
                const complexd z = dd * x;
                const complexd lhs = m(z).determinant() * (z - dd);
                const complexd rhs = dd * dd * dd * (((x + c[0]) * x + c[1]) * x + c[2]);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(dd * dd * dd));
            }
        }
    }
    SUBCASE("evaluation at the excited pole is rejected") {
        CHECK_THROWS_AS(projected_resolvent(p)(complexd(1.0, 0.0)), PoleOfDisplacementError);
        CHECK_THROWS_AS(projected_resolvent(p, 0.5)(complexd(1.5, 0.0)), PoleOfDisplacementError);
    }
}

TEST_CASE("resolvent poles") {
    SUBCASE("uncoupled system") {
        LambdaParams p;
        p.big_delta = 2.0;
        const auto z = resolvent_poles(p);
        CHECK(std::abs(z[0]) <= 1e-15);
        CHECK(std::abs(z[1]) <= 1e-15);
        CHECK(z[2] == doctest::Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("match the scaled characteristic roots") {
        const auto p = testutil::fig2_params();
        const auto z = resolvent_poles(p);
        const auto x = characteristic_roots(reduce(p));
        CHECK(std::abs(z[0] - p.big_delta * x.x1) <= 1e-12);
        CHECK(std::abs(z[1] - p.big_delta * x.x2) <= 1e-12);
        CHECK(std::abs(z[2] - p.big_delta * x.x3) <= 1e-12);
    }
    SUBCASE("dark branch has an exact zero pole") {
        auto p = testutil::fig2_params();
        p.delta = 0.0;
        CHECK(std::abs(resolvent_poles(p)[1]) <= 1e-14);
    }
}

TEST_CASE("residues") {
    SUBCASE("sum to the identity at t = 0") {
        std::mt19937 rng(37);
        for (int i = 0; i < 50; ++i) {
            const auto p = testutil::random_params(rng);
            const auto rs = residues(p, 0.0);
            const Eigen::Matrix2cd sum = rs.residues[0] + rs.residues[1] + rs.residues[2];
            CHECK((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
    SUBCASE("excited residue is O(eps^2)") {
        std::vector<double> res;
        for (double s : {2.0, 1.0, 0.5}) {
            const auto rs = residues(testutil::fig2_scaled(s), 0.0);
            res.push_back(rs.residues[2].norm());
        }
        CHECK(res[1] <= 3.0 * 0.05 * 0.05);
        CHECK(ratio_test(res, 2).pass);
    }
    SUBCASE("dark branch: zero-pole residue is exactly the dark projector") {
        LambdaParams p;
        p.big_delta = 1.0;
        p.omega_a = std::polar(0.08, 0.4);
        p.omega_b = std::polar(0.11, -1.1);
        const auto rs = residues(p, 0.0);
        const double n2 = std::norm(p.omega_a) + std::norm(p.omega_b);
        Eigen::Matrix2cd dark;  // |d><d| with |d> = (Omega_b, -Omega_a)/N
        dark << std::norm(p.omega_b), -p.omega_b * std::conj(p.omega_a),
                -p.omega_a * std::conj(p.omega_b), std::norm(p.omega_a);
        dark /= n2;
        CHECK((rs.residues[1] - dark).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("dark branch: lower residue approaches the symmetric bright projector") {
        LambdaParams p;
        p.big_delta = 1.0;
        p.omega_a = 0.1;
        p.omega_b = 0.1;
        const auto rs = residues(p, 0.0);
        Eigen::Matrix2cd bright;
        bright << 0.5, 0.5, 0.5, 0.5;
        const double eps = reduce(p).epsilon;
        CHECK((rs.residues[0] - bright).cwiseAbs().maxCoeff() <= 2.0 * eps * eps);
    }
    SUBCASE("coincident poles are rejected") {
        LambdaParams p;
        p.big_delta = 1.0;
        p.delta = 1e-11;  // above the dark-branch switch, below pole resolution
        p.omega_a = 1e-6;
        p.omega_b = 1e-6;
        CHECK_THROWS_AS(residues(p, 0.0), DegeneratePoleError);
    }
    SUBCASE("continuity across the dark-branch switch") {
        auto pa = testutil::fig2_params();
        pa.delta = 1e-8;  // generic branch
        auto pb = testutil::fig2_params();
        pb.delta = 0.0;  // dark branch
        const auto ra = residues(pa, 3.0);
        const auto rb = residues(pb, 3.0);
        for (int k = 0; k < 3; ++k)
            CHECK((ra.residues[k] - rb.residues[k]).cwiseAbs().maxCoeff() <= 1e-5);
    }
}

TEST_CASE("projected propagator") {
    SUBCASE("identity at t = 0") {
        const auto u = projected_propagator(testutil::fig2_params(), 0.0);
        CHECK((u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("equals the P-block of the exact propagator") {
        const auto p = testutil::fig2_params();
        for (double t : {1.0, 10.0, 50.0, 100.0}) {
            const Eigen::Matrix2cd block = testutil::propagator_oracle(p, t).topLeftCorner<2, 2>();
            CHECK((projected_propagator(p, t) - block).cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
    SUBCASE("free evolution") {
        LambdaParams p;
        p.delta = 0.3;
        p.big_delta = 1.0;
        const double t = 4.0;
        const auto u = projected_propagator(p, t);
        CHECK(std::abs(u(0, 0) - std::exp(complexd(0.0, 0.5 * p.delta * t))) <= 1e-13);
        CHECK(std::abs(u(1, 1) - std::exp(complexd(0.0, -0.5 * p.delta * t))) <= 1e-13);
        CHECK(std::abs(u(0, 1)) <= 1e-13);
    }
}

TEST_CASE("green-function effective Hamiltonian") {
    SUBCASE("E0 = 0 reproduces the rough Ansatz") {
        std::mt19937 rng(43);
        for (int i = 0; i < 50; ++i) {
            const auto p = testutil::random_params(rng);
            const auto hg = green_effective(p, 0.0);
            const auto hr = rough_effective(p);
            CHECK((hg.matrix - hr.matrix).cwiseAbs().maxCoeff() <= 1e-14);
            CHECK(std::abs(hg.raman_coupling - hr.raman_coupling) <= 1e-14);
        }
    }
    SUBCASE("uncoupled limit") {
        LambdaParams p;
        p.delta = 0.2;
        p.big_delta = 1.0;
        const auto h = green_effective(p, 0.13);
        CHECK(std::abs(h.matrix(0, 0) + 0.1) <= 1e-15);
        CHECK(std::abs(h.matrix(1, 1) - 0.1) <= 1e-15);
        CHECK(std::abs(h.matrix(0, 1)) <= 1e-16);
    }
    SUBCASE("E0 at the excited pole is rejected") {
        CHECK_THROWS_AS(green_effective(testutil::fig2_params(), 1.0), PoleOfDisplacementError);
    }
    SUBCASE("reference-energy dependence is within O(eps^2)") {
        std::vector<double> res;
        for (double s : {2.0, 1.0, 0.5}) {
            const auto p = testutil::fig2_scaled(s);
            const double eps = reduce(p).epsilon;
            const double e0 = 0.5 * p.big_delta * eps;
            const double diff =
                (green_effective(p, e0).matrix - green_effective(p, 0.0).matrix).cwiseAbs().maxCoeff();
            CHECK(diff <= std::abs(p.big_delta) * eps * eps);
            res.push_back(diff);
        }
        CHECK(ratio_test(res, 2).pass);
    }
    SUBCASE("translation covariance of the energy origin") {
        // shifting every energy by E0 and evaluating R at E0 is the same as
        // evaluating the unshifted problem at reference energy E0
        const auto p = testutil::fig2_params();
        const double e0 = 0.02;
        LambdaParams shifted = p;
        shifted.big_delta = p.big_delta - e0;
        const auto ha = green_effective(p, e0);
        const auto hb = green_effective(shifted, 0.0);
        CHECK((ha.matrix - hb.matrix).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("regime report") {
        const auto p = testutil::fig2_params();
        CHECK(green_reference_in_regime(p, 0.04));
        CHECK_FALSE(green_reference_in_regime(p, 0.06));
    }
}

TEST_CASE("pole approximation") {
    const auto p = testutil::fig2_params();
    SUBCASE("matrix structure and two roots") {
        const auto m0 = pole_approx_resolvent(p);
        const auto r = m0.roots();
        CHECK(r[0] <= r[1]);
        for (double z : r)
            CHECK(std::abs(m0(complexd(z, 0.0)).determinant()) <= 1e-14);
    }
    SUBCASE("roots are the eigenvalues of the effective Hamiltonian") {
        const auto r = pole_approx_resolvent(p).roots();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rough_effective(p).matrix);
        CHECK(std::abs(r[0] - es.eigenvalues()(0)) <= 1e-13);
        CHECK(std::abs(r[1] - es.eigenvalues()(1)) <= 1e-13);
    }
    SUBCASE("roots track the two small exact poles to O(eps^2)") {
        std::vector<double> res;
        for (double s : {2.0, 1.0, 0.5}) {
            const auto ps = testutil::fig2_scaled(s);
            const double eps = reduce(ps).epsilon;
            const auto r = pole_approx_resolvent(ps).roots();
            const auto z = resolvent_poles(ps);
            const double d = std::max(std::abs(r[0] - z[0]), std::abs(r[1] - z[1]));
            CHECK(d <= std::abs(ps.big_delta) * eps * eps);
            res.push_back(d);
        }
        CHECK(ratio_test(res, 2).pass);
    }
    SUBCASE("kept residues approximate the effective propagator at O(eps^2)") {
        std::vector<double> res;
        for (double s : {1.0, 0.5, 0.25}) {
            const auto ps = testutil::fig2_scaled(s);
            const Eigen::Matrix2cd heff = rough_effective(ps).matrix;
            const auto ts = testutil::time_grid(200.0, 401);
            double worst = 0.0;
            for (double t : ts) {
                const auto rs = residues(ps, t);
                const Eigen::Matrix2cd kept = rs.residues[0] + rs.residues[1];
                worst = std::max(worst, (kept - heff_exponential(heff, t)).norm());
            }
            res.push_back(worst);
        }
        CHECK(ratio_test(res, 2).pass);
    }
}
