#include <cmath>

#include "doctest.h"
#include "tclab/diag.hpp"

using namespace tc;

TEST_CASE("hermitian_eigenvalues") {
    SUBCASE("diagonal input comes back sorted") {
        DenseMatrix m = DenseMatrix::Zero(3, 3);
        m(0, 0) = 3.0;
        m(1, 1) = 1.0;
        m(2, 2) = 2.0;
        const auto ev = hermitian_eigenvalues(m);
        CHECK(ev[0] == doctest::Approx(1.0));
        CHECK(ev[1] == doctest::Approx(2.0));
        CHECK(ev[2] == doctest::Approx(3.0));
    }
    SUBCASE("2x2 closed form") {
        DenseMatrix m(2, 2);
        m << 2.0, 0.1, 0.1, 1.0;
        const auto ev = hermitian_eigenvalues(m);
        CHECK(ev[0] == doctest::Approx(1.5 - std::sqrt(0.26)).epsilon(1e-12));
        CHECK(ev[1] == doctest::Approx(1.5 + std::sqrt(0.26)).epsilon(1e-12));
    }
    SUBCASE("off-diagonal coupling splits symmetrically") {
        DenseMatrix m(2, 2);
        m << 0.0, 0.7, 0.7, 0.0;
        const auto ev = hermitian_eigenvalues(m);
        CHECK(ev[0] == doctest::Approx(-0.7));
        CHECK(ev[1] == doctest::Approx(0.7));
    }
    SUBCASE("non-Hermitian input is rejected") {
        DenseMatrix m(2, 2);
        m << 0.0, 1.0, 0.0, 0.0;
        CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
    }
}

TEST_CASE("matrix_exponential") {
    SUBCASE("exp(0) = I") {
        const auto e = matrix_exponential(DenseMatrix::Zero(4, 4));
        CHECK((e - DenseMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("2x2 rotation") {
        const double theta = 0.8;
        DenseMatrix m(2, 2);
        m << 0.0, -theta / 2, theta / 2, 0.0;
        const auto e = matrix_exponential(m);
        CHECK(e(0, 0).real() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-13));
        CHECK(e(0, 1).real() == doctest::Approx(-std::sin(theta / 2)).epsilon(1e-13));
        CHECK(e(1, 0).real() == doctest::Approx(std::sin(theta / 2)).epsilon(1e-13));
    }
    SUBCASE("exp(M) exp(-M) = I") {
        DenseMatrix m(3, 3);
        m << Complex(0, 0.3), Complex(0.2, 0.1), Complex(0, 0), Complex(-0.2, 0.1),
            Complex(0, -0.4), Complex(0.05, 0), Complex(0, 0), Complex(-0.05, 0),
            Complex(0, 0.1);
        const DenseMatrix prod = matrix_exponential(m) * matrix_exponential((-m).eval());
        CHECK((prod - DenseMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-11);
    }
}

TEST_CASE("block_spectrum") {
    SUBCASE("vacuum block") {
        const auto r = block_spectrum(ModelParams{2.0, 3.0, 4.0, 0.7}, 0, 0);
        REQUIRE(r.eigenvalues.size() == 1);
        CHECK(r.eigenvalues[0] == doctest::Approx(0.0));
    }
    SUBCASE("Block(1,1) closed form") {
        const auto r = block_spectrum(ModelParams{1.0, 1.0, 1.0, 0.1}, 1, 1);
        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(r.eigenvalues[0] == doctest::Approx(1.5 - std::sqrt(0.26)).epsilon(1e-12));
        CHECK(r.eigenvalues[1] == doctest::Approx(1.5 + std::sqrt(0.26)).epsilon(1e-12));
    }
    SUBCASE("g = 0 gives the decoupled ladder") {
        const auto r = block_spectrum(ModelParams{1.0, 2.0, 3.0, 0.0}, 2, 1);
        // states (0,2,1): 7, (1,1,0): 3
        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(r.eigenvalues[0] == doctest::Approx(3.0));
        CHECK(r.eigenvalues[1] == doctest::Approx(7.0));
    }
    SUBCASE("spectrum is invariant under g -> -g") {
        for (auto [qab, qac] : {std::pair{2, 2}, std::pair{3, 4}}) {
            const auto plus = block_spectrum(ModelParams{1.0, 1.3, 0.8, 0.35}, qab, qac);
            const auto minus = block_spectrum(ModelParams{1.0, 1.3, 0.8, -0.35}, qab, qac);
            for (size_t i = 0; i < plus.eigenvalues.size(); ++i)
                CHECK(std::abs(plus.eigenvalues[i] - minus.eigenvalues[i]) <= 1e-12);
        }
    }
}

TEST_CASE("su(1,1) surrogate spectrum") {
    SUBCASE("lambda = 0 is the exact oscillator ladder") {
        const auto r = surrogate_su11_spectrum(2.0, 0.3, Complex(0.0), 2, 60);
        const double k = 1.5;
        for (int n = 0; n < 10; ++n)
            CHECK(r.eigenvalues[n] ==
                  doctest::Approx(2.0 * (k + n) + 0.15 * 2 - 1.0).epsilon(1e-12));
    }
    SUBCASE("low-lying levels match the closed form") {
        const auto r = surrogate_su11_spectrum(2.0, 0.0, Complex(0.5), 0, 80);
        for (int n = 0; n < 10; ++n)
            CHECK(std::abs(r.eigenvalues[n] - (std::sqrt(3.0) * (0.5 + n) - 1.0)) <= 1e-8);
    }
    SUBCASE("Cauchy convergence of the ground level") {
        const auto a = surrogate_su11_spectrum(2.0, 0.0, Complex(0.6), 1, 60);
        const auto b = surrogate_su11_spectrum(2.0, 0.0, Complex(0.6), 1, 80);
        CHECK(std::abs(a.eigenvalues[0] - b.eigenvalues[0]) <= 1e-10);
    }
    SUBCASE("hyperbolic regime is rejected") {
        CHECK_THROWS_AS(surrogate_su11_spectrum(1.0, 0.0, Complex(0.5), 0, 60),
                        std::domain_error);
    }
}

TEST_CASE("su(2) surrogate spectrum") {
    SUBCASE("lambda = 0") {
        const auto r = surrogate_su2_spectrum(1.7, Complex(0.0), 1.5);
        for (int i = 0; i < 4; ++i)
            CHECK(r.eigenvalues[i] == doctest::Approx(1.7 * (-1.5 + i)).epsilon(1e-12));
    }
    SUBCASE("pure coupling, j = 1/2") {
        const auto r = surrogate_su2_spectrum(0.0, Complex(0.3), 0.5);
        CHECK(r.eigenvalues[0] == doctest::Approx(-0.3).epsilon(1e-12));
        CHECK(r.eigenvalues[1] == doctest::Approx(0.3).epsilon(1e-12));
    }
    SUBCASE("d = 3, lambda = 2, j = 1") {
        const auto r = surrogate_su2_spectrum(3.0, Complex(2.0), 1.0);
        CHECK(r.eigenvalues[0] == doctest::Approx(-5.0).epsilon(1e-12));
        CHECK(r.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.eigenvalues[2] == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("complex coupling phases do not move the spectrum") {
        const auto r = surrogate_su2_spectrum(1.0, Complex(0.3, 0.4), 2.0);
        const double gap = std::sqrt(1.0 + 4.0 * 0.25);
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(r.eigenvalues[i] - gap * (-2.0 + i)) <= 1e-12);
    }
}

TEST_CASE("discrepancy table") {
    SUBCASE("g = 0 has zero deviation everywhere") {
        const auto t = discrepancy_table(ModelParams{1.0, 1.0, 1.0, 0.0}, 2, 2, {0.0});
        for (const auto& row : t.rows) CHECK(row.deviation == doctest::Approx(0.0));
    }
    SUBCASE("resonant Block(1,1) reports a nonzero deviation") {
        // exact splitting is +-g around the degenerate pair; the analytic
        // candidates contain a g-independent value
        const auto t = discrepancy_table(ModelParams{2.0, 1.0, 1.0, 0.0}, 1, 1, {0.1});
        double dev11 = -1.0;
        for (const auto& row : t.rows)
            if (row.q_ab == 1 && row.q_ac == 1) dev11 = row.deviation;
        CHECK(dev11 > 1e-3);
    }
    SUBCASE("deviation shrinks with g") {
        const auto t =
            discrepancy_table(ModelParams{1.0, 1.1, 0.9, 0.0}, 2, 2, {0.025, 0.05, 0.1, 0.2});
        double d_small = 0.0, d_large = 0.0;
        for (const auto& row : t.rows) {
            if (row.g == 0.025) d_small = std::max(d_small, row.deviation);
            if (row.g == 0.2) d_large = std::max(d_large, row.deviation);
        }
        CHECK(d_small < d_large);
        CHECK(t.loglog_slope > 0.5);
    }
}
