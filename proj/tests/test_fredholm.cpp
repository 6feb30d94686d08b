#include "doctest.h"
#include "superko/fredholm.hpp"

using namespace superko;

namespace {

GradedCliffordModule balanced(int m) {
    auto irr = irreducible_graded_modules(m);
    return assemble_sum(std::vector<GradedCliffordModule>{irr[0], parity_reverse(irr[0])}).module;
}

}  // namespace

TEST_CASE("window radius is a quarter of the smallest positive eigenvalue") {
    GradedCliffordModule H = balanced(0);
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(2, 2);
    F(0, 1) = F(1, 0) = 2.0;
    SpectralWindow w = make_window(H, F);
    CHECK(w.c == doctest::Approx(0.5));
    CHECK(spectral_projection(w, F).norm() == doctest::Approx(0.0));
    CHECK_THROWS_AS(make_window(H, Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
    Eigen::MatrixXd even = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(make_window(H, even), std::invalid_argument);
    CHECK_THROWS_AS(spectral_projection(w, F * 3.0), std::invalid_argument);
    CHECK_THROWS_AS(projection_continuity_check(w, F, F, 1.5), std::invalid_argument);
}

TEST_CASE("membership in the finite stand-in") {
    auto irr = irreducible_graded_modules(-1);
    AssembledSum<Rational> sum = assemble_sum(std::vector<GradedCliffordModule>{irr[0], irr[0]});
    Eigen::MatrixXd e1 = to_real_matrix(sum.module.gens[0]);
    CHECK_FALSE(fredn_membership(sum.module, 2.0 * e1));
    Eigen::MatrixXd d = Eigen::MatrixXd::Identity(e1.rows(), e1.cols());
    for (std::size_t j : sum.indices[1]) d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = -1;
    CHECK(fredn_membership(sum.module, 2.0 * e1 * d));
    GradedCliffordModule H0 = balanced(0);
    CHECK(fredn_membership(H0, Eigen::MatrixXd::Zero(2, 2)));
}

TEST_CASE("block transform lands in degree 4k + l and inverts") {
    Rng rng(41);
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        GradedCliffordModule H = balanced(-n);
        auto basis = odd_operator_basis(H);
        Eigen::MatrixXd F = random_odd_operator(rng, basis);
        BlockTransform t = block_transform(H, F);
        CHECK(t.module.n == 4 * t.k + t.l);
        CHECK(4 * t.k - t.l == n);
        CHECK(t.module.violation().empty());
        CHECK(odd_operator_violation(t.module, t.F).empty());
        CHECK((block_transform_inverse(t, H.dim()) - F).norm() < 1e-12);
        CHECK(fredn_membership(H, F) == fredn_membership(t.module, t.F));
    }
}

TEST_CASE("property: projections vary continuously") {
    Rng rng(42);
    std::vector<GradedCliffordModule> parts;
    for (int c = 0; c < 10; ++c)
        for (const auto& g : irreducible_graded_modules(0)) parts.push_back(g);
    GradedCliffordModule H = assemble_sum(parts).module;
    REQUIRE(H.dim() == 20);
    auto basis = odd_operator_basis(H);
    int checked = 0;
    while (checked < 50) {
        Eigen::MatrixXd A = random_odd_operator(rng, basis);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
        Eigen::VectorXd ev = es.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i)
            if (std::abs(ev(i)) < 0.3) ev(i) = 0;
        Eigen::MatrixXd F0 = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
        SpectralWindow w;
        try {
            w = make_window(H, F0);
        } catch (const std::invalid_argument&) {
            continue;
        }
        Eigen::MatrixXd X = random_odd_operator(rng, basis);
        X /= operator_norm(X);
        double eps = rng.real(0.05, 0.95);
        Eigen::MatrixXd F = F0 + 0.9 * eps * w.c * X;
        CHECK(projection_continuity_check(w, F0, F, eps));
        CHECK(operator_norm(spectral_projection(w, F) - spectral_projection(w, F0)) <= eps);
        ++checked;
    }
}
