#include "doctest.h"
#include "superko/categories.hpp"

using namespace superko;

TEST_CASE("pi0 bijects with the quotient group") {
    for (int n = -2; n <= 2; ++n) {
        CAPTURE(n);
        Pi0Report r = pi0(n, 8);
        CHECK_MESSAGE(r.ok(), r.failure);
        CHECK(r.group.isomorphic(abs_quotient(n)));
    }
}

TEST_CASE("Tate coefficients") {
    TateReport t0 = tate_coefficients(0, -3, 3);
    REQUIRE(t0.ok());
    REQUIRE(t0.coefficients.size() == 7);
    for (const auto& g : t0.coefficients) {
        CHECK(g.rank == 1);
        CHECK(g.torsion.empty());
    }
    TateReport t1 = tate_coefficients(1, -3, 3);
    REQUIRE(t1.ok());
    for (const auto& g : t1.coefficients) {
        CHECK(g.rank == 0);
        CHECK(g.torsion.empty());
    }
    CHECK_THROWS(tate_coefficients(0, 2, 1));
}

TEST_CASE("sequences with terms below k0 are refused") {
    auto H = complex_block_ambient(0, 1, -1, 1);
    RestrictedSequence<GaussianRational> r;
    r.k0 = 0;
    r.terms.emplace(-1, H.degree_space(-1));
    CHECK_FALSE(restricted_violation(H, r).empty());
    CHECK_THROWS_AS(embed_s1(H, r), std::invalid_argument);
    r.k0 = -1;
    CHECK(restricted_violation(H, r).empty());
}

TEST_CASE("property: deformations factor and the N square commutes") {
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
        auto H = real_block_ambient(static_cast<int>(rng.uniform(-2, 2)), 2);
        auto E = random_spectral(rng, H, false);
        REQUIRE(spectral_violation(H.module, E).empty());
        auto m = random_deformation(rng, H, E);
        REQUIRE(deformation_violation(H.module, m).empty());
        auto F = factor(H.module, m);
        CHECK(compose(H.module, F.emerge, compose(H.module, F.rotate, F.shift)) == m);
        auto lhs = compose(H.module, m, natural_n(H.module, E));
        auto rhs = compose(H.module, natural_n(H.module, m.target), embed(H.module, ind(H.module, m)));
        CHECK(lhs.f == rhs.f);
        CHECK(lhs.A == rhs.A);
        CHECK(lhs.alpha == rhs.alpha);
    }
}

TEST_CASE("invalid deformations are reported") {
    Rng rng(32);
    auto H = real_block_ambient(0, 2);
    auto E = random_spectral(rng, H, false);
    auto m = random_deformation(rng, H, E);
    auto broken = m;
    broken.f = QMat(H.dim(), H.dim());
    if (m.source.total(H.dim()).dim() > 0) CHECK_FALSE(deformation_violation(H.module, broken).empty());
    auto wrong = m;
    wrong.A = Subspace<Rational>::whole(H.dim());
    CHECK_FALSE(deformation_violation(H.module, wrong).empty());
}

TEST_CASE("property: Quillen constructions are inverse isomorphisms") {
    Rng rng(33);
    auto H0 = real_block_ambient(0, 2);
    auto H1 = real_block_ambient(1, 2);
    for (int k = 0; k < 30; ++k) {
        auto m0 = random_vn_morphism(rng, H0, random_vn_object(rng, H0));
        CHECK(quillen_g(H0.module, quillen_f(H0.module, m0)) == m0);
        auto w = random_virtual_morphism(rng, H0.module);
        CHECK(quillen_f(H0.module, quillen_g(H0.module, w)) == w);
        auto m1 = random_vn_morphism(rng, H1, random_vn_object(rng, H1));
        CHECK(qvect_g(H1.module, qvect_f(H1.module, m1)) == m1);
        auto q = random_qmorphism(rng, H1);
        CHECK(qvect_f(H1.module, qvect_g(H1.module, q)) == q);
    }
}
