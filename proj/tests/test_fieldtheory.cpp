#include "doctest.h"
#include "superko/random.hpp"

using namespace superko;

TEST_CASE("property: interval theories satisfy the X/Y relations") {
    Rng rng(21);
    for (int k = 0; k < 20; ++k) {
        int n = static_cast<int>(rng.uniform(-3, 3));
        SeftGenerator g = random_seft_generator(rng, n, 16);
        CAPTURE(n);
        REQUIRE(g.violation().empty());
        std::vector<XySample> samples{random_xy_sample(rng, 3), random_xy_sample(rng, 2)};
        RelationReport r = verify_xy_relations(g, samples);
        CHECK_MESSAGE(r.passed, r.failure);
        CHECK(r.max_body_error < 1e-10);
    }
}

TEST_CASE("property: annular theories compose and have adjoints") {
    Rng rng(22);
    for (int k = 0; k < 20; ++k) {
        int n = static_cast<int>(rng.uniform(-3, 3));
        AftGenerator g = random_aft_generator(rng, n, 16);
        REQUIRE(g.violation().empty());
        std::vector<AftSample> samples{random_aft_sample(rng, 3), random_aft_sample(rng, 2)};
        RelationReport r = verify_aft_relations(g, samples);
        CHECK_MESSAGE(r.passed, r.failure);
        CHECK(r.max_body_error < 1e-10);
    }
}

TEST_CASE("invalid generators are reported") {
    Rng rng(23);
    SeftGenerator g = random_seft_generator(rng, 1, 8);
    g.Q = g.Q + QMat::identity(g.Q.rows());
    CHECK_FALSE(g.violation().empty());
    CHECK_THROWS_AS(seft_evolution(g, CG(2, GaussianRational(1)), CG(2)), std::invalid_argument);
}

TEST_CASE("generators are recovered from sampled evolutions") {
    Rng rng(24);
    for (int k = 0; k < 10; ++k) {
        SeftGenerator g = random_seft_generator(rng, static_cast<int>(rng.uniform(-2, 2)), 12);
        std::vector<SeftSample> samples{seft_sample(g, 0.05), seft_sample(g, 0.1), seft_sample(g, 0.25)};
        SeftGenerator r = recover_generator(g.ambient, samples);
        CHECK(r.projector == g.projector);
        CHECK(r.Q == g.Q);
    }
}

TEST_CASE("samples that come from no generator are rejected") {
    Rng rng(25);
    SeftGenerator g = random_seft_generator(rng, 0, 8);
    std::vector<SeftSample> samples{seft_sample(g, 0.05), seft_sample(g, 0.1), seft_sample(g, 0.25)};
    samples[1].X = samples[1].X * 1.5;
    CHECK_THROWS_AS(recover_generator(g.ambient, samples), std::domain_error);
}
