#include "doctest.h"
#include "superko/json_io.hpp"

using namespace superko;

TEST_CASE("scalars") {
    CHECK(to_json(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_json("6/8") == Rational(3, 4));
    CHECK(rational_from_json(5) == Rational(5));
    CHECK_THROWS(rational_from_json("1/0"));
    GaussianRational g(Rational(1, 2), Rational(-2));
    CHECK(gaussian_from_json(to_json(g)) == g);
}

TEST_CASE("Grassmann elements use 1-based generator lists") {
    Json j = Json::parse(R"({"q": 3, "field": "C", "terms": [{"subset": [1, 3], "re": "2", "im": "0"}]})");
    CG a = grassmann_from_json(j);
    CHECK(a == CG::generator(3, 0) * CG::generator(3, 2) * GaussianRational(2));
    Json k = Json::parse(R"({"q": 2, "field": "R", "terms": [{"subset": [2, 1], "re": "1"}]})");
    CHECK(real_grassmann_from_json(k) == RealGrassmann::generator(2, 1) * RealGrassmann::generator(2, 0));
}

TEST_CASE("property: round trips") {
    Rng rng(51);
    for (int k = 0; k < 30; ++k) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4));
        int n = static_cast<int>(rng.uniform(-3, 3));
        CG a = random_positive_even(rng, q) + random_odd(rng, q);
        CHECK(grassmann_from_json(to_json(a)) == a);
        CCircle x = random_circle(rng, q);
        CHECK(circle_from_json(to_json(x)) == x);
        SebEndo e = random_seb(rng, n, q);
        CHECK(seb_from_json(to_json(e)) == e);
        SabEndo s = random_sab(rng, n, q);
        CHECK(sab_from_json(to_json(s)) == s);
        SuperMap m = random_super_map(rng, static_cast<MapKind>(rng.uniform(0, 5)), q);
        CHECK(super_map_from_json(to_json(m)) == m);
        SeftGenerator g = random_seft_generator(rng, n, 8);
        SeftGenerator g2 = seft_generator_from_json(to_json(g));
        CHECK(g2.Q == g.Q);
        CHECK(g2.projector == g.projector);
        AftGenerator h = random_aft_generator(rng, n, 8);
        AftGenerator h2 = aft_generator_from_json(to_json(h));
        CHECK(h2.L == h.L);
        CHECK(h2.G == h.G);
        CHECK(h2.degree == h.degree);
    }
}

TEST_CASE("deformation morphisms round trip") {
    Rng rng(52);
    auto H = real_block_ambient(1, 2);
    auto E = random_spectral(rng, H, false);
    auto m = random_deformation(rng, H, E);
    CHECK(deformation_from_json<Rational>(to_json(m)) == m);
    CHECK(module_from_json<Rational>(to_json(H.module)).gens == H.module.gens);
}

TEST_CASE("invalid inputs are rejected") {
    Json bad_module = Json::parse(R"({"n": 1, "field": "R", "even_dim": 1, "odd_dim": 1,
                                      "generators": [[["1", "0"], ["0", "1"]]]})");
    CHECK_THROWS(module_from_json<Rational>(bad_module));
    Rng rng(53);
    SeftGenerator g = random_seft_generator(rng, 0, 8);
    Json j = to_json(g);
    j["Q"][0][0] = "1";
    CHECK_THROWS(seft_generator_from_json(j));
}
