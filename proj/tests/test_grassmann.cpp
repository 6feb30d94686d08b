#include "doctest.h"
#include "superko/random.hpp"

using namespace superko;

namespace {

CG t(unsigned i, unsigned q = 4) { return CG::generator(q, i); }
CG scalar(long v, unsigned q = 4) { return CG(q, GaussianRational(v)); }

}  // namespace

TEST_CASE("odd generators anticommute and square to zero") {
    CHECK(t(0) * t(1) == -(t(1) * t(0)));
    CHECK((t(2) * t(2)).is_zero());
    CHECK(((t(0) + t(1)) * (t(0) + t(1))).is_zero());
}

TEST_CASE("even elements are central") {
    CG e = t(0) * t(1) + scalar(3);
    for (unsigned i = 0; i < 4; ++i) CHECK(e * t(i) == t(i) * e);
}

TEST_CASE("units with nilpotent perturbation") {
    CG a = scalar(1) + t(0) * t(1);
    CHECK(a * (scalar(1) - t(0) * t(1)) == scalar(1));
    CHECK((scalar(3) + t(0) * t(1)).body() == GaussianRational(3));
}

TEST_CASE("exponential of nilpotents") {
    CHECK(exp_nilpotent(CG(4)) == scalar(1));
    CHECK(exp_nilpotent(t(0) * t(1)) == scalar(1) + t(0) * t(1));
    CG x = t(0) * t(1) + t(2) * t(3);
    CHECK(exp_nilpotent(x) == scalar(1) + x + t(0) * t(1) * t(2) * t(3));
    CHECK_THROWS_AS(exp_nilpotent(t(0)), std::invalid_argument);
    CHECK_THROWS_AS(exp_nilpotent(scalar(1)), std::invalid_argument);
}

TEST_CASE("algebras of different size do not mix") {
    CHECK_THROWS_AS(t(0, 3) * t(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(CG::generator(3, 3), std::out_of_range);
}

TEST_CASE("substitution is an algebra homomorphism") {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4)), q2 = static_cast<unsigned>(rng.uniform(1, 5));
        std::vector<CG> images;
        for (unsigned i = 0; i < q; ++i) images.push_back(random_odd(rng, q2));
        CG a = random_positive_even(rng, q) + random_odd(rng, q), b = random_positive_even(rng, q) + random_odd(rng, q);
        CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    }
}

TEST_CASE("circle values wrap the body") {
    CCircle x(3, Rational(3, 4)), y(3, Rational(1, 2));
    CHECK((x + y).body() == Rational(1, 4));
    CHECK((x - x).body() == Rational(0));
    CHECK(CCircle(3, Rational(-1, 3)).body() == Rational(2, 3));
    CHECK_THROWS_AS(CCircle(t(0, 3)), std::invalid_argument);
}

TEST_CASE("property: supercommutativity and nilpotency") {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 6));
        CG a = random_odd(rng, q), b = random_odd(rng, q);
        CG e = random_positive_even(rng, q);
        CHECK(a * b == -(b * a));
        CHECK(e * a == a * e);
        CG soul = e.soul() + a;
        CHECK(soul.pow(q + 1).is_zero());
    }
}
