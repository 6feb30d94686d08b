#include "doctest.h"
#include "superko/random.hpp"

using namespace superko;

namespace {

CG one(unsigned q) { return CG(q, GaussianRational(1)); }

}  // namespace

TEST_CASE("domains and codomains of the catalogue") {
    Rng rng(1);
    CHECK(random_super_map(rng, MapKind::Id0, 2).domain() == Space::R01);
    CHECK(random_super_map(rng, MapKind::Gamma, 2).codomain() == Space::R11);
    CHECK(random_super_map(rng, MapKind::Tau, 2).domain() == Space::R11);
    CHECK(random_super_map(rng, MapKind::TauS, 2).codomain() == Space::S);
    CHECK(random_super_map(rng, MapKind::Nu, 2).codomain() == Space::A);
    CHECK(random_super_map(rng, MapKind::Kappa, 2).domain() == Space::A);
}

TEST_CASE("maps that do not preserve the forms are rejected") {
    unsigned q = 2;
    CG z = one(q) + one(q);
    CG theta = CG::generator(q, 0);
    // w -> 2w scales the even form
    GenericAffineMap scale{z, z, -theta, theta, CG(q), one(q)};
    CHECK_FALSE(pullback_check(scale));
    CHECK_THROWS_AS(scale.classify(), std::domain_error);
    // odd shift without the matching even correction
    GenericAffineMap shear{z, one(q), CG(q), theta, CG(q), one(q)};
    CHECK_FALSE(pullback_check(shear));
    // the affine form of tau is accepted, and so is its twisted version
    GenericAffineMap tau{z, one(q), -theta, theta, CG(q), one(q)};
    CHECK(pullback_check(tau));
    CHECK(tau.classify() == SuperMap::tau(z, theta));
    GenericAffineMap twisted{z, one(q), theta, theta, CG(q), -one(q)};
    CHECK(pullback_check(twisted));
}

TEST_CASE("composition rejects mismatched spaces") {
    Rng rng(2);
    SuperMap kappa = random_super_map(rng, MapKind::Kappa, 2);
    SuperMap tau = random_super_map(rng, MapKind::Tau, 2);
    CHECK_THROWS(compose(kappa, tau));
}

TEST_CASE("property: tau and gamma compose as translations") {
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 5));
        CG z = random_positive_even(rng, q), t = random_odd(rng, q);
        CG z2 = random_positive_even(rng, q), t2 = random_odd(rng, q);
        CHECK(compose(SuperMap::tau(z2, t2), SuperMap::tau(z, t)) == SuperMap::tau(z + z2 - t2 * t, t + t2));
        CHECK(compose(SuperMap::tau(z2, t2), SuperMap::gamma(z, t)) == SuperMap::gamma(z + z2 - t2 * t, t + t2));
    }
}

TEST_CASE("property: reduce and lift are functors") {
    Rng rng(4);
    for (int k = 0; k < 200; ++k) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4));
        SuperMap a = random_super_map(rng, MapKind::Tau, q);
        SuperMap b = random_super_map(rng, rng.coin() ? MapKind::Tau : MapKind::Id0, q);
        if (b.domain() != a.codomain()) b = random_super_map(rng, MapKind::Tau, q);
        CHECK(reduce(compose(b, a)) == compose(reduce(b), reduce(a)));
        CHECK(lift(compose(b, a)) == compose(lift(b), lift(a)));
        CHECK(pullback_check(a));
    }
}

TEST_CASE("identity maps") {
    for (Space s : {Space::R01, Space::R11, Space::S, Space::A}) {
        SuperMap id = SuperMap::identity(s, 2);
        CHECK(id.domain() == s);
        CHECK(id.codomain() == s);
        CHECK(pullback_check(id));
        CHECK(compose(id, id) == id);
        CHECK(compose(id.twisted(), id.twisted()) == id);
    }
}
