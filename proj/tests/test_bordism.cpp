#include <random>

#include "doctest.h"
#include "superko/random.hpp"

using namespace superko;

TEST_CASE("Clifford words") {
    CliffordWord e1 = CliffordWord::generator(2, 0), e2 = CliffordWord::generator(2, 1);
    CHECK(e1 * e1 == CliffordWord::one(2));
    CHECK(e1 * e2 == (e2 * e1) * GaussianRational(-1));
    CliffordWord f = CliffordWord::generator(-1, 0);
    CHECK(f * f == CliffordWord::one(-1) * GaussianRational(-1));
    CHECK(e1.eps_star() == e1 * GaussianRational(-1));
    CHECK((e1 * e2).eps_star() == e1 * e2);
}

TEST_CASE("intervals need positive length") {
    unsigned q = 2;
    CHECK_THROWS(make_interval(CG(q, GaussianRational(-1)), CG(q)));
    CHECK_THROWS(make_interval(CG(q, GaussianRational(1)), CG(q, GaussianRational(1))));
}

TEST_CASE("property: random rewriting orders reach the same normal form") {
    Rng rng(8);
    for (int k = 0; k < 200; ++k) {
        int n = static_cast<int>(rng.uniform(-3, 3));
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4));
        SebEndo a = random_seb(rng, n, q), b = random_seb(rng, n, q), c = random_seb(rng, n, q);
        SebWord w = to_word(a);
        for (const auto& l : to_word(b)) w.push_back(l);
        for (const auto& l : to_word(c)) w.push_back(l);
        std::mt19937_64 e1(rng.next()), e2(rng.next());
        SebEndo want = seb_compose(seb_compose(a, b), c);
        CHECK(seb_normalize(w, n) == want);
        CHECK(seb_normalize(w, n, &e1) == want);
        CHECK(seb_normalize(w, n, &e2) == want);

        SabEndo x = random_sab(rng, n, q), y = random_sab(rng, n, q);
        SabWord v = to_word(x);
        for (const auto& l : to_word(y)) v.push_back(l);
        CHECK(sab_normalize(v, n, q) == sab_compose(x, y));
        CHECK(sab_normalize(v, n, q, &e1) == sab_compose(x, y));
    }
}

TEST_CASE("normal forms are fixed points") {
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        int n = static_cast<int>(rng.uniform(-2, 2));
        SebEndo a = random_seb(rng, n, 3);
        CHECK(seb_normalize(to_word(a), n) == a);
        SabEndo b = random_sab(rng, n, 3);
        CHECK(sab_normalize(to_word(b), n, 3) == b);
    }
}

TEST_CASE("rotations form a circle group") {
    unsigned q = 2;
    CCircle a(q, Rational(3, 4)), b(q, Rational(1, 2));
    SabEndo ra = SabEndo::rotation_by(0, a), rb = SabEndo::rotation_by(0, b);
    CHECK(sab_compose(ra, rb) == SabEndo::rotation_by(0, a + b));
    CHECK(sab_compose(SabEndo::rotation_by(0, CCircle(q, Rational(1))), ra) == ra);
}

TEST_CASE("Fock module gluing") {
    using F = FockVacuumModule;
    CliffordWord lambda = CliffordWord::generator(-1, 0);
    FockVector lo = F::left(lambda, F::vacuum());
    CHECK(lo == FockVector{GaussianRational(0), GaussianRational(1)});
    CHECK(F::left(lambda, lo) == FockVector{GaussianRational(-1), GaussianRational(0)});
    CHECK(F::right(F::vacuum(), lambda) == lo);
    CHECK(F::glue(F::vacuum(), F::vacuum()) == F::vacuum());
    CHECK(F::glue(lo, lo) == FockVector{GaussianRational(-1), GaussianRational(0)});
    CHECK(F::grading(lo) == FockVector{GaussianRational(0), GaussianRational(-1)});
}
