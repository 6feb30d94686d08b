#include "doctest.h"
#include "oracles.hpp"

using namespace superko;

TEST_CASE("KO coefficients for n = 0..7") {
    const int rank[8] = {1, 0, 0, 0, 1, 0, 0, 0};
    const std::size_t torsion[8] = {1, 2, 2, 1, 1, 1, 1, 1};
    for (int n = 0; n < 8; ++n) {
        CAPTURE(n);
        QuotientGroup g = abs_quotient(n);
        CHECK(g.rank == rank[n]);
        CHECK(oracle::torsion_order(g) == torsion[n]);
        CHECK(g.inverses_verified);
    }
}

TEST_CASE("monoid quotient oracle agrees with the Smith form") {
    for (int n = 0; n < 8; ++n) {
        CAPTURE(n);
        QuotientGroup g = abs_quotient(n);
        oracle::MonoidQuotient b = oracle::brute_force_quotient(n);
        CHECK(b.rank == g.rank);
        CHECK(b.torsion == oracle::torsion_order(g));
    }
}

TEST_CASE("real periodicity 8 and complex periodicity 2") {
    for (int n = -12; n <= 4; ++n) CHECK(abs_quotient(n).isomorphic(abs_quotient(n + 8)));
    for (int n = -6; n <= 6; ++n) CHECK(abs_quotient_complex(n).isomorphic(abs_quotient_complex(n + 2)));
    CHECK(abs_quotient_complex(0).rank == 1);
    CHECK(abs_quotient_complex(1).rank == 0);
    CHECK(abs_quotient_complex(1).torsion.empty());
}

TEST_CASE("irreducible graded modules are valid and classify to themselves") {
    for (int n = -4; n <= 4; ++n) {
        CAPTURE(n);
        auto irr = irreducible_graded_modules(n);
        REQUIRE(static_cast<int>(irr.size()) == class_count(n));
        for (std::size_t c = 0; c < irr.size(); ++c) {
            CHECK(irr[c].violation().empty());
            ModuleClass cls = classify(irr[c]);
            for (std::size_t j = 0; j < cls.mult.size(); ++j) CHECK(cls.mult[j] == (j == c ? 1 : 0));
        }
    }
}

TEST_CASE("Smith form of small integer matrices") {
    auto d = smith_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diag;
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);
    CHECK(abs(d[2]) == 12);
    CHECK(smith_form({{1, 1}}).diag == std::vector<Integer>{1});
}

TEST_CASE("submonoid membership") {
    std::vector<std::vector<long>> cols{{1, 1}, {2, 0}};
    CHECK(in_submonoid({3, 1}, cols));
    CHECK(in_submonoid({0, 0}, cols));
    CHECK_FALSE(in_submonoid({1, 0}, cols));
    CHECK_FALSE(in_submonoid({0, 1}, cols));
}
