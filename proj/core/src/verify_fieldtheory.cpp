#include "verify_detail.hpp"

namespace superko::detail {

namespace {

constexpr double kBodyTolerance = 1e-10;

Outcome from_report(const RelationReport& r) {
    Outcome o = Outcome::measured(r.max_body_error, kBodyTolerance);
    if (!r.passed) o = Outcome::fail(r.failure);
    o.error = r.max_body_error;
    return o;
}

Outcome seft_relations(Rng& rng, const SeftGenerator& g) {
    std::vector<XySample> samples;
    for (int j = 0; j < 3; ++j) samples.push_back(random_xy_sample(rng, static_cast<unsigned>(rng.uniform(1, 4))));
    return from_report(verify_xy_relations(g, samples));
}

Outcome aft_relations(Rng& rng, const AftGenerator& g) {
    std::vector<AftSample> samples;
    for (int j = 0; j < 3; ++j) samples.push_back(random_aft_sample(rng, static_cast<unsigned>(rng.uniform(1, 4))));
    return from_report(verify_aft_relations(g, samples));
}

int random_degree(Rng& rng) { return static_cast<int>(rng.uniform(-3, 3)); }

}  // namespace

SuiteReport fieldtheory_suite(const VerifyOptions& o) {
    SuiteReport s{"fieldtheory", {}};
    s.checks.push_back(run_check("fieldtheory.seft_relations", 100, o, [](Rng& rng, std::size_t) {
        SeftGenerator g = random_seft_generator(rng, random_degree(rng), 16);
        if (auto v = g.violation(); !v.empty()) return Outcome::fail("invalid generator: " + v);
        return seft_relations(rng, g);
    }));
    s.checks.push_back(run_check("fieldtheory.aft_relations", 100, o, [](Rng& rng, std::size_t) {
        AftGenerator g = random_aft_generator(rng, random_degree(rng), 16);
        if (auto v = g.violation(); !v.empty()) return Outcome::fail("invalid generator: " + v);
        return aft_relations(rng, g);
    }));
    s.checks.push_back(run_check("fieldtheory.seft_homomorphism", 100, o, [](Rng& rng, std::size_t) {
        int n = random_degree(rng);
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4));
        SeftGenerator g = random_seft_generator(rng, n, 8);
        // real coefficients throughout, since the ambient module is real
        auto endo = [&] {
            unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
            CliffordWord c = CliffordWord::basis(n, static_cast<Subset>(rng.uniform(0, (1L << k) - 1)),
                                                 GaussianRational(rng.rational(1, 3)));
            CG z = random_positive_even(rng, q, true), theta = random_odd(rng, q, true);
            SebEndo e = seb_compose(SebEndo::clifford(c), SebEndo::interval_of(n, z, theta));
            return rng.coin() ? seb_compose(SebEndo::eps(n), e) : e;
        };
        SebEndo a = endo(), b = endo();
        NumericOperator lhs = numeric(g, represent(g, seb_compose(a, b), q));
        NumericOperator rhs = numeric_product(numeric(g, represent(g, a, q)), numeric(g, represent(g, b, q)));
        return Outcome::measured(numeric_distance(lhs, rhs), kBodyTolerance);
    }));
    s.checks.push_back(run_check("fieldtheory.aft_homomorphism", 100, o, [](Rng& rng, std::size_t) {
        int n = random_degree(rng);
        unsigned q = static_cast<unsigned>(rng.uniform(1, 4));
        AftGenerator g = random_aft_generator(rng, n, 8);
        SabEndo a = random_sab(rng, n, q), b = random_sab(rng, n, q);
        return expect(represent(g, sab_compose(a, b)) == represent(g, a) * represent(g, b),
                      "E(ab) != E(a) E(b) on the exact part");
    }));
    s.checks.push_back(run_check("fieldtheory.recover_generator", 50, o, [](Rng& rng, std::size_t) {
        SeftGenerator g = random_seft_generator(rng, random_degree(rng), 16);
        std::vector<SeftSample> samples{seft_sample(g, 0.05), seft_sample(g, 0.1), seft_sample(g, 0.25)};
        SeftGenerator r = recover_generator(g.ambient, samples);
        if (r.projector != g.projector) return Outcome::fail("recovered projector differs");
        return expect(r.Q == g.Q, "recovered generator differs");
    }));
    if (o.input) {
        const Json& in = *o.input;
        std::string kind = in.value("kind", "");
        if (kind == "seft") {
            SeftGenerator g = seft_generator_from_json(in);
            s.checks.push_back(run_check("fieldtheory.input_relations", 100, o,
                                         [&g](Rng& rng, std::size_t) { return seft_relations(rng, g); }));
        } else if (kind == "aft") {
            AftGenerator g = aft_generator_from_json(in);
            s.checks.push_back(run_check("fieldtheory.input_relations", 100, o,
                                         [&g](Rng& rng, std::size_t) { return aft_relations(rng, g); }));
        }
    }
    return s;
}

}  // namespace superko::detail
