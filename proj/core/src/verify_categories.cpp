#include "verify_detail.hpp"

namespace superko::detail {

namespace {

template <class S>
bool same_data(const DeformationMorphism<S>& a, const DeformationMorphism<S>& b) {
    return a.alpha == b.alpha && a.f == b.f && a.A == b.A;
}

int small_degree(Rng& rng) { return static_cast<int>(rng.uniform(-2, 2)); }

// Known groups KO^{-n}(pt) for n = 0..7: (rank, order of the torsion).
struct KoEntry {
    int rank;
    long torsion;
};
constexpr KoEntry kKoTable[8] = {{1, 1}, {0, 2}, {0, 2}, {0, 1}, {1, 1}, {0, 1}, {0, 1}, {0, 1}};

bool matches(const QuotientGroup& g, KoEntry e) {
    if (g.rank != e.rank) return false;
    if (e.torsion == 1) return g.torsion.empty();
    return g.torsion.size() == 1 && g.torsion[0] == e.torsion;
}

Outcome real_deformation_sample(Rng& rng) {
    int n = small_degree(rng);
    auto H = real_block_ambient(n, 2);
    auto E = random_spectral(rng, H, false);
    if (auto v = spectral_violation(H.module, E); !v.empty()) return Outcome::fail("spectral data: " + v);
    auto m = random_deformation(rng, H, E);
    if (auto v = deformation_violation(H.module, m); !v.empty()) return Outcome::fail("deformation: " + v);
    auto lhs = compose(H.module, m, natural_n(H.module, E));
    auto rhs = compose(H.module, natural_n(H.module, m.target), embed(H.module, ind(H.module, m)));
    if (!same_data(lhs, rhs)) return Outcome::fail("N square does not commute");
    auto V = random_vn_object(rng, H);
    auto vm = random_vn_morphism(rng, H, V);
    if (auto v = vn_violation(H.module, vm); !v.empty()) return Outcome::fail("V_n morphism: " + v);
    if (!(ind(H.module, embed(H.module, vm)) == vm)) return Outcome::fail("ind embed != id on morphisms");
    return expect(ind(H.module, embed<Rational>(V)) == V, "ind embed != id on objects");
}

Outcome annular_deformation_sample(Rng& rng) {
    int n = small_degree(rng);
    auto H = complex_block_ambient(n, 1, -1, 1);
    auto E = random_spectral(rng, H, true);
    if (auto v = spectral_violation(H.module, E); !v.empty()) return Outcome::fail("spectral data: " + v);
    auto m = random_deformation(rng, H, E);
    if (auto v = deformation_violation(H.module, m); !v.empty()) return Outcome::fail("deformation: " + v);
    auto s = ind_s1(H, m);
    auto lhs = compose(H.module, m, natural_n(H.module, E));
    auto rhs = compose(H.module, natural_n(H.module, m.target), embed_s1(H, s));
    if (!same_data(lhs, rhs)) return Outcome::fail("N square does not commute");
    if (!(ind_s1(H, embed_s1(H, s.source)) == s.source)) return Outcome::fail("ind embed != id on sequences");
    return expect(ind_s1(H, embed_s1(H, s)) == s, "ind embed != id on sequence morphisms");
}

}  // namespace

SuiteReport categories_suite(const VerifyOptions& o) {
    SuiteReport s{"categories", {}};
    s.checks.push_back(run_check("ko.table", 8, o, [](Rng&, std::size_t i) {
        int n = static_cast<int>(i);
        return expect(matches(abs_quotient(n), kKoTable[i]), "KO table entry " + std::to_string(n));
    }));
    s.checks.push_back(run_check("ko.real_periodicity", 25, o, [](Rng&, std::size_t i) {
        int n = static_cast<int>(i) - 12;
        QuotientGroup a = abs_quotient(n);
        if (!a.inverses_verified) return Outcome::fail("inverses not verified at " + std::to_string(n));
        return expect(a.isomorphic(abs_quotient(n + 8)), "n and n + 8 differ at " + std::to_string(n));
    }));
    s.checks.push_back(run_check("ko.complex_periodicity", 13, o, [](Rng&, std::size_t i) {
        int n = static_cast<int>(i) - 6;
        return expect(abs_quotient_complex(n).isomorphic(abs_quotient_complex(n + 2)),
                      "n and n + 2 differ at " + std::to_string(n));
    }));
    s.checks.push_back(run_check("ko.modules", 100, o, [](Rng& rng, std::size_t) {
        int n = static_cast<int>(rng.uniform(-4, 4));
        auto irr = irreducible_graded_modules(n);
        const auto& a = irr[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(irr.size()) - 1))];
        const auto& b = irr[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(irr.size()) - 1))];
        if (auto v = a.violation(); !v.empty()) return Outcome::fail("irreducible module: " + v);
        ModuleClass sum = classify(a);
        sum += classify(b);
        if (!(classify(direct_sum(a, b)) == sum)) return Outcome::fail("classes are not additive");
        auto d = decompose(direct_sum(a, parity_reverse(b)));
        ModuleClass want = classify(a);
        want += classify(parity_reverse(b));
        return expect(d.cls == want, "decomposition class differs");
    }));
    s.checks.push_back(run_check("categories.deformations", 200, o,
                                 [](Rng& rng, std::size_t) { return real_deformation_sample(rng); }));
    s.checks.push_back(run_check("categories.annular_deformations", 100, o,
                                 [](Rng& rng, std::size_t) { return annular_deformation_sample(rng); }));
    s.checks.push_back(run_check("categories.composition", 100, o, [](Rng& rng, std::size_t) {
        int n = small_degree(rng);
        auto H = real_block_ambient(n, 2);
        auto E = random_spectral(rng, H, false);
        auto m1 = random_deformation(rng, H, E);
        auto m2 = random_deformation(rng, H, m1.target);
        auto m21 = compose(H.module, m2, m1);
        if (auto v = deformation_violation(H.module, m21); !v.empty()) return Outcome::fail("composite: " + v);
        if (!(compose(H.module, deformation_identity(H.module, m1.target), m1) == m1))
            return Outcome::fail("left identity");
        if (!(compose(H.module, m1, deformation_identity(H.module, E)) == m1)) return Outcome::fail("right identity");
        auto F = factor(H.module, m21);
        for (const auto* p : {&F.shift, &F.rotate, &F.emerge})
            if (auto v = deformation_violation(H.module, *p); !v.empty()) return Outcome::fail("factor: " + v);
        if (!(compose(H.module, F.emerge, compose(H.module, F.rotate, F.shift)) == m21))
            return Outcome::fail("factors do not recompose");
        auto i21 = ind(H.module, m21);
        return expect(i21 == compose(ind(H.module, m2), ind(H.module, m1)), "ind is not a functor");
    }));
    s.checks.push_back(run_check("categories.vn_functor", 100, o, [](Rng& rng, std::size_t) {
        int n = small_degree(rng);
        auto H = real_block_ambient(n, 2);
        auto V = random_vn_object(rng, H);
        auto m1 = random_vn_morphism(rng, H, V);
        auto m2 = random_vn_morphism(rng, H, m1.target);
        auto m21 = compose(m2, m1);
        if (auto v = vn_violation(H.module, m21); !v.empty()) return Outcome::fail("composite: " + v);
        if (!(compose(vn_identity(m1.target), m1) == m1) || !(compose(m1, vn_identity(V)) == m1))
            return Outcome::fail("identity laws");
        auto e = compose(H.module, embed(H.module, m2), embed(H.module, m1));
        return expect(e == embed(H.module, m21), "embed is not a functor");
    }));
    s.checks.push_back(run_check("categories.quillen_v0", 200, o, [](Rng& rng, std::size_t) {
        auto H = real_block_ambient(0, 2);
        auto V = random_vn_object(rng, H);
        auto vm = random_vn_morphism(rng, H, V);
        if (!(quillen_g(H.module, quillen_f(H.module, vm)) == vm)) return Outcome::fail("GF != id");
        auto w = random_virtual_morphism(rng, H.module);
        if (auto v = virtual_violation(H.module, w); !v.empty()) return Outcome::fail("virtual morphism: " + v);
        return expect(quillen_f(H.module, quillen_g(H.module, w)) == w, "FG != id");
    }));
    s.checks.push_back(run_check("categories.quillen_v1", 200, o, [](Rng& rng, std::size_t) {
        auto H = real_block_ambient(1, 2);
        auto V = random_vn_object(rng, H);
        auto vm = random_vn_morphism(rng, H, V);
        if (!(qvect_g(H.module, qvect_f(H.module, vm)) == vm)) return Outcome::fail("GF != id");
        auto q = random_qmorphism(rng, H);
        if (auto v = qmorphism_violation(H.module, q); !v.empty()) return Outcome::fail("Q morphism: " + v);
        return expect(qvect_f(H.module, qvect_g(H.module, q)) == q, "FG != id");
    }));
    s.checks.push_back(run_check("categories.pi0", 5, o, [](Rng&, std::size_t i) {
        Pi0Report r = pi0(static_cast<int>(i) - 2, 8);
        return expect(r.ok(), "pi0 at n = " + std::to_string(r.n) + ": " + r.failure);
    }));
    s.checks.push_back(run_check("categories.tate", 2, o, [](Rng&, std::size_t i) {
        int n = static_cast<int>(i);
        TateReport t = tate_coefficients(n, -3, 3);
        if (!t.ok()) return Outcome::fail("tate report inconsistent");
        for (const auto& g : t.coefficients) {
            bool want = n == 0 ? g.rank == 1 && g.torsion.empty() : g.rank == 0 && g.torsion.empty();
            if (!want) return Outcome::fail("coefficient group " + g.presentation());
        }
        return Outcome::pass();
    }));
    s.checks.push_back(run_check("categories.restricted_product", 50, o, [](Rng& rng, std::size_t) {
        auto H = complex_block_ambient(small_degree(rng), 1, -1, 1);
        RestrictedSequence<GaussianRational> r;
        r.k0 = 0;
        r.terms.emplace(-1, H.degree_space(-1));
        if (restricted_violation(H, r).empty()) return Outcome::fail("violation not reported");
        try {
            embed_s1(H, r);
        } catch (const std::invalid_argument&) {
            return Outcome::pass();
        }
        return Outcome::fail("embedding accepted a sequence below k0");
    }));
    if (o.input && o.input->value("kind", "") == "deformation") {
        const Json& in = *o.input;
        s.checks.push_back(run_check("categories.input_deformation", 1, o, [&in](Rng&, std::size_t) {
            if (in.at("field").get<std::string>() == "C") {
                auto H = module_from_json<GaussianRational>(in.at("ambient"));
                auto m = deformation_from_json<GaussianRational>(in.at("morphism"));
                auto v = deformation_violation(H, m);
                return expect(v.empty(), v);
            }
            auto H = module_from_json<Rational>(in.at("ambient"));
            auto m = deformation_from_json<Rational>(in.at("morphism"));
            auto v = deformation_violation(H, m);
            return expect(v.empty(), v);
        }));
    }
    return s;
}

}  // namespace superko::detail
