#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "superko/categories.hpp"
#include "superko/fredholm.hpp"
#include "superko/random.hpp"

using namespace superko;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fixed(double v, int digits = 2) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

Verdict ko_table() {
    const int rank[8] = {1, 0, 0, 0, 1, 0, 0, 0};
    const std::size_t torsion[8] = {1, 2, 2, 1, 1, 1, 1, 1};
    auto t = std::chrono::steady_clock::now();
    for (int n = 0; n < 8; ++n) {
        QuotientGroup g = abs_quotient(n);
        if (g.rank != rank[n] || oracle::torsion_order(g) != torsion[n])
            return fail("Smith form gives " + g.presentation() + " at n = " + std::to_string(n));
        oracle::MonoidQuotient b = oracle::brute_force_quotient(n);
        if (b.rank != rank[n] || b.torsion != torsion[n]) return fail("monoid quotient differs at n = " + std::to_string(n));
    }
    double s = seconds_since(t);
    if (s >= 10) return fail("took " + fixed(s) + " s");
    return {true, "(Z, Z/2, Z/2, 0, Z, 0, 0, 0) by Smith form and monoid quotient in " + fixed(s) + " s"};
}

Verdict periodicity() {
    for (int n = -12; n <= 4; ++n)
        if (!abs_quotient(n).isomorphic(abs_quotient(n + 8))) return fail("real n = " + std::to_string(n));
    for (int n = -6; n <= 6; ++n)
        if (!abs_quotient_complex(n).isomorphic(abs_quotient_complex(n + 2))) return fail("complex n = " + std::to_string(n));
    return {true, "real n ~ n+8 on [-12, 4], complex n ~ n+2 on [-6, 6]"};
}

Verdict semigroups() {
    Rng rng(1003);
    for (int k = 0; k < 1000; ++k) {
        int n = static_cast<int>(rng.uniform(-3, 3));
        unsigned q = static_cast<unsigned>(rng.uniform(1, 6));
        SebEndo a = random_seb(rng, n, q), b = random_seb(rng, n, q), c = random_seb(rng, n, q);
        SebEndo left = seb_compose(seb_compose(a, b), c);
        if (left != seb_compose(a, seb_compose(b, c))) return fail("SEB associativity, triple " + std::to_string(k));
        SebWord w = to_word(a);
        for (const auto* e : {&b, &c})
            for (const auto& l : to_word(*e)) w.push_back(l);
        std::mt19937_64 order(rng.next());
        if (seb_normalize(w, n) != left || seb_normalize(w, n, &order) != left)
            return fail("SEB rewriting, triple " + std::to_string(k));

        SabEndo x = random_sab(rng, n, q), y = random_sab(rng, n, q), z = random_sab(rng, n, q);
        SabEndo sl = sab_compose(sab_compose(x, y), z);
        if (sl != sab_compose(x, sab_compose(y, z))) return fail("SAB associativity, triple " + std::to_string(k));
        SabWord v = to_word(x);
        for (const auto* e : {&y, &z})
            for (const auto& l : to_word(*e)) v.push_back(l);
        if (sab_normalize(v, n, q) != sl || sab_normalize(v, n, q, &order) != sl)
            return fail("SAB rewriting, triple " + std::to_string(k));

        CG z1 = random_positive_even(rng, q), t1 = random_odd(rng, q), z2 = random_positive_even(rng, q), t2 = random_odd(rng, q);
        if (seb_compose(SebEndo::interval_of(n, z1, t1), SebEndo::interval_of(n, z2, t2)) !=
            SebEndo::interval_of(n, z1 + z2 + t1 * t2, t1 + t2))
            return fail("interval law, triple " + std::to_string(k));
        CCircle x1 = random_circle(rng, q), x2 = random_circle(rng, q);
        CG tt = t1 * t2;
        SabEndo a21 = sab_compose(SabEndo::annulus_of(n, x2, z2, t2), SabEndo::annulus_of(n, x1, z1, t1));
        SabEndo want = SabEndo::annulus_of(n, x1 + x2 + (-(tt * GaussianRational(Rational(1, 2)))),
                                           z1 + z2 - tt * GaussianRational(Rational(0), Rational(1, 2)), t1 + t2);
        if (a21 != want) return fail("annulus law, triple " + std::to_string(k));
    }
    return {true, "1000 SEB and 1000 SAB triples: laws, associativity, rewriting confluence"};
}

Verdict field_theories() {
    Rng rng(1004);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        int n = static_cast<int>(rng.uniform(-3, 3));
        SeftGenerator g = random_seft_generator(rng, n, 16);
        if (!g.violation().empty()) return fail("invalid SEFT generator");
        std::vector<XySample> xs{random_xy_sample(rng, 3), random_xy_sample(rng, 4)};
        RelationReport r = verify_xy_relations(g, xs);
        worst = std::max(worst, r.max_body_error);
        if (!r.passed || r.max_body_error >= 1e-10) return fail("SEFT generator " + std::to_string(k) + ": " + r.failure);
        AftGenerator h = random_aft_generator(rng, n, 16);
        if (!h.violation().empty()) return fail("invalid AFT generator");
        std::vector<AftSample> as{random_aft_sample(rng, 3), random_aft_sample(rng, 4)};
        RelationReport ra = verify_aft_relations(h, as);
        worst = std::max(worst, ra.max_body_error);
        if (!ra.passed || ra.max_body_error >= 1e-10) return fail("AFT generator " + std::to_string(k) + ": " + ra.failure);
    }
    std::ostringstream os;
    os << "100 SEFT + 100 AFT generators, exact nilpotent parts, body error " << std::scientific << worst;
    return {true, os.str()};
}

Verdict lift_reduce() {
    Rng rng(1005);
    const MapKind kinds[] = {MapKind::Id0, MapKind::Gamma, MapKind::Tau, MapKind::TauS, MapKind::Nu, MapKind::Kappa};
    int pairs = 0;
    while (pairs < 500) {
        unsigned q = static_cast<unsigned>(rng.uniform(1, 5));
        SuperMap a = random_super_map(rng, kinds[rng.uniform(0, 5)], q);
        SuperMap b = random_super_map(rng, kinds[rng.uniform(0, 5)], q);
        if (b.domain() != a.codomain()) continue;
        if (!(reduce(compose(b, a)) == compose(reduce(b), reduce(a)))) return fail("reduce");
        if (lift(compose(b, a)) != compose(lift(b), lift(a))) return fail("lift");
        ++pairs;
    }
    return {true, "500 composable pairs"};
}

Verdict naturality() {
    Rng rng(1006);
    for (int k = 0; k < 200; ++k) {
        auto H = real_block_ambient(static_cast<int>(rng.uniform(-2, 2)), 2);
        auto E = random_spectral(rng, H, false);
        auto m = random_deformation(rng, H, E);
        if (!deformation_violation(H.module, m).empty()) return fail("invalid SEFT morphism");
        auto lhs = compose(H.module, m, natural_n(H.module, E));
        auto rhs = compose(H.module, natural_n(H.module, m.target), embed(H.module, ind(H.module, m)));
        if (!(lhs.f == rhs.f && lhs.A == rhs.A && lhs.alpha == rhs.alpha)) return fail("SEFT N square");
        auto vm = random_vn_morphism(rng, H, random_vn_object(rng, H));
        if (!(ind(H.module, embed(H.module, vm)) == vm)) return fail("ind embed on V_n");
    }
    for (int k = 0; k < 100; ++k) {
        auto H = complex_block_ambient(static_cast<int>(rng.uniform(-2, 2)), 1, -1, 1);
        auto E = random_spectral(rng, H, true);
        auto m = random_deformation(rng, H, E);
        if (!deformation_violation(H.module, m).empty()) return fail("invalid AFT morphism");
        auto s = ind_s1(H, m);
        auto lhs = compose(H.module, m, natural_n(H.module, E));
        auto rhs = compose(H.module, natural_n(H.module, m.target), embed_s1(H, s));
        if (!(lhs.f == rhs.f && lhs.A == rhs.A && lhs.alpha == rhs.alpha)) return fail("AFT N square");
        if (!(ind_s1(H, embed_s1(H, s)) == s)) return fail("ind embed on sequences");
    }
    return {true, "200 SEFT and 100 AFT morphisms"};
}

Verdict quillen() {
    Rng rng(1007);
    auto H0 = real_block_ambient(0, 2);
    auto H1 = real_block_ambient(1, 2);
    for (int k = 0; k < 200; ++k) {
        auto m0 = random_vn_morphism(rng, H0, random_vn_object(rng, H0));
        if (!(quillen_g(H0.module, quillen_f(H0.module, m0)) == m0)) return fail("V0: GF");
        auto w = random_virtual_morphism(rng, H0.module);
        if (!(quillen_f(H0.module, quillen_g(H0.module, w)) == w)) return fail("V0: FG");
        auto m1 = random_vn_morphism(rng, H1, random_vn_object(rng, H1));
        if (!(qvect_g(H1.module, qvect_f(H1.module, m1)) == m1)) return fail("V1: GF");
        auto qm = random_qmorphism(rng, H1);
        if (!(qvect_f(H1.module, qvect_g(H1.module, qm)) == qm)) return fail("V1: FG");
    }
    return {true, "V0 and V1, 200 morphisms each way"};
}

Verdict components() {
    auto t = std::chrono::steady_clock::now();
    for (int n = -2; n <= 2; ++n) {
        Pi0Report r = pi0(n, 8);
        if (!r.ok()) return fail("n = " + std::to_string(n) + ": " + r.failure);
        if (!r.group.isomorphic(abs_quotient(n))) return fail("group differs at n = " + std::to_string(n));
    }
    double s = seconds_since(t);
    if (s >= 60) return fail("took " + fixed(s) + " s");
    return {true, "n = -2..2 at cap 8 in " + fixed(s) + " s"};
}

Verdict tate() {
    TateReport t0 = tate_coefficients(0, -3, 3);
    if (!t0.ok()) return fail("tate(0) report");
    for (const auto& g : t0.coefficients)
        if (g.rank != 1 || !g.torsion.empty()) return fail("tate(0) has " + g.presentation());
    TateReport t1 = tate_coefficients(1, -3, 3);
    if (!t1.ok()) return fail("tate(1) report");
    for (const auto& g : t1.coefficients)
        if (g.rank != 0 || !g.torsion.empty()) return fail("tate(1) has " + g.presentation());
    auto H = complex_block_ambient(0, 1, -1, 1);
    RestrictedSequence<GaussianRational> r;
    r.k0 = 0;
    r.terms.emplace(-1, H.degree_space(-1));
    try {
        embed_s1(H, r);
        return fail("sequence below k0 accepted");
    } catch (const std::invalid_argument&) {
    }
    return {true, "Z in degrees -3..3 for n = 0, trivial for n = 1, restricted product enforced"};
}

Verdict continuity() {
    auto t = std::chrono::steady_clock::now();
    Rng rng(1010);
    std::vector<GradedCliffordModule> parts;
    for (int c = 0; c < 10; ++c)
        for (const auto& g : irreducible_graded_modules(0)) parts.push_back(g);
    GradedCliffordModule H = assemble_sum(parts).module;
    auto basis = odd_operator_basis(H);
    auto window = [&] {
        for (;;) {
            Eigen::MatrixXd A = random_odd_operator(rng, basis);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
            Eigen::VectorXd ev = es.eigenvalues();
            double cut = rng.real(0.1, 0.8) * operator_norm(A);
            for (Eigen::Index i = 0; i < ev.size(); ++i)
                if (std::abs(ev(i)) < cut) ev(i) = 0;
            try {
                return make_window(H, es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose());
            } catch (const std::invalid_argument&) {
            }
        }
    };
    auto direction = [&] {
        Eigen::MatrixXd X = random_odd_operator(rng, basis);
        return Eigen::MatrixXd(X / operator_norm(X));
    };
    int edge = 0;
    for (int k = 0; k < 500; ++k) {
        SpectralWindow w = window();
        double eps = rng.real(0.01, 0.99), a = rng.real(0, 0.9);
        Eigen::MatrixXd F1 = w.base + a * w.c * direction();
        Eigen::MatrixXd F = F1 + std::min(eps, 1 - a) * w.c * rng.real(0.01, 0.99) * direction();
        try {
            if (!projection_continuity_check(w, F1, F, eps)) return fail("pair " + std::to_string(k));
        } catch (const std::domain_error&) {
            ++edge;
        }
    }
    for (int k = 0; k < 50; ++k) {
        SpectralWindow w = window();
        Eigen::MatrixXd X = direction(), Y = direction();
        long rank = std::lround(spectral_projection(w, w.base).trace());
        for (int i = 0; i <= 20; ++i) {
            double s = i / 20.0;
            Eigen::MatrixXd F = w.base + 0.9 * w.c * (s * X + s * (1 - s) * Y) / 1.25;
            if (std::lround(spectral_projection(w, F).trace()) != rank) return fail("rank jump on path " + std::to_string(k));
        }
    }
    double s = seconds_since(t);
    if (s >= 30) return fail("took " + fixed(s) + " s");
    return {true, "500 pairs on 20x20 (" + std::to_string(edge) + " at the window edge), 50 paths, " + fixed(s) + " s"};
}

Verdict determinism() {
    auto once = [] {
        const char* argv[] = {"superko", "verify", "all", "--seed", "42"};
        std::ostringstream out, err;
        int code = cli::run(5, argv, out, err);
        return std::make_pair(code, out.str());
    };
    auto a = once(), b = once();
    if (a.first != 0) return fail("verify all exited with " + std::to_string(a.first));
    if (a.second != b.second) return fail("reports differ");
    return {true, "verify all --seed 42 twice: " + std::to_string(a.second.size()) + " identical bytes"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"ko-table", ko_table},          {"periodicity", periodicity},   {"bordism-semigroups", semigroups},
        {"field-theory-relations", field_theories}, {"lift-reduce", lift_reduce}, {"ind-embed-naturality", naturality},
        {"quillen", quillen},            {"pi0", components},            {"tate", tate},
        {"fredholm-continuity", continuity}, {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = fail(std::string("exception: ") + e.what());
        }
        failed += v.ok ? 0 : 1;
        std::cout << (v.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
