#include "verify_detail.hpp"

namespace superko::detail {

namespace {

GaussianRational random_scalar(Rng& rng, bool real) {
    return real ? GaussianRational(rng.rational(-3, 3, 3)) : rng.gaussian(3, 3);
}

CG random_element(Rng& rng, unsigned q, bool real) {
    return CG(q, random_scalar(rng, real)) + random_nilpotent(rng, q, 0, real) + random_nilpotent(rng, q, 1, real);
}

// Homogeneous element together with its parity.
std::pair<CG, int> random_homogeneous(Rng& rng, unsigned q, bool real) {
    int parity = rng.coin() ? 1 : 0;
    CG a = random_nilpotent(rng, q, parity, real);
    if (parity == 0) a += CG(q, random_scalar(rng, real));
    return {a, parity};
}

unsigned random_q(Rng& rng) { return static_cast<unsigned>(rng.uniform(1, 6)); }

CG scaled(const CG& a, const Rational& r) { return a * GaussianRational(r); }

}  // namespace

SuiteReport grassmann_suite(const VerifyOptions& o) {
    SuiteReport s{"grassmann", {}};
    s.checks.push_back(run_check("grassmann.supercommutativity", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        bool real = rng.coin();
        auto [a, pa] = random_homogeneous(rng, q, real);
        auto [b, pb] = random_homogeneous(rng, q, real);
        CG ba = b * a;
        return expect(a * b == (pa * pb == 1 ? -ba : ba), "ab != (-1)^{|a||b|} ba");
    }));
    s.checks.push_back(run_check("grassmann.associativity", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        bool real = rng.coin();
        CG a = random_element(rng, q, real), b = random_element(rng, q, real), c = random_element(rng, q, real);
        return expect((a * b) * c == a * (b * c), "(ab)c != a(bc)");
    }));
    s.checks.push_back(run_check("grassmann.nilpotency", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG a = random_nilpotent(rng, q, 0, false) + random_nilpotent(rng, q, 1, false);
        return expect(a.pow(q + 1).is_zero(), "soul^(q+1) != 0");
    }));
    s.checks.push_back(run_check("grassmann.body_homomorphism", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG a = random_element(rng, q, false), b = random_element(rng, q, false);
        if ((a * b).body() != a.body() * b.body()) return Outcome::fail("body(ab) != body(a) body(b)");
        return expect((a + b).body() == a.body() + b.body(), "body is not additive");
    }));
    s.checks.push_back(run_check("grassmann.exp_nilpotent", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG a = random_nilpotent(rng, q, 0, false), b = random_nilpotent(rng, q, 0, false);
        CG ea = exp_nilpotent(a);
        CG series(q, GaussianRational(1));
        Rational fact(1);
        for (unsigned k = 1; k <= q; ++k) {
            fact *= k;
            series += scaled(a.pow(k), Rational(1) / fact);
        }
        if (ea != series) return Outcome::fail("exp differs from the truncated series");
        if (ea.body() != GaussianRational(1)) return Outcome::fail("body(exp a) != 1");
        if (ea * exp_nilpotent(-a) != CG(q, GaussianRational(1))) return Outcome::fail("exp(a) exp(-a) != 1");
        return expect(exp_nilpotent(a + b) == ea * exp_nilpotent(b), "exp(a+b) != exp(a) exp(b)");
    }));
    s.checks.push_back(run_check("grassmann.circle", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CCircle x = random_circle(rng, q), y = random_circle(rng, q), z = random_circle(rng, q);
        if (x + y != y + x) return Outcome::fail("circle addition is not commutative");
        if ((x + y) + z != x + (y + z)) return Outcome::fail("circle addition is not associative");
        return expect((x + y).body() == frac_part(x.body() + y.body()), "body does not wrap modulo 1");
    }));
    s.checks.push_back(run_check("grassmann.examples", 1, o, [](Rng&, std::size_t) {
        auto t = [](unsigned i) { return CG::generator(4, i); };
        CG one(4, GaussianRational(1));
        if (t(0) * t(1) != -(t(1) * t(0))) return Outcome::fail("theta1 theta2 != -theta2 theta1");
        if ((one + t(0) * t(1)) * (one - t(0) * t(1)) != one) return Outcome::fail("(1 + t1t2)(1 - t1t2) != 1");
        if (!((t(0) + t(1)) * (t(0) + t(1))).is_zero()) return Outcome::fail("odd square != 0");
        if ((CG(4, GaussianRational(3)) + t(0) * t(1)).body() != GaussianRational(3) || !is_zero(t(0).body()))
            return Outcome::fail("body examples");
        if (exp_nilpotent(CG(4)) != one || exp_nilpotent(t(0) * t(1)) != one + t(0) * t(1))
            return Outcome::fail("exp examples");
        CG want = one + t(0) * t(1) + t(2) * t(3) + t(0) * t(1) * t(2) * t(3);
        return expect(exp_nilpotent(t(0) * t(1) + t(2) * t(3)) == want, "exp(t1t2 + t3t4)");
    }));
    return s;
}

namespace {

const std::vector<MapKind>& all_kinds() {
    static const std::vector<MapKind> k{MapKind::Id0, MapKind::Gamma, MapKind::Tau, MapKind::TauS, MapKind::Nu, MapKind::Kappa};
    return k;
}

Space kind_domain(MapKind k) {
    switch (k) {
        case MapKind::Id0:
        case MapKind::Gamma: return Space::R01;
        case MapKind::Tau: return Space::R11;
        case MapKind::TauS:
        case MapKind::Nu: return Space::S;
        case MapKind::Kappa: return Space::A;
    }
    return Space::R01;
}

SuperMap random_map_from(Rng& rng, Space from, unsigned q) {
    std::vector<MapKind> fits;
    for (MapKind k : all_kinds())
        if (kind_domain(k) == from) fits.push_back(k);
    return random_super_map(rng, fits[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(fits.size()) - 1))], q);
}

SuperMap random_map(Rng& rng, unsigned q) {
    return random_super_map(rng, all_kinds()[static_cast<std::size_t>(rng.uniform(0, 5))], q);
}

GenericAffineMap generic_tau(const CG& z, const CG& theta) {
    unsigned q = z.q();
    return {z, CG(q, GaussianRational(1)), -theta, theta, CG(q), CG(q, GaussianRational(1))};
}

}  // namespace

SuiteReport superspace_suite(const VerifyOptions& o) {
    SuiteReport s{"superspace", {}};
    s.checks.push_back(run_check("superspace.catalogue_pullback", 300, o, [](Rng& rng, std::size_t) {
        SuperMap m = random_map(rng, random_q(rng));
        return expect(pullback_check(m), "catalogued map fails the pullback check: " + m.describe());
    }));
    s.checks.push_back(run_check("superspace.generic_pullback", 200, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG z = random_positive_even(rng, q), theta = random_odd(rng, q);
        GenericAffineMap g = generic_tau(z, theta);
        bool perturb = rng.coin();
        if (perturb) {
            switch (rng.uniform(0, 2)) {
                case 0: g.a1 += random_nilpotent(rng, q, 0) + CG(q, GaussianRational(rng.uniform(1, 2))); break;
                case 1: g.b1 += random_odd(rng, q); break;
                default: g.a2 += random_odd(rng, q); break;
            }
        }
        bool passes = pullback_check(g);
        bool classifies = true;
        SuperMap m = SuperMap::identity(Space::R11, q);
        try {
            m = g.classify();
        } catch (const std::domain_error&) {
            classifies = false;
        }
        if (passes != classifies) return Outcome::fail("pullback check and classification disagree");
        if (!perturb && !passes) return Outcome::fail("the affine form of tau fails the pullback check");
        if (classifies) {
            SuperPoint p{Space::R11, {random_positive_even(rng, q)}, random_odd(rng, q)};
            if (!same_point(m.apply(p), g.apply(p))) return Outcome::fail("classified map acts differently");
        }
        return Outcome::pass();
    }));
    s.checks.push_back(run_check("superspace.associativity", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        SuperMap a = random_map(rng, q);
        SuperMap b = random_map_from(rng, a.codomain(), q);
        SuperMap c = random_map_from(rng, b.codomain(), q);
        return expect(compose(c, compose(b, a)) == compose(compose(c, b), a), "composition is not associative");
    }));
    s.checks.push_back(run_check("superspace.tau_gamma_law", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG z = random_positive_even(rng, q), t = random_odd(rng, q);
        CG z2 = random_positive_even(rng, q), t2 = random_odd(rng, q);
        SuperMap lhs = compose(SuperMap::tau(z2, t2), SuperMap::gamma(z, t));
        return expect(lhs == SuperMap::gamma(z + z2 - t2 * t, t + t2), "tau gamma != gamma(z + z' - theta theta')");
    }));
    s.checks.push_back(run_check("superspace.reduce_functoriality", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        SuperMap a = random_map(rng, q);
        SuperMap b = random_map_from(rng, a.codomain(), q);
        return expect(reduce(compose(b, a)) == compose(reduce(b), reduce(a)), "reduce is not functorial");
    }));
    s.checks.push_back(run_check("superspace.lift_functoriality", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        SuperMap a = random_map(rng, q);
        SuperMap b = random_map_from(rng, a.codomain(), q);
        if (lift(compose(b, a)) != compose(lift(b), lift(a))) return Outcome::fail("lift is not functorial");
        return expect(reduce(lift(a)) == reduce(a), "lift changes the reduced map");
    }));
    s.checks.push_back(run_check("superspace.eps_conjugation", 200, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        CG z = random_positive_even(rng, q), t = random_odd(rng, q);
        return expect(SuperMap::tau(z, t).eps_conjugate() == SuperMap::tau(z, -t), "eps tau eps != tau(z, -theta)");
    }));
    return s;
}

namespace {

int random_degree(Rng& rng) { return static_cast<int>(rng.uniform(-3, 3)); }

std::vector<CG> random_images(Rng& rng, unsigned q, unsigned q2) {
    std::vector<CG> images;
    for (unsigned i = 0; i < q; ++i) images.push_back(random_odd(rng, q2));
    return images;
}

}  // namespace

SuiteReport bordism_suite(const VerifyOptions& o) {
    SuiteReport s{"bordism", {}};
    s.checks.push_back(run_check("bordism.interval_semigroup", 1000, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        IntervalParams a = make_interval(random_positive_even(rng, q), random_odd(rng, q));
        IntervalParams b = make_interval(random_positive_even(rng, q), random_odd(rng, q));
        IntervalParams c = make_interval(random_positive_even(rng, q), random_odd(rng, q));
        // I_{z',t'} I_{z,t} = I_{z + z' - t t', t + t'}
        IntervalParams law = compose(b, a);
        if (!(law == IntervalParams{a.z + b.z - a.theta * b.theta, a.theta + b.theta}))
            return Outcome::fail("interval composition law");
        return expect(compose(c, compose(b, a)) == compose(compose(c, b), a), "interval composition is not associative");
    }));
    s.checks.push_back(run_check("bordism.seb_semigroup", 1000, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        int n = random_degree(rng);
        SebEndo a = random_seb(rng, n, q), b = random_seb(rng, n, q), c = random_seb(rng, n, q);
        if (seb_compose(a, seb_compose(b, c)) != seb_compose(seb_compose(a, b), c))
            return Outcome::fail("SEB composition is not associative");
        CG z = random_positive_even(rng, q), t = random_odd(rng, q);
        CG z2 = random_positive_even(rng, q), t2 = random_odd(rng, q);
        SebEndo lhs = seb_compose(SebEndo::interval_of(n, z, t), SebEndo::interval_of(n, z2, t2));
        if (lhs != SebEndo::interval_of(n, z + z2 + t * t2, t + t2)) return Outcome::fail("I1 I2 != I(z1 + z2 + t1 t2)");
        SebEndo eps = SebEndo::eps(n);
        if (seb_compose(eps, seb_compose(SebEndo::interval_of(n, z, t), eps)) != SebEndo::interval_of(n, z, -t))
            return Outcome::fail("eps I eps != I(z, -theta)");
        SebEndo c1 = SebEndo::clifford(random_clifford_word(rng, n));
        if (seb_compose(c1, SebEndo::interval_of(n, z, t)) != seb_compose(SebEndo::interval_of(n, z, t), c1))
            return Outcome::fail("Clifford words do not commute with intervals");
        return expect(seb_compose(c1, eps) == seb_compose(eps, SebEndo::clifford(c1.c.eps_star())),
                      "c eps != eps eps*(c)");
    }));
    s.checks.push_back(run_check("bordism.sab_semigroup", 1000, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        int n = random_degree(rng);
        SabEndo a = random_sab(rng, n, q), b = random_sab(rng, n, q), c = random_sab(rng, n, q);
        if (sab_compose(a, sab_compose(b, c)) != sab_compose(sab_compose(a, b), c))
            return Outcome::fail("SAB composition is not associative");
        CCircle x1 = random_circle(rng, q), x2 = random_circle(rng, q);
        CG y1 = random_positive_even(rng, q), y2 = random_positive_even(rng, q);
        CG t1 = random_odd(rng, q), t2 = random_odd(rng, q);
        CG tt = t1 * t2;
        GaussianRational half(Rational(1, 2)), ihalf(Rational(0), Rational(1, 2));
        SabEndo lhs = sab_compose(SabEndo::annulus_of(n, x2, y2, t2), SabEndo::annulus_of(n, x1, y1, t1));
        SabEndo want = SabEndo::annulus_of(n, x1 + x2 + (-(tt * half)), y1 + y2 - tt * ihalf, t1 + t2);
        if (lhs != want) return Outcome::fail("A2 A1 composition law");
        AnnulusParams p1 = make_annulus(x1, y1, t1), p2 = make_annulus(x2, y2, t2);
        AnnulusParams p3 = make_annulus(random_circle(rng, q), random_positive_even(rng, q), random_odd(rng, q));
        return expect(compose(p3, compose(p2, p1)) == compose(compose(p3, p2), p1), "annulus law is not associative");
    }));
    s.checks.push_back(run_check("bordism.compose_identity", 500, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        int n = random_degree(rng);
        SebEndo a = random_seb(rng, n, q);
        SebEndo one = SebEndo::identity(n);
        if (seb_compose(one, a) != a || seb_compose(a, one) != a) return Outcome::fail("SEB identity law");
        if (seb_compose(SebEndo::eps(n), SebEndo::eps(n)) != one) return Outcome::fail("eps^2 != 1 in SEB");
        SabEndo b = random_sab(rng, n, q);
        SabEndo sab_one = SabEndo::identity(n, q);
        if (sab_compose(sab_one, b) != b || sab_compose(b, sab_one) != b) return Outcome::fail("SAB identity law");
        return expect(sab_compose(SabEndo::eps(n, q), SabEndo::eps(n, q)) == sab_one, "eps^2 != 1 in SAB");
    }));
    s.checks.push_back(run_check("bordism.confluence", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng);
        int n = random_degree(rng);
        long len = rng.uniform(1, 8);
        if (rng.coin()) {
            SebWord w;
            SebEndo folded = SebEndo::identity(n);
            for (long i = 0; i < len; ++i) {
                SebLetter l;
                switch (rng.uniform(0, 2)) {
                    case 0: l.kind = SebLetter::Kind::Eps; folded = seb_compose(folded, SebEndo::eps(n)); break;
                    case 1:
                        l.kind = SebLetter::Kind::Cliff;
                        l.c = random_clifford_word(rng, n);
                        folded = seb_compose(folded, SebEndo::clifford(l.c));
                        break;
                    default:
                        l.kind = SebLetter::Kind::Interval;
                        l.interval = make_interval(random_positive_even(rng, q), random_odd(rng, q));
                        folded = seb_compose(folded, SebEndo::interval_of(n, l.interval.z, l.interval.theta));
                }
                w.push_back(l);
            }
            std::mt19937_64 order(rng.next());
            SebEndo left = seb_normalize(w, n);
            if (seb_normalize(w, n, &order) != left) return Outcome::fail("SEB rewriting orders disagree");
            return expect(left == folded, "SEB normal form differs from the composite");
        }
        SabWord w;
        SabEndo folded = SabEndo::identity(n, q);
        for (long i = 0; i < len; ++i) {
            SabLetter l;
            switch (rng.uniform(0, 3)) {
                case 0: l.kind = SabLetter::Kind::Eps; folded = sab_compose(folded, SabEndo::eps(n, q)); break;
                case 1:
                    l.kind = SabLetter::Kind::Cliff;
                    l.c = random_clifford_word(rng, n);
                    folded = sab_compose(folded, SabEndo::clifford(l.c, q));
                    break;
                case 2:
                    l.kind = SabLetter::Kind::Rotation;
                    l.x = random_circle(rng, q);
                    folded = sab_compose(folded, SabEndo::rotation_by(n, l.x));
                    break;
                default:
                    l.kind = SabLetter::Kind::Annulus;
                    l.annulus = make_annulus(random_circle(rng, q), random_positive_even(rng, q), random_odd(rng, q));
                    folded = sab_compose(folded, SabEndo::annulus_of(n, l.annulus.x, l.annulus.y, l.annulus.theta));
            }
            w.push_back(l);
        }
        std::mt19937_64 order(rng.next());
        SabEndo left = sab_normalize(w, n, q);
        if (sab_normalize(w, n, q, &order) != left) return Outcome::fail("SAB rewriting orders disagree");
        return expect(left == folded, "SAB normal form differs from the composite");
    }));
    s.checks.push_back(run_check("bordism.base_change", 300, o, [](Rng& rng, std::size_t) {
        unsigned q = random_q(rng), q2 = random_q(rng);
        int n = random_degree(rng);
        auto images = random_images(rng, q, q2);
        SebEndo a = random_seb(rng, n, q), b = random_seb(rng, n, q);
        if (base_change(seb_compose(a, b), images) != seb_compose(base_change(a, images), base_change(b, images)))
            return Outcome::fail("SEB base change does not commute with composition");
        SabEndo c = random_sab(rng, n, q), d = random_sab(rng, n, q);
        return expect(base_change(sab_compose(c, d), images) == sab_compose(base_change(c, images), base_change(d, images)),
                      "SAB base change does not commute with composition");
    }));
    s.checks.push_back(run_check("bordism.fock", 200, o, [](Rng& rng, std::size_t) {
        using F = FockVacuumModule;
        CliffordWord c1 = random_clifford_word(rng, -1), c2 = random_clifford_word(rng, -1);
        FockVector v = F::act(random_clifford_word(rng, -1), F::vacuum(), CliffordWord::one(-1));
        FockVector w = F::act(random_clifford_word(rng, -1), F::vacuum(), CliffordWord::one(-1));
        if (F::left(c1 * c2, v) != F::left(c1, F::left(c2, v))) return Outcome::fail("left action is not associative");
        if (F::left(c1, F::right(v, c2)) != F::right(F::left(c1, v), c2)) return Outcome::fail("actions do not commute");
        if (F::glue(F::right(v, c1), w) != F::glue(v, F::left(c1, w))) return Outcome::fail("gluing is not balanced");
        if (F::glue(F::left(c1, v), w) != F::left(c1, F::glue(v, w))) return Outcome::fail("gluing is not left linear");
        if (F::glue(F::vacuum(), F::vacuum()) != F::vacuum()) return Outcome::fail("vacuum is not preserved");
        return expect(F::grading(F::left(c1, v)) == F::left(c1.eps_star(), F::grading(v)), "grading is not compatible");
    }));
    return s;
}

}  // namespace superko::detail
