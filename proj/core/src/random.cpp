#include "superko/random.hpp"

#include <stdexcept>

namespace superko {

Rational Rng::rational(long lo, long hi, long max_den) {
    Rational r(uniform(lo, hi), uniform(1, max_den));
    r.canonicalize();
    return r;
}

GaussianRational Rng::gaussian(long bound, long max_den) {
    return GaussianRational(rational(-bound, bound, max_den), rational(-bound, bound, max_den));
}

CG random_nilpotent(Rng& rng, unsigned q, int parity, bool real) {
    CG g(q);
    if (q == 0) return g;
    int terms = static_cast<int>(rng.uniform(0, 3));
    Subset full = (Subset(1) << q) - 1;
    for (int t = 0; t < terms; ++t) {
        Subset s = static_cast<Subset>(rng.uniform(1, full));
        if (subset_parity(s) != parity) continue;
        g += CG::monomial(q, s, real ? GaussianRational(rng.rational(-2, 2, 2)) : rng.gaussian());
    }
    return g;
}

CG random_odd(Rng& rng, unsigned q, bool real) { return random_nilpotent(rng, q, 1, real); }

CG random_positive_even(Rng& rng, unsigned q, bool real) {
    return CG(q, GaussianRational(rng.rational(1, 8, 4))) + random_nilpotent(rng, q, 0, real);
}

CCircle random_circle(Rng& rng, unsigned q, bool real) {
    return CCircle(CG(q, GaussianRational(rng.rational(-4, 4, 4))) + random_nilpotent(rng, q, 0, real));
}

CliffordWord random_clifford_word(Rng& rng, int n) {
    unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
    CliffordWord c(n);
    int terms = static_cast<int>(rng.uniform(1, 2));
    for (int t = 0; t < terms; ++t) {
        Subset s = static_cast<Subset>(rng.uniform(0, (1L << k) - 1));
        GaussianRational coeff = rng.gaussian();
        if (is_zero(coeff)) coeff = GaussianRational(1);
        c += CliffordWord::basis(n, s, coeff);
    }
    if (c.is_zero()) c = CliffordWord::one(n);
    return c;
}

SebEndo random_seb(Rng& rng, int n, unsigned q) {
    SebEndo e = SebEndo::identity(n);
    e.twist = rng.coin();
    e.c = random_clifford_word(rng, n);
    if (rng.uniform(0, 3) != 0) e.interval = make_interval(random_positive_even(rng, q), random_odd(rng, q));
    return e;
}

SabEndo random_sab(Rng& rng, int n, unsigned q) {
    SabEndo e = SabEndo::identity(n, q);
    e.twist = rng.coin();
    e.c = random_clifford_word(rng, n);
    if (rng.coin())
        e.annulus = make_annulus(random_circle(rng, q), random_positive_even(rng, q), random_odd(rng, q));
    else
        e.rotation = random_circle(rng, q);
    return e;
}

SuperMap random_super_map(Rng& rng, MapKind kind, unsigned q) {
    SuperMap m = SuperMap::identity(Space::R01, q);
    switch (kind) {
        case MapKind::Id0:
            break;
        case MapKind::Gamma:
            m = SuperMap::gamma(random_positive_even(rng, q), random_odd(rng, q));
            break;
        case MapKind::Tau:
            m = SuperMap::tau(random_positive_even(rng, q), random_odd(rng, q));
            break;
        case MapKind::TauS:
            m = SuperMap::tau_s(random_circle(rng, q));
            break;
        case MapKind::Nu:
            m = SuperMap::nu(random_circle(rng, q), random_positive_even(rng, q), random_odd(rng, q));
            break;
        case MapKind::Kappa:
            m = SuperMap::kappa(random_circle(rng, q), random_positive_even(rng, q), random_odd(rng, q));
            break;
    }
    return rng.coin() ? m.twisted() : m;
}

namespace {

template <class S>
struct RandomAmbient {
    AssembledSum<S> sum;
    std::vector<bool> chosen;  // summands in the support
};

template <class S>
RandomAmbient<S> random_ambient(Rng& rng, const std::vector<GradedModule<S>>& irreducibles, std::size_t max_dim) {
    std::vector<GradedModule<S>> pool;
    for (const auto& m : irreducibles) {
        pool.push_back(m);
        pool.push_back(parity_reverse(m));
    }
    std::vector<GradedModule<S>> parts;
    std::size_t dim = 0;
    int want = static_cast<int>(rng.uniform(1, 4));
    for (int attempt = 0; attempt < 4 * want && static_cast<int>(parts.size()) < want; ++attempt) {
        const auto& m = pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)];
        if (dim + m.dim() > max_dim) continue;
        parts.push_back(m);
        dim += m.dim();
    }
    if (parts.empty()) throw std::invalid_argument("dimension cap below the smallest irreducible");
    RandomAmbient<S> out;
    out.sum = assemble_sum(parts);
    out.chosen.resize(parts.size());
    bool any = false;
    for (std::size_t i = 0; i < parts.size(); ++i) any |= (out.chosen[i] = rng.uniform(0, 3) != 0);
    if (!any) out.chosen[0] = true;
    return out;
}

// Random odd, self-adjoint, Clifford-linear operator supported on the given
// coordinate subspace.
template <class S>
Mat<S> random_odd_operator(Rng& rng, const GradedModule<S>& m, const std::vector<bool>& support) {
    std::size_t d = m.dim();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (support[i] && support[j] && (i < m.even_dim) != (j < m.even_dim)) slots.emplace_back(i, j);
    Mat<S> x(d, d);
    if (slots.empty()) return x;
    std::size_t eqs = m.gens.size() * d * d;
    Mat<S> system(eqs, slots.size());
    for (std::size_t u = 0; u < slots.size(); ++u) {
        Mat<S> unit(d, d);
        unit(slots[u].first, slots[u].second) = S(1);
        for (std::size_t g = 0; g < m.gens.size(); ++g) {
            Mat<S> comm = m.gens[g] * unit - unit * m.gens[g];
            for (std::size_t k = 0; k < d * d; ++k) system(g * d * d + k, u) = comm(k / d, k % d);
        }
    }
    Mat<S> null = nullspace(system);
    for (std::size_t c = 0; c < null.cols(); ++c) {
        long w = rng.uniform(-2, 2);
        if (w == 0) continue;
        for (std::size_t u = 0; u < slots.size(); ++u) x(slots[u].first, slots[u].second) += null(u, c) * S(Rational(w));
    }
    return x + x.adjoint();
}

template <class S>
std::vector<bool> support_mask(const RandomAmbient<S>& a) {
    std::vector<bool> mask(a.sum.module.dim(), false);
    for (std::size_t p = 0; p < a.chosen.size(); ++p)
        if (a.chosen[p])
            for (std::size_t i : a.sum.indices[p]) mask[i] = true;
    return mask;
}

}  // namespace

SeftGenerator random_seft_generator(Rng& rng, int n, std::size_t max_dim) {
    auto amb = random_ambient(rng, irreducible_graded_modules(-n), max_dim);
    auto mask = support_mask(amb);
    SeftGenerator g;
    g.ambient = amb.sum.module;
    std::size_t d = g.ambient.dim();
    g.projector = QMat(d, d);
    for (std::size_t i = 0; i < d; ++i)
        if (mask[i]) g.projector(i, i) = Rational(1);
    g.Q = random_odd_operator(rng, g.ambient, mask);
    return g;
}

AftGenerator random_aft_generator(Rng& rng, int n, std::size_t max_dim, int max_k) {
    auto irr = irreducible_graded_modules_complex(-n);
    int blocks = static_cast<int>(rng.uniform(1, 2));
    std::vector<ComplexGradedCliffordModule> parts;
    std::vector<int> ks;
    std::vector<CMat> gs;
    std::size_t used = 0;
    for (int b = 0; b < blocks && used < max_dim; ++b) {
        auto amb = random_ambient(rng, irr, max_dim - used);
        std::vector<bool> all(amb.sum.module.dim(), true);
        gs.push_back(random_odd_operator(rng, amb.sum.module, all));
        parts.push_back(amb.sum.module);
        ks.push_back(static_cast<int>(rng.uniform(0, max_k)));
        used += amb.sum.module.dim();
    }
    auto sum = assemble_sum(parts);
    AftGenerator g;
    g.ambient = sum.module;
    std::size_t d = g.ambient.dim();
    g.degree.assign(d, 0);
    g.G = CMat(d, d);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& idx = sum.indices[p];
        for (std::size_t i = 0; i < idx.size(); ++i) {
            g.degree[idx[i]] = ks[p];
            for (std::size_t j = 0; j < idx.size(); ++j) g.G(idx[i], idx[j]) = gs[p](i, j);
        }
    }
    g.L = g.G * g.G;
    for (std::size_t i = 0; i < d; ++i) g.L(i, i) += GaussianRational(g.degree[i]);
    return g;
}

XySample random_xy_sample(Rng& rng, unsigned q) {
    return {random_positive_even(rng, q), random_odd(rng, q), random_positive_even(rng, q), random_odd(rng, q)};
}

AftSample random_aft_sample(Rng& rng, unsigned q) {
    AftSample s;
    s.x = random_circle(rng, q, true);
    s.y = random_positive_even(rng, q, true);
    s.theta = random_odd(rng, q, true);
    s.x2 = random_circle(rng, q, true);
    s.y2 = random_positive_even(rng, q, true);
    s.theta2 = random_odd(rng, q, true);
    return s;
}

}  // namespace superko
