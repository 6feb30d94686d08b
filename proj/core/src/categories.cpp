#include "superko/categories.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superko {

std::string Label::str() const {
    std::string s = to_string(lambda);
    return k == 0 ? s : "(" + s + ", " + std::to_string(k) + ")";
}

namespace {

template <class S>
Subspace<S> zero_subspace(std::size_t d) {
    return Subspace<S>(d);
}

template <class S>
bool clifford_invariant(const GradedModule<S>& H, const Subspace<S>& V) {
    for (const auto& g : H.gens)
        if (!V.invariant_under(g)) return false;
    return true;
}

template <class S>
bool isometric_on(const Mat<S>& f, const Subspace<S>& V) {
    const Mat<S>& b = V.basis();
    Mat<S> fb = f * b;
    return fb.adjoint() * fb == b.adjoint() * b;
}

// f is even and Clifford-linear on V.
template <class S>
bool even_linear_on(const GradedModule<S>& H, const Mat<S>& f, const Subspace<S>& V) {
    const Mat<S>& b = V.basis();
    Mat<S> eps = H.grading();
    if (f * eps * b != eps * f * b) return false;
    for (const auto& g : H.gens)
        if (f * g * b != g * f * b) return false;
    return true;
}

template <class S>
Subspace<S> sum_of(std::size_t d, const std::vector<Subspace<S>>& parts) {
    Subspace<S> s(d);
    for (const auto& p : parts) s = s + p;
    return s;
}

std::vector<std::size_t> local_reversal(std::size_t even, std::size_t odd) {
    std::vector<std::size_t> idx(even + odd);
    for (std::size_t j = 0; j < even; ++j) idx[j] = odd + j;
    for (std::size_t j = 0; j < odd; ++j) idx[even + j] = j;
    return idx;
}

template <class S>
Mat<S> rotation(std::size_t d, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, const Rational& t) {
    Rational den = 1 + t * t;
    Rational c = (1 - t * t) / den, s = 2 * t / den;
    Mat<S> r = Mat<S>::identity(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r(a[i], a[i]) = S(c);
        r(a[i], b[i]) = S(Rational(-s));
        r(b[i], a[i]) = S(s);
        r(b[i], b[i]) = S(c);
    }
    return r;
}

}  // namespace

// --- block ambients ---------------------------------------------------------

template <class S>
Subspace<S> BlockAmbient<S>::block_span(const std::vector<std::size_t>& which) const {
    std::size_t cols = 0;
    for (std::size_t b : which) cols += blocks[b].idx.size();
    Mat<S> m(dim(), cols);
    std::size_t c = 0;
    for (std::size_t b : which)
        for (std::size_t i : blocks[b].idx) m(i, c++) = S(1);
    return Subspace<S>::span(m);
}

template <class S>
Subspace<S> BlockAmbient<S>::diagonal(std::size_t a, std::size_t b) const {
    const Block& x = blocks[a];
    const Block& y = blocks[b];
    if (x.reversed || !y.reversed || x.type != y.type || x.k != y.k)
        throw std::invalid_argument("diagonal needs a block and a reversed block of one type and degree");
    const auto& irr = irreducibles[x.type];
    auto rev = local_reversal(irr.even_dim, irr.odd_dim);
    Mat<S> m(dim(), x.idx.size());
    for (std::size_t j = 0; j < x.idx.size(); ++j) {
        m(x.idx[j], j) = S(1);
        m(y.idx[rev[j]], j) = S(1);
    }
    return Subspace<S>::span(m);
}

template <class S>
Subspace<S> BlockAmbient<S>::degree_space(int k) const {
    std::vector<std::size_t> which;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].k == k) which.push_back(b);
    return block_span(which);
}

namespace {

template <class S>
BlockAmbient<S> build_ambient(const std::vector<GradedModule<S>>& irr, std::size_t copies, int k_min, int k_max) {
    BlockAmbient<S> H;
    H.irreducibles = irr;
    std::vector<GradedModule<S>> parts;
    for (int k = k_min; k <= k_max; ++k)
        for (std::size_t t = 0; t < irr.size(); ++t)
            for (int rev = 0; rev < 2; ++rev)
                for (std::size_t c = 0; c < copies; ++c) {
                    parts.push_back(rev ? parity_reverse(irr[t]) : irr[t]);
                    typename BlockAmbient<S>::Block b;
                    b.type = t;
                    b.reversed = rev != 0;
                    b.k = k;
                    H.blocks.push_back(b);
                }
    auto sum = assemble_sum(parts);
    H.module = sum.module;
    for (std::size_t b = 0; b < H.blocks.size(); ++b) H.blocks[b].idx = sum.indices[b];
    return H;
}

}  // namespace

BlockAmbient<Rational> real_block_ambient(int n, std::size_t copies) {
    return build_ambient(irreducible_graded_modules(-n), copies, 0, 0);
}

BlockAmbient<GaussianRational> complex_block_ambient(int n, std::size_t copies, int k_min, int k_max) {
    if (k_min > k_max) throw std::invalid_argument("empty degree window");
    return build_ambient(irreducible_graded_modules_complex(-n), copies, k_min, k_max);
}

// --- V_n --------------------------------------------------------------------

template <class S>
std::string vn_object_violation(const GradedModule<S>& H, const Subspace<S>& V) {
    if (V.ambient() != H.dim()) return "subspace lives in a different ambient";
    if (!V.invariant_under(H.grading())) return "subspace is not graded";
    if (!clifford_invariant(H, V)) return "subspace is not a Clifford submodule";
    return {};
}

template <class S>
std::string vn_violation(const GradedModule<S>& H, const VnMorphism<S>& m) {
    if (auto v = vn_object_violation(H, m.source); !v.empty()) return "source: " + v;
    if (auto v = vn_object_violation(H, m.target); !v.empty()) return "target: " + v;
    if (m.f != m.f * m.source.projector()) return "f is not supported on the source";
    if (!m.target.contains(m.f * m.source.basis())) return "f does not land in the target";
    if (!isometric_on(m.f, m.source)) return "f is not isometric";
    if (!even_linear_on(H, m.f, m.source)) return "f is not even and Clifford-linear";
    if (!m.target.contains(m.A)) return "A is not inside the target";
    if (!clifford_invariant(H, m.A)) return "A is not a Clifford submodule";
    if (!m.A.orthogonal_to(m.A.image(H.grading()))) return "A is not orthogonal to eps A";
    if (!m.A.orthogonal_to(m.source.image(m.f))) return "A is not orthogonal to f(V)";
    if (m.source.dim() + 2 * m.A.dim() != m.target.dim()) return "target is not f(V) + A + eps A";
    return {};
}

template <class S>
VnMorphism<S> vn_identity(const Subspace<S>& V) {
    return {V, V, V.projector(), zero_subspace<S>(V.ambient())};
}

template <class S>
VnMorphism<S> compose(const VnMorphism<S>& m2, const VnMorphism<S>& m1) {
    if (m1.target != m2.source) throw std::invalid_argument("morphisms are not composable");
    return {m1.source, m2.target, m2.f * m1.f, m1.A.image(m2.f) + m2.A};
}

// --- spectral data ------------------------------------------------------------

template <class S>
Subspace<S> SpectralData<S>::total(std::size_t ambient) const {
    Subspace<S> t(ambient);
    for (const auto& [l, v] : spaces) t = t + v;
    return t;
}

template <class S>
Subspace<S> SpectralData<S>::zero_space(std::size_t ambient, int k) const {
    auto it = spaces.find(Label{Rational(0), k});
    return it == spaces.end() ? Subspace<S>(ambient) : it->second;
}

template <class S>
Mat<S> SpectralData<S>::generator(std::size_t ambient) const {
    Mat<S> q(ambient, ambient);
    for (const auto& [l, v] : spaces)
        if (sgn(l.lambda) != 0) q += v.projector() * S(l.lambda);
    return q;
}

template <class S>
std::string spectral_violation(const GradedModule<S>& H, const SpectralData<S>& E) {
    Mat<S> eps = H.grading();
    for (const auto& [l, v] : E.spaces) {
        if (v.ambient() != H.dim()) return "eigenspace " + l.str() + " lives in a different ambient";
        if (v.dim() == 0) return "eigenspace " + l.str() + " is zero";
        if (!clifford_invariant(H, v)) return "eigenspace " + l.str() + " is not a Clifford submodule";
        auto mirror = E.spaces.find(l.negated());
        if (mirror == E.spaces.end() || v.image(eps) != mirror->second)
            return "eps does not map eigenspace " + l.str() + " onto its mirror";
        if (sgn(l.lambda) == 0 && E.k0 && l.k < *E.k0) return "zero eigenspace below k0";
    }
    for (auto a = E.spaces.begin(); a != E.spaces.end(); ++a)
        for (auto b = std::next(a); b != E.spaces.end(); ++b)
            if (!a->second.orthogonal_to(b->second))
                return "eigenspaces " + a->first.str() + " and " + b->first.str() + " are not orthogonal";
    return {};
}

template <class S>
std::string deformation_violation(const GradedModule<S>& H, const DeformationMorphism<S>& m) {
    if (auto v = spectral_violation(H, m.source); !v.empty()) return "source: " + v;
    if (auto v = spectral_violation(H, m.target); !v.empty()) return "target: " + v;
    std::size_t d = H.dim();
    if (m.alpha.size() != m.source.spaces.size()) return "alpha is not defined on the whole spectrum";
    for (const auto& [l, v] : m.source.spaces) {
        auto it = m.alpha.find(l);
        if (it == m.alpha.end()) return "alpha is not defined on " + l.str();
        const Label& to = it->second;
        if (!m.target.spaces.count(to)) return "alpha(" + l.str() + ") is not in the target spectrum";
        if (to.k != l.k) return "alpha changes the degree k";
        auto neg = m.alpha.find(l.negated());
        if (neg == m.alpha.end() || neg->second != to.negated()) return "alpha is not odd";
        if (!m.target.spaces.at(to).contains(m.f * v.basis())) return "f does not map " + l.str() + " into alpha of it";
        if (!isometric_on(m.f, v)) return "f is not isometric on " + l.str();
    }
    for (auto a = m.alpha.begin(); a != m.alpha.end(); ++a) {
        auto b = std::next(a);
        if (b != m.alpha.end() && b->first.k == a->first.k && b->second.lambda < a->second.lambda)
            return "alpha is not order preserving";
    }
    Subspace<S> src = m.source.total(d), tgt = m.target.total(d);
    if (m.f != m.f * src.projector()) return "f is not supported on the source";
    if (!even_linear_on(H, m.f, src)) return "f is not even and Clifford-linear";
    Subspace<S> image = src.image(m.f);
    if (image.dim() != src.dim()) return "f is not injective";
    std::vector<Subspace<S>> nonneg;
    for (const auto& [l, v] : m.target.spaces)
        if (sgn(l.lambda) >= 0) nonneg.push_back(v);
    if (!sum_of(d, nonneg).contains(m.A)) return "target generator is not nonnegative on A";
    if (!clifford_invariant(H, m.A)) return "A is not a Clifford submodule";
    if (!m.A.orthogonal_to(m.A.image(H.grading()))) return "A is not orthogonal to eps A";
    if (!m.A.orthogonal_to(image)) return "A is not orthogonal to the image of f";
    if (image.dim() + 2 * m.A.dim() != tgt.dim()) return "target is not f(V) + A + eps A";
    return {};
}

template <class S>
DeformationMorphism<S> deformation_identity(const GradedModule<S>& H, const SpectralData<S>& E) {
    DeformationMorphism<S> m;
    m.source = m.target = E;
    for (const auto& [l, v] : E.spaces) m.alpha[l] = l;
    m.f = E.total(H.dim()).projector();
    m.A = zero_subspace<S>(H.dim());
    return m;
}

template <class S>
DeformationMorphism<S> compose(const GradedModule<S>& H, const DeformationMorphism<S>& m2,
                               const DeformationMorphism<S>& m1) {
    if (!(m1.target == m2.source)) throw std::invalid_argument("deformations are not composable");
    DeformationMorphism<S> m;
    m.source = m1.source;
    m.target = m2.target;
    for (const auto& [l, to] : m1.alpha) m.alpha[l] = m2.alpha.at(to);
    m.f = m2.f * m1.f;
    m.A = m1.A.image(m2.f) + m2.A;
    if (auto v = deformation_violation(H, m); !v.empty()) throw std::logic_error("invalid composite: " + v);
    return m;
}

template <class S>
Factorization<S> factor(const GradedModule<S>& H, const DeformationMorphism<S>& m) {
    std::size_t d = H.dim();
    Factorization<S> out;
    SpectralData<S> shifted;
    shifted.k0 = m.source.k0;
    for (const auto& [l, v] : m.source.spaces) {
        auto [it, fresh] = shifted.spaces.try_emplace(m.alpha.at(l), v);
        if (!fresh) it->second = it->second + v;
    }
    Mat<S> p = m.source.total(d).projector();
    out.shift = {m.source, shifted, m.alpha, p, zero_subspace<S>(d)};

    SpectralData<S> rotated;
    rotated.k0 = m.source.k0;
    std::map<Label, Label> id;
    for (const auto& [l, v] : shifted.spaces) {
        rotated.spaces.emplace(l, v.image(m.f));
        id[l] = l;
    }
    out.rotate = {shifted, rotated, id, m.f, zero_subspace<S>(d)};
    out.emerge = {rotated, m.target, id, rotated.total(d).projector(), m.A};
    return out;
}

// --- ind, embed, N -------------------------------------------------------------

template <class S>
Subspace<S> ind(const GradedModule<S>& H, const SpectralData<S>& E, int k) {
    return E.zero_space(H.dim(), k);
}

template <class S>
VnMorphism<S> ind(const GradedModule<S>& H, const DeformationMorphism<S>& m, int k) {
    std::size_t d = H.dim();
    VnMorphism<S> r;
    r.source = ind(H, m.source, k);
    r.target = ind(H, m.target, k);
    r.f = m.f * r.source.projector();
    Subspace<S> collapsing(d);
    for (const auto& [l, v] : m.source.spaces)
        if (l.k == k && sgn(l.lambda) > 0 && sgn(m.alpha.at(l).lambda) == 0) collapsing = collapsing + v;
    r.A = collapsing.image(m.f) + m.A.intersect(r.target);
    return r;
}

template <class S>
SpectralData<S> embed(const Subspace<S>& V, int k) {
    SpectralData<S> E;
    if (V.dim() > 0) E.spaces.emplace(Label{Rational(0), k}, V);
    return E;
}

template <class S>
DeformationMorphism<S> embed(const GradedModule<S>& H, const VnMorphism<S>& m, int k) {
    (void)H;
    DeformationMorphism<S> r;
    r.source = embed(m.source, k);
    r.target = embed(m.target, k);
    if (m.source.dim() > 0) r.alpha[Label{Rational(0), k}] = Label{Rational(0), k};
    r.f = m.f;
    r.A = m.A;
    return r;
}

template <class S>
DeformationMorphism<S> natural_n(const GradedModule<S>& H, const SpectralData<S>& E) {
    std::size_t d = H.dim();
    DeformationMorphism<S> r;
    r.source.k0 = E.k0;
    r.target = E;
    Subspace<S> zero(d), positive(d);
    for (const auto& [l, v] : E.spaces) {
        if (sgn(l.lambda) == 0) {
            r.source.spaces.emplace(l, v);
            r.alpha[l] = l;
            zero = zero + v;
        } else if (sgn(l.lambda) > 0) {
            positive = positive + v;
        }
    }
    r.f = zero.projector();
    r.A = positive;
    return r;
}

template <class S>
std::string restricted_violation(const BlockAmbient<S>& H, const RestrictedSequence<S>& s) {
    for (const auto& [k, v] : s.terms) {
        if (v.dim() == 0) continue;
        if (k < s.k0) return "non-zero term in degree " + std::to_string(k) + " below k0 = " + std::to_string(s.k0);
        if (!H.degree_space(k).contains(v)) return "term " + std::to_string(k) + " is not inside H_k";
        if (auto e = vn_object_violation(H.module, v); !e.empty()) return "term " + std::to_string(k) + ": " + e;
    }
    return {};
}

namespace {

template <class S>
std::set<int> degrees_of(const BlockAmbient<S>& H) {
    std::set<int> ks;
    for (const auto& b : H.blocks) ks.insert(b.k);
    return ks;
}

}  // namespace

template <class S>
RestrictedSequence<S> ind_s1(const BlockAmbient<S>& H, const SpectralData<S>& E) {
    RestrictedSequence<S> s;
    auto ks = degrees_of(H);
    s.k0 = E.k0.value_or(*ks.begin());
    for (int k : ks) s.terms.emplace(k, ind(H.module, E, k));
    return s;
}

template <class S>
SequenceMorphism<S> ind_s1(const BlockAmbient<S>& H, const DeformationMorphism<S>& m) {
    SequenceMorphism<S> r;
    r.source = ind_s1(H, m.source);
    r.target = ind_s1(H, m.target);
    for (int k : degrees_of(H)) r.terms.emplace(k, ind(H.module, m, k));
    return r;
}

template <class S>
SpectralData<S> embed_s1(const BlockAmbient<S>& H, const RestrictedSequence<S>& s) {
    if (auto v = restricted_violation(H, s); !v.empty()) throw std::invalid_argument("not a restricted sequence: " + v);
    SpectralData<S> E;
    E.k0 = s.k0;
    for (const auto& [k, v] : s.terms)
        if (v.dim() > 0) E.spaces.emplace(Label{Rational(0), k}, v);
    return E;
}

template <class S>
DeformationMorphism<S> embed_s1(const BlockAmbient<S>& H, const SequenceMorphism<S>& m) {
    std::size_t d = H.dim();
    DeformationMorphism<S> r;
    r.source = embed_s1(H, m.source);
    r.target = embed_s1(H, m.target);
    r.f = Mat<S>(d, d);
    r.A = Subspace<S>(d);
    for (const auto& [k, t] : m.terms) {
        if (t.source.dim() > 0) r.alpha[Label{Rational(0), k}] = Label{Rational(0), k};
        r.f += t.f;
        r.A = r.A + t.A;
    }
    return r;
}

// --- random data ------------------------------------------------------------------

namespace {

template <class S>
bool block_free(const BlockAmbient<S>& H, const Subspace<S>& used, std::size_t b) {
    const Mat<S>& basis = used.basis();
    for (std::size_t i : H.blocks[b].idx)
        for (std::size_t c = 0; c < basis.cols(); ++c)
            if (!is_zero(basis(i, c))) return false;
    return true;
}

template <class S>
std::vector<std::size_t> free_blocks(const BlockAmbient<S>& H, const Subspace<S>& used) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
        if (block_free(H, used, b)) out.push_back(b);
    return out;
}

template <class T>
T pick(Rng& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v.size()) - 1))];
}

// A free block and a free reversed block of one type and degree, removed from
// the pool; nullopt when none is left.
template <class S>
std::optional<std::pair<std::size_t, std::size_t>> take_pair(Rng& rng, const BlockAmbient<S>& H,
                                                             std::vector<std::size_t>& pool, std::optional<int> min_k) {
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t a : pool) {
        const auto& x = H.blocks[a];
        if (x.reversed || (min_k && x.k < *min_k)) continue;
        for (std::size_t b : pool) {
            const auto& y = H.blocks[b];
            if (y.reversed && y.type == x.type && y.k == x.k) {
                cands.emplace_back(a, b);
                break;
            }
        }
    }
    if (cands.empty()) return std::nullopt;
    auto p = pick(rng, cands);
    pool.erase(std::find(pool.begin(), pool.end(), p.first));
    pool.erase(std::find(pool.begin(), pool.end(), p.second));
    return p;
}

template <class S>
void add_space(SpectralData<S>& E, const Label& l, const Subspace<S>& v) {
    auto [it, fresh] = E.spaces.try_emplace(l, v);
    if (!fresh) it->second = it->second + v;
}

template <class S>
void add_pair(SpectralData<S>& E, const GradedModule<S>& H, const Label& l, const Subspace<S>& delta) {
    Subspace<S> mirror = delta.image(H.grading());
    if (sgn(l.lambda) == 0) {
        add_space(E, l, delta + mirror);
    } else {
        add_space(E, l, delta);
        add_space(E, l.negated(), mirror);
    }
}

Rational random_positive(Rng& rng) { return rng.rational(1, 6, 2); }

}  // namespace

template <class S>
SpectralData<S> random_spectral(Rng& rng, const BlockAmbient<S>& H, bool annular) {
    std::size_t d = H.dim();
    SpectralData<S> E;
    auto ks = degrees_of(H);
    if (annular) E.k0 = *ks.begin();
    std::vector<std::size_t> pool(H.blocks.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (int k : ks) {
        if (annular && rng.uniform(0, 2) == 0) continue;
        long zeros = rng.uniform(0, 2);
        for (long z = 0; z < zeros; ++z) {
            std::vector<std::size_t> here;
            for (std::size_t b : pool)
                if (H.blocks[b].k == k) here.push_back(b);
            if (here.empty()) break;
            std::size_t b = pick(rng, here);
            pool.erase(std::find(pool.begin(), pool.end(), b));
            add_space(E, Label{Rational(0), k}, H.block_span({b}));
        }
        long pairs = rng.uniform(0, 2);
        for (long p = 0; p < pairs; ++p) {
            std::vector<std::size_t> here;
            for (std::size_t b : pool)
                if (H.blocks[b].k == k) here.push_back(b);
            auto pr = take_pair(rng, H, here, std::nullopt);
            if (!pr) break;
            pool.erase(std::find(pool.begin(), pool.end(), pr->first));
            pool.erase(std::find(pool.begin(), pool.end(), pr->second));
            add_pair(E, H.module, Label{random_positive(rng), k}, H.diagonal(pr->first, pr->second));
        }
    }
    (void)d;
    return E;
}

template <class S>
DeformationMorphism<S> random_deformation(Rng& rng, const BlockAmbient<S>& H, const SpectralData<S>& E) {
    std::size_t d = H.dim();
    const GradedModule<S>& M = H.module;
    Subspace<S> tot = E.total(d);
    Mat<S> p = tot.projector();

    // (alpha, id, 0): shift, merge, or collapse the eigenvalues onto zero
    std::map<Label, Label> alpha;
    std::map<int, std::vector<Rational>> positives;
    for (const auto& [l, v] : E.spaces)
        if (sgn(l.lambda) > 0) positives[l.k].push_back(l.lambda);
    for (auto& [k, vals] : positives) {
        long r = static_cast<long>(vals.size());
        long collapse = rng.uniform(0, 2) == 0 ? rng.uniform(0, r) : 0;
        Rational cur(0);
        for (long i = 0; i < r; ++i) {
            if (i >= collapse && !(i > collapse && rng.uniform(0, 2) == 0)) cur += random_positive(rng);
            alpha[Label{vals[i], k}] = Label{cur, k};
            alpha[Label{Rational(-vals[i]), k}] = Label{Rational(-cur), k};
        }
    }
    for (const auto& [l, v] : E.spaces)
        if (sgn(l.lambda) == 0) alpha[l] = l;
    SpectralData<S> E1;
    E1.k0 = E.k0;
    for (const auto& [l, v] : E.spaces) add_space(E1, alpha.at(l), v);
    DeformationMorphism<S> m1{E, E1, alpha, p, zero_subspace<S>(d)};

    // (id, g, 0): rotate between used blocks of one kind
    std::vector<std::size_t> used;
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
        if (!block_free(H, tot, b)) used.push_back(b);
    Mat<S> g = Mat<S>::identity(d);
    long turns = rng.uniform(0, 2);
    for (long t = 0; t < turns; ++t) {
        std::vector<std::pair<std::size_t, std::size_t>> cands;
        for (std::size_t a : used)
            for (std::size_t b : used) {
                const auto &x = H.blocks[a], &y = H.blocks[b];
                if (a < b && x.type == y.type && x.reversed == y.reversed && x.k == y.k) cands.emplace_back(a, b);
            }
        if (cands.empty()) break;
        auto [a, b] = pick(rng, cands);
        g = rotation<S>(d, H.blocks[a].idx, H.blocks[b].idx, rng.rational(1, 3, 3)) * g;
    }
    SpectralData<S> E2;
    E2.k0 = E.k0;
    std::map<Label, Label> id1;
    for (const auto& [l, v] : E1.spaces) {
        E2.spaces.emplace(l, v.image(g));
        id1[l] = l;
    }
    DeformationMorphism<S> m2{E1, E2, id1, g * p, zero_subspace<S>(d)};

    // (incl, incl, A): new eigenspaces from free blocks
    std::vector<std::size_t> pool = free_blocks(H, tot);
    SpectralData<S> E3 = E2;
    Subspace<S> A(d);
    long fresh = rng.uniform(0, 2);
    for (long i = 0; i < fresh; ++i) {
        auto pr = take_pair(rng, H, pool, E.k0);
        if (!pr) break;
        int k = H.blocks[pr->first].k;
        std::vector<Rational> existing;
        for (const auto& [l, v] : E2.spaces)
            if (l.k == k && sgn(l.lambda) > 0) existing.push_back(l.lambda);
        Rational mu(0);
        long choice = rng.uniform(0, 2);
        if (choice == 1 && !existing.empty())
            mu = pick(rng, existing);
        else if (choice != 0)
            mu = random_positive(rng);
        Subspace<S> delta = H.diagonal(pr->first, pr->second);
        add_pair(E3, M, Label{mu, k}, delta);
        A = A + delta;
    }
    Subspace<S> tot2 = E2.total(d);
    DeformationMorphism<S> m3{E2, E3, id1, tot2.projector(), A};
    return compose(M, m3, compose(M, m2, m1));
}

template <class S>
Subspace<S> random_vn_object(Rng& rng, const BlockAmbient<S>& H) {
    std::vector<std::size_t> pool(H.blocks.size());
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> chosen;
    long count = rng.uniform(0, 3);
    for (long i = 0; i < count && !pool.empty(); ++i) {
        std::size_t b = pick(rng, pool);
        pool.erase(std::find(pool.begin(), pool.end(), b));
        chosen.push_back(b);
    }
    return H.block_span(chosen);
}

template <class S>
VnMorphism<S> random_vn_morphism(Rng& rng, const BlockAmbient<S>& H, const Subspace<S>& V) {
    std::size_t d = H.dim();
    std::vector<std::size_t> used, pool = free_blocks(H, V);
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
        if (std::find(pool.begin(), pool.end(), b) == pool.end()) used.push_back(b);
    Mat<S> g = Mat<S>::identity(d);
    long turns = rng.uniform(0, 2);
    for (long t = 0; t < turns; ++t) {
        std::vector<std::pair<std::size_t, std::size_t>> cands;
        for (std::size_t a : used)
            for (std::size_t b = 0; b < H.blocks.size(); ++b) {
                const auto &x = H.blocks[a], &y = H.blocks[b];
                bool ok = a != b && x.type == y.type && x.reversed == y.reversed && x.k == y.k;
                bool b_free = std::find(pool.begin(), pool.end(), b) != pool.end();
                if (ok && (b_free || a < b)) cands.emplace_back(a, b);
            }
        if (cands.empty()) break;
        auto [a, b] = pick(rng, cands);
        auto it = std::find(pool.begin(), pool.end(), b);
        if (it != pool.end()) {
            pool.erase(it);
            used.push_back(b);
        }
        g = rotation<S>(d, H.blocks[a].idx, H.blocks[b].idx, rng.rational(1, 3, 3)) * g;
    }
    VnMorphism<S> m;
    m.source = V;
    m.f = g * V.projector();
    m.A = Subspace<S>(d);
    long fresh = rng.uniform(0, 2);
    for (long i = 0; i < fresh; ++i) {
        auto pr = take_pair(rng, H, pool, std::nullopt);
        if (!pr) break;
        m.A = m.A + H.diagonal(pr->first, pr->second);
    }
    m.target = V.image(g) + m.A + m.A.image(H.module.grading());
    return m;
}

// --- Quillen's categories ------------------------------------------------------------

namespace {

Subspace<Rational> even_part(const GradedCliffordModule& H) {
    QMat b(H.dim(), H.even_dim);
    for (std::size_t i = 0; i < H.even_dim; ++i) b(i, i) = 1;
    return Subspace<Rational>::span(b);
}

Subspace<Rational> odd_part(const GradedCliffordModule& H) {
    QMat b(H.dim(), H.odd_dim);
    for (std::size_t i = 0; i < H.odd_dim; ++i) b(H.even_dim + i, i) = 1;
    return Subspace<Rational>::span(b);
}

std::string embedding_violation(const QMat& f, const Subspace<Rational>& from, const Subspace<Rational>& to) {
    if (f != f * from.projector()) return "map is not supported on its domain";
    if (!to.contains(f * from.basis())) return "map leaves its codomain";
    if (!isometric_on(f, from)) return "map is not isometric";
    return {};
}

QMat cayley_on(Rng& rng, std::size_t d, const std::vector<std::size_t>& coords) {
    QMat k(d, d);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            Rational x(rng.uniform(-2, 2));
            k(coords[i], coords[j]) = x;
            k(coords[j], coords[i]) = -x;
        }
    return cayley(k);
}

Subspace<Rational> coordinate_span(std::size_t d, const std::vector<std::size_t>& coords) {
    QMat b(d, coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) b(coords[c], c) = 1;
    return Subspace<Rational>::span(b);
}

}  // namespace

std::string virtual_violation(const GradedCliffordModule& H, const VirtualMorphism& m) {
    Subspace<Rational> h0 = even_part(H), h1 = odd_part(H);
    if (!h0.contains(m.source.v0) || !h0.contains(m.target.v0)) return "degree-0 spaces are not even";
    if (!h1.contains(m.source.v1) || !h1.contains(m.target.v1)) return "degree-1 spaces are not odd";
    if (auto v = embedding_violation(m.f0, m.source.v0, m.target.v0); !v.empty()) return "f0: " + v;
    if (auto v = embedding_violation(m.f1, m.source.v1, m.target.v1); !v.empty()) return "f1: " + v;
    Subspace<Rational> u0 = m.target.v0.minus(m.source.v0.image(m.f0));
    Subspace<Rational> u1 = m.target.v1.minus(m.source.v1.image(m.f1));
    if (u0.dim() != u1.dim()) return "complements have different dimensions";
    if (auto v = embedding_violation(m.phi, u0, u1); !v.empty()) return "phi: " + v;
    return {};
}

VirtualMorphism compose(const VirtualMorphism& m2, const VirtualMorphism& m1) {
    if (!(m1.target == m2.source)) throw std::invalid_argument("virtual morphisms are not composable");
    Subspace<Rational> u0 = m1.target.v0.minus(m1.source.v0.image(m1.f0));
    Subspace<Rational> moved = u0.image(m2.f0);
    VirtualMorphism r;
    r.source = m1.source;
    r.target = m2.target;
    r.f0 = m2.f0 * m1.f0;
    r.f1 = m2.f1 * m1.f1;
    r.phi = m2.f1 * m1.phi * m2.f0.transpose() * moved.projector() + m2.phi;
    return r;
}

VirtualObject quillen_f(const GradedCliffordModule& H, const Subspace<Rational>& V) {
    return {V.intersect(even_part(H)), V.intersect(odd_part(H))};
}

VirtualMorphism quillen_f(const GradedCliffordModule& H, const VnMorphism<Rational>& m) {
    VirtualMorphism r;
    r.source = quillen_f(H, m.source);
    r.target = quillen_f(H, m.target);
    r.f0 = m.f * r.source.v0.projector();
    r.f1 = m.f * r.source.v1.projector();
    Subspace<Rational> both = m.A + m.A.image(H.grading());
    Subspace<Rational> u0 = both.intersect(even_part(H));
    // phi_A(a + eps a) = a - eps a
    r.phi = (m.A.projector() * Rational(2) - QMat::identity(H.dim())) * u0.projector();
    return r;
}

Subspace<Rational> quillen_g(const VirtualObject& v) { return v.v0 + v.v1; }

VnMorphism<Rational> quillen_g(const GradedCliffordModule& H, const VirtualMorphism& m) {
    VnMorphism<Rational> r;
    r.source = quillen_g(m.source);
    r.target = quillen_g(m.target);
    r.f = m.f0 + m.f1;
    Subspace<Rational> u0 = m.target.v0.minus(m.source.v0.image(m.f0));
    r.A = Subspace<Rational>::span((QMat::identity(H.dim()) + m.phi) * u0.basis());
    return r;
}

VirtualMorphism random_virtual_morphism(Rng& rng, const GradedCliffordModule& H) {
    std::size_t d = H.dim();
    std::vector<std::size_t> ev(H.even_dim), od(H.odd_dim);
    std::iota(ev.begin(), ev.end(), 0);
    std::iota(od.begin(), od.end(), H.even_dim);
    auto draw = [&](std::vector<std::size_t>& pool, long count) {
        std::vector<std::size_t> out;
        for (long i = 0; i < count && !pool.empty(); ++i) {
            std::size_t c = pick(rng, pool);
            pool.erase(std::find(pool.begin(), pool.end(), c));
            out.push_back(c);
        }
        return out;
    };
    long u = rng.uniform(0, 2);
    auto s0 = draw(ev, rng.uniform(0, 2)), s1 = draw(od, rng.uniform(0, 2));
    auto x0 = draw(ev, u), x1 = draw(od, u);
    u = static_cast<long>(std::min(x0.size(), x1.size()));
    x0.resize(u);
    x1.resize(u);
    auto y0 = draw(ev, rng.uniform(0, 1)), y1 = draw(od, rng.uniform(0, 1));
    auto join = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b, const std::vector<std::size_t>& c) {
        a.insert(a.end(), b.begin(), b.end());
        a.insert(a.end(), c.begin(), c.end());
        return a;
    };
    QMat r0 = cayley_on(rng, d, join(s0, x0, y0)), r1 = cayley_on(rng, d, join(s1, x1, y1));
    QMat mix = cayley_on(rng, d, x0);
    QMat pi(d, d);
    std::vector<std::size_t> perm(x1);
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
        std::swap(perm[i], perm[i + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(perm.size() - i) - 1))]);
    for (std::size_t i = 0; i < x0.size(); ++i) pi(perm[i], x0[i]) = rng.coin() ? 1 : -1;

    VirtualMorphism m;
    m.source = {coordinate_span(d, s0), coordinate_span(d, s1)};
    std::vector<std::size_t> t0 = s0, t1 = s1;
    t0.insert(t0.end(), x0.begin(), x0.end());
    t1.insert(t1.end(), x1.begin(), x1.end());
    m.target = {coordinate_span(d, t0).image(r0), coordinate_span(d, t1).image(r1)};
    m.f0 = r0 * m.source.v0.projector();
    m.f1 = r1 * m.source.v1.projector();
    Subspace<Rational> u0 = coordinate_span(d, x0).image(r0);
    m.phi = r1 * pi * mix * r0.transpose() * u0.projector();
    return m;
}

QMat qvect_projector(const GradedCliffordModule& H) {
    if (H.n != -1) throw std::invalid_argument("the Q-construction comparison needs graded Cl_{-1}-modules");
    return (QMat::identity(H.dim()) + H.gens[0]) * Rational(1, 2);
}

std::string qmorphism_violation(const GradedCliffordModule& H, const QMorphism& m) {
    QMat p = qvect_projector(H);
    for (const auto* s : {&m.source, &m.target, &m.W1, &m.W2})
        if (p * s->basis() != s->basis()) return "subspace is not inside pH";
    if (auto v = embedding_violation(m.g, m.source, m.target); !v.empty()) return "g: " + v;
    Subspace<Rational> image = m.source.image(m.g);
    if (!m.target.contains(m.W1) || !m.target.contains(m.W2)) return "W1, W2 are not inside the target";
    if (!image.orthogonal_to(m.W1) || !image.orthogonal_to(m.W2) || !m.W1.orthogonal_to(m.W2))
        return "g(U), W1, W2 are not pairwise orthogonal";
    if (image.dim() + m.W1.dim() + m.W2.dim() != m.target.dim()) return "target is not g(U) + W1 + W2";
    return {};
}

QMorphism compose(const QMorphism& m2, const QMorphism& m1) {
    if (m1.target != m2.source) throw std::invalid_argument("Q-morphisms are not composable");
    return {m1.source, m2.target, m2.g * m1.g, m1.W1.image(m2.g) + m2.W1, m1.W2.image(m2.g) + m2.W2};
}

Subspace<Rational> qvect_f(const GradedCliffordModule& H, const Subspace<Rational>& V) {
    return V.image(qvect_projector(H));
}

QMorphism qvect_f(const GradedCliffordModule& H, const VnMorphism<Rational>& m) {
    QMat p = qvect_projector(H);
    QMorphism r;
    r.source = m.source.image(p);
    r.target = m.target.image(p);
    r.g = m.f * r.source.projector();
    r.W1 = m.A.image(p);
    r.W2 = m.A.image(H.grading()).image(p);
    return r;
}

Subspace<Rational> qvect_g(const GradedCliffordModule& H, const Subspace<Rational>& U) {
    return U + U.image(H.grading());
}

VnMorphism<Rational> qvect_g(const GradedCliffordModule& H, const QMorphism& m) {
    QMat eps = H.grading();
    VnMorphism<Rational> r;
    r.source = qvect_g(H, m.source);
    r.target = qvect_g(H, m.target);
    r.f = m.g + eps * m.g * eps;
    r.A = m.W1 + m.W2.image(eps);
    return r;
}

QMorphism random_qmorphism(Rng& rng, const BlockAmbient<Rational>& H) {
    const GradedCliffordModule& M = H.module;
    QMat p = qvect_projector(M);
    Subspace<Rational> V = random_vn_object(rng, H);
    std::vector<std::size_t> pool = free_blocks(H, V);
    std::vector<std::size_t> used;
    for (std::size_t b = 0; b < H.blocks.size(); ++b)
        if (std::find(pool.begin(), pool.end(), b) == pool.end()) used.push_back(b);
    QMat g = QMat::identity(M.dim());
    if (!used.empty() && rng.coin()) {
        std::size_t a = pick(rng, used);
        std::vector<std::size_t> partners;
        for (std::size_t b : pool)
            if (H.blocks[b].type == H.blocks[a].type && H.blocks[b].reversed == H.blocks[a].reversed) partners.push_back(b);
        if (!partners.empty()) {
            std::size_t b = pick(rng, partners);
            pool.erase(std::find(pool.begin(), pool.end(), b));
            g = rotation<Rational>(M.dim(), H.blocks[a].idx, H.blocks[b].idx, rng.rational(1, 3, 3));
        }
    }
    auto take = [&]() {
        if (pool.empty() || rng.uniform(0, 2) == 0) return Subspace<Rational>(M.dim());
        std::size_t b = pick(rng, pool);
        pool.erase(std::find(pool.begin(), pool.end(), b));
        return H.block_span({b}).image(p);
    };
    QMorphism m;
    m.source = V.image(p);
    m.g = g * m.source.projector();
    m.W1 = take();
    m.W2 = take();
    m.target = m.source.image(g) + m.W1 + m.W2;
    return m;
}

// --- components ----------------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<Integer> reduce_label(const QuotientGroup& g, std::vector<Integer> v) {
    for (std::size_t t = 0; t < g.torsion.size(); ++t) {
        Integer& x = v[static_cast<std::size_t>(g.rank) + t];
        x %= g.torsion[t];
        if (x < 0) x += g.torsion[t];
    }
    return v;
}

std::vector<Integer> label_of(const QuotientGroup& g, const std::vector<long>& mult) {
    std::vector<Integer> v(static_cast<std::size_t>(g.rank) + g.torsion.size(), Integer(0));
    for (std::size_t j = 0; j < mult.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += Integer(mult[j]) * g.generator_images[j][i];
    return reduce_label(g, v);
}

template <class S>
std::vector<GradedModule<S>> irreducibles_of(int n) {
    if constexpr (ScalarTraits<S>::is_complex)
        return irreducible_graded_modules_complex(n);
    else
        return irreducible_graded_modules(n);
}

// i_{n+1}(J) as a Cl_n-module with the submodule A of the connecting morphism.
template <class S>
std::pair<GradedModule<S>, Mat<S>> connecting_pair(int n, const GradedModule<S>& J) {
    if (n >= 0) {
        GradedModule<S> W = restrict_module(J);
        const Mat<S>& e = J.gens.back();
        Mat<S> a(W.dim(), W.even_dim);
        for (std::size_t j = 0; j < W.even_dim; ++j) {
            a(j, j) = S(1);
            for (std::size_t i = 0; i < W.dim(); ++i) a(i, j) += e(i, j);
        }
        return {W, a};
    }
    std::size_t d = J.dim();
    GradedModule<S> W = double_module(J, J, Mat<S>::identity(d));
    Mat<S> a(2 * d, d);
    for (std::size_t j = 0; j < d; ++j) {
        a(j, j) = S(1);
        a(d + j, j) = j < J.even_dim ? S(1) : S(-1);
    }
    return {W, a};
}

template <class S>
Pi0Report pi0_impl(int n, std::size_t cap) {
    constexpr Field field = field_of<S>();
    Pi0Report rep;
    rep.n = n;
    rep.field = field;
    rep.dim_cap = cap;
    rep.group = quotient_group(n, field);
    auto irr = irreducibles_of<S>(n);
    auto higher = irreducibles_of<S>(n + 1);
    std::size_t C = irr.size();

    std::vector<std::size_t> dims(C);
    for (std::size_t j = 0; j < C; ++j) dims[j] = irr[j].dim();

    struct Connector {
        GradedModule<S> W;
        Mat<S> A;
        std::vector<long> cls;
    };
    std::vector<Connector> conns;
    for (const auto& J : higher) {
        auto [W, a] = connecting_pair(n, J);
        if (W.dim() > cap) continue;
        conns.push_back({W, a, decompose(W).cls.mult});
    }

    // the stable ambient: enough copies of each irreducible, one copy of each W
    std::vector<GradedModule<S>> parts;
    std::vector<std::vector<std::size_t>> part_of(C);
    for (std::size_t j = 0; j < C; ++j)
        for (std::size_t c = 0; c < cap / dims[j]; ++c) {
            part_of[j].push_back(parts.size());
            parts.push_back(irr[j]);
        }
    std::vector<std::size_t> conn_part;
    for (const auto& c : conns) {
        conn_part.push_back(parts.size());
        parts.push_back(c.W);
    }
    if (parts.empty()) throw std::invalid_argument("dimension cap below every irreducible");
    auto amb = assemble_sum(parts);
    const GradedModule<S>& H = amb.module;
    std::size_t D = H.dim();
    auto span_parts = [&](const std::vector<std::size_t>& ps) {
        std::size_t cols = 0;
        for (std::size_t p : ps) cols += amb.indices[p].size();
        Mat<S> m(D, cols);
        std::size_t c = 0;
        for (std::size_t p : ps)
            for (std::size_t i : amb.indices[p]) m(i, c++) = S(1);
        return Subspace<S>::span(m);
    };
    std::vector<Subspace<S>> placed_A;
    for (std::size_t c = 0; c < conns.size(); ++c) {
        const auto& idx = amb.indices[conn_part[c]];
        Mat<S> a(D, conns[c].A.cols());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < conns[c].A.cols(); ++j) a(idx[i], j) = conns[c].A(i, j);
        placed_A.push_back(Subspace<S>::span(a));
    }

    // objects: multiplicity vectors of bounded dimension
    std::vector<std::vector<long>> nodes;
    std::map<std::vector<long>, std::size_t> index;
    std::vector<long> cur(C, 0);
    std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t j, std::size_t used) {
        if (j == C) {
            index.emplace(cur, nodes.size());
            nodes.push_back(cur);
            return;
        }
        for (long m = 0; used + static_cast<std::size_t>(m) * dims[j] <= cap; ++m) {
            cur[j] = m;
            enumerate(j + 1, used + static_cast<std::size_t>(m) * dims[j]);
        }
        cur[j] = 0;
    };
    enumerate(0, 0);
    rep.objects = nodes.size();
    auto dim_of = [&](const std::vector<long>& m) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < C; ++j) s += static_cast<std::size_t>(m[j]) * dims[j];
        return s;
    };

    UnionFind uf(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        std::vector<std::size_t> ps;
        for (std::size_t j = 0; j < C; ++j)
            for (long c = 0; c < nodes[v][j]; ++c) ps.push_back(part_of[j][static_cast<std::size_t>(c)]);
        Subspace<S> V = span_parts(ps);
        for (std::size_t c = 0; c < conns.size(); ++c) {
            if (dim_of(nodes[v]) + conns[c].W.dim() > cap) continue;
            VnMorphism<S> m;
            m.source = V;
            m.target = V + span_parts({conn_part[c]});
            m.f = V.projector();
            m.A = placed_A[c];
            if (auto bad = vn_violation(H, m); !bad.empty()) {
                rep.failure = "connecting morphism invalid: " + bad;
                return rep;
            }
            std::vector<long> to = nodes[v];
            for (std::size_t j = 0; j < C; ++j) to[j] += conns[c].cls[j];
            uf.unite(v, index.at(to));
            ++rep.edges;
        }
    }

    std::map<std::size_t, std::size_t> comp_of_root;
    std::vector<std::size_t> comp(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        std::size_t r = uf.find(v);
        auto [it, fresh] = comp_of_root.try_emplace(r, rep.components.size());
        if (fresh) rep.components.push_back({nodes[v], label_of(rep.group, nodes[v]), 0});
        comp[v] = it->second;
        Pi0Component& pc = rep.components[it->second];
        ++pc.size;
        if (dim_of(nodes[v]) < dim_of(pc.representative)) pc.representative = nodes[v];
    }

    rep.consistent = true;
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (label_of(rep.group, nodes[v]) != rep.components[comp[v]].label) {
            rep.consistent = false;
            rep.failure = "labels differ inside one component";
        }
    std::set<std::vector<Integer>> labels;
    for (const auto& c : rep.components) labels.insert(c.label);
    rep.injective = labels.size() == rep.components.size();
    if (!rep.injective && rep.failure.empty()) rep.failure = "two components share a label";
    if (rep.group.rank == 0) {
        Integer order(1);
        for (const auto& t : rep.group.torsion) order *= t;
        rep.surjective = Integer(static_cast<long>(labels.size())) == order;
        if (!rep.surjective && rep.failure.empty()) rep.failure = "some group element has no component";
    } else {
        rep.surjective = true;
    }
    rep.additive = true;
    for (const auto& a : rep.components)
        for (const auto& b : rep.components) {
            std::vector<long> s(C);
            for (std::size_t j = 0; j < C; ++j) s[j] = a.representative[j] + b.representative[j];
            if (dim_of(s) > cap) continue;
            std::vector<Integer> want(a.label.size());
            for (std::size_t i = 0; i < want.size(); ++i) want[i] = a.label[i] + b.label[i];
            if (rep.components[comp[index.at(s)]].label != reduce_label(rep.group, want)) {
                rep.additive = false;
                if (rep.failure.empty()) rep.failure = "component addition disagrees with the group";
            }
        }
    return rep;
}

}  // namespace

Pi0Report pi0(int n, std::size_t dim_cap, Field field) {
    if (dim_cap == 0) throw std::invalid_argument("dimension cap must be positive");
    return field == Field::Real ? pi0_impl<Rational>(n, dim_cap) : pi0_impl<GaussianRational>(n, dim_cap);
}

bool TateReport::ok() const {
    QuotientGroup want = abs_quotient_complex(-n);
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (!degrees[i].ok() || !coefficients[i].isomorphic(want)) return false;
    return !degrees.empty();
}

TateReport tate_coefficients(int n, int k_min, int k_max, std::size_t dim_cap) {
    if (k_min > k_max) throw std::invalid_argument("empty degree window");
    TateReport rep;
    rep.n = n;
    rep.k_min = k_min;
    rep.k_max = k_max;
    for (int k = k_min; k <= k_max; ++k) {
        rep.degrees.push_back(pi0(-n, dim_cap, Field::Complex));
        rep.coefficients.push_back(rep.degrees.back().group);
    }
    return rep;
}

// --- instantiations ------------------------------------------------------------------

#define SUPERKO_CATEGORIES(S)                                                                                   \
    template struct BlockAmbient<S>;                                                                            \
    template struct SpectralData<S>;                                                                            \
    template std::string vn_object_violation(const GradedModule<S>&, const Subspace<S>&);                       \
    template std::string vn_violation(const GradedModule<S>&, const VnMorphism<S>&);                            \
    template VnMorphism<S> vn_identity(const Subspace<S>&);                                                     \
    template VnMorphism<S> compose(const VnMorphism<S>&, const VnMorphism<S>&);                                 \
    template std::string spectral_violation(const GradedModule<S>&, const SpectralData<S>&);                    \
    template std::string deformation_violation(const GradedModule<S>&, const DeformationMorphism<S>&);          \
    template DeformationMorphism<S> deformation_identity(const GradedModule<S>&, const SpectralData<S>&);       \
    template DeformationMorphism<S> compose(const GradedModule<S>&, const DeformationMorphism<S>&,              \
                                            const DeformationMorphism<S>&);                                     \
    template Factorization<S> factor(const GradedModule<S>&, const DeformationMorphism<S>&);                    \
    template Subspace<S> ind(const GradedModule<S>&, const SpectralData<S>&, int);                              \
    template VnMorphism<S> ind(const GradedModule<S>&, const DeformationMorphism<S>&, int);                     \
    template SpectralData<S> embed(const Subspace<S>&, int);                                                    \
    template DeformationMorphism<S> embed(const GradedModule<S>&, const VnMorphism<S>&, int);                   \
    template DeformationMorphism<S> natural_n(const GradedModule<S>&, const SpectralData<S>&);                  \
    template std::string restricted_violation(const BlockAmbient<S>&, const RestrictedSequence<S>&);            \
    template RestrictedSequence<S> ind_s1(const BlockAmbient<S>&, const SpectralData<S>&);                      \
    template SequenceMorphism<S> ind_s1(const BlockAmbient<S>&, const DeformationMorphism<S>&);                 \
    template SpectralData<S> embed_s1(const BlockAmbient<S>&, const RestrictedSequence<S>&);                    \
    template DeformationMorphism<S> embed_s1(const BlockAmbient<S>&, const SequenceMorphism<S>&);               \
    template SpectralData<S> random_spectral(Rng&, const BlockAmbient<S>&, bool);                               \
    template DeformationMorphism<S> random_deformation(Rng&, const BlockAmbient<S>&, const SpectralData<S>&);   \
    template Subspace<S> random_vn_object(Rng&, const BlockAmbient<S>&);                                        \
    template VnMorphism<S> random_vn_morphism(Rng&, const BlockAmbient<S>&, const Subspace<S>&);

SUPERKO_CATEGORIES(Rational)
SUPERKO_CATEGORIES(GaussianRational)

#undef SUPERKO_CATEGORIES

}  // namespace superko
