#include "superko/clifford.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace superko {

namespace {

struct Ungraded {
    std::size_t dim = 0;
    std::vector<Monomial> f;  // f_i^2 = -1, pairwise anticommuting
};

Monomial from_images(const std::vector<std::pair<std::size_t, int>>& img) {
    std::vector<std::size_t> perm;
    std::vector<std::uint8_t> ph;
    for (auto [row, sign] : img) {
        perm.push_back(row);
        ph.push_back(sign < 0 ? 2 : 0);
    }
    return Monomial(perm, ph);
}

// Octonion product of basis units e_a e_b = sign * e_c, with e_0 = 1 and
// e_i e_{i+1} = e_{i+3} (indices of imaginary units taken mod 7).
std::pair<int, std::size_t> octonion_mul(std::size_t a, std::size_t b) {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    auto wrap = [](std::size_t i) { return (i - 1) % 7 + 1; };
    for (std::size_t i = 1; i <= 7; ++i) {
        std::size_t t[3] = {i, wrap(i + 1), wrap(i + 3)};
        for (int r = 0; r < 3; ++r) {
            std::size_t x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
            if (a == x && b == y) return {1, z};
            if (a == y && b == x) return {-1, z};
        }
    }
    throw std::logic_error("octonion table incomplete");
}

std::vector<Ungraded> ungraded_real(int k) {
    if (k == 0) return {Ungraded{1, {}}};
    if (k == 1) return {Ungraded{2, {from_images({{1, 1}, {0, -1}})}}};
    if (k == 2 || k == 3) {
        Monomial li = from_images({{1, 1}, {0, -1}, {3, 1}, {2, -1}});
        Monomial lj = from_images({{2, 1}, {3, -1}, {0, -1}, {1, 1}});
        Monomial lk = from_images({{3, 1}, {2, 1}, {1, -1}, {0, -1}});
        if (k == 2) return {Ungraded{4, {li, lj}}};
        return {Ungraded{4, {li, lj, lk}}, Ungraded{4, {li, lj, lk.negated()}}};
    }
    if (k <= 7) {
        std::vector<Monomial> l;
        for (std::size_t a = 1; a <= static_cast<std::size_t>(k); ++a) {
            std::vector<std::pair<std::size_t, int>> img;
            for (std::size_t b = 0; b < 8; ++b) {
                auto [sign, c] = octonion_mul(a, b);
                img.push_back({c, sign});
            }
            l.push_back(from_images(img));
        }
        if (k < 7) return {Ungraded{8, l}};
        auto l2 = l;
        l2.back() = l2.back().negated();
        return {Ungraded{8, l}, Ungraded{8, l2}};
    }
    throw std::logic_error("ungraded real construction only below degree 8");
}

std::vector<Ungraded> ungraded_complex(int k) {
    if (k == 0) return {Ungraded{1, {}}};
    std::size_t m = static_cast<std::size_t>(k / 2);
    Monomial X = from_images({{1, 1}, {0, 1}});
    Monomial Y({1, 0}, {1, 3});
    Monomial Z = from_images({{0, 1}, {1, -1}});
    Monomial I2(2);
    auto tensor = [&](const std::vector<Monomial>& fs) {
        Monomial acc(1);
        for (const auto& x : fs) acc = Monomial::kron(acc, x);
        return acc;
    };
    std::vector<Monomial> g;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Monomial> fx, fy;
        for (std::size_t q = 0; q < m; ++q) {
            fx.push_back(q < j ? Z : (q == j ? X : I2));
            fy.push_back(q < j ? Z : (q == j ? Y : I2));
        }
        g.push_back(tensor(fx).times_phase(1));
        g.push_back(tensor(fy).times_phase(1));
    }
    std::size_t dim = std::size_t(1) << m;
    if (k % 2 == 0) return {Ungraded{dim, g}};
    std::vector<Monomial> fz(m, Z);
    Monomial last = tensor(fz).times_phase(1);
    auto g2 = g;
    g.push_back(last);
    g2.push_back(last.negated());
    return {Ungraded{dim, g}, Ungraded{dim, g2}};
}

// Graded Cl_n-module on U + U (first copy even) from an ungraded Cl_{|n|-1}
// module with f_i^2 = -1.
MonoModule graded_double(const Ungraded& u, int n, Field field) {
    std::size_t d = u.dim;
    MonoModule m;
    m.n = n;
    m.field = field;
    m.even_dim = d;
    m.odd_dim = d;
    for (const auto& f : u.f) {
        std::vector<std::size_t> perm(2 * d);
        std::vector<std::uint8_t> ph(2 * d);
        for (std::size_t j = 0; j < d; ++j) {
            perm[j] = d + f.row_of(j);
            ph[j] = static_cast<std::uint8_t>(f.phase_of(j) + (n < 0 ? 2 : 0));
            perm[d + j] = f.row_of(j);
            ph[d + j] = static_cast<std::uint8_t>(f.phase_of(j));
        }
        m.gens.emplace_back(perm, ph);
    }
    std::vector<std::size_t> perm(2 * d);
    std::vector<std::uint8_t> ph(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
        perm[j] = d + j;
        ph[j] = 0;
        perm[d + j] = j;
        ph[d + j] = n > 0 ? 2 : 0;
    }
    m.gens.emplace_back(perm, ph);
    return m;
}

// Reorder the basis so that even vectors come first.
MonoModule sort_even_first(int n, Field field, const std::vector<int>& grading, const std::vector<Monomial>& gens) {
    std::vector<std::size_t> idx(grading.size());
    std::size_t e = 0;
    for (int g : grading)
        if (g > 0) ++e;
    std::size_t ei = 0, oi = e;
    for (std::size_t j = 0; j < grading.size(); ++j) idx[j] = grading[j] > 0 ? ei++ : oi++;
    MonoModule m;
    m.n = n;
    m.field = field;
    m.even_dim = e;
    m.odd_dim = grading.size() - e;
    for (const auto& g : gens) m.gens.push_back(g.conjugate_by(idx));
    return m;
}

MonoModule graded_tensor(const MonoModule& base, const MonoModule& t, int n) {
    auto gb = base.grading();
    auto gt = t.grading();
    Monomial eb = base.grading_op();
    Monomial it(t.dim());
    std::vector<Monomial> gens;
    for (const auto& e : base.gens) gens.push_back(Monomial::kron(e, it));
    for (const auto& f : t.gens) gens.push_back(Monomial::kron(eb, f));
    std::vector<int> grading;
    for (int a : gb)
        for (int b : gt) grading.push_back(a * b);
    return sort_even_first(n, base.field, grading, gens);
}

Monomial volume_invariant(const MonoModule& m) {
    Monomial j = m.grading_op();
    for (const auto& e : m.gens) j = j * e;
    return j.times_phase((std::abs(m.n) / 2) % 4);
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::vector<MonoModule>>& cache() {
    static std::map<std::pair<int, int>, std::vector<MonoModule>> c;
    return c;
}

std::vector<MonoModule> build_irreducibles(int n, Field field) {
    std::vector<MonoModule> out;
    if (n == 0) {
        MonoModule a;
        a.field = field;
        a.even_dim = 1;
        MonoModule b;
        b.field = field;
        b.odd_dim = 1;
        return {a, b};
    }
    int an = std::abs(n);
    if (field == Field::Complex) {
        for (const auto& u : ungraded_complex(an - 1)) out.push_back(graded_double(u, n, field));
    } else if (an <= 8) {
        for (const auto& u : ungraded_real(an - 1)) out.push_back(graded_double(u, n, field));
    } else {
        const auto& base = irreducible_monomial(n > 0 ? n - 8 : n + 8, field);
        const auto& t = irreducible_monomial(n > 0 ? 8 : -8, field)[0];
        for (const auto& b : base) out.push_back(graded_tensor(b, t, n));
    }
    for (const auto& m : out) m.certify();
    if (out.size() == 2) {
        auto tr0 = volume_invariant(out[0]).trace();
        if (tr0.first < 0) std::swap(out[0], out[1]);
    }
    return out;
}

}  // namespace

std::vector<int> MonoModule::grading() const {
    std::vector<int> g(dim(), 1);
    for (std::size_t j = even_dim; j < dim(); ++j) g[j] = -1;
    return g;
}

void MonoModule::certify() const {
    if (gens.size() != static_cast<std::size_t>(std::abs(n))) throw std::logic_error("wrong generator count");
    Monomial eps = grading_op();
    Monomial id(dim());
    Monomial sq = n > 0 ? id.negated() : id;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != dim()) throw std::logic_error("generator size mismatch");
        if (field == Field::Real && !gens[i].is_real()) throw std::logic_error("non-real generator");
        if (!(gens[i] * gens[i] == sq)) throw std::logic_error("generator square relation fails");
        if (!(gens[i] * eps == (eps * gens[i]).negated())) throw std::logic_error("generator is not odd");
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] == (gens[j] * gens[i]).negated()))
                throw std::logic_error("generators do not anticommute");
    }
}

template <class S>
std::string GradedModule<S>::violation() const {
    if (gens.size() != static_cast<std::size_t>(std::abs(n))) return "generator count differs from |n|";
    Mat<S> eps = grading();
    Mat<S> id = Mat<S>::identity(dim());
    Mat<S> sq = n > 0 ? -id : id;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& e = gens[i];
        if (e.rows() != dim() || e.cols() != dim()) return "generator has wrong shape";
        if (e * e != sq) return "generator square relation fails";
        if (e * eps != -(eps * e)) return "generator is not odd";
        if (e.adjoint() * e != id) return "generator is not orthogonal";
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (e * gens[j] != -(gens[j] * e)) return "generators do not anticommute";
    }
    return {};
}

template struct GradedModule<Rational>;
template struct GradedModule<GaussianRational>;

ModuleClass& ModuleClass::operator+=(const ModuleClass& o) {
    if (n != o.n || field != o.field || mult.size() != o.mult.size())
        throw std::invalid_argument("module classes of different degrees");
    for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += o.mult[i];
    return *this;
}

int irreducible_dim(int n, Field f) {
    int an = std::abs(n);
    if (an == 0) return 1;
    if (f == Field::Complex) return 1 << ((an + 1) / 2);
    static const int table[9] = {1, 2, 4, 8, 8, 16, 16, 16, 16};
    if (an <= 8) return table[an];
    return 16 * irreducible_dim(an - 8, f);
}

int class_count(int n, Field f) {
    if (f == Field::Complex) return n % 2 == 0 ? 2 : 1;
    return n % 4 == 0 ? 2 : 1;
}

const std::vector<MonoModule>& irreducible_monomial(int n, Field f) {
    auto key = std::make_pair(n, static_cast<int>(f));
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    auto built = build_irreducibles(n, f);
    std::lock_guard<std::mutex> lk(cache_mutex);
    return cache().emplace(key, std::move(built)).first->second;
}

template <class S>
GradedModule<S> densify(const MonoModule& m) {
    if (m.dim() > 256) throw std::length_error("module too large to densify");
    GradedModule<S> d;
    d.n = m.n;
    d.even_dim = m.even_dim;
    d.odd_dim = m.odd_dim;
    for (const auto& g : m.gens) d.gens.push_back(g.template dense<S>());
    return d;
}
template GradedModule<Rational> densify<Rational>(const MonoModule&);
template GradedModule<GaussianRational> densify<GaussianRational>(const MonoModule&);

std::vector<GradedCliffordModule> irreducible_graded_modules(int n) {
    if (std::abs(n) > 24) throw std::invalid_argument("|n| must be at most 24");
    std::vector<GradedCliffordModule> out;
    for (const auto& m : irreducible_monomial(n, Field::Real)) out.push_back(densify<Rational>(m));
    return out;
}

std::vector<ComplexGradedCliffordModule> irreducible_graded_modules_complex(int n) {
    if (std::abs(n) > 24) throw std::invalid_argument("|n| must be at most 24");
    std::vector<ComplexGradedCliffordModule> out;
    for (const auto& m : irreducible_monomial(n, Field::Complex)) out.push_back(densify<GaussianRational>(m));
    return out;
}

namespace {

ModuleClass class_from_trace(int n, Field f, std::size_t dim, long trace) {
    ModuleClass c;
    c.n = n;
    c.field = f;
    long d = irreducible_dim(n, f);
    long dm = static_cast<long>(dim);
    if (class_count(n, f) == 1) {
        if (dm % d != 0) throw std::logic_error("dimension not a multiple of the irreducible dimension");
        c.mult = {dm / d};
    } else {
        if ((dm + trace) % (2 * d) != 0 || (dm - trace) % (2 * d) != 0)
            throw std::logic_error("inconsistent volume-element trace");
        c.mult = {(dm + trace) / (2 * d), (dm - trace) / (2 * d)};
    }
    return c;
}

long exact_long(const Rational& r) {
    if (r.get_den() != 1) throw std::logic_error("non-integral trace");
    return r.get_num().get_si();
}

}  // namespace

ModuleClass classify(const MonoModule& m) {
    long tr = 0;
    if (class_count(m.n, m.field) == 2) {
        auto t = volume_invariant(m).trace();
        if (t.second != 0) throw std::logic_error("volume invariant has imaginary trace");
        tr = t.first;
    }
    return class_from_trace(m.n, m.field, m.dim(), tr);
}

template <class S>
ModuleClass classify(const GradedModule<S>& m) {
    constexpr Field f = field_of<S>();
    long tr = 0;
    if (class_count(m.n, f) == 2) {
        Mat<S> j = m.grading();
        for (const auto& e : m.gens) j = j * e;
        int ph = (std::abs(m.n) / 2) % 4;
        S c(1);
        if (ph % 2 == 1) c = ScalarTraits<S>::imag_unit();
        if (ph >= 2) c = -c;
        S t = j.trace() * c;
        if constexpr (ScalarTraits<S>::is_complex) {
            if (!is_zero(t.im)) throw std::logic_error("volume invariant has imaginary trace");
            tr = exact_long(t.re);
        } else {
            tr = exact_long(t);
        }
    }
    return class_from_trace(m.n, f, m.dim(), tr);
}
template ModuleClass classify(const GradedModule<Rational>&);
template ModuleClass classify(const GradedModule<GaussianRational>&);

template <class S>
Decomposition<S> decompose(const GradedModule<S>& m) {
    if (auto v = m.violation(); !v.empty()) throw std::invalid_argument("invalid module: " + v);
    constexpr Field f = field_of<S>();
    Decomposition<S> out;
    out.cls = classify(m);
    const auto& irr = irreducible_monomial(m.n, f);
    std::size_t dim = m.dim();
    Mat<S> img(dim, 0);
    for (std::size_t c = 0; c < irr.size(); ++c) {
        long want = out.cls.mult[c];
        if (want == 0) continue;
        GradedModule<S> I = densify<S>(irr[c]);
        std::size_t d = I.dim();
        // cyclic homogeneous vector u and words w_j with b_j = w_j u spanning I
        bool u_even = I.even_dim > 0;
        std::size_t u_idx = u_even ? 0 : I.even_dim;
        Mat<S> basis(d, 0);
        std::vector<std::vector<std::size_t>> words;
        {
            Mat<S> u(d, 1);
            u(u_idx, 0) = S(1);
            basis = u;
            words.push_back({});
            for (std::size_t k = 0; k < words.size() && basis.cols() < d; ++k) {
                for (std::size_t g = 0; g < I.gens.size() && basis.cols() < d; ++g) {
                    Mat<S> w = I.gens[g] * basis.col(k);
                    if (rank(hconcat(basis, w)) > basis.cols()) {
                        basis = hconcat(basis, w);
                        auto word = words[k];
                        word.insert(word.begin(), g);
                        words.push_back(word);
                    }
                }
            }
            if (basis.cols() != d) throw std::logic_error("irreducible module is not cyclic");
        }
        Mat<S> binv = inverse(basis);
        std::vector<Mat<S>> W;  // word operators on m
        for (const auto& word : words) {
            Mat<S> op = Mat<S>::identity(dim);
            for (auto it = word.rbegin(); it != word.rend(); ++it) op = m.gens[*it] * op;
            W.push_back(op);
        }
        // constraints on v
        Mat<S> cons(0, dim);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t g = 0; g < I.gens.size(); ++g) {
                Mat<S> coords = binv * (I.gens[g] * basis.col(j));
                Mat<S> row = m.gens[g] * W[j];
                for (std::size_t l = 0; l < d; ++l)
                    if (!is_zero(coords(l, 0))) row -= W[l] * coords(l, 0);
                cons = vconcat(cons, row);
            }
        Mat<S> par(0, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            bool even = i < m.even_dim;
            if (even != u_even) {
                Mat<S> r(1, dim);
                r(0, i) = S(1);
                par = vconcat(par, r);
            }
        }
        cons = vconcat(cons, par);
        Mat<S> K = cons.rows() ? nullspace(cons) : Mat<S>::identity(dim);
        long got = 0;
        std::size_t base_rank = img.cols();
        for (std::size_t k = 0; k < K.cols() && got < want; ++k) {
            Mat<S> v = K.col(k);
            Mat<S> blk(dim, 0);
            for (std::size_t j = 0; j < d; ++j) blk = hconcat(blk, W[j] * v);
            Mat<S> cand = hconcat(img, blk);
            if (rank(cand) == base_rank + d) {
                // map basis b_j -> W_j v; express on the standard basis of I
                Mat<S> emb = blk * binv;
                img = hconcat(img, emb);
                base_rank += d;
                ++got;
            }
        }
        if (got != want) throw std::logic_error("failed to build an intertwiner");
    }
    if (img.cols() != dim) throw std::logic_error("decomposition does not span the module");
    // reorder columns of each block: even parts of the sum first, matching the
    // even-first convention of direct sums
    out.witness = img;
    return out;
}
template Decomposition<Rational> decompose(const GradedModule<Rational>&);
template Decomposition<GaussianRational> decompose(const GradedModule<GaussianRational>&);

MonoModule restrict_module(const MonoModule& m) {
    if (m.n < 1) throw std::invalid_argument("restriction needs degree at least 1");
    MonoModule r = m;
    r.n = m.n - 1;
    r.gens.pop_back();
    return r;
}

template <class S>
GradedModule<S> restrict_module(const GradedModule<S>& m) {
    if (m.n < 1) throw std::invalid_argument("restriction needs degree at least 1");
    GradedModule<S> r = m;
    r.n = m.n - 1;
    r.gens.pop_back();
    return r;
}
template GradedModule<Rational> restrict_module(const GradedModule<Rational>&);
template GradedModule<GaussianRational> restrict_module(const GradedModule<GaussianRational>&);

template <class S>
GradedModule<S> double_module(const GradedModule<S>& ve, const GradedModule<S>& vo, const Mat<S>& gamma) {
    if (ve.n > 0 || vo.n != ve.n) throw std::invalid_argument("doubling needs two modules of the same degree -k <= 0");
    if (ve.even_dim != vo.even_dim || ve.odd_dim != vo.odd_dim) throw std::invalid_argument("gamma is not an isomorphism");
    std::size_t d = ve.dim();
    if (gamma.rows() != d || gamma.cols() != d) throw std::invalid_argument("gamma has wrong shape");
    if (gamma.adjoint() * gamma != Mat<S>::identity(d)) throw std::invalid_argument("gamma is not an isometric isomorphism");
    Mat<S> ee = ve.grading(), eo = vo.grading();
    if (gamma * ee != eo * gamma) throw std::invalid_argument("gamma is not even");
    for (std::size_t i = 0; i < ve.gens.size(); ++i)
        if (gamma * ve.gens[i] != vo.gens[i] * gamma) throw std::invalid_argument("gamma is not Clifford-linear");
    Mat<S> ginv = gamma.adjoint();
    GradedModule<S> v;
    v.n = ve.n - 1;
    v.even_dim = d;
    v.odd_dim = d;
    for (std::size_t i = 0; i < ve.gens.size(); ++i) {
        Mat<S> e(2 * d, 2 * d);
        e.set_block(0, d, -(ee * ve.gens[i] * ginv));
        e.set_block(d, 0, eo * vo.gens[i] * gamma);
        v.gens.push_back(e);
    }
    Mat<S> last(2 * d, 2 * d);
    last.set_block(0, d, ginv);
    last.set_block(d, 0, gamma);
    v.gens.push_back(last);
    return v;
}
template GradedModule<Rational> double_module(const GradedModule<Rational>&, const GradedModule<Rational>&,
                                              const Mat<Rational>&);
template GradedModule<GaussianRational> double_module(const GradedModule<GaussianRational>&,
                                                      const GradedModule<GaussianRational>&,
                                                      const Mat<GaussianRational>&);

MonoModule double_module(const MonoModule& u) {
    if (u.n > 0) throw std::invalid_argument("doubling needs degree <= 0");
    std::size_t d = u.dim();
    Monomial eps = u.grading_op();
    MonoModule v;
    v.n = u.n - 1;
    v.field = u.field;
    v.even_dim = d;
    v.odd_dim = d;
    for (const auto& e : u.gens) {
        Monomial ee = eps * e;
        std::vector<std::size_t> perm(2 * d);
        std::vector<std::uint8_t> ph(2 * d);
        for (std::size_t j = 0; j < d; ++j) {
            perm[j] = d + ee.row_of(j);
            ph[j] = static_cast<std::uint8_t>(ee.phase_of(j));
            perm[d + j] = ee.row_of(j);
            ph[d + j] = static_cast<std::uint8_t>(ee.phase_of(j) + 2);
        }
        v.gens.emplace_back(perm, ph);
    }
    std::vector<std::size_t> perm(2 * d);
    std::vector<std::uint8_t> ph(2 * d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        perm[j] = d + j;
        perm[d + j] = j;
    }
    v.gens.emplace_back(perm, ph);
    return v;
}

namespace {

std::vector<std::size_t> reversal_index(std::size_t even, std::size_t odd) {
    std::vector<std::size_t> idx(even + odd);
    for (std::size_t j = 0; j < even; ++j) idx[j] = odd + j;
    for (std::size_t j = 0; j < odd; ++j) idx[even + j] = j;
    return idx;
}

template <class S>
Mat<S> perm_matrix(const std::vector<std::size_t>& idx) {
    Mat<S> p(idx.size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) p(idx[j], j) = S(1);
    return p;
}

std::vector<std::size_t> sum_index(std::size_t ae, std::size_t ao, std::size_t be, std::size_t bo) {
    std::vector<std::size_t> idx(ae + ao + be + bo);
    for (std::size_t j = 0; j < ae; ++j) idx[j] = j;
    for (std::size_t j = 0; j < ao; ++j) idx[ae + j] = ae + be + j;
    for (std::size_t j = 0; j < be; ++j) idx[ae + ao + j] = ae + j;
    for (std::size_t j = 0; j < bo; ++j) idx[ae + ao + be + j] = ae + be + ao + j;
    return idx;
}

}  // namespace

template <class S>
GradedModule<S> parity_reverse(const GradedModule<S>& m) {
    auto p = perm_matrix<S>(reversal_index(m.even_dim, m.odd_dim));
    GradedModule<S> r;
    r.n = m.n;
    r.even_dim = m.odd_dim;
    r.odd_dim = m.even_dim;
    for (const auto& g : m.gens) r.gens.push_back(p * g * p.transpose());
    return r;
}
template GradedModule<Rational> parity_reverse(const GradedModule<Rational>&);
template GradedModule<GaussianRational> parity_reverse(const GradedModule<GaussianRational>&);

MonoModule parity_reverse(const MonoModule& m) {
    auto idx = reversal_index(m.even_dim, m.odd_dim);
    MonoModule r = m;
    r.even_dim = m.odd_dim;
    r.odd_dim = m.even_dim;
    for (auto& g : r.gens) g = g.conjugate_by(idx);
    return r;
}

template <class S>
GradedModule<S> direct_sum(const GradedModule<S>& a, const GradedModule<S>& b) {
    if (a.n != b.n) throw std::invalid_argument("direct sum of modules of different degrees");
    auto p = perm_matrix<S>(sum_index(a.even_dim, a.odd_dim, b.even_dim, b.odd_dim));
    GradedModule<S> r;
    r.n = a.n;
    r.even_dim = a.even_dim + b.even_dim;
    r.odd_dim = a.odd_dim + b.odd_dim;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        r.gens.push_back(p * superko::direct_sum(a.gens[i], b.gens[i]) * p.transpose());
    return r;
}
template GradedModule<Rational> direct_sum(const GradedModule<Rational>&, const GradedModule<Rational>&);
template GradedModule<GaussianRational> direct_sum(const GradedModule<GaussianRational>&,
                                                   const GradedModule<GaussianRational>&);

MonoModule direct_sum(const MonoModule& a, const MonoModule& b) {
    if (a.n != b.n) throw std::invalid_argument("direct sum of modules of different degrees");
    auto idx = sum_index(a.even_dim, a.odd_dim, b.even_dim, b.odd_dim);
    MonoModule r = a;
    r.even_dim = a.even_dim + b.even_dim;
    r.odd_dim = a.odd_dim + b.odd_dim;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        r.gens[i] = Monomial::direct_sum(a.gens[i], b.gens[i]).conjugate_by(idx);
    return r;
}

template <class S>
AssembledSum<S> assemble_sum(const std::vector<GradedModule<S>>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty direct sum");
    AssembledSum<S> out;
    GradedModule<S>& m = out.module;
    m.n = parts[0].n;
    for (const auto& p : parts) {
        if (p.n != m.n) throw std::invalid_argument("direct sum of modules of different degrees");
        m.even_dim += p.even_dim;
        m.odd_dim += p.odd_dim;
    }
    std::size_t e = 0, o = m.even_dim;
    for (const auto& p : parts) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < p.even_dim; ++j) idx.push_back(e++);
        for (std::size_t j = 0; j < p.odd_dim; ++j) idx.push_back(o++);
        out.indices.push_back(idx);
    }
    std::size_t d = m.dim();
    for (std::size_t g = 0; g < static_cast<std::size_t>(std::abs(m.n)); ++g) {
        Mat<S> big(d, d);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto& idx = out.indices[k];
            const auto& a = parts[k].gens[g];
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j)
                    if (!is_zero(a(i, j))) big(idx[i], idx[j]) = a(i, j);
        }
        m.gens.push_back(big);
    }
    return out;
}
template AssembledSum<Rational> assemble_sum(const std::vector<GradedModule<Rational>>&);
template AssembledSum<GaussianRational> assemble_sum(const std::vector<GradedModule<GaussianRational>>&);

template <class S>
GradedModule<S> transport(const GradedModule<S>& m, const Mat<S>& g) {
    Mat<S> gi = g.adjoint();
    if (gi * g != Mat<S>::identity(m.dim())) throw std::invalid_argument("transport needs an isometry");
    if (g * m.grading() != m.grading() * g) throw std::invalid_argument("transport needs an even map");
    GradedModule<S> r = m;
    for (auto& e : r.gens) e = g * e * gi;
    return r;
}
template GradedModule<Rational> transport(const GradedModule<Rational>&, const Mat<Rational>&);
template GradedModule<GaussianRational> transport(const GradedModule<GaussianRational>&,
                                                  const Mat<GaussianRational>&);

std::vector<std::vector<long>> i_map(int n, Field f) {
    const auto& up = irreducible_monomial(n + 1, f);
    std::vector<std::vector<long>> cols;
    for (const auto& m : up) {
        MonoModule img = n + 1 >= 1 ? restrict_module(m) : double_module(m);
        img.certify();
        cols.push_back(classify(img).mult);
    }
    return cols;
}

SmithForm smith_form(const std::vector<std::vector<Integer>>& m) {
    std::size_t r = m.size();
    std::size_t c = r ? m[0].size() : 0;
    auto a = m;
    std::vector<std::vector<Integer>> U(r, std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i) U[i][i] = 1;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst += q * row src
        for (std::size_t k = 0; k < c; ++k) a[dst][k] += q * a[src][k];
        for (std::size_t k = 0; k < r; ++k) U[dst][k] += q * U[src][k];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < r; ++k) a[k][dst] += q * a[k][src];
    };
    SmithForm out;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        // pivot: smallest non-zero entry of the trailing block
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
        out.diag.push_back(a[t][t]);
    }
    out.U = std::move(U);
    return out;
}

bool in_submonoid(const std::vector<long>& v, const std::vector<std::vector<long>>& cols) {
    for (long x : v)
        if (x < 0) return false;
    std::function<bool(std::size_t, std::vector<long>)> rec = [&](std::size_t k, std::vector<long> rest) {
        bool zero = std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; });
        if (zero) return true;
        if (k == cols.size()) return false;
        const auto& col = cols[k];
        bool nonzero = std::any_of(col.begin(), col.end(), [](long x) { return x != 0; });
        for (long t = 0;; ++t) {
            if (rec(k + 1, rest)) return true;
            if (!nonzero) return false;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= col[i];
                if (rest[i] < 0) return false;
            }
        }
    };
    return rec(0, v);
}

QuotientGroup quotient_group(int n, Field f) {
    if (std::abs(n) > 24) throw std::invalid_argument("|n| must be at most 24");
    QuotientGroup q;
    q.n = n;
    q.field = f;
    auto cols = i_map(n, f);
    std::size_t r = static_cast<std::size_t>(class_count(n, f));
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) m[i][j] = cols[j][i];
    auto snf = smith_form(m);
    std::size_t s = snf.diag.size();
    q.rank = static_cast<int>(r - s);
    for (const auto& d : snf.diag)
        if (d > 1) q.torsion.push_back(d);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Integer> img;
        for (std::size_t i = s; i < r; ++i) img.push_back(snf.U[i][j]);
        for (std::size_t i = 0; i < s; ++i) {
            if (snf.diag[i] == 1) continue;
            Integer x = snf.U[i][j] % snf.diag[i];
            if (x < 0) x += snf.diag[i];
            img.push_back(x);
        }
        q.generator_images.push_back(img);
    }
    const auto& irr = irreducible_monomial(n, f);
    q.inverses_verified = true;
    for (std::size_t j = 0; j < irr.size(); ++j) {
        auto w = classify(parity_reverse(irr[j])).mult;
        q.inverse_witnesses.push_back(w);
        std::vector<long> sum = w;
        sum[j] += 1;
        if (!in_submonoid(sum, cols)) q.inverses_verified = false;
    }
    return q;
}

QuotientGroup abs_quotient(int n) { return quotient_group(n, Field::Real); }
QuotientGroup abs_quotient_complex(int n) { return quotient_group(n, Field::Complex); }

std::string QuotientGroup::presentation() const {
    std::vector<std::string> parts;
    for (int k = 0; k < rank; ++k) parts.push_back("Z");
    for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) s += " + " + parts[k];
    return s;
}

}  // namespace superko
