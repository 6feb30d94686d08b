#include "superko/bordism.hpp"

#include <stdexcept>

namespace superko {

CliffordWord CliffordWord::scalar(int n, const GaussianRational& c) {
    CliffordWord w(n);
    w.add_term(0, c);
    return w;
}

CliffordWord CliffordWord::generator(int n, unsigned i) {
    CliffordWord w(n);
    if (i >= w.generator_count()) throw std::out_of_range("Clifford generator index out of range");
    w.add_term(Subset(1) << i, GaussianRational(1));
    return w;
}

CliffordWord CliffordWord::basis(int n, Subset s, const GaussianRational& c) {
    CliffordWord w(n);
    if (s >> w.generator_count()) throw std::out_of_range("Clifford subset out of range");
    w.add_term(s, c);
    return w;
}

void CliffordWord::add_term(Subset s, const GaussianRational& c) {
    auto it = t_.find(s);
    if (it == t_.end()) {
        if (!superko::is_zero(c)) t_.emplace(s, c);
        return;
    }
    it->second += c;
    if (superko::is_zero(it->second)) t_.erase(it);
}

CliffordWord& CliffordWord::operator+=(const CliffordWord& o) {
    if (o.n_ != n_) throw std::invalid_argument("Clifford words of different degrees");
    for (const auto& [s, c] : o.t_) add_term(s, c);
    return *this;
}

CliffordWord operator*(CliffordWord a, const GaussianRational& c) {
    CliffordWord r(a.n_);
    for (const auto& [s, x] : a.t_) r.add_term(s, x * c);
    return r;
}

CliffordWord operator*(const CliffordWord& a, const CliffordWord& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Clifford words of different degrees");
    int sq = a.n_ > 0 ? 1 : -1;
    CliffordWord r(a.n_);
    for (const auto& [sa, ca] : a.t_)
        for (const auto& [sb, cb] : b.t_) {
            Subset cur = sa;
            int sign = 1;
            for (Subset rest = sb; rest; rest &= rest - 1) {
                unsigned j = static_cast<unsigned>(std::countr_zero(rest));
                if (std::popcount(cur >> (j + 1)) & 1) sign = -sign;
                Subset bit = Subset(1) << j;
                if (cur & bit) sign *= sq;
                cur ^= bit;
            }
            r.add_term(cur, ca * cb * GaussianRational(sign));
        }
    return r;
}

CliffordWord CliffordWord::eps_star() const {
    CliffordWord r(n_);
    for (const auto& [s, c] : t_) r.add_term(s, subset_parity(s) ? -c : c);
    return r;
}

std::string CliffordWord::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        for (unsigned i = 0; i < generator_count(); ++i)
            if (s & (Subset(1) << i)) out += "e" + std::to_string(i + 1);
    }
    return out;
}

namespace {

bool positive_real_body(const CG& z) { return superko::is_zero(z.body().im) && sgn(z.body().re) > 0; }

}  // namespace

IntervalParams make_interval(const CG& z, const CG& theta) {
    if (!z.is_even() || !theta.is_odd() || z.q() != theta.q())
        throw std::invalid_argument("interval needs z even and theta odd in one algebra");
    if (!positive_real_body(z)) throw std::invalid_argument("interval length must have positive real body");
    return {z, theta};
}

IntervalParams compose(const IntervalParams& outer, const IntervalParams& inner) {
    return {outer.z + inner.z + outer.theta * inner.theta, outer.theta + inner.theta};
}

SebEndo SebEndo::identity(int n) {
    SebEndo e;
    e.n = n;
    e.c = CliffordWord::one(n);
    return e;
}

SebEndo SebEndo::eps(int n) {
    SebEndo e = identity(n);
    e.twist = true;
    return e;
}

SebEndo SebEndo::clifford(const CliffordWord& c) {
    SebEndo e = identity(c.n());
    e.c = c;
    return e;
}

SebEndo SebEndo::interval_of(int n, const CG& z, const CG& theta) {
    SebEndo e = identity(n);
    e.interval = make_interval(z, theta);
    return e;
}

std::string SebEndo::describe() const {
    std::string s = twist ? "eps * " : "";
    s += "[" + c.str() + "]";
    if (interval) s += " * I(z=" + interval->z.str() + ", theta=" + interval->theta.str() + ")";
    return s;
}

namespace {

IntervalParams flip(const IntervalParams& p) { return {p.z, -p.theta}; }
AnnulusParams flip(const AnnulusParams& p) { return {p.x, p.y, -p.theta}; }

template <class P>
std::optional<P> merge(const std::optional<P>& outer, const std::optional<P>& inner) {
    if (outer && inner) return compose(*outer, *inner);
    return outer ? outer : inner;
}

}  // namespace

SebEndo seb_compose(const SebEndo& a, const SebEndo& b) {
    if (a.n != b.n) throw std::invalid_argument("bordisms of different degrees");
    SebEndo r;
    r.n = a.n;
    r.twist = a.twist != b.twist;
    r.c = (b.twist ? a.c.eps_star() : a.c) * b.c;
    std::optional<IntervalParams> outer = a.interval;
    if (outer && b.twist) outer = flip(*outer);
    r.interval = merge(outer, b.interval);
    return r;
}

SebWord to_word(const SebEndo& e) {
    SebWord w;
    using K = SebLetter::Kind;
    if (e.twist) w.push_back({K::Eps, {}, {}});
    w.push_back({K::Cliff, e.c, {}});
    if (e.interval) w.push_back({K::Interval, {}, *e.interval});
    return w;
}

SebEndo seb_normalize(SebWord word, int n, std::mt19937_64* rng) {
    using K = SebLetter::Kind;
    auto redex = [](const SebLetter& l, const SebLetter& r) {
        if (l.kind == K::Eps) return r.kind == K::Eps;
        if (l.kind == K::Cliff) return r.kind == K::Cliff || r.kind == K::Eps;
        return true;  // an interval moves right past everything
    };
    for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (redex(word[i], word[i + 1])) spots.push_back(i);
        if (spots.empty()) break;
        std::size_t i = rng ? spots[(*rng)() % spots.size()] : spots.front();
        SebLetter l = word[i], r = word[i + 1];
        std::vector<SebLetter> repl;
        if (l.kind == K::Eps) {
            // eps eps = 1
        } else if (l.kind == K::Cliff && r.kind == K::Cliff) {
            repl = {{K::Cliff, l.c * r.c, {}}};
        } else if (l.kind == K::Cliff) {
            repl = {r, {K::Cliff, l.c.eps_star(), {}}};
        } else if (r.kind == K::Eps) {
            repl = {r, {K::Interval, {}, flip(l.interval)}};
        } else if (r.kind == K::Cliff) {
            repl = {r, l};
        } else {
            repl = {{K::Interval, {}, compose(l.interval, r.interval)}};
        }
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        word.insert(word.begin() + static_cast<long>(i), repl.begin(), repl.end());
    }
    SebEndo e = SebEndo::identity(n);
    for (const auto& l : word) {
        if (l.kind == K::Eps) e.twist = true;
        if (l.kind == K::Cliff) e.c = l.c;
        if (l.kind == K::Interval) e.interval = l.interval;
    }
    return e;
}

AnnulusParams make_annulus(const CCircle& x, const CG& y, const CG& theta) {
    if (!y.is_even() || !theta.is_odd() || y.q() != theta.q() || x.q() != y.q())
        throw std::invalid_argument("annulus needs y even and theta odd in one algebra");
    if (!positive_real_body(y)) throw std::invalid_argument("annulus modulus must have positive real body");
    return {x, y, theta};
}

AnnulusParams compose(const AnnulusParams& outer, const AnnulusParams& inner) {
    CG tt = inner.theta * outer.theta;
    GaussianRational half(Rational(1, 2));
    GaussianRational ihalf(Rational(0), Rational(1, 2));
    return {inner.x + outer.x + (-(tt * half)), inner.y + outer.y - tt * ihalf, inner.theta + outer.theta};
}

namespace {

AnnulusParams rotate(const AnnulusParams& a, const CCircle& r) { return {a.x - r, a.y, a.theta}; }

}  // namespace

SabEndo SabEndo::identity(int n, unsigned q) {
    SabEndo e;
    e.n = n;
    e.c = CliffordWord::one(n);
    e.rotation = CCircle(q, Rational(0));
    return e;
}

SabEndo SabEndo::eps(int n, unsigned q) {
    SabEndo e = identity(n, q);
    e.twist = true;
    return e;
}

SabEndo SabEndo::clifford(const CliffordWord& c, unsigned q) {
    SabEndo e = identity(c.n(), q);
    e.c = c;
    return e;
}

SabEndo SabEndo::rotation_by(int n, const CCircle& x) {
    SabEndo e = identity(n, x.q());
    e.rotation = x;
    return e;
}

SabEndo SabEndo::annulus_of(int n, const CCircle& x, const CG& y, const CG& theta) {
    SabEndo e = identity(n, x.q());
    e.annulus = make_annulus(x, y, theta);
    return e;
}

std::string SabEndo::describe() const {
    std::string s = twist ? "eps * " : "";
    s += "[" + c.str() + "]";
    if (annulus)
        s += " * A(x=" + annulus->x.lift().str() + ", y=" + annulus->y.str() + ", theta=" + annulus->theta.str() + ")";
    else
        s += " * tau(" + rotation.lift().str() + ")";
    return s;
}

SabEndo sab_compose(const SabEndo& a, const SabEndo& b) {
    if (a.n != b.n) throw std::invalid_argument("bordisms of different degrees");
    SabEndo r = SabEndo::identity(a.n, a.rotation.q());
    r.twist = a.twist != b.twist;
    r.c = (b.twist ? a.c.eps_star() : a.c) * b.c;
    std::optional<AnnulusParams> outer = a.annulus;
    if (outer && b.twist) outer = flip(*outer);
    if (outer && b.annulus) {
        r.annulus = compose(*outer, *b.annulus);
    } else if (outer) {
        r.annulus = rotate(*outer, b.rotation);
    } else if (b.annulus) {
        r.annulus = rotate(*b.annulus, a.rotation);
    } else {
        r.rotation = a.rotation + b.rotation;
    }
    return r;
}

SabWord to_word(const SabEndo& e) {
    using K = SabLetter::Kind;
    SabWord w;
    if (e.twist) w.push_back({K::Eps, {}, {}, {}});
    w.push_back({K::Cliff, e.c, {}, {}});
    if (e.annulus)
        w.push_back({K::Annulus, {}, {}, *e.annulus});
    else
        w.push_back({K::Rotation, {}, e.rotation, {}});
    return w;
}

SabEndo sab_normalize(SabWord word, int n, unsigned q, std::mt19937_64* rng) {
    using K = SabLetter::Kind;
    auto redex = [](const SabLetter& l, const SabLetter& r) {
        if (l.kind == K::Eps) return r.kind == K::Eps;
        if (l.kind == K::Cliff) return r.kind == K::Cliff || r.kind == K::Eps;
        return true;
    };
    for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (redex(word[i], word[i + 1])) spots.push_back(i);
        if (spots.empty()) break;
        std::size_t i = rng ? spots[(*rng)() % spots.size()] : spots.front();
        SabLetter l = word[i], r = word[i + 1];
        std::vector<SabLetter> repl;
        if (l.kind == K::Eps) {
        } else if (l.kind == K::Cliff && r.kind == K::Cliff) {
            repl = {{K::Cliff, l.c * r.c, {}, {}}};
        } else if (l.kind == K::Cliff) {
            repl = {r, {K::Cliff, l.c.eps_star(), {}, {}}};
        } else if (r.kind == K::Eps) {
            SabLetter moved = l;
            if (l.kind == K::Annulus) moved.annulus = flip(l.annulus);
            repl = {r, moved};
        } else if (r.kind == K::Cliff) {
            repl = {r, l};
        } else if (l.kind == K::Rotation && r.kind == K::Rotation) {
            repl = {{K::Rotation, {}, l.x + r.x, {}}};
        } else if (l.kind == K::Rotation) {
            repl = {{K::Annulus, {}, {}, rotate(r.annulus, l.x)}};
        } else if (r.kind == K::Rotation) {
            repl = {{K::Annulus, {}, {}, rotate(l.annulus, r.x)}};
        } else {
            repl = {{K::Annulus, {}, {}, compose(l.annulus, r.annulus)}};
        }
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        word.insert(word.begin() + static_cast<long>(i), repl.begin(), repl.end());
    }
    SabEndo e = SabEndo::identity(n, q);
    for (const auto& l : word) {
        if (l.kind == K::Eps) e.twist = true;
        if (l.kind == K::Cliff) e.c = l.c;
        if (l.kind == K::Rotation) e.rotation = l.x;
        if (l.kind == K::Annulus) e.annulus = l.annulus;
    }
    return e;
}

namespace {

CG pull(const CG& g, const std::vector<CG>& images) { return g.substitute(images); }
CCircle pull(const CCircle& x, const std::vector<CG>& images) { return CCircle(x.lift().substitute(images)); }

}  // namespace

SebEndo base_change(const SebEndo& e, const std::vector<CG>& images) {
    SebEndo r = e;
    if (e.interval) r.interval = IntervalParams{pull(e.interval->z, images), pull(e.interval->theta, images)};
    return r;
}

SabEndo base_change(const SabEndo& e, const std::vector<CG>& images) {
    SabEndo r = e;
    r.rotation = pull(e.rotation, images);
    if (e.annulus)
        r.annulus = AnnulusParams{pull(e.annulus->x, images), pull(e.annulus->y, images), pull(e.annulus->theta, images)};
    return r;
}

namespace {

void require_rank_one(const CliffordWord& c) {
    if (c.n() != -1) throw std::invalid_argument("the Fock module carries a Cl_1 action (degree -1 words)");
}

// lambda acting on a + b lambda: -b + a lambda
FockVector times_lambda(const FockVector& v) { return {-v.lambda_omega, v.omega}; }

FockVector apply_word(const CliffordWord& c, const FockVector& v) {
    require_rank_one(c);
    FockVector r{GaussianRational(0), GaussianRational(0)};
    for (const auto& [s, coeff] : c.terms()) {
        FockVector t = s ? times_lambda(v) : v;
        r.omega += coeff * t.omega;
        r.lambda_omega += coeff * t.lambda_omega;
    }
    return r;
}

}  // namespace

FockVector FockVacuumModule::left(const CliffordWord& c, const FockVector& v) { return apply_word(c, v); }

// Omega lambda = lambda Omega, and the module is commutative in rank one.
FockVector FockVacuumModule::right(const FockVector& v, const CliffordWord& c) { return apply_word(c, v); }

FockVector FockVacuumModule::act(const CliffordWord& c_left, const FockVector& psi, const CliffordWord& c_right) {
    return left(c_left, right(psi, c_right));
}

FockVector FockVacuumModule::glue(const FockVector& a, const FockVector& b) {
    return {a.omega * b.omega - a.lambda_omega * b.lambda_omega, a.omega * b.lambda_omega + a.lambda_omega * b.omega};
}

}  // namespace superko
