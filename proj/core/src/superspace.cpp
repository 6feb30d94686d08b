#include "superko/superspace.hpp"

#include <functional>
#include <stdexcept>

namespace superko {

namespace {

std::size_t even_count(Space s) {
    switch (s) {
        case Space::R01: return 0;
        case Space::R11:
        case Space::S: return 1;
        case Space::A: return 2;
    }
    return 0;
}

bool circular_first(Space s) { return s == Space::S || s == Space::A; }

GaussianRational half() { return GaussianRational(Rational(1, 2)); }
GaussianRational i_half() { return GaussianRational(Rational(0), Rational(1, 2)); }

void require_even(const CG& g, const char* what) {
    if (!g.is_even()) throw std::invalid_argument(std::string(what) + " must be even");
}
void require_odd(const CG& g, const char* what) {
    if (!g.is_odd()) throw std::invalid_argument(std::string(what) + " must be odd");
}

bool is_integer(const GaussianRational& g) { return is_zero(g.im) && g.re.get_den() == 1; }

}  // namespace

std::string to_string(Space s) {
    switch (s) {
        case Space::R01: return "R^{0|1}";
        case Space::R11: return "R^{1|1}";
        case Space::S: return "S";
        case Space::A: return "A";
    }
    return "?";
}

bool same_point(const SuperPoint& a, const SuperPoint& b) {
    if (a.space != b.space || a.even.size() != b.even.size() || a.odd != b.odd) return false;
    for (std::size_t k = 0; k < a.even.size(); ++k) {
        if (k == 0 && circular_first(a.space)) {
            CG d = a.even[0] - b.even[0];
            if (!d.soul().is_zero() || !is_integer(d.body())) return false;
        } else if (a.even[k] != b.even[k]) {
            return false;
        }
    }
    return true;
}

SuperMap SuperMap::identity(Space s, unsigned q) {
    CG zero(q);
    CCircle x0(q, Rational(0));
    switch (s) {
        case Space::R01: return SuperMap(MapKind::Id0, false, zero, zero, x0);
        case Space::R11: return SuperMap(MapKind::Tau, false, zero, zero, x0);
        case Space::S: return SuperMap(MapKind::TauS, false, zero, zero, x0);
        case Space::A: return SuperMap(MapKind::Kappa, false, zero, zero, x0);
    }
    throw std::invalid_argument("unknown space");
}

SuperMap SuperMap::gamma(const CG& z, const CG& theta) {
    require_even(z, "z");
    require_odd(theta, "theta");
    if (z.q() != theta.q()) throw std::invalid_argument("parameters live in different algebras");
    return SuperMap(MapKind::Gamma, false, z, theta, CCircle(z.q(), Rational(0)));
}

SuperMap SuperMap::tau(const CG& z, const CG& theta) {
    SuperMap m = gamma(z, theta);
    m.kind_ = MapKind::Tau;
    return m;
}

SuperMap SuperMap::tau_s(const CCircle& x) {
    CG zero(x.q());
    return SuperMap(MapKind::TauS, false, zero, zero, x);
}

SuperMap SuperMap::nu(const CCircle& x, const CG& y, const CG& theta) {
    require_even(y, "y");
    require_odd(theta, "theta");
    if (y.q() != theta.q() || x.q() != y.q()) throw std::invalid_argument("parameters live in different algebras");
    return SuperMap(MapKind::Nu, false, y, theta, x);
}

SuperMap SuperMap::kappa(const CCircle& x, const CG& y, const CG& theta) {
    SuperMap m = nu(x, y, theta);
    m.kind_ = MapKind::Kappa;
    return m;
}

SuperMap SuperMap::twisted() const {
    SuperMap m(*this);
    m.twist_ = !m.twist_;
    return m;
}

Space SuperMap::domain() const {
    switch (kind_) {
        case MapKind::Id0:
        case MapKind::Gamma: return Space::R01;
        case MapKind::Tau: return Space::R11;
        case MapKind::TauS:
        case MapKind::Nu: return Space::S;
        case MapKind::Kappa: return Space::A;
    }
    return Space::R01;
}

Space SuperMap::codomain() const {
    switch (kind_) {
        case MapKind::Id0: return Space::R01;
        case MapKind::Gamma:
        case MapKind::Tau: return Space::R11;
        case MapKind::TauS: return Space::S;
        case MapKind::Nu:
        case MapKind::Kappa: return Space::A;
    }
    return Space::R01;
}

SuperPoint SuperMap::apply(const SuperPoint& p) const {
    if (p.space != domain()) throw std::invalid_argument("point does not lie in the domain " + to_string(domain()));
    if (p.even.size() != even_count(p.space)) throw std::invalid_argument("wrong number of even coordinates");
    unsigned Q = p.q();
    if (Q < q()) throw std::invalid_argument("point algebra smaller than the parameter algebra");
    for (const auto& w : p.even) {
        require_even(w, "even coordinate");
        if (w.q() != Q) throw std::invalid_argument("coordinates live in different algebras");
    }
    require_odd(p.odd, "odd coordinate");
    CG eta = twist_ ? -p.odd : p.odd;
    CG z = z_.extend(Q), th = theta_.extend(Q), x = x_.lift().extend(Q);
    CG the = th * eta;
    SuperPoint r;
    r.space = codomain();
    switch (kind_) {
        case MapKind::Id0:
            r.odd = eta;
            break;
        case MapKind::Gamma:
            r.even = {z - the};
            r.odd = th + eta;
            break;
        case MapKind::Tau:
            r.even = {p.even[0] + z - the};
            r.odd = th + eta;
            break;
        case MapKind::TauS:
            r.even = {p.even[0] + x};
            r.odd = eta;
            break;
        case MapKind::Nu:
            r.even = {p.even[0] + x - the * half(), z - the * i_half()};
            r.odd = th + eta;
            break;
        case MapKind::Kappa:
            r.even = {p.even[0] + x - the * half(), p.even[1] + z - the * i_half()};
            r.odd = th + eta;
            break;
    }
    return r;
}

SuperMap SuperMap::eps_conjugate() const {
    SuperMap m(*this);
    m.theta_ = -m.theta_;
    return m;
}

bool operator==(const SuperMap& a, const SuperMap& b) {
    return a.kind_ == b.kind_ && a.twist_ == b.twist_ && a.z_ == b.z_ && a.theta_ == b.theta_ && a.x_ == b.x_;
}

std::string SuperMap::describe() const {
    std::string s;
    switch (kind_) {
        case MapKind::Id0: s = "id"; break;
        case MapKind::Gamma: s = "gamma(z=" + z_.str() + ", theta=" + theta_.str() + ")"; break;
        case MapKind::Tau: s = "tau(z=" + z_.str() + ", theta=" + theta_.str() + ")"; break;
        case MapKind::TauS: s = "tau_S(x=" + x_.lift().str() + ")"; break;
        case MapKind::Nu:
            s = "nu(x=" + x_.lift().str() + ", y=" + z_.str() + ", theta=" + theta_.str() + ")";
            break;
        case MapKind::Kappa:
            s = "kappa(x=" + x_.lift().str() + ", y=" + z_.str() + ", theta=" + theta_.str() + ")";
            break;
    }
    return twist_ ? s + " o eps" : s;
}

SuperMap compose(const SuperMap& m2, const SuperMap& m1) {
    if (m1.codomain() != m2.domain())
        throw std::invalid_argument("cannot compose: " + to_string(m1.codomain()) + " vs " + to_string(m2.domain()));
    if (m1.q() != m2.q()) throw std::invalid_argument("maps use different parameter algebras");
    // m2 o m1 = B2 (eps^t2 B1 eps^t2) eps^(t1 + t2)
    SuperMap b1 = m2.twist() ? m1.eps_conjugate() : m1;
    bool tw = m1.twist() != m2.twist();
    const CG& z2 = m2.even_param();
    const CG& t2 = m2.theta();
    const CG& z1 = b1.even_param();
    const CG& t1 = b1.theta();
    SuperMap out = SuperMap::identity(Space::R01, m1.q());
    switch (m2.kind()) {
        case MapKind::Id0:
            out = SuperMap::identity(Space::R01, m1.q());
            break;
        case MapKind::Gamma:
            out = SuperMap::gamma(z2, t2);
            break;
        case MapKind::Tau:
            if (b1.kind() == MapKind::Gamma)
                out = SuperMap::gamma(z1 + z2 - t2 * t1, t1 + t2);
            else
                out = SuperMap::tau(z1 + z2 - t2 * t1, t1 + t2);
            break;
        case MapKind::TauS:
            out = SuperMap::tau_s(b1.x() + m2.x());
            break;
        case MapKind::Nu:
            out = SuperMap::nu(b1.x() + m2.x(), z2, t2);
            break;
        case MapKind::Kappa: {
            CG tt = t2 * t1;
            CCircle x = b1.x() + m2.x() + (-(tt * half()));
            CG y = z1 + z2 - tt * i_half();
            out = b1.kind() == MapKind::Nu ? SuperMap::nu(x, y, t1 + t2) : SuperMap::kappa(x, y, t1 + t2);
            break;
        }
    }
    return tw ? out.twisted() : out;
}

SuperPoint GenericAffineMap::apply(const SuperPoint& p) const {
    if (p.space != Space::R11 || p.even.size() != 1) throw std::invalid_argument("generic maps act on R^{1|1}");
    unsigned Q = p.q();
    const CG& w = p.even[0];
    const CG& eta = p.odd;
    SuperPoint r;
    r.space = Space::R11;
    r.even = {a0.extend(Q) + a1.extend(Q) * w + a2.extend(Q) * eta};
    r.odd = b0.extend(Q) + b1.extend(Q) * w + b2.extend(Q) * eta;
    return r;
}

SuperMap GenericAffineMap::classify() const {
    require_even(a0, "a0");
    require_even(a1, "a1");
    require_odd(a2, "a2");
    require_odd(b0, "b0");
    require_odd(b1, "b1");
    require_even(b2, "b2");
    CG one(a0.q(), GaussianRational(1));
    if (a1 == one && b1.is_zero()) {
        if (b2 == one && a2 == -b0) return SuperMap::tau(a0, b0);
        if (b2 == -one && a2 == b0) return SuperMap::tau(a0, b0).twisted();
    }
    throw std::domain_error("affine map does not preserve ds + l dl");
}

namespace {

enum class Form { LdL, DsLdL, Ds, Omega1, Omega2 };

CG form_value(Form f, const SuperPoint& p, const std::vector<CG>& de, const CG& dodd) {
    GaussianRational i = GaussianRational::i();
    switch (f) {
        case Form::LdL: return p.odd * dodd;
        case Form::DsLdL: return de[0] + p.odd * dodd;
        case Form::Ds: return de[0];
        case Form::Omega1: return de[0] + de[1] * i;
        case Form::Omega2: return de[0] - de[1] * i + p.odd * dodd;
    }
    return CG();
}

bool check_forms(const std::function<SuperPoint(const SuperPoint&)>& f, Space dom, unsigned q,
                 const std::vector<std::pair<Form, Form>>& pairs) {
    unsigned Q = q + 2;
    CG eta = CG::generator(Q, q);
    CG deta = CG::generator(Q, q + 1);
    std::size_t ne = even_count(dom);
    const long grid[3] = {-1, 0, 2};
    std::size_t combos = 1;
    for (std::size_t k = 0; k < 2 * ne; ++k) combos *= 3;
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t code = c;
        SuperPoint p, pd;
        p.space = pd.space = dom;
        std::vector<CG> dw;
        for (std::size_t k = 0; k < ne; ++k) {
            long w = grid[code % 3];
            code /= 3;
            long d = grid[code % 3];
            code /= 3;
            p.even.push_back(CG(Q, GaussianRational(w)));
            pd.even.push_back(CG(Q, GaussianRational(w + d)));
            dw.push_back(CG(Q, GaussianRational(d)));
        }
        p.odd = eta;
        pd.odd = eta + deta;
        SuperPoint fp = f(p);
        SuperPoint fpd = f(pd);
        std::vector<CG> de;
        for (std::size_t k = 0; k < fp.even.size(); ++k) de.push_back(fpd.even[k] - fp.even[k]);
        CG dodd = fpd.odd - fp.odd;
        for (auto [target, source] : pairs)
            if (form_value(target, fp, de, dodd) != form_value(source, p, dw, deta)) return false;
    }
    return true;
}

}  // namespace

bool pullback_check(const SuperMap& m) {
    std::vector<std::pair<Form, Form>> pairs;
    switch (m.kind()) {
        case MapKind::Id0: pairs = {{Form::LdL, Form::LdL}}; break;
        case MapKind::Gamma: pairs = {{Form::DsLdL, Form::LdL}}; break;
        case MapKind::Tau:
        case MapKind::TauS: pairs = {{Form::DsLdL, Form::DsLdL}}; break;
        case MapKind::Nu: pairs = {{Form::Omega1, Form::Ds}, {Form::Omega2, Form::DsLdL}}; break;
        case MapKind::Kappa: pairs = {{Form::Omega1, Form::Omega1}, {Form::Omega2, Form::Omega2}}; break;
    }
    return check_forms([&](const SuperPoint& p) { return m.apply(p); }, m.domain(), m.q(), pairs);
}

bool pullback_check(const GenericAffineMap& m) {
    return check_forms([&](const SuperPoint& p) { return m.apply(p); }, Space::R11, m.a0.q(),
                       {{Form::DsLdL, Form::DsLdL}});
}

ReducedSpace ReducedMap::domain() const {
    switch (kind) {
        case Kind::Identity:
        case Kind::PointMap: return ReducedSpace::Point;
        case Kind::Translation: return ReducedSpace::Line;
        case Kind::Rotation:
        case Kind::Embedding: return ReducedSpace::Circle;
        case Kind::AnnulusTranslation: return ReducedSpace::Annulus;
    }
    return ReducedSpace::Point;
}

ReducedSpace ReducedMap::codomain() const {
    switch (kind) {
        case Kind::Identity: return ReducedSpace::Point;
        case Kind::PointMap:
        case Kind::Translation: return ReducedSpace::Line;
        case Kind::Rotation: return ReducedSpace::Circle;
        case Kind::Embedding:
        case Kind::AnnulusTranslation: return ReducedSpace::Annulus;
    }
    return ReducedSpace::Point;
}

std::string ReducedMap::describe() const {
    switch (kind) {
        case Kind::Identity: return "identity of a point";
        case Kind::PointMap: return "point -> " + to_string(a);
        case Kind::Translation: return "w -> w + " + to_string(a);
        case Kind::Rotation: return "w -> w + " + to_string(a) + " mod 1";
        case Kind::Embedding: return "w -> (w + " + to_string(a) + " mod 1, " + to_string(b) + ")";
        case Kind::AnnulusTranslation: return "(w, w') -> (w + " + to_string(a) + " mod 1, w' + " + to_string(b) + ")";
    }
    return "?";
}

namespace {

GaussianRational mod1(const GaussianRational& g) { return GaussianRational(frac_part(g.re), g.im); }

ReducedMap make_reduced(ReducedMap::Kind k, const GaussianRational& a, const GaussianRational& b = GaussianRational(0)) {
    ReducedMap r;
    r.kind = k;
    bool circular = k == ReducedMap::Kind::Rotation || k == ReducedMap::Kind::Embedding ||
                    k == ReducedMap::Kind::AnnulusTranslation;
    r.a = circular ? mod1(a) : a;
    r.b = b;
    return r;
}

}  // namespace

ReducedMap reduce(const SuperMap& m) {
    using K = ReducedMap::Kind;
    GaussianRational x(m.x().body());
    switch (m.kind()) {
        case MapKind::Id0: return make_reduced(K::Identity, GaussianRational(0));
        case MapKind::Gamma: return make_reduced(K::PointMap, m.even_param().body());
        case MapKind::Tau: return make_reduced(K::Translation, m.even_param().body());
        case MapKind::TauS: return make_reduced(K::Rotation, x);
        case MapKind::Nu: return make_reduced(K::Embedding, x, m.even_param().body());
        case MapKind::Kappa: return make_reduced(K::AnnulusTranslation, x, m.even_param().body());
    }
    return ReducedMap{};
}

ReducedMap compose(const ReducedMap& r2, const ReducedMap& r1) {
    using K = ReducedMap::Kind;
    if (r1.codomain() != r2.domain()) throw std::invalid_argument("reduced maps are not composable");
    switch (r2.kind) {
        case K::Identity: return r1;
        case K::PointMap: return r2;
        case K::Translation: return make_reduced(r1.kind, r1.a + r2.a);
        case K::Rotation: return make_reduced(K::Rotation, r1.a + r2.a);
        case K::Embedding: return make_reduced(K::Embedding, r1.a + r2.a, r2.b);
        case K::AnnulusTranslation: return make_reduced(r1.kind, r1.a + r2.a, r1.b + r2.b);
    }
    return r1;
}

SuperMap lift(const SuperMap& m) {
    unsigned q = m.q();
    CG zero(q);
    CG zb(q, m.even_param().body());
    CCircle xb(q, m.x().body());
    SuperMap out = SuperMap::identity(Space::R01, q);
    switch (m.kind()) {
        case MapKind::Id0: out = SuperMap::identity(Space::R01, q); break;
        case MapKind::Gamma: out = SuperMap::gamma(zb, zero); break;
        case MapKind::Tau: out = SuperMap::tau(zb, zero); break;
        case MapKind::TauS: out = SuperMap::tau_s(xb); break;
        case MapKind::Nu: out = SuperMap::nu(xb, zb, zero); break;
        case MapKind::Kappa: out = SuperMap::kappa(xb, zb, zero); break;
    }
    return m.twist() ? out.twisted() : out;
}

}  // namespace superko
