#pragma once

#include <string>
#include <vector>

#include "superko/grassmann.hpp"

namespace superko {

using CG = ComplexGrassmann;
using CCircle = CircleValue<GaussianRational>;

// R^{0|1}, R^{1|1}, the super circle S and the super annulus A.
enum class Space { R01, R11, S, A };

std::string to_string(Space s);

// A B-point: the even coordinates (none, w, or w and w') and the odd one.
struct SuperPoint {
    Space space = Space::R01;
    std::vector<CG> even;
    CG odd;

    unsigned q() const { return odd.q(); }
};

// Equality of points, reading the first coordinate of S and A modulo Z.
bool same_point(const SuperPoint& a, const SuperPoint& b);

// A point with a tangent vector at it.
struct TangentVector {
    SuperPoint base;
    std::vector<CG> d_even;
    CG d_odd;
};

enum class MapKind { Id0, Gamma, Tau, TauS, Nu, Kappa };

class SuperMap {
public:
    static SuperMap identity(Space s, unsigned q);
    static SuperMap eps00(unsigned q) { return identity(Space::R01, q).twisted(); }
    static SuperMap eps11(unsigned q) { return identity(Space::R11, q).twisted(); }
    static SuperMap eps_s(unsigned q) { return identity(Space::S, q).twisted(); }
    static SuperMap eps_a(unsigned q) { return identity(Space::A, q).twisted(); }
    static SuperMap gamma(const CG& z, const CG& theta);
    static SuperMap tau(const CG& z, const CG& theta);
    static SuperMap tau_s(const CCircle& x);
    static SuperMap nu(const CCircle& x, const CG& y, const CG& theta);
    static SuperMap kappa(const CCircle& x, const CG& y, const CG& theta);

    // this map precomposed with the grading involution
    SuperMap twisted() const;

    MapKind kind() const { return kind_; }
    bool twist() const { return twist_; }
    unsigned q() const { return theta_.q(); }
    Space domain() const;
    Space codomain() const;

    // z for gamma and tau, y for nu and kappa
    const CG& even_param() const { return z_; }
    const CG& theta() const { return theta_; }
    const CCircle& x() const { return x_; }

    SuperPoint apply(const SuperPoint& p) const;
    // The grading involution on both sides: eps o m o eps.
    SuperMap eps_conjugate() const;

    friend bool operator==(const SuperMap& a, const SuperMap& b);
    friend bool operator!=(const SuperMap& a, const SuperMap& b) { return !(a == b); }

    std::string describe() const;

private:
    SuperMap(MapKind k, bool tw, CG z, CG th, CCircle x) : kind_(k), twist_(tw), z_(std::move(z)), theta_(std::move(th)), x_(std::move(x)) {}

    MapKind kind_ = MapKind::Id0;
    bool twist_ = false;
    CG z_;
    CG theta_;
    CCircle x_;
};

// m2 o m1 in normal form.
SuperMap compose(const SuperMap& m2, const SuperMap& m1);

// An affine map R^{1|1} -> R^{1|1}:
// (w, eta) -> (a0 + a1 w + a2 eta, b0 + b1 w + b2 eta).
struct GenericAffineMap {
    CG a0, a1, a2, b0, b1, b2;

    SuperPoint apply(const SuperPoint& p) const;
    // The catalogued map equal to this one; throws std::domain_error if none.
    SuperMap classify() const;
};

// True iff the map pulls back the standard forms of its codomain to the
// standard forms of its domain, checked on symbolic tangent vectors.
bool pullback_check(const SuperMap& m);
bool pullback_check(const GenericAffineMap& m);

enum class ReducedSpace { Point, Line, Circle, Annulus };

// The map of underlying manifolds.
struct ReducedMap {
    enum class Kind { Identity, PointMap, Translation, Rotation, Embedding, AnnulusTranslation };
    Kind kind = Kind::Identity;
    GaussianRational a;
    GaussianRational b;

    ReducedSpace domain() const;
    ReducedSpace codomain() const;
    friend bool operator==(const ReducedMap& l, const ReducedMap& r) {
        return l.kind == r.kind && l.a == r.a && l.b == r.b;
    }
    std::string describe() const;
};

ReducedMap reduce(const SuperMap& m);
ReducedMap compose(const ReducedMap& r2, const ReducedMap& r1);

// The body-parameter map with the odd parameter dropped.
SuperMap lift(const SuperMap& m);

}  // namespace superko
