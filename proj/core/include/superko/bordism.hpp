#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superko/superspace.hpp"

namespace superko {

// Element of Cl_{-n}: generators e_1..e_|n| with e_i^2 = sgn(n).
class CliffordWord {
public:
    CliffordWord() = default;
    explicit CliffordWord(int n) : n_(n) {}
    static CliffordWord scalar(int n, const GaussianRational& c);
    static CliffordWord one(int n) { return scalar(n, GaussianRational(1)); }
    static CliffordWord generator(int n, unsigned i);  // e_{i+1}
    static CliffordWord basis(int n, Subset s, const GaussianRational& c);

    int n() const { return n_; }
    unsigned generator_count() const { return static_cast<unsigned>(n_ < 0 ? -n_ : n_); }
    const std::map<Subset, GaussianRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    CliffordWord& operator+=(const CliffordWord& o);
    friend CliffordWord operator+(CliffordWord a, const CliffordWord& b) { return a += b; }
    friend CliffordWord operator-(CliffordWord a, const CliffordWord& b) { return a += b * GaussianRational(-1); }
    friend CliffordWord operator*(CliffordWord a, const GaussianRational& c);
    friend CliffordWord operator*(const CliffordWord& a, const CliffordWord& b);
    friend bool operator==(const CliffordWord& a, const CliffordWord& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const CliffordWord& a, const CliffordWord& b) { return !(a == b); }

    // The grading automorphism: e_i -> -e_i.
    CliffordWord eps_star() const;
    std::string str() const;

private:
    void add_term(Subset s, const GaussianRational& c);
    int n_ = 0;
    std::map<Subset, GaussianRational> t_;
};

// I_{z,theta}: z even with positive real body, theta odd.
struct IntervalParams {
    CG z;
    CG theta;
    friend bool operator==(const IntervalParams& a, const IntervalParams& b) { return a.z == b.z && a.theta == b.theta; }
};

IntervalParams make_interval(const CG& z, const CG& theta);
// I_{z1,theta1} o I_{z2,theta2}
IntervalParams compose(const IntervalParams& outer, const IntervalParams& inner);

// eps^twist * c * I (interval optional) in SEB_n.
struct SebEndo {
    int n = 0;
    bool twist = false;
    CliffordWord c;
    std::optional<IntervalParams> interval;

    static SebEndo identity(int n);
    static SebEndo eps(int n);
    static SebEndo clifford(const CliffordWord& c);
    static SebEndo interval_of(int n, const CG& z, const CG& theta);

    friend bool operator==(const SebEndo& a, const SebEndo& b) {
        return a.n == b.n && a.twist == b.twist && a.c == b.c && a.interval == b.interval;
    }
    friend bool operator!=(const SebEndo& a, const SebEndo& b) { return !(a == b); }
    std::string describe() const;
};

SebEndo seb_compose(const SebEndo& a, const SebEndo& b);

struct SebLetter {
    enum class Kind { Eps, Cliff, Interval };
    Kind kind = Kind::Eps;
    CliffordWord c;
    IntervalParams interval;
};
using SebWord = std::vector<SebLetter>;  // front is applied last

SebWord to_word(const SebEndo& e);
// Rewrites to normal form. With an engine, each step picks a random redex;
// otherwise the leftmost one.
SebEndo seb_normalize(SebWord word, int n, std::mt19937_64* rng = nullptr);

// A_{x,y,theta}: x in Lambda^even / Z, y even with positive real body.
struct AnnulusParams {
    CCircle x;
    CG y;
    CG theta;
    friend bool operator==(const AnnulusParams& a, const AnnulusParams& b) {
        return a.x == b.x && a.y == b.y && a.theta == b.theta;
    }
};

AnnulusParams make_annulus(const CCircle& x, const CG& y, const CG& theta);
// A_{x2,y2,theta2} o A_{x1,y1,theta1}
AnnulusParams compose(const AnnulusParams& outer, const AnnulusParams& inner);

// eps^twist * c * (tau_rotation or A) in SAB_n.
struct SabEndo {
    int n = 0;
    bool twist = false;
    CliffordWord c;
    CCircle rotation;
    std::optional<AnnulusParams> annulus;

    static SabEndo identity(int n, unsigned q);
    static SabEndo eps(int n, unsigned q);
    static SabEndo clifford(const CliffordWord& c, unsigned q);
    static SabEndo rotation_by(int n, const CCircle& x);
    static SabEndo annulus_of(int n, const CCircle& x, const CG& y, const CG& theta);

    friend bool operator==(const SabEndo& a, const SabEndo& b) {
        return a.n == b.n && a.twist == b.twist && a.c == b.c && a.rotation == b.rotation && a.annulus == b.annulus;
    }
    friend bool operator!=(const SabEndo& a, const SabEndo& b) { return !(a == b); }
    std::string describe() const;
};

SabEndo sab_compose(const SabEndo& a, const SabEndo& b);

struct SabLetter {
    enum class Kind { Eps, Cliff, Rotation, Annulus };
    Kind kind = Kind::Eps;
    CliffordWord c;
    CCircle x;
    AnnulusParams annulus;
};
using SabWord = std::vector<SabLetter>;

SabWord to_word(const SabEndo& e);
SabEndo sab_normalize(SabWord word, int n, unsigned q, std::mt19937_64* rng = nullptr);

// Base change along the Grassmann homomorphism generator i -> images[i].
SebEndo base_change(const SebEndo& e, const std::vector<CG>& images);
SabEndo base_change(const SabEndo& e, const std::vector<CG>& images);

// The rank-one Fock module with basis {Omega, lambda Omega} and commuting left
// and right actions of Cl_1 (lambda^2 = -1), where lambda Omega = Omega lambda.
struct FockVector {
    GaussianRational omega;
    GaussianRational lambda_omega;
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.omega == b.omega && a.lambda_omega == b.lambda_omega;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }
};

struct FockVacuumModule {
    static FockVector vacuum() { return {GaussianRational(1), GaussianRational(0)}; }
    static FockVector left(const CliffordWord& c, const FockVector& v);
    static FockVector right(const FockVector& v, const CliffordWord& c);
    // c_left * psi * c_right
    static FockVector act(const CliffordWord& c_left, const FockVector& psi, const CliffordWord& c_right);
    static FockVector grading(const FockVector& v) { return {v.omega, -v.lambda_omega}; }
    // The gluing map F (x)_{Cl_1} F -> F with Omega (x) Omega -> Omega.
    static FockVector glue(const FockVector& a, const FockVector& b);
};

}  // namespace superko
