#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "superko/scalar.hpp"

namespace superko {

using Subset = std::uint32_t;

constexpr unsigned kMaxGenerators = 16;

// Sign of theta_A * theta_B when rewritten as theta_{A u B} (0 if A, B meet).
inline int subset_sign(Subset a, Subset b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Subset rest = b; rest; rest &= rest - 1) {
        unsigned j = static_cast<unsigned>(std::countr_zero(rest));
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

inline int subset_parity(Subset s) { return std::popcount(s) & 1; }

// Element of the exterior algebra on q generators with coefficients in S,
// stored densely by generator subset.
template <class S>
class Grassmann {
public:
    Grassmann() : c_(1, S(0)) {}
    explicit Grassmann(unsigned q) : q_(q) {
        if (q > kMaxGenerators) throw std::invalid_argument("too many Grassmann generators");
        c_.assign(std::size_t(1) << q, S(0));
    }
    Grassmann(unsigned q, const S& scalar) : Grassmann(q) { c_[0] = scalar; }

    static Grassmann generator(unsigned q, unsigned i) {
        if (i >= q) throw std::out_of_range("generator index out of range");
        Grassmann g(q);
        g.c_[Subset(1) << i] = S(1);
        return g;
    }
    static Grassmann monomial(unsigned q, Subset s, const S& coeff) {
        Grassmann g(q);
        g.at(s) = coeff;
        return g;
    }

    unsigned q() const { return q_; }
    std::size_t size() const { return c_.size(); }
    const S& operator[](Subset s) const { return c_[s]; }
    S& at(Subset s) {
        if (s >= c_.size()) throw std::out_of_range("subset outside the algebra");
        return c_[s];
    }

    std::vector<Subset> support() const {
        std::vector<Subset> out;
        for (Subset s = 0; s < c_.size(); ++s)
            if (!superko::is_zero(c_[s])) out.push_back(s);
        return out;
    }

    const S& body() const { return c_[0]; }
    Grassmann soul() const {
        Grassmann g(*this);
        g.c_[0] = S(0);
        return g;
    }
    Grassmann even() const { return part(0); }
    Grassmann odd() const { return part(1); }
    bool is_even() const { return odd().is_zero(); }
    bool is_odd() const { return even().is_zero(); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!superko::is_zero(x)) return false;
        return true;
    }

    Grassmann& operator+=(const Grassmann& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Grassmann& operator-=(const Grassmann& o) {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Grassmann& operator*=(const S& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    Grassmann operator-() const {
        Grassmann g(*this);
        for (auto& x : g.c_) x = -x;
        return g;
    }
    friend Grassmann operator+(Grassmann a, const Grassmann& b) { return a += b; }
    friend Grassmann operator-(Grassmann a, const Grassmann& b) { return a -= b; }
    friend Grassmann operator*(Grassmann a, const S& s) { return a *= s; }
    friend Grassmann operator*(const S& s, Grassmann a) { return a *= s; }

    friend Grassmann operator*(const Grassmann& a, const Grassmann& b) {
        a.check(b);
        Grassmann m(a.q_);
        auto sa = a.support();
        auto sb = b.support();
        for (Subset x : sa)
            for (Subset y : sb) {
                int sg = subset_sign(x, y);
                if (sg == 0) continue;
                S t = a.c_[x] * b.c_[y];
                if (sg > 0)
                    m.c_[x | y] += t;
                else
                    m.c_[x | y] -= t;
            }
        return m;
    }
    Grassmann& operator*=(const Grassmann& o) { return *this = *this * o; }

    friend bool operator==(const Grassmann& a, const Grassmann& b) { return a.q_ == b.q_ && a.c_ == b.c_; }
    friend bool operator!=(const Grassmann& a, const Grassmann& b) { return !(a == b); }

    Grassmann pow(unsigned k) const {
        Grassmann r(q_, S(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Grassmann conj() const {
        Grassmann g(*this);
        for (auto& x : g.c_) x = superko::conj(x);
        return g;
    }

    // Same coefficients viewed in an algebra with more generators.
    Grassmann extend(unsigned q) const {
        if (q < q_) throw std::invalid_argument("cannot shrink a Grassmann algebra");
        Grassmann g(q);
        for (Subset s = 0; s < c_.size(); ++s) g.c_[s] = c_[s];
        return g;
    }

    template <class T>
    Grassmann<T> cast() const {
        Grassmann<T> g(q_);
        for (Subset s = 0; s < c_.size(); ++s)
            if (!superko::is_zero(c_[s])) g.at(s) = promote<T>(c_[s]);
        return g;
    }

    // Algebra homomorphism sending generator i to images[i] (odd elements of a
    // common target algebra).
    Grassmann substitute(const std::vector<Grassmann>& images) const {
        if (images.size() != q_) throw std::invalid_argument("one image per generator required");
        unsigned tq = images.empty() ? 0 : images[0].q();
        for (const auto& im : images)
            if (!im.is_odd() || im.q() != tq) throw std::invalid_argument("generator images must be odd in one algebra");
        Grassmann r(tq);
        for (Subset s : support()) {
            Grassmann t(tq, c_[s]);
            for (unsigned i = 0; i < q_; ++i)
                if (s & (Subset(1) << i)) t = t * images[i];
            r += t;
        }
        return r;
    }

    std::string str() const {
        std::string out;
        for (Subset s : support()) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c_[s]) + ")";
            for (unsigned i = 0; i < q_; ++i)
                if (s & (Subset(1) << i)) out += "t" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }

private:
    Grassmann part(int parity) const {
        Grassmann g(q_);
        for (Subset s = 0; s < c_.size(); ++s)
            if (subset_parity(s) == parity) g.c_[s] = c_[s];
        return g;
    }
    void check(const Grassmann& o) const {
        if (q_ != o.q_) throw std::invalid_argument("Grassmann algebra mismatch");
    }

    unsigned q_ = 0;
    std::vector<S> c_;
};

using RealGrassmann = Grassmann<Rational>;
using ComplexGrassmann = Grassmann<GaussianRational>;

// sum a^k / k!, which terminates because a has zero body.
template <class S>
Grassmann<S> exp_nilpotent(const Grassmann<S>& a) {
    if (!a.is_even()) throw std::invalid_argument("exp_nilpotent needs an even element");
    if (!superko::is_zero(a.body())) throw std::invalid_argument("exp_nilpotent needs a nilpotent element");
    Grassmann<S> result(a.q(), S(1));
    Grassmann<S> term(a.q(), S(1));
    for (unsigned k = 1; k <= a.q(); ++k) {
        term = term * a;
        if (term.is_zero()) break;
        Rational inv(1, k);
        term *= S(inv);
        result += term;
    }
    return result;
}

// Real rational part of a scalar; throws if it has an imaginary part.
inline Rational real_rational(const Rational& r) { return r; }
inline Rational real_rational(const GaussianRational& g) {
    if (!is_zero(g.im)) throw std::domain_error("expected a real scalar");
    return g.re;
}

inline Rational frac_part(const Rational& r) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rational(fl);
}

// An even element modulo Z: rational body in [0, 1) plus an even soul.
template <class S>
class CircleValue {
public:
    CircleValue() = default;
    explicit CircleValue(const Grassmann<S>& x) {
        if (!x.is_even()) throw std::invalid_argument("circle coordinate must be even");
        body_ = frac_part(real_rational(x.body()));
        soul_ = x.soul();
    }
    CircleValue(unsigned q, const Rational& body) : body_(frac_part(body)), soul_(q) {}

    const Rational& body() const { return body_; }
    const Grassmann<S>& soul() const { return soul_; }
    unsigned q() const { return soul_.q(); }
    Grassmann<S> lift() const {
        Grassmann<S> g = soul_;
        g.at(0) = S(body_);
        return g;
    }

    friend CircleValue operator+(const CircleValue& a, const CircleValue& b) { return CircleValue(a.lift() + b.lift()); }
    friend CircleValue operator-(const CircleValue& a, const CircleValue& b) { return CircleValue(a.lift() - b.lift()); }
    CircleValue operator-() const { return CircleValue(-lift()); }
    friend CircleValue operator+(const CircleValue& a, const Grassmann<S>& soul) { return CircleValue(a.lift() + soul); }
    friend bool operator==(const CircleValue& a, const CircleValue& b) {
        return a.body_ == b.body_ && a.soul_ == b.soul_;
    }
    friend bool operator!=(const CircleValue& a, const CircleValue& b) { return !(a == b); }

private:
    Rational body_{0};
    Grassmann<S> soul_;
};

}  // namespace superko
