#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace superko {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// Rationals with i adjoined.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = r;
        im = m;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Polynomials in a formal unit s with Gaussian-rational coefficients. The unit
// stands for the principal square root of 2*pi*i, so s^2 = 2*pi*i and the
// conjugate of s is -i*s.
class SPoly {
public:
    SPoly() = default;
    SPoly(long v) : c_{GaussianRational(v)} { trim(); }
    SPoly(const Rational& r) : c_{GaussianRational(r)} { trim(); }
    SPoly(const GaussianRational& g) : c_{g} { trim(); }

    static SPoly s() {
        SPoly p;
        p.c_ = {GaussianRational(0), GaussianRational(1)};
        return p;
    }
    static SPoly i() { return SPoly(GaussianRational::i()); }
    // pi = -(i/2) s^2
    static SPoly pi();

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    SPoly& operator+=(const SPoly& o);
    SPoly& operator-=(const SPoly& o);
    SPoly& operator*=(const SPoly& o);
    SPoly& operator/=(const GaussianRational& g);

    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r(a);
        r *= b;
        return r;
    }
    friend SPoly operator/(SPoly a, const GaussianRational& b) { return a /= b; }
    SPoly operator-() const;
    friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

    SPoly conj() const;
    std::complex<double> to_complex() const;
    std::string str() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const GaussianRational& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
inline bool is_zero(const SPoly& p) { return p.is_zero(); }
inline bool is_zero(double d) { return d == 0.0; }
inline bool is_zero(const std::complex<double>& d) { return d == std::complex<double>(0.0); }

inline Rational conj(const Rational& r) { return r; }
inline GaussianRational conj(const GaussianRational& g) { return {g.re, Rational(-g.im)}; }
inline SPoly conj(const SPoly& p) { return p.conj(); }

inline std::complex<double> to_complex(const Rational& r) { return {r.get_d(), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& g) { return {g.re.get_d(), g.im.get_d()}; }
inline std::complex<double> to_complex(const SPoly& p) { return p.to_complex(); }

std::string to_string(const GaussianRational& g);
inline std::string to_string(const SPoly& p) { return p.str(); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_complex = false;
    static Rational imag_unit();
};
template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool is_complex = true;
    static GaussianRational imag_unit() { return GaussianRational::i(); }
};
template <>
struct ScalarTraits<SPoly> {
    static constexpr bool is_complex = true;
    static SPoly imag_unit() { return SPoly::i(); }
};

// Lossless promotion between the exact scalar types.
template <class To>
To promote(const Rational& r) {
    return To(r);
}
template <class To>
To promote(const GaussianRational& g);
template <>
inline GaussianRational promote<GaussianRational>(const GaussianRational& g) {
    return g;
}
template <>
inline SPoly promote<SPoly>(const GaussianRational& g) {
    return SPoly(g);
}

template <class To>
To promote(const SPoly& p);
template <>
inline SPoly promote<SPoly>(const SPoly& p) {
    return p;
}

// Best rational approximation of x with denominator bounded by max_den.
Rational rationalize(double x, double tol = 1e-12, long max_den = 1L << 30);

}  // namespace superko
