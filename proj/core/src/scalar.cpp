#include "superko/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace superko {

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const GaussianRational& g) {
    if (is_zero(g.im)) return to_string(g.re);
    std::string s = is_zero(g.re) ? std::string() : to_string(g.re);
    if (!s.empty() && sgn(g.im) > 0) s += "+";
    return s + to_string(g.im) + "i";
}

Rational ScalarTraits<Rational>::imag_unit() {
    throw std::logic_error("imaginary unit requested over the real scalar field");
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational m = (im * o.re - re * o.im) / n;
    re = r;
    im = m;
    return *this;
}

SPoly SPoly::pi() {
    SPoly p;
    p.c_ = {GaussianRational(0), GaussianRational(0), GaussianRational(Rational(0), Rational(-1, 2))};
    return p;
}

void SPoly::trim() {
    while (!c_.empty() && superko::is_zero(c_.back())) c_.pop_back();
}

SPoly& SPoly::operator+=(const SPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

SPoly& SPoly::operator*=(const SPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (superko::is_zero(c_[a])) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

SPoly& SPoly::operator/=(const GaussianRational& g) {
    for (auto& x : c_) x /= g;
    return *this;
}

SPoly SPoly::operator-() const {
    SPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

SPoly SPoly::conj() const {
    // conj(s^k) = (-i)^k s^k
    static const GaussianRational phases[4] = {GaussianRational(1), GaussianRational(Rational(0), Rational(-1)),
                                               GaussianRational(-1), GaussianRational(Rational(0), Rational(1))};
    SPoly r;
    r.c_.resize(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = superko::conj(c_[k]) * phases[k % 4];
    r.trim();
    return r;
}

std::complex<double> SPoly::to_complex() const {
    const std::complex<double> s = std::sqrt(2.0 * std::numbers::pi) * std::polar(1.0, std::numbers::pi / 4);
    std::complex<double> acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * s + superko::to_complex(c_[k]);
    return acc;
}

std::string SPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (superko::is_zero(c_[k])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c_[k]) << ")";
        if (k == 1) os << "s";
        if (k > 1) os << "s^" << k;
    }
    return os.str();
}

Rational rationalize(double x, double tol, long max_den) {
    if (!std::isfinite(x)) throw std::domain_error("cannot rationalize a non-finite value");
    // continued fraction convergents
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class h2 = ai * h1 + h0;
        mpz_class k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Rational cand(h1, k1);
        cand.canonicalize();
        if (std::abs(cand.get_d() - x) <= tol * std::max(1.0, std::abs(x))) return cand;
        double frac = r - a;
        if (frac == 0.0) break;
        r = 1.0 / frac;
    }
    Rational out(h1, k1);
    out.canonicalize();
    return out;
}

}  // namespace superko
