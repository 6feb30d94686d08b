#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "superko/grassmann.hpp"
#include "superko/matrix.hpp"

namespace superko {

// An element of Lambda (x) End(H): a sum of terms theta_S (x) A_sigma, where
// sigma in {0, 1} records whether A carries an odd generator factor (Q or
// G~). Odd Grassmann monomials pick up a sign when moved past sigma-odd
// factors:
//   (theta_S A_p)(theta_U B_r) = sign(S, U) (-1)^{p |U|} theta_{S u U} (AB)_{p+r}.
template <class S>
class SuperOperator {
public:
    using Key = std::pair<Subset, int>;

    SuperOperator() = default;
    SuperOperator(unsigned q, std::size_t dim) : q_(q), dim_(dim) {}

    static SuperOperator matrix(unsigned q, const Mat<S>& a, int sigma = 0) {
        if (a.rows() != a.cols()) throw std::invalid_argument("operators must be square");
        SuperOperator o(q, a.rows());
        o.add(0, sigma, a);
        return o;
    }
    static SuperOperator identity(unsigned q, std::size_t dim) { return matrix(q, Mat<S>::identity(dim)); }

    template <class T>
    static SuperOperator scalar(const Grassmann<T>& g, std::size_t dim) {
        SuperOperator o(g.q(), dim);
        for (Subset s : g.support()) o.add(s, 0, Mat<S>::identity(dim) * promote<S>(g[s]));
        return o;
    }

    unsigned q() const { return q_; }
    std::size_t dim() const { return dim_; }
    const std::map<Key, Mat<S>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(Subset s, int sigma, const Mat<S>& a) {
        if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("operator dimension mismatch");
        if (a.is_zero()) return;
        Key k{s, sigma & 1};
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, a);
            return;
        }
        it->second += a;
        if (it->second.is_zero()) t_.erase(it);
    }

    SuperOperator& operator+=(const SuperOperator& o) {
        check(o);
        for (const auto& [k, a] : o.t_) add(k.first, k.second, a);
        return *this;
    }
    friend SuperOperator operator+(SuperOperator a, const SuperOperator& b) { return a += b; }
    friend SuperOperator operator-(SuperOperator a, const SuperOperator& b) { return a += b * S(-1); }
    friend SuperOperator operator*(const SuperOperator& a, const S& c) {
        SuperOperator r(a.q_, a.dim_);
        for (const auto& [k, m] : a.t_) r.add(k.first, k.second, m * c);
        return r;
    }

    friend SuperOperator operator*(const SuperOperator& a, const SuperOperator& b) {
        a.check(b);
        SuperOperator r(a.q_, a.dim_);
        for (const auto& [ka, ma] : a.t_)
            for (const auto& [kb, mb] : b.t_) {
                int sg = subset_sign(ka.first, kb.first);
                if (sg == 0) continue;
                if (ka.second && subset_parity(kb.first)) sg = -sg;
                Mat<S> prod = ma * mb;
                if (sg < 0) prod = -prod;
                r.add(ka.first | kb.first, ka.second + kb.second, prod);
            }
        return r;
    }

    friend bool operator==(const SuperOperator& a, const SuperOperator& b) {
        return a.q_ == b.q_ && a.dim_ == b.dim_ && a.t_ == b.t_;
    }
    friend bool operator!=(const SuperOperator& a, const SuperOperator& b) { return !(a == b); }

    // Conjugates scalars and transposes matrices; Grassmann monomials are fixed.
    SuperOperator dagger() const {
        SuperOperator r(q_, dim_);
        for (const auto& [k, m] : t_) r.add(k.first, k.second, m.adjoint());
        return r;
    }

    // m X m_inv for a sigma-even matrix m.
    SuperOperator conjugate_by(const Mat<S>& m, const Mat<S>& m_inv) const {
        SuperOperator r(q_, dim_);
        for (const auto& [k, a] : t_) r.add(k.first, k.second, m * a * m_inv);
        return r;
    }

    bool has_body() const {
        for (const auto& [k, a] : t_)
            if (k.first == 0) return true;
        return false;
    }

    template <class T>
    SuperOperator<T> cast() const {
        SuperOperator<T> r(q_, dim_);
        for (const auto& [k, a] : t_) r.add(k.first, k.second, a.template cast<T>());
        return r;
    }

private:
    void check(const SuperOperator& o) const {
        if (q_ != o.q_ || dim_ != o.dim_) throw std::invalid_argument("super operators of different shapes");
    }
    unsigned q_ = 0;
    std::size_t dim_ = 0;
    std::map<Key, Mat<S>> t_;
};

// sum X^k / k! for X without body terms.
template <class S>
SuperOperator<S> exp_nilpotent(const SuperOperator<S>& x) {
    if (x.has_body()) throw std::invalid_argument("exp_nilpotent needs a nilpotent super operator");
    SuperOperator<S> result = SuperOperator<S>::identity(x.q(), x.dim());
    SuperOperator<S> term = result;
    for (unsigned k = 1; k <= x.q(); ++k) {
        term = term * x;
        if (term.is_zero()) break;
        term = term * S(Rational(1u, k));
        result += term;
    }
    return result;
}

}  // namespace superko
