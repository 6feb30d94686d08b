#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superko/scalar.hpp"

namespace superko {

template <class S>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, S(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!superko::is_zero(x)) return false;
        return true;
    }

    Mat& operator+=(const Mat& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Mat& operator*=(const S& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const S& s) { return a *= s; }
    friend Mat operator*(const S& s, Mat a) { return a *= s; }
    Mat operator-() const {
        Mat m(*this);
        for (auto& x : m.a_) x = -x;
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat m(a.r_, b.c_);
        std::vector<std::vector<std::size_t>> support(b.r_);
        for (std::size_t k = 0; k < b.r_; ++k)
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!superko::is_zero(b(k, j))) support[k].push_back(j);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (superko::is_zero(x)) continue;
                for (std::size_t j : support[k]) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    Mat adjoint() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = superko::conj((*this)(i, j));
        return m;
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
        Mat m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Mat col(std::size_t j) const { return block(0, j, r_, 1); }

    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    template <class T>
    Mat<T> cast() const {
        Mat<T> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = promote<T>((*this)(i, j));
        return m;
    }

    const std::vector<S>& data() const { return a_; }

private:
    void check_same(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

using QMat = Mat<Rational>;
using CMat = Mat<GaussianRational>;

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

template <class S>
Mat<S> direct_sum(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

template <class S>
Mat<S> hconcat(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
    Mat<S> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class S>
Mat<S> vconcat(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vconcat column mismatch");
    Mat<S> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

// Reduced row echelon form over an exact field. Returns pivot columns.
template <class S>
std::vector<std::size_t> rref_inplace(Mat<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        S inv = S(1) / m(row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

template <class S>
std::size_t rank(Mat<S> m) {
    return rref_inplace(m).size();
}

// Columns span the right nullspace of m.
template <class S>
Mat<S> nullspace(Mat<S> m) {
    auto piv = rref_inplace(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat<S> n(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        n(free_cols[k], k) = S(1);
        for (std::size_t r = 0; r < piv.size(); ++r) n(piv[r], k) = -m(r, free_cols[k]);
    }
    return n;
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = a.rows();
    Mat<S> aug = hconcat(a, Mat<S>::identity(n));
    auto piv = rref_inplace(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
    return aug.block(0, n, n, n);
}

// Linearly independent columns of a spanning set, in canonical (reduced) form.
template <class S>
Mat<S> column_basis(const Mat<S>& span) {
    Mat<S> t = span.adjoint();
    auto piv = rref_inplace(t);
    return t.block(0, 0, piv.size(), t.cols()).adjoint();
}

// A subspace of S^n stored through a canonical basis (conjugate of the rref of
// the spanning rows), so that equality is exact structural equality.
template <class S>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}
    static Subspace span(const Mat<S>& cols) {
        Subspace s(cols.rows());
        s.basis_ = column_basis(cols);
        if (s.basis_.cols() == 0) s.basis_ = Mat<S>(cols.rows(), 0);
        return s;
    }
    static Subspace whole(std::size_t n) { return span(Mat<S>::identity(n)); }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.cols(); }
    const Mat<S>& basis() const { return basis_; }

    Mat<S> projector() const {
        if (dim() == 0) return Mat<S>(n_, n_);
        Mat<S> g = basis_.adjoint() * basis_;
        return basis_ * inverse(g) * basis_.adjoint();
    }

    bool contains(const Mat<S>& vecs) const {
        if (vecs.cols() == 0) return true;
        return rank(hconcat(basis_, vecs)) == dim();
    }
    bool contains(const Subspace& o) const { return contains(o.basis_); }

    Subspace operator+(const Subspace& o) const { return span(hconcat(basis_, o.basis_)); }
    Subspace image(const Mat<S>& m) const { return span(m * basis_); }
    // Orthogonal complement inside the ambient space.
    Subspace perp() const {
        if (dim() == 0) return whole(n_);
        return span(nullspace(basis_.adjoint()));
    }
    Subspace intersect(const Subspace& o) const { return (perp() + o.perp()).perp(); }
    // Orthogonal complement of o inside this space.
    Subspace minus(const Subspace& o) const { return intersect(o.perp()); }
    bool orthogonal_to(const Subspace& o) const { return (basis_.adjoint() * o.basis_).is_zero(); }
    bool invariant_under(const Mat<S>& m) const { return contains(m * basis_); }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    Mat<S> basis_;
};

template <class S>
bool is_symmetric(const Mat<S>& m) {
    return m == m.adjoint();
}

// Cayley transform (I - K)(I + K)^{-1} of a skew matrix: an exact orthogonal
// (unitary for skew-Hermitian K) matrix.
template <class S>
Mat<S> cayley(const Mat<S>& skew) {
    Mat<S> id = Mat<S>::identity(skew.rows());
    return (id - skew) * inverse(id + skew);
}

}  // namespace superko
