#pragma once

#include <cstdint>
#include <vector>

#include "superko/matrix.hpp"

namespace superko {

// A monomial matrix whose non-zero entries are powers of i: column j has the
// single entry i^phase[j] in row perm[j].
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n);  // identity
    Monomial(std::vector<std::size_t> perm, std::vector<std::uint8_t> phase);

    static Monomial diagonal(const std::vector<int>& signs);

    std::size_t size() const { return perm_.size(); }
    std::size_t row_of(std::size_t col) const { return perm_[col]; }
    int phase_of(std::size_t col) const { return phase_[col]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.perm_ == b.perm_ && a.phase_ == b.phase_;
    }
    Monomial negated() const { return times_phase(2); }
    Monomial times_phase(int k) const;
    Monomial adjoint() const;
    bool is_real() const;

    // trace as a Gaussian integer (re, im)
    std::pair<long, long> trace() const;

    Monomial conjugate_by(const std::vector<std::size_t>& new_index) const;

    template <class S>
    Mat<S> dense() const;

    static Monomial kron(const Monomial& a, const Monomial& b);
    static Monomial direct_sum(const Monomial& a, const Monomial& b);

private:
    std::vector<std::size_t> perm_;
    std::vector<std::uint8_t> phase_;
};

template <>
Mat<Rational> Monomial::dense<Rational>() const;
template <>
Mat<GaussianRational> Monomial::dense<GaussianRational>() const;

}  // namespace superko
