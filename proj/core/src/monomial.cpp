#include "superko/monomial.hpp"

#include <stdexcept>

namespace superko {

Monomial::Monomial(std::size_t n) : perm_(n), phase_(n, 0) {
    for (std::size_t j = 0; j < n; ++j) perm_[j] = j;
}

Monomial::Monomial(std::vector<std::size_t> perm, std::vector<std::uint8_t> phase)
    : perm_(std::move(perm)), phase_(std::move(phase)) {
    if (perm_.size() != phase_.size()) throw std::invalid_argument("monomial size mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    for (auto& ph : phase_) ph &= 3;
}

Monomial Monomial::diagonal(const std::vector<int>& signs) {
    Monomial m(signs.size());
    for (std::size_t j = 0; j < signs.size(); ++j) m.phase_[j] = signs[j] < 0 ? 2 : 0;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial product size mismatch");
    Monomial m(a.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t mid = b.perm_[j];
        m.perm_[j] = a.perm_[mid];
        m.phase_[j] = static_cast<std::uint8_t>((a.phase_[mid] + b.phase_[j]) & 3);
    }
    return m;
}

Monomial Monomial::times_phase(int k) const {
    Monomial m(*this);
    for (auto& ph : m.phase_) ph = static_cast<std::uint8_t>((ph + k) & 3);
    return m;
}

Monomial Monomial::adjoint() const {
    Monomial m(size());
    for (std::size_t j = 0; j < size(); ++j) {
        m.perm_[perm_[j]] = j;
        m.phase_[perm_[j]] = static_cast<std::uint8_t>((4 - phase_[j]) & 3);
    }
    return m;
}

bool Monomial::is_real() const {
    for (auto ph : phase_)
        if (ph & 1) return false;
    return true;
}

std::pair<long, long> Monomial::trace() const {
    long re = 0, im = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        if (perm_[j] != j) continue;
        switch (phase_[j]) {
            case 0: ++re; break;
            case 1: ++im; break;
            case 2: --re; break;
            default: --im; break;
        }
    }
    return {re, im};
}

Monomial Monomial::conjugate_by(const std::vector<std::size_t>& new_index) const {
    // basis vector j becomes basis vector new_index[j]
    Monomial m(size());
    for (std::size_t j = 0; j < size(); ++j) {
        m.perm_[new_index[j]] = new_index[perm_[j]];
        m.phase_[new_index[j]] = phase_[j];
    }
    return m;
}

Monomial Monomial::kron(const Monomial& a, const Monomial& b) {
    std::size_t nb = b.size();
    Monomial m(a.size() * nb);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < nb; ++k) {
            m.perm_[i * nb + k] = a.perm_[i] * nb + b.perm_[k];
            m.phase_[i * nb + k] = static_cast<std::uint8_t>((a.phase_[i] + b.phase_[k]) & 3);
        }
    return m;
}

Monomial Monomial::direct_sum(const Monomial& a, const Monomial& b) {
    Monomial m(a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        m.perm_[j] = a.perm_[j];
        m.phase_[j] = a.phase_[j];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        m.perm_[a.size() + j] = a.size() + b.perm_[j];
        m.phase_[a.size() + j] = b.phase_[j];
    }
    return m;
}

template <>
Mat<Rational> Monomial::dense<Rational>() const {
    if (!is_real()) throw std::domain_error("monomial matrix has imaginary entries");
    Mat<Rational> m(size(), size());
    for (std::size_t j = 0; j < size(); ++j) m(perm_[j], j) = phase_[j] == 0 ? 1 : -1;
    return m;
}

template <>
Mat<GaussianRational> Monomial::dense<GaussianRational>() const {
    static const GaussianRational ph[4] = {GaussianRational(1), GaussianRational(Rational(0), Rational(1)),
                                           GaussianRational(-1), GaussianRational(Rational(0), Rational(-1))};
    Mat<GaussianRational> m(size(), size());
    for (std::size_t j = 0; j < size(); ++j) m(perm_[j], j) = ph[phase_[j]];
    return m;
}

}  // namespace superko
