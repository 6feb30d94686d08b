#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superko/matrix.hpp"
#include "superko/monomial.hpp"

namespace superko {

enum class Field { Real, Complex };

template <class S>
constexpr Field field_of() {
    return ScalarTraits<S>::is_complex ? Field::Complex : Field::Real;
}

// A graded Cl_n-module given by monomial generator matrices; the basis lists
// the even vectors first.
struct MonoModule {
    int n = 0;
    Field field = Field::Real;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<Monomial> gens;

    std::size_t dim() const { return even_dim + odd_dim; }
    std::vector<int> grading() const;
    Monomial grading_op() const { return Monomial::diagonal(grading()); }
    // Throws std::logic_error when a Clifford relation fails.
    void certify() const;
};

// Finite-dimensional graded Cl_n-module with explicit generator matrices.
// Basis order: even vectors first.
template <class S>
struct GradedModule {
    int n = 0;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<Mat<S>> gens;

    std::size_t dim() const { return even_dim + odd_dim; }
    Mat<S> grading() const {
        Mat<S> e(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) e(i, i) = i < even_dim ? S(1) : S(-1);
        return e;
    }
    // Empty string when every invariant holds, otherwise the first violation.
    std::string violation() const;
    bool valid() const { return violation().empty(); }
};

using GradedCliffordModule = GradedModule<Rational>;
using ComplexGradedCliffordModule = GradedModule<GaussianRational>;

template <class S>
GradedModule<S> densify(const MonoModule& m);

struct ModuleClass {
    int n = 0;
    Field field = Field::Real;
    std::vector<long> mult;

    friend bool operator==(const ModuleClass& a, const ModuleClass& b) {
        return a.n == b.n && a.field == b.field && a.mult == b.mult;
    }
    ModuleClass& operator+=(const ModuleClass& o);
};

template <class S>
struct Decomposition {
    ModuleClass cls;
    // Even, Clifford-linear, invertible map from the direct sum of irreducibles
    // (class 0 repeated mult[0] times, then class 1, ...) onto the module.
    Mat<S> witness;
};

int irreducible_dim(int n, Field f = Field::Real);
int class_count(int n, Field f = Field::Real);

// One monomial representative per isomorphism class, ordered by the sign of
// the volume-element invariant (positive first).
const std::vector<MonoModule>& irreducible_monomial(int n, Field f = Field::Real);

std::vector<GradedCliffordModule> irreducible_graded_modules(int n);
std::vector<ComplexGradedCliffordModule> irreducible_graded_modules_complex(int n);

ModuleClass classify(const MonoModule& m);
template <class S>
ModuleClass classify(const GradedModule<S>& m);

template <class S>
Decomposition<S> decompose(const GradedModule<S>& m);

MonoModule restrict_module(const MonoModule& m);
template <class S>
GradedModule<S> restrict_module(const GradedModule<S>& m);

// The (in.neg) doubling: ve, vo graded Cl_{-k}-modules, gamma: ve -> vo an
// even Clifford-linear isometry. Result is a graded Cl_{-k-1}-module on
// ve (even) + vo (odd).
template <class S>
GradedModule<S> double_module(const GradedModule<S>& ve, const GradedModule<S>& vo, const Mat<S>& gamma);
MonoModule double_module(const MonoModule& u);

template <class S>
GradedModule<S> parity_reverse(const GradedModule<S>& m);
MonoModule parity_reverse(const MonoModule& m);

template <class S>
GradedModule<S> direct_sum(const GradedModule<S>& a, const GradedModule<S>& b);
MonoModule direct_sum(const MonoModule& a, const MonoModule& b);

// Direct sum of several modules (evens of each summand first, then odds) with
// the global basis indices of every summand.
template <class S>
struct AssembledSum {
    GradedModule<S> module;
    std::vector<std::vector<std::size_t>> indices;
};
template <class S>
AssembledSum<S> assemble_sum(const std::vector<GradedModule<S>>& parts);

// Conjugate the module by an even isometry of its underlying space.
template <class S>
GradedModule<S> transport(const GradedModule<S>& m, const Mat<S>& g);

// One vector per class c of M_{n+1}: the multiplicities, over the classes of
// M_n, of i_{n+1} applied to irreducible class c.
std::vector<std::vector<long>> i_map(int n, Field f = Field::Real);

struct QuotientGroup {
    int n = 0;
    Field field = Field::Real;
    int rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain
    // Image of each irreducible class in Z^rank + sum Z/torsion_i.
    std::vector<std::vector<Integer>> generator_images;
    // Class of the parity reversal of each irreducible.
    std::vector<std::vector<long>> inverse_witnesses;
    bool inverses_verified = false;

    std::string presentation() const;
    bool isomorphic(const QuotientGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

QuotientGroup abs_quotient(int n);
QuotientGroup abs_quotient_complex(int n);
QuotientGroup quotient_group(int n, Field f);

// Invariant factors of an integer matrix (non-zero diagonal of the Smith form).
struct SmithForm {
    std::vector<Integer> diag;
    std::vector<std::vector<Integer>> U;  // unimodular, U * M * V = D
};
SmithForm smith_form(const std::vector<std::vector<Integer>>& m);

// True when v is a non-negative integer combination of the columns.
bool in_submonoid(const std::vector<long>& v, const std::vector<std::vector<long>>& cols);

}  // namespace superko
