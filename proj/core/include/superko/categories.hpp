#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superko/clifford.hpp"
#include "superko/random.hpp"

namespace superko {

// Eigenvalue label; k is the L - G^2 degree for annular theories and 0 for
// interval theories.
struct Label {
    Rational lambda{0};
    int k = 0;

    friend bool operator==(const Label& a, const Label& b) { return a.k == b.k && a.lambda == b.lambda; }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
    friend bool operator<(const Label& a, const Label& b) { return a.k != b.k ? a.k < b.k : a.lambda < b.lambda; }
    Label negated() const { return {Rational(-lambda), k}; }
    std::string str() const;
};

// A stable stand-in for the Hilbert space: copies of every irreducible graded
// module and of its parity reversal, one group per degree k.
template <class S>
struct BlockAmbient {
    struct Block {
        std::size_t type = 0;
        bool reversed = false;
        int k = 0;
        std::vector<std::size_t> idx;
    };
    GradedModule<S> module;
    std::vector<GradedModule<S>> irreducibles;
    std::vector<Block> blocks;

    std::size_t dim() const { return module.dim(); }
    Subspace<S> block_span(const std::vector<std::size_t>& which) const;
    // {(v, Jv)} for an irreducible block a and a reversed block b of the same
    // type, J the identity of underlying spaces: an ungraded submodule with
    // eps(Delta) orthogonal to Delta.
    Subspace<S> diagonal(std::size_t a, std::size_t b) const;
    // Degree-k summand H_k.
    Subspace<S> degree_space(int k) const;
};

// Graded Cl_{-n}-modules (copies of each) for interval theories of degree n.
BlockAmbient<Rational> real_block_ambient(int n, std::size_t copies);
BlockAmbient<GaussianRational> complex_block_ambient(int n, std::size_t copies, int k_min, int k_max);

// --- V_n -------------------------------------------------------------------

template <class S>
struct VnMorphism {
    Subspace<S> source;
    Subspace<S> target;
    Mat<S> f;  // stored as f P_source
    Subspace<S> A;

    friend bool operator==(const VnMorphism& a, const VnMorphism& b) {
        return a.source == b.source && a.target == b.target && a.f == b.f && a.A == b.A;
    }
};

template <class S>
std::string vn_object_violation(const GradedModule<S>& H, const Subspace<S>& V);
template <class S>
std::string vn_violation(const GradedModule<S>& H, const VnMorphism<S>& m);
template <class S>
VnMorphism<S> vn_identity(const Subspace<S>& V);
template <class S>
VnMorphism<S> compose(const VnMorphism<S>& m2, const VnMorphism<S>& m1);

// --- spectral data and deformations -----------------------------------------

template <class S>
struct SpectralData {
    std::map<Label, Subspace<S>> spaces;
    std::optional<int> k0;  // V_{0,k} = 0 below k0

    Subspace<S> total(std::size_t ambient) const;
    // V_0 (V_{0,k}); zero subspace when 0 is not an eigenvalue.
    Subspace<S> zero_space(std::size_t ambient, int k = 0) const;
    // The generator sum lambda P_lambda.
    Mat<S> generator(std::size_t ambient) const;

    friend bool operator==(const SpectralData& a, const SpectralData& b) { return a.spaces == b.spaces && a.k0 == b.k0; }
};

template <class S>
struct DeformationMorphism {
    SpectralData<S> source;
    SpectralData<S> target;
    std::map<Label, Label> alpha;
    Mat<S> f;  // stored as f P_total(source)
    Subspace<S> A;

    friend bool operator==(const DeformationMorphism& a, const DeformationMorphism& b) {
        return a.source == b.source && a.target == b.target && a.alpha == b.alpha && a.f == b.f && a.A == b.A;
    }
};

template <class S>
std::string spectral_violation(const GradedModule<S>& H, const SpectralData<S>& E);
template <class S>
std::string deformation_violation(const GradedModule<S>& H, const DeformationMorphism<S>& m);
template <class S>
DeformationMorphism<S> deformation_identity(const GradedModule<S>& H, const SpectralData<S>& E);
// (a', f', A') o (a, f, A) = (a' a, f' f, f'(A) + A'); throws std::logic_error
// when the composite fails validation.
template <class S>
DeformationMorphism<S> compose(const GradedModule<S>& H, const DeformationMorphism<S>& m2,
                               const DeformationMorphism<S>& m1);

// (incl, incl, A) o (id, f, 0) o (alpha, id, 0)
template <class S>
struct Factorization {
    DeformationMorphism<S> shift;
    DeformationMorphism<S> rotate;
    DeformationMorphism<S> emerge;
};
template <class S>
Factorization<S> factor(const GradedModule<S>& H, const DeformationMorphism<S>& m);

// --- ind, embed and N ---------------------------------------------------------

template <class S>
Subspace<S> ind(const GradedModule<S>& H, const SpectralData<S>& E, int k = 0);
template <class S>
VnMorphism<S> ind(const GradedModule<S>& H, const DeformationMorphism<S>& m, int k = 0);
template <class S>
SpectralData<S> embed(const Subspace<S>& V, int k = 0);
template <class S>
DeformationMorphism<S> embed(const GradedModule<S>& H, const VnMorphism<S>& m, int k = 0);
// N(E) = (alpha_E, i_E, sum of the positive eigenspaces), from embed(ind E) to E.
template <class S>
DeformationMorphism<S> natural_n(const GradedModule<S>& H, const SpectralData<S>& E);

// Objects of the restricted product of the V_n(H_k).
template <class S>
struct RestrictedSequence {
    int k0 = 0;
    std::map<int, Subspace<S>> terms;

    friend bool operator==(const RestrictedSequence& a, const RestrictedSequence& b) {
        return a.k0 == b.k0 && a.terms == b.terms;
    }
};

template <class S>
struct SequenceMorphism {
    RestrictedSequence<S> source;
    RestrictedSequence<S> target;
    std::map<int, VnMorphism<S>> terms;

    friend bool operator==(const SequenceMorphism& a, const SequenceMorphism& b) {
        return a.source == b.source && a.target == b.target && a.terms == b.terms;
    }
};

// Empty when every term lies in its H_k and nothing is non-zero below k0.
template <class S>
std::string restricted_violation(const BlockAmbient<S>& H, const RestrictedSequence<S>& s);
template <class S>
RestrictedSequence<S> ind_s1(const BlockAmbient<S>& H, const SpectralData<S>& E);
template <class S>
SequenceMorphism<S> ind_s1(const BlockAmbient<S>& H, const DeformationMorphism<S>& m);
// Throws std::invalid_argument on a sequence violating the restricted-product condition.
template <class S>
SpectralData<S> embed_s1(const BlockAmbient<S>& H, const RestrictedSequence<S>& s);
template <class S>
DeformationMorphism<S> embed_s1(const BlockAmbient<S>& H, const SequenceMorphism<S>& m);

// --- random data ------------------------------------------------------------

template <class S>
SpectralData<S> random_spectral(Rng& rng, const BlockAmbient<S>& H, bool annular);
// A random morphism out of E, built as (incl, incl, A) o (id, g, 0) o (alpha, id, 0).
template <class S>
DeformationMorphism<S> random_deformation(Rng& rng, const BlockAmbient<S>& H, const SpectralData<S>& E);
template <class S>
Subspace<S> random_vn_object(Rng& rng, const BlockAmbient<S>& H);
template <class S>
VnMorphism<S> random_vn_morphism(Rng& rng, const BlockAmbient<S>& H, const Subspace<S>& V);

// --- Quillen's categories -----------------------------------------------------

struct VirtualObject {
    Subspace<Rational> v0, v1;
    friend bool operator==(const VirtualObject& a, const VirtualObject& b) { return a.v0 == b.v0 && a.v1 == b.v1; }
};

// (f0, f1; phi) with phi an isometry from the complement U0 of f0(V0) in V'0
// onto the complement U1 of f1(V1) in V'1; maps are stored precomposed with
// the projector onto their domain.
struct VirtualMorphism {
    VirtualObject source, target;
    QMat f0, f1, phi;
    friend bool operator==(const VirtualMorphism& a, const VirtualMorphism& b) {
        return a.source == b.source && a.target == b.target && a.f0 == b.f0 && a.f1 == b.f1 && a.phi == b.phi;
    }
};

std::string virtual_violation(const GradedCliffordModule& H, const VirtualMorphism& m);
VirtualMorphism compose(const VirtualMorphism& m2, const VirtualMorphism& m1);
VirtualObject quillen_f(const GradedCliffordModule& H, const Subspace<Rational>& V);
VirtualMorphism quillen_f(const GradedCliffordModule& H, const VnMorphism<Rational>& m);
Subspace<Rational> quillen_g(const VirtualObject& v);
VnMorphism<Rational> quillen_g(const GradedCliffordModule& H, const VirtualMorphism& m);
VirtualMorphism random_virtual_morphism(Rng& rng, const GradedCliffordModule& H);

// Q-construction morphisms (g; W1, W2) inside pH, p = (1 + e_1)/2.
struct QMorphism {
    Subspace<Rational> source, target;
    QMat g;
    Subspace<Rational> W1, W2;
    friend bool operator==(const QMorphism& a, const QMorphism& b) {
        return a.source == b.source && a.target == b.target && a.g == b.g && a.W1 == b.W1 && a.W2 == b.W2;
    }
};

QMat qvect_projector(const GradedCliffordModule& H);
std::string qmorphism_violation(const GradedCliffordModule& H, const QMorphism& m);
QMorphism compose(const QMorphism& m2, const QMorphism& m1);
Subspace<Rational> qvect_f(const GradedCliffordModule& H, const Subspace<Rational>& V);
QMorphism qvect_f(const GradedCliffordModule& H, const VnMorphism<Rational>& m);
Subspace<Rational> qvect_g(const GradedCliffordModule& H, const Subspace<Rational>& U);
VnMorphism<Rational> qvect_g(const GradedCliffordModule& H, const QMorphism& m);
QMorphism random_qmorphism(Rng& rng, const BlockAmbient<Rational>& H);

// --- components ---------------------------------------------------------------

struct Pi0Component {
    std::vector<long> representative;  // multiplicities of the irreducibles
    std::vector<Integer> label;        // class in the quotient group
    std::size_t size = 0;
};

struct Pi0Report {
    int n = 0;
    Field field = Field::Real;
    std::size_t dim_cap = 0;
    std::size_t objects = 0;
    std::size_t edges = 0;
    QuotientGroup group;
    std::vector<Pi0Component> components;
    bool consistent = false;  // labels constant on components
    bool injective = false;   // distinct components, distinct labels
    bool surjective = false;  // every element hit (finite groups; vacuous otherwise)
    bool additive = false;    // label of a sum is the sum of labels
    std::string failure;

    bool ok() const { return consistent && injective && surjective && additive; }
};

// Components of the objects of dimension at most dim_cap in the category of
// graded Cl_n-submodules (V_{-n}), joined by the morphisms (inc, A) from V to
// V + W with [W] in the image of i_{n+1}; labelled through abs_quotient(n).
Pi0Report pi0(int n, std::size_t dim_cap, Field field = Field::Real);

struct TateReport {
    int n = 0;
    int k_min = 0, k_max = 0;
    std::vector<QuotientGroup> coefficients;
    std::vector<Pi0Report> degrees;
    bool ok() const;
};

// Component groups of V_n(H_k) for each k in the window.
TateReport tate_coefficients(int n, int k_min, int k_max, std::size_t dim_cap = 8);

}  // namespace superko
