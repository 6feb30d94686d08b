#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superko/bordism.hpp"
#include "superko/clifford.hpp"
#include "superko/superoperator.hpp"

namespace superko {

using NumericOperator = std::map<std::pair<Subset, int>, Eigen::MatrixXcd>;

template <class S>
Eigen::MatrixXcd to_eigen(const Mat<S>& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = to_complex(m(i, j));
    return e;
}

NumericOperator numeric_product(const NumericOperator& a, const NumericOperator& b);
// Largest entrywise deviation, relative to max(1, largest entry of b).
double numeric_distance(const NumericOperator& a, const NumericOperator& b);

// A 1|1-dimensional field theory of degree n on a finite-dimensional stand-in
// for its Hilbert space: the ambient is a graded Cl_{-n}-module, the generator
// Q lives on the image of the projector.
struct SeftGenerator {
    GradedCliffordModule ambient;  // ambient.n == -degree
    QMat projector;
    QMat Q;

    int degree() const { return -ambient.n; }
    // Empty when Q is symmetric, odd, Clifford-linear and supported on the
    // Clifford-invariant image of the projector.
    std::string violation() const;
};

// E(I_{z,theta}) = e^{-z0 Q^2} * nil with the exact nilpotent factor
// nil = exp(-soul(z) Q^2)(1 + theta Q) P; the body factor is evaluated in
// floating point on demand.
struct SeftEvolution {
    bool has_interval = false;
    Rational t0{0};
    SuperOperator<GaussianRational> nil;
};

SeftEvolution seft_evolution(const SeftGenerator& g, const CG& z, const CG& theta);
// The image of a decorated endomorphism under the representation.
SeftEvolution represent(const SeftGenerator& g, const SebEndo& e, unsigned q);
SeftEvolution operator*(const SeftEvolution& a, const SeftEvolution& b);
Eigen::MatrixXcd seft_body_factor(const SeftGenerator& g, const Rational& t0);
NumericOperator numeric(const SeftGenerator& g, const SeftEvolution& e);

struct XySample {
    CG z, theta, z2, theta2;
};

struct RelationReport {
    bool passed = true;
    std::size_t checks = 0;
    double max_body_error = 0.0;
    std::string failure;
};

// Checks E(z,theta) E(z',theta') = E(z + z' + theta theta', theta + theta'):
// the even and odd parts are the X/Y relations.
RelationReport verify_xy_relations(const SeftGenerator& g, const std::vector<XySample>& samples);

// Theory of degree n with Z-graded ambient sum_k H_k of complex graded
// Cl_{-n}-modules; degree[i] is the k of basis vector i.
struct AftGenerator {
    ComplexGradedCliffordModule ambient;
    std::vector<int> degree;
    CMat L;
    CMat G;

    int n() const { return -ambient.n; }
    CMat K() const;  // L - G^2, diagonal with entries k on H_k
    CMat H() const;  // L + G^2
    std::string violation() const;
};

// E(A_{x,y,theta}) = e^{2 pi i x0 K} e^{-2 pi y0 H} * nil,
// nil = exp(s^2 soul(x) K + i s^2 soul(y) H)(1 + s theta G) with s^2 = 2 pi i.
struct AftEvolution {
    Rational x0{0};  // modulo 1
    Rational y0{0};
    SuperOperator<SPoly> nil;
};

AftEvolution aft_evolution(const AftGenerator& g, const CCircle& x, const CG& y, const CG& theta);
AftEvolution represent(const AftGenerator& g, const SabEndo& e);
AftEvolution operator*(const AftEvolution& a, const AftEvolution& b);
AftEvolution dagger(const AftEvolution& e);
bool operator==(const AftEvolution& a, const AftEvolution& b);
Eigen::MatrixXcd aft_body_factor(const AftGenerator& g, const Rational& x0, const Rational& y0);
NumericOperator numeric(const AftGenerator& g, const AftEvolution& e);

struct AftSample {
    CCircle x, x2;
    CG y, theta, y2, theta2;
};

// The composition law, the adjoint identity E(A_{x,y,theta})^dagger =
// E(A_{-x,y,-i theta}) and 2 G^2 = H + P with P = G^2 - L.
RelationReport verify_aft_relations(const AftGenerator& g, const std::vector<AftSample>& samples);

// Samples t -> (X(t), Y(t)) of the even and theta-parts of E(I_{t,theta}).
struct SeftSample {
    double t = 0.0;
    Eigen::MatrixXd X;
    Eigen::MatrixXd Y;
};

SeftSample seft_sample(const SeftGenerator& g, double t);
// Reconstructs the projector and Q; throws std::domain_error when the samples
// are not those of any generator.
SeftGenerator recover_generator(const GradedCliffordModule& ambient, const std::vector<SeftSample>& samples);

// Clifford word acting through the module generators.
template <class S>
Mat<S> clifford_action(const GradedModule<S>& m, const CliffordWord& c);

}  // namespace superko
