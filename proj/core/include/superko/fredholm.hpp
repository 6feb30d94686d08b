#pragma once

#include <Eigen/Dense>
#include <vector>

#include "superko/clifford.hpp"
#include "superko/random.hpp"

namespace superko {

Eigen::MatrixXd to_real_matrix(const QMat& m);
double operator_norm(const Eigen::MatrixXd& m);

// Empty when F is odd, symmetric and commutes with every generator, up to tol
// relative to the size of F.
std::string odd_operator_violation(const GradedCliffordModule& H, const Eigen::MatrixXd& F, double tol = 1e-9);

// Spectral data of F0 valid on the ball |F - F0| < c, where 4c is the smallest
// positive eigenvalue of F0.
struct SpectralWindow {
    GradedCliffordModule module;
    Eigen::MatrixXd base;
    double c = 0;
};

// Throws std::invalid_argument when F0 is not an admissible operator or has
// no positive eigenvalue.
SpectralWindow make_window(const GradedCliffordModule& H, const Eigen::MatrixXd& F0);

// Projector onto the eigenvectors of F with eigenvalue in (-c, c). Throws
// std::invalid_argument outside the ball and std::domain_error when an
// eigenvalue lies within 1e-9 of the window edge.
Eigen::MatrixXd spectral_projection(const SpectralWindow& w, const Eigen::MatrixXd& F);

// |p_F - p_F1| <= eps for F, F1 in the ball with |F - F1| < c eps.
bool projection_continuity_check(const SpectralWindow& w, const Eigen::MatrixXd& F1, const Eigen::MatrixXd& F,
                                 double eps);

// Projector onto V + V_F, from p + p_F - p p_F. V is given by spanning
// columns and must be an F-invariant submodule.
Eigen::MatrixXd retract(const SpectralWindow& w, const Eigen::MatrixXd& V, const Eigen::MatrixXd& F);

// Finite stand-in for the Fred_n condition, n = -H.n: when n = 1 mod 4 the
// restriction of e_1...e_|n| F to the even part must have eigenvalues of both
// signs; otherwise always true.
bool fredn_membership(const GradedCliffordModule& H, const Eigen::MatrixXd& F);

// Irreducible graded module over the algebra with l generators squaring to +1
// followed by l squaring to -1 (the generator matrices only).
struct SplitModule {
    std::size_t even_dim = 0, odd_dim = 0;
    std::vector<QMat> gens;
};
SplitModule split_irreducible(int l);

// F -> F (x) eps_V on H (x) V, for n = -H.n = 4k - l > 0 with V the
// irreducible graded Cl_{l,l}-module; the result is a graded
// Cl_{4k+l}-module with its even vectors first.
struct BlockTransform {
    int k = 0, l = 0;
    GradedCliffordModule module;
    Eigen::MatrixXd F;
    std::vector<std::size_t> order;  // new basis position -> tensor index
    std::size_t v_dim = 0;
};
BlockTransform block_transform(const GradedCliffordModule& H, const Eigen::MatrixXd& F);
Eigen::MatrixXd block_transform_inverse(const BlockTransform& t, std::size_t h_dim);

// Odd, symmetric, Clifford-linear operators spanning that space.
std::vector<Eigen::MatrixXd> odd_operator_basis(const GradedCliffordModule& H);
Eigen::MatrixXd random_odd_operator(Rng& rng, const std::vector<Eigen::MatrixXd>& basis);

}  // namespace superko
