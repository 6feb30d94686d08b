#include "superko/fredholm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace superko {

namespace {

constexpr double kEdgeTolerance = 1e-9;

Eigen::MatrixXd grading_of(const GradedCliffordModule& H) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(H.dim()));
    for (std::size_t i = 0; i < H.dim(); ++i) d(static_cast<Eigen::Index>(i)) = i < H.even_dim ? 1.0 : -1.0;
    return d.asDiagonal();
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

void require_square(const GradedCliffordModule& H, const Eigen::MatrixXd& F) {
    auto d = static_cast<Eigen::Index>(H.dim());
    if (F.rows() != d || F.cols() != d) throw std::invalid_argument("operator size differs from the module");
}

QMat permuted(const QMat& m, const std::vector<std::size_t>& order) {
    QMat r(order.size(), order.size());
    for (std::size_t p = 0; p < order.size(); ++p)
        for (std::size_t q = 0; q < order.size(); ++q) r(p, q) = m(order[p], order[q]);
    return r;
}

}  // namespace

Eigen::MatrixXd to_real_matrix(const QMat& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
    return e;
}

double operator_norm(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

std::string odd_operator_violation(const GradedCliffordModule& H, const Eigen::MatrixXd& F, double tol) {
    auto d = static_cast<Eigen::Index>(H.dim());
    if (F.rows() != d || F.cols() != d) return "operator size differs from the module";
    double scale = tol * std::max(1.0, operator_norm(F));
    if (operator_norm(F - F.transpose()) > scale) return "operator is not symmetric";
    Eigen::MatrixXd eps = grading_of(H);
    if (operator_norm(F * eps + eps * F) > scale) return "operator is not odd";
    for (std::size_t i = 0; i < H.gens.size(); ++i) {
        Eigen::MatrixXd e = to_real_matrix(H.gens[i]);
        if (operator_norm(F * e - e * F) > scale) return "operator does not commute with e_" + std::to_string(i + 1);
    }
    return {};
}

SpectralWindow make_window(const GradedCliffordModule& H, const Eigen::MatrixXd& F0) {
    if (auto v = odd_operator_violation(H, F0); !v.empty()) throw std::invalid_argument(v);
    Eigen::VectorXd ev = eigenvalues(F0);
    double floor = kEdgeTolerance * std::max(1.0, operator_norm(F0));
    double smallest = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > floor && (smallest == 0 || ev(i) < smallest)) smallest = ev(i);
    if (smallest == 0) throw std::invalid_argument("base operator has no positive eigenvalue");
    return {H, F0, smallest / 4};
}

Eigen::MatrixXd spectral_projection(const SpectralWindow& w, const Eigen::MatrixXd& F) {
    require_square(w.module, F);
    if (operator_norm(F - w.base) >= w.c) throw std::invalid_argument("operator lies outside the window's ball");
    if (auto v = odd_operator_violation(w.module, F); !v.empty()) throw std::invalid_argument(v);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(F);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXd& vec = es.eigenvectors();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(F.rows(), F.cols());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(std::abs(ev(i)) - w.c) < kEdgeTolerance)
            throw std::domain_error("eigenvalue at the edge of the spectral window");
        if (std::abs(ev(i)) < w.c) p += vec.col(i) * vec.col(i).transpose();
    }
    return p;
}

bool projection_continuity_check(const SpectralWindow& w, const Eigen::MatrixXd& F1, const Eigen::MatrixXd& F,
                                 double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
    if (operator_norm(F - F1) >= w.c * eps) throw std::invalid_argument("operators are not c*eps close");
    return operator_norm(spectral_projection(w, F) - spectral_projection(w, F1)) <= eps;
}

Eigen::MatrixXd retract(const SpectralWindow& w, const Eigen::MatrixXd& V, const Eigen::MatrixXd& F) {
    require_square(w.module, F);
    if (V.rows() != F.rows()) throw std::invalid_argument("subspace lives in a different ambient");
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(F.rows(), F.cols());
    if (V.cols() > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(V, Eigen::ComputeThinU);
        double cut = kEdgeTolerance * std::max(1.0, svd.singularValues()(0));
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > cut) p += svd.matrixU().col(i) * svd.matrixU().col(i).transpose();
    }
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(F.rows(), F.cols());
    if (operator_norm((id - p) * F * p) > kEdgeTolerance * std::max(1.0, operator_norm(F)))
        throw std::invalid_argument("subspace is not invariant under the operator");
    Eigen::MatrixXd pf = spectral_projection(w, F);
    return p + pf - p * pf;
}

bool fredn_membership(const GradedCliffordModule& H, const Eigen::MatrixXd& F) {
    require_square(H, F);
    int n = -H.n;
    if (((n % 4) + 4) % 4 != 1) return true;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Identity(F.rows(), F.cols());
    for (const auto& g : H.gens) omega = omega * to_real_matrix(g);
    auto e = static_cast<Eigen::Index>(H.even_dim);
    Eigen::MatrixXd restricted = (omega * F).topLeftCorner(e, e);
    Eigen::VectorXd ev = eigenvalues(0.5 * (restricted + restricted.transpose()));
    double tol = kEdgeTolerance * std::max(1.0, operator_norm(F));
    return ev.size() > 0 && ev.minCoeff() < -tol && ev.maxCoeff() > tol;
}

SplitModule split_irreducible(int l) {
    if (l < 0) throw std::invalid_argument("negative signature");
    QMat grading = QMat::identity(1);
    std::vector<QMat> pos, neg;
    QMat fp(2, 2), fm(2, 2), g2(2, 2);
    fp(0, 1) = 1;
    fp(1, 0) = 1;
    fm(0, 1) = -1;
    fm(1, 0) = 1;
    g2(0, 0) = 1;
    g2(1, 1) = -1;
    for (int c = 0; c < l; ++c) {
        QMat one = QMat::identity(2);
        for (auto& g : pos) g = kron(g, one);
        for (auto& g : neg) g = kron(g, one);
        pos.push_back(kron(grading, fp));
        neg.push_back(kron(grading, fm));
        grading = kron(grading, g2);
    }
    std::vector<std::size_t> order;
    for (int parity : {1, -1})
        for (std::size_t i = 0; i < grading.rows(); ++i)
            if (grading(i, i) == parity) order.push_back(i);
    SplitModule m;
    m.even_dim = (grading.rows() + 1) / 2;
    m.odd_dim = grading.rows() - m.even_dim;
    for (const auto* list : {&pos, &neg})
        for (const auto& g : *list) m.gens.push_back(permuted(g, order));
    return m;
}

BlockTransform block_transform(const GradedCliffordModule& H, const Eigen::MatrixXd& F) {
    require_square(H, F);
    int n = -H.n;
    if (n <= 0) throw std::invalid_argument("block transformation needs positive degree");
    BlockTransform t;
    t.k = (n + 3) / 4;
    t.l = 4 * t.k - n;
    SplitModule V = split_irreducible(t.l);
    std::size_t dv = V.even_dim + V.odd_dim, dh = H.dim();
    t.v_dim = dv;
    QMat eps_h = H.grading(), one_v = QMat::identity(dv), one_h = QMat::identity(dh);
    QMat eps_v(dv, dv);
    for (std::size_t a = 0; a < dv; ++a) eps_v(a, a) = a < V.even_dim ? 1 : -1;

    std::vector<QMat> positive, negative;
    for (const auto& e : H.gens) positive.push_back(kron(e, one_v));
    for (int j = 0; j < t.l; ++j) {
        positive.push_back(kron(eps_h, V.gens[static_cast<std::size_t>(j)]));
        negative.push_back(kron(eps_h, V.gens[static_cast<std::size_t>(t.l + j)]));
    }
    // four anticommuting square roots of 1 give four square roots of -1: a_i w
    std::vector<QMat> gens;
    for (std::size_t g = 0; g < positive.size(); g += 4) {
        QMat w = positive[g] * positive[g + 1] * positive[g + 2] * positive[g + 3];
        for (std::size_t i = 0; i < 4; ++i) gens.push_back(positive[g + i] * w);
    }
    gens.insert(gens.end(), negative.begin(), negative.end());

    QMat total = kron(eps_h, eps_v);
    for (int parity : {1, -1})
        for (std::size_t i = 0; i < total.rows(); ++i)
            if (total(i, i) == parity) t.order.push_back(i);
    t.module.n = 4 * t.k + t.l;
    t.module.even_dim = dh * dv / 2;
    t.module.odd_dim = dh * dv - t.module.even_dim;
    for (const auto& g : gens) t.module.gens.push_back(permuted(g, t.order));

    Eigen::MatrixXd ev = to_real_matrix(eps_v);
    Eigen::MatrixXd tensor(F.rows() * ev.rows(), F.cols() * ev.cols());
    for (Eigen::Index i = 0; i < F.rows(); ++i)
        for (Eigen::Index j = 0; j < F.cols(); ++j) tensor.block(i * ev.rows(), j * ev.cols(), ev.rows(), ev.cols()) = F(i, j) * ev;
    t.F.resize(tensor.rows(), tensor.cols());
    for (std::size_t p = 0; p < t.order.size(); ++p)
        for (std::size_t q = 0; q < t.order.size(); ++q)
            t.F(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
                tensor(static_cast<Eigen::Index>(t.order[p]), static_cast<Eigen::Index>(t.order[q]));
    return t;
}

Eigen::MatrixXd block_transform_inverse(const BlockTransform& t, std::size_t h_dim) {
    if (h_dim * t.v_dim != t.order.size()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::size_t> pos(t.order.size());
    for (std::size_t p = 0; p < t.order.size(); ++p) pos[t.order[p]] = p;
    // the first basis vector of V is even, where eps_V acts by 1
    Eigen::MatrixXd F(h_dim, h_dim);
    for (std::size_t i = 0; i < h_dim; ++i)
        for (std::size_t j = 0; j < h_dim; ++j)
            F(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                t.F(static_cast<Eigen::Index>(pos[i * t.v_dim]), static_cast<Eigen::Index>(pos[j * t.v_dim]));
    return F;
}

std::vector<Eigen::MatrixXd> odd_operator_basis(const GradedCliffordModule& H) {
    std::size_t d = H.dim();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < H.even_dim; ++i)
        for (std::size_t j = H.even_dim; j < d; ++j) slots.emplace_back(i, j);
    std::vector<Eigen::MatrixXd> out;
    if (slots.empty()) return out;
    QMat system(std::max<std::size_t>(1, H.gens.size() * d * d), slots.size());
    for (std::size_t u = 0; u < slots.size(); ++u) {
        QMat unit(d, d);
        unit(slots[u].first, slots[u].second) = 1;
        unit(slots[u].second, slots[u].first) = 1;
        for (std::size_t g = 0; g < H.gens.size(); ++g) {
            QMat comm = H.gens[g] * unit - unit * H.gens[g];
            for (std::size_t k = 0; k < d * d; ++k) system(g * d * d + k, u) = comm(k / d, k % d);
        }
    }
    QMat null = nullspace(system);
    for (std::size_t c = 0; c < null.cols(); ++c) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t u = 0; u < slots.size(); ++u) {
            double v = null(u, c).get_d();
            x(static_cast<Eigen::Index>(slots[u].first), static_cast<Eigen::Index>(slots[u].second)) = v;
            x(static_cast<Eigen::Index>(slots[u].second), static_cast<Eigen::Index>(slots[u].first)) = v;
        }
        out.push_back(x / operator_norm(x));
    }
    return out;
}

Eigen::MatrixXd random_odd_operator(Rng& rng, const std::vector<Eigen::MatrixXd>& basis) {
    if (basis.empty()) throw std::invalid_argument("no odd operators on this module");
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) x += rng.real(-1, 1) * b;
    return x;
}

}  // namespace superko
