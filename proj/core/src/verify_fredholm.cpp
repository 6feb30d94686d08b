#include <Eigen/Eigenvalues>

#include "superko/fredholm.hpp"
#include "verify_detail.hpp"

namespace superko::detail {

namespace {

constexpr double kTolerance = 1e-9;

GradedCliffordModule copies_of_irreducibles(int m, std::size_t copies) {
    std::vector<GradedCliffordModule> parts;
    auto irr = irreducible_graded_modules(m);
    for (std::size_t c = 0; c < copies; ++c)
        for (const auto& g : irr) parts.push_back(g);
    return assemble_sum(parts).module;
}

// The smallest module carrying odd operators without a kernel: I + reversed I.
GradedCliffordModule balanced(int m) {
    auto irr = irreducible_graded_modules(m);
    return assemble_sum(std::vector<GradedCliffordModule>{irr[0], parity_reverse(irr[0])}).module;
}

// Odd function of an admissible operator: eigenvalues below cut become 0.
Eigen::MatrixXd cut_small(const Eigen::MatrixXd& A, double cut) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) < cut) ev(i) = 0;
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// Columns spanning the eigenvectors of F with |lambda| >= bound.
Eigen::MatrixXd large_eigenspace(const Eigen::MatrixXd& F, double bound) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(F);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i)) >= bound) keep.push_back(i);
    Eigen::MatrixXd V(F.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) V.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    return V;
}

struct Setting {
    GradedCliffordModule H;
    std::vector<Eigen::MatrixXd> basis;
};

// A window around an operator with a kernel, together with the base operator.
SpectralWindow random_window(Rng& rng, const Setting& s) {
    for (;;) {
        Eigen::MatrixXd A = random_odd_operator(rng, s.basis);
        Eigen::MatrixXd F0 = cut_small(A, rng.real(0.1, 0.8) * operator_norm(A));
        try {
            return make_window(s.H, F0);
        } catch (const std::invalid_argument&) {
        }
    }
}

Eigen::MatrixXd unit_direction(Rng& rng, const Setting& s) {
    Eigen::MatrixXd X = random_odd_operator(rng, s.basis);
    return X / operator_norm(X);
}

long rank_of(const Eigen::MatrixXd& p) { return std::lround(p.trace()); }

Outcome continuity_sample(Rng& rng, const Setting& s, bool adversarial) {
    SpectralWindow w = random_window(rng, s);
    double eps = rng.real(0.01, 0.99);
    double a = adversarial ? rng.real(0.8, 0.95) : rng.real(0, 0.9);
    Eigen::MatrixXd F1 = w.base + a * w.c * unit_direction(rng, s);
    double room = std::min(w.c * eps, w.c * (1 - a));
    double b = room * (adversarial ? rng.real(0.95, 0.999) : rng.real(0.01, 0.99));
    Eigen::MatrixXd F = F1 + b * unit_direction(rng, s);
    try {
        double d = operator_norm(spectral_projection(w, F) - spectral_projection(w, F1));
        Outcome o = Outcome::measured(d, eps);
        if (o.ok && !projection_continuity_check(w, F1, F, eps)) return Outcome::fail("continuity check rejected a valid pair");
        return o;
    } catch (const std::domain_error&) {
        return Outcome::pass();  // an eigenvalue on the window edge; the projection is refused
    }
}

}  // namespace

SuiteReport fredholm_suite(const VerifyOptions& o) {
    SuiteReport s{"fredholm", {}};
    Setting st;
    st.H = copies_of_irreducibles(0, 10);
    st.basis = odd_operator_basis(st.H);
    s.checks.push_back(run_check("fredholm.continuity", 500, o,
                                 [&st](Rng& rng, std::size_t) { return continuity_sample(rng, st, false); }));
    s.checks.push_back(run_check("fredholm.continuity_adversarial", 100, o,
                                 [&st](Rng& rng, std::size_t) { return continuity_sample(rng, st, true); }));
    s.checks.push_back(run_check("fredholm.rank_constancy", 50, o, [&st](Rng& rng, std::size_t) {
        SpectralWindow w = random_window(rng, st);
        Eigen::MatrixXd X = unit_direction(rng, st), Y = unit_direction(rng, st);
        double r = 0.9 * w.c;
        long rank = rank_of(spectral_projection(w, w.base));
        for (int i = 0; i <= 20; ++i) {
            double t = i / 20.0;
            // a bent path inside the ball of radius c
            Eigen::MatrixXd F = w.base + r * (t * X + t * (1 - t) * Y) / 1.25;
            if (rank_of(spectral_projection(w, F)) != rank) return Outcome::fail("rank jumps along the path");
        }
        return Outcome::pass();
    }));
    s.checks.push_back(run_check("fredholm.projector", 200, o, [&st](Rng& rng, std::size_t) {
        SpectralWindow w = random_window(rng, st);
        Eigen::MatrixXd F = w.base + rng.real(0, 0.9) * w.c * unit_direction(rng, st);
        Eigen::MatrixXd p = spectral_projection(w, F);
        double err = operator_norm(p * p - p);
        err = std::max(err, operator_norm(p - p.transpose()));
        err = std::max(err, operator_norm(F * p - p * F));
        for (const auto& g : st.H.gens) {
            Eigen::MatrixXd e = to_real_matrix(g);
            err = std::max(err, operator_norm(e * p - p * e));
        }
        // kernel of the base operator has the same dimension as the window
        if (rank_of(p) != rank_of(spectral_projection(w, w.base))) return Outcome::fail("rank differs from the base");
        return Outcome::measured(err, kTolerance);
    }));
    s.checks.push_back(run_check("fredholm.retract", 200, o, [&st](Rng& rng, std::size_t) {
        SpectralWindow w = random_window(rng, st);
        Eigen::MatrixXd F = w.base + rng.real(0, 0.5) * w.c * unit_direction(rng, st);
        Eigen::MatrixXd V = large_eigenspace(F, rng.real(2, 6) * w.c);
        Eigen::MatrixXd pv = V * V.transpose();
        Eigen::MatrixXd pf = spectral_projection(w, F);
        Eigen::MatrixXd r = retract(w, V, F);
        double err = operator_norm(r - (pv + pf));
        err = std::max(err, operator_norm(r * r - r));
        if (std::abs(r.trace() - static_cast<double>(V.cols()) - pf.trace()) > 1e-6)
            return Outcome::fail("retract has the wrong rank");
        return Outcome::measured(err, kTolerance);
    }));
    s.checks.push_back(run_check("fredholm.membership", 4, o, [](Rng& rng, std::size_t i) {
        if (i == 0) {
            Setting z{balanced(0), {}};
            z.basis = odd_operator_basis(z.H);
            return expect(fredn_membership(z.H, random_odd_operator(rng, z.basis)), "n = 0 operator rejected");
        }
        auto irr = irreducible_graded_modules(-1);
        AssembledSum<Rational> sum = assemble_sum(std::vector<GradedCliffordModule>{irr[0], irr[0]});
        const GradedCliffordModule& H = sum.module;
        Eigen::MatrixXd e1 = to_real_matrix(H.gens[0]);
        double a = rng.real(0.5, 2);
        if (i == 1) return expect(!fredn_membership(H, a * e1), "positive multiple of e1 accepted");
        if (i == 2) return expect(!fredn_membership(H, -a * e1), "negative multiple of e1 accepted");
        Eigen::MatrixXd d = Eigen::MatrixXd::Identity(e1.rows(), e1.cols());
        for (std::size_t j : sum.indices[1]) d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = -1;
        return expect(fredn_membership(H, a * e1 * d), "operator with both signs rejected");
    }));
    s.checks.push_back(run_check("fredholm.block_transform", 7, o, [](Rng& rng, std::size_t i) {
        int n = static_cast<int>(i) + 1;
        GradedCliffordModule H = balanced(-n);
        auto basis = odd_operator_basis(H);
        for (int j = 0; j < 3; ++j) {
            Eigen::MatrixXd F = random_odd_operator(rng, basis);
            BlockTransform t = block_transform(H, F);
            if (j == 0)
                if (auto v = t.module.violation(); !v.empty()) return Outcome::fail("target module: " + v);
            if (t.module.n != 4 * t.k + t.l) return Outcome::fail("target degree");
            if (auto v = odd_operator_violation(t.module, t.F); !v.empty()) return Outcome::fail("target operator: " + v);
            if (operator_norm(block_transform_inverse(t, H.dim()) - F) > kTolerance) return Outcome::fail("inverse");
            if (fredn_membership(H, F) != fredn_membership(t.module, t.F)) return Outcome::fail("membership changes");
        }
        return Outcome::pass();
    }));
    return s;
}

}  // namespace superko::detail
