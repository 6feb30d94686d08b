#include "superko/fieldtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace superko {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

template <class S>
bool commutes(const Mat<S>& a, const Mat<S>& b) {
    return a * b == b * a;
}

template <class S>
bool anticommutes(const Mat<S>& a, const Mat<S>& b) {
    return a * b == -(b * a);
}

bool positive_real(const GaussianRational& g) { return is_zero(g.im) && sgn(g.re) > 0; }

Eigen::MatrixXd to_real_eigen(const QMat& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
    return e;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

NumericOperator numeric_product(const NumericOperator& a, const NumericOperator& b) {
    NumericOperator r;
    for (const auto& [ka, ma] : a)
        for (const auto& [kb, mb] : b) {
            int sg = subset_sign(ka.first, kb.first);
            if (sg == 0) continue;
            if (ka.second && subset_parity(kb.first)) sg = -sg;
            std::pair<Subset, int> k{ka.first | kb.first, (ka.second + kb.second) & 1};
            Eigen::MatrixXcd prod = ma * mb * double(sg);
            auto it = r.find(k);
            if (it == r.end())
                r.emplace(k, prod);
            else
                it->second += prod;
        }
    return r;
}

double numeric_distance(const NumericOperator& a, const NumericOperator& b) {
    double scale = 1.0;
    for (const auto& [k, m] : b) scale = std::max(scale, max_abs(m));
    double worst = 0.0;
    for (const auto& [k, m] : a) {
        auto it = b.find(k);
        worst = std::max(worst, it == b.end() ? max_abs(m) : max_abs(m - it->second));
    }
    for (const auto& [k, m] : b)
        if (!a.count(k)) worst = std::max(worst, max_abs(m));
    return worst / scale;
}

template <class S>
Mat<S> clifford_action(const GradedModule<S>& m, const CliffordWord& c) {
    if (c.n() != -m.n) throw std::invalid_argument("Clifford word and module degrees differ");
    Mat<S> r(m.dim(), m.dim());
    for (const auto& [sub, coeff] : c.terms()) {
        Mat<S> t = Mat<S>::identity(m.dim());
        for (unsigned i = 0; i < c.generator_count(); ++i)
            if (sub & (Subset(1) << i)) t = t * m.gens[i];
        if constexpr (ScalarTraits<S>::is_complex)
            r += t * S(coeff);
        else
            r += t * real_rational(coeff);
    }
    return r;
}
template QMat clifford_action(const GradedModule<Rational>&, const CliffordWord&);
template CMat clifford_action(const GradedModule<GaussianRational>&, const CliffordWord&);

std::string SeftGenerator::violation() const {
    if (auto v = ambient.violation(); !v.empty()) return "ambient: " + v;
    std::size_t d = ambient.dim();
    if (Q.rows() != d || Q.cols() != d || projector.rows() != d || projector.cols() != d)
        return "operator dimensions differ from the ambient";
    if (projector * projector != projector || projector.transpose() != projector)
        return "projector is not an orthogonal projector";
    QMat eps = ambient.grading();
    if (!commutes(projector, eps)) return "projector image is not graded";
    if (Q.transpose() != Q) return "Q is not symmetric";
    if (!anticommutes(Q, eps)) return "Q is not odd";
    if (projector * Q * projector != Q) return "Q is not supported on the projector image";
    for (std::size_t i = 0; i < ambient.gens.size(); ++i) {
        if (!commutes(projector, ambient.gens[i]))
            return "projector image is not invariant under e_" + std::to_string(i + 1);
        if (!commutes(Q, ambient.gens[i])) return "Q is not Clifford-linear (fails for e_" + std::to_string(i + 1) + ")";
    }
    return {};
}

Eigen::MatrixXcd seft_body_factor(const SeftGenerator& g, const Rational& t0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_real_eigen(g.Q));
    Eigen::VectorXd ev = es.eigenvalues();
    double t = t0.get_d();
    Eigen::VectorXd f(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) f(i) = std::exp(-t * ev(i) * ev(i));
    Eigen::MatrixXd body = es.eigenvectors() * f.asDiagonal() * es.eigenvectors().transpose();
    return body.cast<std::complex<double>>();
}

namespace {

SeftEvolution seft_evolution_unchecked(const SeftGenerator& g, const CG& z, const CG& theta) {
    if (!z.is_even() || !theta.is_odd() || z.q() != theta.q())
        throw std::invalid_argument("z must be even and theta odd in one algebra");
    if (!positive_real(z.body())) throw std::invalid_argument("body of z must be positive");
    unsigned q = z.q();
    std::size_t d = g.ambient.dim();
    CMat Qc = g.Q.cast<GaussianRational>();
    using Op = SuperOperator<GaussianRational>;
    Op heat = exp_nilpotent(Op::scalar(-z.soul(), d) * Op::matrix(q, Qc * Qc));
    Op odd = Op::identity(q, d) + Op::scalar(theta, d) * Op::matrix(q, Qc, 1);
    SeftEvolution e;
    e.has_interval = true;
    e.t0 = real_rational(z.body());
    e.nil = heat * odd * Op::matrix(q, g.projector.cast<GaussianRational>());
    return e;
}

}  // namespace

SeftEvolution seft_evolution(const SeftGenerator& g, const CG& z, const CG& theta) {
    if (auto v = g.violation(); !v.empty()) throw std::invalid_argument("invalid generator: " + v);
    return seft_evolution_unchecked(g, z, theta);
}

SeftEvolution represent(const SeftGenerator& g, const SebEndo& e, unsigned q) {
    using Op = SuperOperator<GaussianRational>;
    CMat c = clifford_action(g.ambient, e.c).cast<GaussianRational>();
    if (e.twist) c = g.ambient.grading().cast<GaussianRational>() * c;
    SeftEvolution r;
    r.nil = Op::matrix(q, c);
    if (e.interval) r = r * seft_evolution(g, e.interval->z, e.interval->theta);
    return r;
}

SeftEvolution operator*(const SeftEvolution& a, const SeftEvolution& b) {
    SeftEvolution r;
    r.has_interval = a.has_interval || b.has_interval;
    r.t0 = a.t0 + b.t0;
    r.nil = a.nil * b.nil;
    return r;
}

NumericOperator numeric(const SeftGenerator& g, const SeftEvolution& e) {
    std::size_t d = g.ambient.dim();
    Eigen::MatrixXcd body = e.has_interval ? seft_body_factor(g, e.t0) : Eigen::MatrixXcd::Identity(d, d);
    NumericOperator r;
    for (const auto& [k, m] : e.nil.terms()) r.emplace(k, body * to_eigen(m));
    return r;
}

RelationReport verify_xy_relations(const SeftGenerator& g, const std::vector<XySample>& samples) {
    RelationReport rep;
    if (auto v = g.violation(); !v.empty()) {
        rep.passed = false;
        rep.failure = "generator: " + v;
        return rep;
    }
    CMat eps = g.ambient.grading().cast<GaussianRational>();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        auto e1 = seft_evolution_unchecked(g, s.z, s.theta);
        auto e2 = seft_evolution_unchecked(g, s.z2, s.theta2);
        auto e12 = seft_evolution_unchecked(g, s.z + s.z2 + s.theta * s.theta2, s.theta + s.theta2);
        auto prod = e1 * e2;
        ++rep.checks;
        if (prod.nil != e12.nil || prod.t0 != e12.t0) {
            rep.passed = false;
            rep.failure = "sample " + std::to_string(k) + ": nilpotent sector differs";
            return rep;
        }
        double err = numeric_distance(numeric_product(numeric(g, e1), numeric(g, e2)), numeric(g, e12));
        rep.max_body_error = std::max(rep.max_body_error, err);
        if (err >= 1e-10) {
            rep.passed = false;
            rep.failure = "sample " + std::to_string(k) + ": body sector error " + std::to_string(err);
            return rep;
        }
        ++rep.checks;
        if (e1.nil.conjugate_by(eps, eps) != seft_evolution_unchecked(g, s.z, -s.theta).nil) {
            rep.passed = false;
            rep.failure = "sample " + std::to_string(k) + ": grading conjugation fails";
            return rep;
        }
        for (const auto& gen : g.ambient.gens) {
            CMat ec = gen.cast<GaussianRational>();
            ++rep.checks;
            if (e1.nil.conjugate_by(ec, inverse(ec)) != e1.nil) {
                rep.passed = false;
                rep.failure = "sample " + std::to_string(k) + ": evolution is not Clifford-linear";
                return rep;
            }
        }
    }
    return rep;
}

CMat AftGenerator::K() const { return L - G * G; }
CMat AftGenerator::H() const { return L + G * G; }

std::string AftGenerator::violation() const {
    if (auto v = ambient.violation(); !v.empty()) return "ambient: " + v;
    std::size_t d = ambient.dim();
    if (degree.size() != d) return "one degree label per basis vector required";
    if (L.rows() != d || L.cols() != d || G.rows() != d || G.cols() != d) return "operator dimensions differ from the ambient";
    CMat eps = ambient.grading();
    if (L.adjoint() != L) return "L is not self-adjoint";
    if (G.adjoint() != G) return "G is not self-adjoint";
    if (!commutes(L, eps)) return "L is not even";
    if (!anticommutes(G, eps)) return "G is not odd";
    if (!commutes(L, G)) return "L and G do not commute";
    for (std::size_t i = 0; i < ambient.gens.size(); ++i)
        if (!commutes(L, ambient.gens[i]) || !commutes(G, ambient.gens[i]))
            return "generators are not Clifford-linear (fails for e_" + std::to_string(i + 1) + ")";
    CMat k = K();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            GaussianRational want = i == j ? GaussianRational(degree[i]) : GaussianRational(0);
            if (k(i, j) != want) return "L - G^2 is not k on H_k";
        }
    return {};
}

namespace {

AftEvolution aft_evolution_unchecked(const AftGenerator& g, const CCircle& x, const CG& y, const CG& theta) {
    if (!y.is_even() || !theta.is_odd() || y.q() != theta.q() || x.q() != y.q())
        throw std::invalid_argument("x, y must be even and theta odd in one algebra");
    if (!positive_real(y.body())) throw std::invalid_argument("body of y must be positive");
    unsigned q = y.q();
    std::size_t d = g.ambient.dim();
    using Op = SuperOperator<SPoly>;
    SPoly s = SPoly::s();
    SPoly s2 = s * s;
    Mat<SPoly> K = g.K().cast<SPoly>(), H = g.H().cast<SPoly>(), G = g.G.cast<SPoly>();
    Op expo = Op::scalar(x.soul().cast<SPoly>() * s2, d) * Op::matrix(q, K) +
              Op::scalar(y.soul().cast<SPoly>() * (SPoly::i() * s2), d) * Op::matrix(q, H);
    Op odd = Op::identity(q, d) + Op::scalar(theta.cast<SPoly>() * s, d) * Op::matrix(q, G, 1);
    AftEvolution e;
    e.x0 = x.body();
    e.y0 = real_rational(y.body());
    e.nil = exp_nilpotent(expo) * odd;
    return e;
}

}  // namespace

AftEvolution aft_evolution(const AftGenerator& g, const CCircle& x, const CG& y, const CG& theta) {
    if (auto v = g.violation(); !v.empty()) throw std::invalid_argument("invalid generator: " + v);
    return aft_evolution_unchecked(g, x, y, theta);
}

AftEvolution represent(const AftGenerator& g, const SabEndo& e) {
    using Op = SuperOperator<SPoly>;
    unsigned q = e.rotation.q();
    std::size_t d = g.ambient.dim();
    CMat c = clifford_action(g.ambient, e.c);
    if (e.twist) c = g.ambient.grading() * c;
    AftEvolution r;
    r.nil = Op::matrix(q, c.cast<SPoly>());
    AftEvolution tail;
    if (e.annulus) {
        tail = aft_evolution(g, e.annulus->x, e.annulus->y, e.annulus->theta);
    } else {
        // E(tau_x) = e^{-2 pi i x K}
        SPoly s2 = SPoly::s() * SPoly::s();
        tail.x0 = frac_part(-e.rotation.body());
        tail.nil = exp_nilpotent(Op::scalar(e.rotation.soul().cast<SPoly>() * (-s2), d) * Op::matrix(q, g.K().cast<SPoly>()));
    }
    return r * tail;
}

AftEvolution operator*(const AftEvolution& a, const AftEvolution& b) {
    AftEvolution r;
    r.x0 = frac_part(a.x0 + b.x0);
    r.y0 = a.y0 + b.y0;
    r.nil = a.nil * b.nil;
    return r;
}

AftEvolution dagger(const AftEvolution& e) {
    AftEvolution r;
    r.x0 = frac_part(-e.x0);
    r.y0 = e.y0;
    r.nil = e.nil.dagger();
    return r;
}

bool operator==(const AftEvolution& a, const AftEvolution& b) {
    return a.x0 == b.x0 && a.y0 == b.y0 && a.nil == b.nil;
}

Eigen::MatrixXcd aft_body_factor(const AftGenerator& g, const Rational& x0, const Rational& y0) {
    std::size_t d = g.ambient.dim();
    Eigen::VectorXcd phase(d);
    for (std::size_t i = 0; i < d; ++i)
        phase(i) = std::exp(std::complex<double>(0.0, kTwoPi * x0.get_d() * g.degree[i]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(g.H()));
    Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXcd f(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) f(i) = std::exp(-kTwoPi * y0.get_d() * ev(i));
    Eigen::MatrixXcd damp = es.eigenvectors() * f.asDiagonal() * es.eigenvectors().adjoint();
    return phase.asDiagonal() * damp;
}

NumericOperator numeric(const AftGenerator& g, const AftEvolution& e) {
    Eigen::MatrixXcd body = aft_body_factor(g, e.x0, e.y0);
    NumericOperator r;
    for (const auto& [k, m] : e.nil.terms()) r.emplace(k, body * to_eigen(m));
    return r;
}

RelationReport verify_aft_relations(const AftGenerator& g, const std::vector<AftSample>& samples) {
    RelationReport rep;
    auto fail = [&](const std::string& why) {
        rep.passed = false;
        rep.failure = why;
        return rep;
    };
    if (auto v = g.violation(); !v.empty()) return fail("generator: " + v);
    CMat G2 = g.G * g.G;
    CMat P = G2 - g.L;
    ++rep.checks;
    if (G2 * GaussianRational(2) != g.H() + P) return fail("2 G^2 differs from H + P");
    GaussianRational minus_i(Rational(0), Rational(-1));
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        std::string tag = "sample " + std::to_string(k) + ": ";
        auto a1 = make_annulus(s.x, s.y, s.theta);
        auto a2 = make_annulus(s.x2, s.y2, s.theta2);
        auto c = compose(a2, a1);
        auto e1 = aft_evolution_unchecked(g, a1.x, a1.y, a1.theta);
        auto e2 = aft_evolution_unchecked(g, a2.x, a2.y, a2.theta);
        auto e21 = aft_evolution_unchecked(g, c.x, c.y, c.theta);
        ++rep.checks;
        if (!(e2 * e1 == e21)) return fail(tag + "composition law fails in the nilpotent sector");
        double err = numeric_distance(numeric_product(numeric(g, e2), numeric(g, e1)), numeric(g, e21));
        rep.max_body_error = std::max(rep.max_body_error, err);
        if (err >= 1e-10) return fail(tag + "composition body error " + std::to_string(err));
        auto adj = aft_evolution_unchecked(g, -a1.x, a1.y, a1.theta * minus_i);
        ++rep.checks;
        if (!(dagger(e1) == adj)) return fail(tag + "adjoint identity fails in the nilpotent sector");
        NumericOperator lhs;
        for (const auto& [key, m] : numeric(g, e1)) lhs.emplace(key, m.adjoint());
        err = numeric_distance(lhs, numeric(g, adj));
        rep.max_body_error = std::max(rep.max_body_error, err);
        if (err >= 1e-10) return fail(tag + "adjoint body error " + std::to_string(err));
        for (const auto& gen : g.ambient.gens) {
            ++rep.checks;
            Mat<SPoly> ec = gen.cast<SPoly>(), ecinv = inverse(gen).cast<SPoly>();
            if (e1.nil.conjugate_by(ec, ecinv) != e1.nil) return fail(tag + "evolution is not Clifford-linear");
        }
    }
    return rep;
}

SeftSample seft_sample(const SeftGenerator& g, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_real_eigen(g.Q));
    Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXd f(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) f(i) = std::exp(-t * ev(i) * ev(i));
    Eigen::MatrixXd heat = es.eigenvectors() * f.asDiagonal() * es.eigenvectors().transpose();
    Eigen::MatrixXd P = to_real_eigen(g.projector);
    SeftSample s;
    s.t = t;
    s.X = heat * P;
    s.Y = to_real_eigen(g.Q) * heat * P;
    return s;
}

SeftGenerator recover_generator(const GradedCliffordModule& ambient, const std::vector<SeftSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    std::size_t d = ambient.dim();
    const SeftSample& s0 = *std::min_element(samples.begin(), samples.end(),
                                             [](const SeftSample& a, const SeftSample& b) { return a.t < b.t; });
    if (s0.t <= 0) throw std::invalid_argument("sample times must be positive");
    if (static_cast<std::size_t>(s0.X.rows()) != d || static_cast<std::size_t>(s0.Y.rows()) != d)
        throw std::invalid_argument("sample dimensions differ from the ambient");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (s0.X + s0.X.transpose()));
    Eigen::VectorXd mu = es.eigenvalues();
    Eigen::MatrixXd V = es.eigenvectors();
    struct Rate {
        double rate;
        Eigen::Index col;
    };
    std::vector<Rate> rates;
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
        if (mu(i) < -1e-9 || mu(i) > 1 + 1e-9) throw std::domain_error("sample eigenvalue outside [0, 1]");
        if (mu(i) > 1e-12) rates.push_back({std::max(0.0, -std::log(std::min(mu(i), 1.0)) / s0.t), i});
    }
    std::sort(rates.begin(), rates.end(), [](const Rate& a, const Rate& b) { return a.rate < b.rate; });
    // merge rates that agree to 1e-6 relative
    for (std::size_t i = 0; i < rates.size();) {
        std::size_t j = i + 1;
        double sum = rates[i].rate;
        while (j < rates.size() && rates[j].rate - rates[i].rate <= 1e-6 * std::max(1.0, rates[i].rate)) sum += rates[j++].rate;
        double mean = sum / double(j - i);
        for (std::size_t k = i; k < j; ++k) rates[k].rate = mean;
        i = j;
    }
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(d, d), H = P, grow = P;
    for (const auto& r : rates) {
        Eigen::VectorXd v = V.col(r.col);
        P += v * v.transpose();
        H += r.rate * v * v.transpose();
        grow += std::exp(s0.t * r.rate) * v * v.transpose();
    }
    Eigen::MatrixXd Q = s0.Y * grow;
    if ((Q * Q - H).cwiseAbs().maxCoeff() > 1e-6 * std::max(1.0, H.cwiseAbs().maxCoeff()))
        throw std::domain_error("recovered Q does not square to the recovered Hamiltonian");
    SeftGenerator g;
    g.ambient = ambient;
    g.projector = QMat(d, d);
    g.Q = QMat(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            g.projector(i, j) = rationalize(P(i, j), 1e-8, 1L << 20);
            g.Q(i, j) = rationalize(Q(i, j), 1e-8, 1L << 20);
        }
    if (auto v = g.violation(); !v.empty()) throw std::domain_error("samples do not come from a generator: " + v);
    for (const auto& s : samples) {
        SeftSample r = seft_sample(g, s.t);
        double err = std::max((r.X - s.X).cwiseAbs().maxCoeff(), (r.Y - s.Y).cwiseAbs().maxCoeff());
        if (err > 1e-8) throw std::domain_error("samples are inconsistent with a single generator");
    }
    return g;
}

}  // namespace superko
