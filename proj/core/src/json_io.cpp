#include "superko/json_io.hpp"

#include <stdexcept>

namespace superko {

namespace {

template <class S>
S scalar_from_json(const Json& j) {
    if constexpr (std::is_same_v<S, Rational>)
        return rational_from_json(j);
    else
        return gaussian_from_json(j);
}

template <class S>
const char* field_tag() {
    return ScalarTraits<S>::is_complex ? "C" : "R";
}

Json subset_json(Subset s) {
    Json a = Json::array();
    for (unsigned i = 0; i < 32; ++i)
        if (s & (Subset(1) << i)) a.push_back(i + 1);
    return a;
}

Subset subset_from_json(const Json& j) {
    Subset s = 0;
    for (const auto& v : j) {
        int i = v.get<int>();
        if (i < 1 || i > 16) throw std::invalid_argument("generator index out of range");
        Subset bit = Subset(1) << (i - 1);
        if (s & bit) throw std::invalid_argument("repeated generator in a subset");
        s |= bit;
    }
    return s;
}

template <class S>
Json grassmann_json(const Grassmann<S>& a) {
    Json terms = Json::array();
    for (Subset s : a.support()) {
        GaussianRational g(a[s]);
        terms.push_back({{"subset", subset_json(s)}, {"re", to_json(g.re)}, {"im", to_json(g.im)}});
    }
    return {{"q", a.q()}, {"field", field_tag<S>()}, {"terms", terms}};
}

// Applies the sign that orders the listed generators.
template <class S>
Grassmann<S> grassmann_read(const Json& j) {
    unsigned q = j.at("q").get<unsigned>();
    if (q > 16) throw std::invalid_argument("at most 16 generators");
    Grassmann<S> a(q);
    for (const auto& t : j.at("terms")) {
        Grassmann<S> term(q, S(1));
        for (const auto& v : t.at("subset")) {
            unsigned i = v.get<unsigned>();
            if (i < 1 || i > q) throw std::invalid_argument("generator index out of range");
            term = term * Grassmann<S>::generator(q, i - 1);
        }
        GaussianRational c(rational_from_json(t.at("re")), t.contains("im") ? rational_from_json(t.at("im")) : Rational(0));
        if constexpr (std::is_same_v<S, Rational>) {
            if (!is_zero(c.im)) throw std::invalid_argument("complex coefficient in a real algebra");
            a += term * c.re;
        } else {
            a += term * c;
        }
    }
    return a;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const GaussianRational& g) { return {{"re", to_string(g.re)}, {"im", to_string(g.im)}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string");
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_object()) return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
    return GaussianRational(rational_from_json(j));
}

Json to_json(const RealGrassmann& a) { return grassmann_json(a); }
Json to_json(const CG& a) { return grassmann_json(a); }
RealGrassmann real_grassmann_from_json(const Json& j) { return grassmann_read<Rational>(j); }
CG grassmann_from_json(const Json& j) { return grassmann_read<GaussianRational>(j); }

Json to_json(const CCircle& x) { return {{"body", to_json(x.body())}, {"soul", to_json(x.soul())}}; }

CCircle circle_from_json(const Json& j) {
    CG soul = grassmann_from_json(j.at("soul"));
    if (!is_zero(soul.body()) || !soul.is_even()) throw std::invalid_argument("circle soul must be even and nilpotent");
    return CCircle(soul.q(), rational_from_json(j.at("body"))) + soul;
}

template <class S>
Json to_json(const Mat<S>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class S>
Mat<S> matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix");
    std::size_t r = j.size(), c = r ? j[0].size() : 0;
    Mat<S> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json<S>(j[i][k]);
    }
    return m;
}

template <class S>
Json to_json(const GradedModule<S>& m) {
    Json gens = Json::array();
    for (const auto& g : m.gens) gens.push_back(to_json(g));
    return {{"n", m.n}, {"field", field_tag<S>()}, {"even_dim", m.even_dim}, {"odd_dim", m.odd_dim}, {"generators", gens}};
}

template <class S>
GradedModule<S> module_from_json(const Json& j) {
    GradedModule<S> m;
    m.n = j.at("n").get<int>();
    m.even_dim = j.at("even_dim").get<std::size_t>();
    m.odd_dim = j.at("odd_dim").get<std::size_t>();
    for (const auto& g : j.at("generators")) m.gens.push_back(matrix_from_json<S>(g));
    if (auto v = m.violation(); !v.empty()) throw std::invalid_argument("invalid module: " + v);
    return m;
}

namespace {

const char* kind_name(MapKind k) {
    switch (k) {
        case MapKind::Id0: return "id";
        case MapKind::Gamma: return "gamma";
        case MapKind::Tau: return "tau";
        case MapKind::TauS: return "tau_s";
        case MapKind::Nu: return "nu";
        case MapKind::Kappa: return "kappa";
    }
    return "?";
}

}  // namespace

Json to_json(const SuperMap& m) {
    return {{"kind", kind_name(m.kind())}, {"twist", m.twist()},   {"q", m.q()},
            {"z", to_json(m.even_param())}, {"theta", to_json(m.theta())}, {"x", to_json(m.x())}};
}

SuperMap super_map_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    unsigned q = j.at("q").get<unsigned>();
    auto z = [&] { return grassmann_from_json(j.at("z")); };
    auto theta = [&] { return grassmann_from_json(j.at("theta")); };
    auto x = [&] { return circle_from_json(j.at("x")); };
    SuperMap m = SuperMap::identity(Space::R01, q);
    if (kind == "id")
        m = SuperMap::identity(Space::R01, q);
    else if (kind == "gamma")
        m = SuperMap::gamma(z(), theta());
    else if (kind == "tau")
        m = SuperMap::tau(z(), theta());
    else if (kind == "tau_s")
        m = SuperMap::tau_s(x());
    else if (kind == "nu")
        m = SuperMap::nu(x(), z(), theta());
    else if (kind == "kappa")
        m = SuperMap::kappa(x(), z(), theta());
    else
        throw std::invalid_argument("unknown map kind: " + kind);
    return j.value("twist", false) ? m.twisted() : m;
}

Json to_json(const CliffordWord& c) {
    Json terms = Json::array();
    for (const auto& [s, g] : c.terms())
        terms.push_back({{"subset", subset_json(s)}, {"re", to_json(g.re)}, {"im", to_json(g.im)}});
    return {{"n", c.n()}, {"terms", terms}};
}

CliffordWord clifford_word_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    CliffordWord c(n);
    for (const auto& t : j.at("terms")) {
        Subset s = subset_from_json(t.at("subset"));
        if (s >> CliffordWord(n).generator_count()) throw std::invalid_argument("Clifford generator out of range");
        c += CliffordWord::basis(n, s, {rational_from_json(t.at("re")), rational_from_json(t.value("im", Json("0")))});
    }
    return c;
}

Json to_json(const SebEndo& e) {
    Json interval = nullptr;
    if (e.interval) interval = {{"z", to_json(e.interval->z)}, {"theta", to_json(e.interval->theta)}};
    return {{"n", e.n}, {"twist", e.twist}, {"c", to_json(e.c)}, {"interval", interval}};
}

SebEndo seb_from_json(const Json& j) {
    SebEndo e = SebEndo::clifford(clifford_word_from_json(j.at("c")));
    if (e.n != j.at("n").get<int>()) throw std::invalid_argument("Clifford word of the wrong degree");
    e.twist = j.value("twist", false);
    if (j.contains("interval") && !j.at("interval").is_null())
        e.interval = make_interval(grassmann_from_json(j["interval"].at("z")), grassmann_from_json(j["interval"].at("theta")));
    return e;
}

Json to_json(const SabEndo& e) {
    Json annulus = nullptr;
    if (e.annulus)
        annulus = {{"x", to_json(e.annulus->x)}, {"y", to_json(e.annulus->y)}, {"theta", to_json(e.annulus->theta)}};
    return {{"n", e.n},           {"q", e.rotation.q()}, {"twist", e.twist}, {"c", to_json(e.c)},
            {"rotation", to_json(e.rotation)}, {"annulus", annulus}};
}

SabEndo sab_from_json(const Json& j) {
    SabEndo e = SabEndo::clifford(clifford_word_from_json(j.at("c")), j.at("q").get<unsigned>());
    if (e.n != j.at("n").get<int>()) throw std::invalid_argument("Clifford word of the wrong degree");
    e.twist = j.value("twist", false);
    e.rotation = circle_from_json(j.at("rotation"));
    if (j.contains("annulus") && !j.at("annulus").is_null()) {
        const Json& a = j["annulus"];
        if (!is_zero(e.rotation.body()) || !e.rotation.soul().is_zero())
            throw std::invalid_argument("an annulus endomorphism carries no separate rotation");
        e.annulus = make_annulus(circle_from_json(a.at("x")), grassmann_from_json(a.at("y")), grassmann_from_json(a.at("theta")));
    }
    return e;
}

Json to_json(const SeftGenerator& g) {
    return {{"kind", "seft"}, {"ambient", to_json(g.ambient)}, {"projector", to_json(g.projector)}, {"Q", to_json(g.Q)}};
}

SeftGenerator seft_generator_from_json(const Json& j) {
    SeftGenerator g;
    g.ambient = module_from_json<Rational>(j.at("ambient"));
    g.projector = matrix_from_json<Rational>(j.at("projector"));
    g.Q = matrix_from_json<Rational>(j.at("Q"));
    if (auto v = g.violation(); !v.empty()) throw std::invalid_argument("invalid generator: " + v);
    return g;
}

Json to_json(const AftGenerator& g) {
    return {{"kind", "aft"}, {"ambient", to_json(g.ambient)}, {"degree", g.degree}, {"L", to_json(g.L)}, {"G", to_json(g.G)}};
}

AftGenerator aft_generator_from_json(const Json& j) {
    AftGenerator g;
    g.ambient = module_from_json<GaussianRational>(j.at("ambient"));
    g.degree = j.at("degree").get<std::vector<int>>();
    g.L = matrix_from_json<GaussianRational>(j.at("L"));
    g.G = matrix_from_json<GaussianRational>(j.at("G"));
    if (auto v = g.violation(); !v.empty()) throw std::invalid_argument("invalid generator: " + v);
    return g;
}

Json to_json(const Label& l) { return {{"lambda", to_json(l.lambda)}, {"k", l.k}}; }
Label label_from_json(const Json& j) { return {rational_from_json(j.at("lambda")), j.value("k", 0)}; }

template <class S>
Json to_json(const SpectralData<S>& e) {
    Json spaces = Json::array();
    for (const auto& [l, v] : e.spaces)
        spaces.push_back({{"lambda", to_json(l.lambda)}, {"k", l.k}, {"basis", to_json(v.basis())}});
    return {{"k0", e.k0 ? Json(*e.k0) : Json(nullptr)}, {"spaces", spaces}};
}

template <class S>
SpectralData<S> spectral_from_json(const Json& j) {
    SpectralData<S> e;
    if (j.contains("k0") && !j.at("k0").is_null()) e.k0 = j.at("k0").get<int>();
    for (const auto& s : j.at("spaces")) {
        auto [it, fresh] = e.spaces.emplace(label_from_json(s), Subspace<S>::span(matrix_from_json<S>(s.at("basis"))));
        if (!fresh) throw std::invalid_argument("repeated eigenvalue label " + it->first.str());
    }
    return e;
}

template <class S>
Json to_json(const DeformationMorphism<S>& m) {
    Json alpha = Json::array();
    for (const auto& [from, to] : m.alpha) alpha.push_back({{"from", to_json(from)}, {"to", to_json(to)}});
    return {{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"alpha", alpha}, {"f", to_json(m.f)},
            {"A", to_json(m.A.basis())}};
}

template <class S>
DeformationMorphism<S> deformation_from_json(const Json& j) {
    DeformationMorphism<S> m;
    m.source = spectral_from_json<S>(j.at("source"));
    m.target = spectral_from_json<S>(j.at("target"));
    for (const auto& a : j.at("alpha")) m.alpha[label_from_json(a.at("from"))] = label_from_json(a.at("to"));
    m.f = matrix_from_json<S>(j.at("f"));
    Mat<S> a = matrix_from_json<S>(j.at("A"));
    m.A = a.cols() == 0 ? Subspace<S>(m.f.rows()) : Subspace<S>::span(a);
    return m;
}

Json to_json(const QuotientGroup& g) {
    Json torsion = Json::array(), images = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    for (const auto& v : g.generator_images) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        images.push_back(row);
    }
    return {{"n", g.n},
            {"field", g.field == Field::Real ? "R" : "C"},
            {"group", g.presentation()},
            {"rank", g.rank},
            {"torsion", torsion},
            {"generator_images", images},
            {"inverses_verified", g.inverses_verified}};
}

Json to_json(const Pi0Report& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json label = Json::array();
        for (const auto& x : c.label) label.push_back(x.get_str());
        comps.push_back({{"representative", c.representative}, {"label", label}, {"size", c.size}});
    }
    return {{"n", r.n},
            {"field", r.field == Field::Real ? "R" : "C"},
            {"dim_cap", r.dim_cap},
            {"objects", r.objects},
            {"edges", r.edges},
            {"group", to_json(r.group)},
            {"components", comps},
            {"consistent", r.consistent},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"additive", r.additive},
            {"ok", r.ok()},
            {"failure", r.failure}};
}

Json to_json(const TateReport& r) {
    Json degrees = Json::array();
    for (std::size_t i = 0; i < r.degrees.size(); ++i)
        degrees.push_back({{"k", r.k_min + static_cast<int>(i)},
                           {"group", r.coefficients[i].presentation()},
                           {"components", r.degrees[i].components.size()},
                           {"ok", r.degrees[i].ok()}});
    return {{"n", r.n}, {"k_min", r.k_min}, {"k_max", r.k_max}, {"degrees", degrees}, {"ok", r.ok()}};
}

#define SUPERKO_JSON(S)                                               \
    template Json to_json(const Mat<S>&);                             \
    template Mat<S> matrix_from_json<S>(const Json&);                 \
    template Json to_json(const GradedModule<S>&);                    \
    template GradedModule<S> module_from_json<S>(const Json&);        \
    template Json to_json(const SpectralData<S>&);                    \
    template SpectralData<S> spectral_from_json<S>(const Json&);      \
    template Json to_json(const DeformationMorphism<S>&);             \
    template DeformationMorphism<S> deformation_from_json<S>(const Json&);

SUPERKO_JSON(Rational)
SUPERKO_JSON(GaussianRational)

#undef SUPERKO_JSON

}  // namespace superko
