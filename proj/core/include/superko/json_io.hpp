#pragma once

#include "json.hpp"
#include "superko/bordism.hpp"
#include "superko/categories.hpp"
#include "superko/clifford.hpp"
#include "superko/fieldtheory.hpp"
#include "superko/superspace.hpp"

namespace superko {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; Gaussian rationals as {"re", "im"}.
Json to_json(const Rational& r);
Json to_json(const GaussianRational& g);
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

// {"q", "field": "R"|"C", "terms": [{"subset": [1-based generators], "re", "im"}]}
Json to_json(const RealGrassmann& a);
Json to_json(const CG& a);
RealGrassmann real_grassmann_from_json(const Json& j);
CG grassmann_from_json(const Json& j);

Json to_json(const CCircle& x);
CCircle circle_from_json(const Json& j);

// Row-major nested arrays.
template <class S>
Json to_json(const Mat<S>& m);
template <class S>
Mat<S> matrix_from_json(const Json& j);

// {"n", "field", "even_dim", "odd_dim", "generators": [matrix...]}
template <class S>
Json to_json(const GradedModule<S>& m);
template <class S>
GradedModule<S> module_from_json(const Json& j);

Json to_json(const SuperMap& m);
SuperMap super_map_from_json(const Json& j);

Json to_json(const CliffordWord& c);
CliffordWord clifford_word_from_json(const Json& j);
Json to_json(const SebEndo& e);
SebEndo seb_from_json(const Json& j);
Json to_json(const SabEndo& e);
SabEndo sab_from_json(const Json& j);

// {"kind": "seft", "ambient", "projector", "Q"}; validated on reading.
Json to_json(const SeftGenerator& g);
SeftGenerator seft_generator_from_json(const Json& j);
// {"kind": "aft", "ambient", "degree", "L", "G"}; validated on reading.
Json to_json(const AftGenerator& g);
AftGenerator aft_generator_from_json(const Json& j);

Json to_json(const Label& l);
Label label_from_json(const Json& j);
// {"k0": int|null, "spaces": [{"lambda", "k", "basis"}]}
template <class S>
Json to_json(const SpectralData<S>& e);
template <class S>
SpectralData<S> spectral_from_json(const Json& j);
// {"source", "target", "alpha": [{"from", "to"}], "f", "A"}
template <class S>
Json to_json(const DeformationMorphism<S>& m);
template <class S>
DeformationMorphism<S> deformation_from_json(const Json& j);

Json to_json(const QuotientGroup& g);
Json to_json(const Pi0Report& r);
Json to_json(const TateReport& r);

}  // namespace superko
