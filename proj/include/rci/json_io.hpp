#pragma once

#include "rci/algebra.hpp"
#include "rci/flag.hpp"
#include "rci/forms.hpp"
#include "rci/laurent.hpp"
#include "rci/polytope.hpp"

#include <json.hpp>

#include <vector>

namespace rci::io {

using nlohmann::json;

// Rationals travel as "p/q" strings; integers may also be plain JSON numbers on input.
Rational rational_from_json(const json& j);
json to_json(const Rational& q);
/// JSON number when it fits in 64 bits, decimal string otherwise.
json integer_to_json(const Integer& z);

RationalVector vector_from_json(const json& j, std::size_t dim);
json to_json(const RationalVector& v);

/// {"dim": n, "vertices": [[...], ...]}; "points" is accepted as a synonym.
VPolytope vpolytope_from_json(const json& j);
json to_json(const VPolytope& p);

/// {"dim": n, "inequalities": [{"normal": [...], "rhs": "p/q"}, ...]}
HPolytope hpolytope_from_json(const json& j);
json to_json(const HPolytope& h);

/// A V-rep or H-rep document, whichever keys are present.
VPolytope polytope_from_json(const json& j);

/// {"dim": n, "terms": [{"exponent": [...], "coefficient": "p/q"}]}
LaurentPolynomial laurent_from_json(const json& j);
json to_json(const LaurentPolynomial& f);

/// Either a Laurent polynomial document or a bare support {"dim": n, "points": [[...]]}.
std::vector<Exponent> support_from_json(const json& j, std::size_t& dim);

/// {"group": "GL", "m": 3, "lambda": [2, 1, 0]}
DominantWeight weight_from_json(const json& j);

/// {"variables": s, "degree": n, "terms": [{"exponent": [...], "coefficient": "p/q"}]}
HomogeneousForm homogeneous_from_json(const json& j);
json to_json(const HomogeneousForm& p);

/// {"generators": s, "degree": n, "values": [{"index": [...], "value": "p/q"}]}; index is an exponent vector.
SymmetricForm symmetric_from_json(const json& j);
json to_json(const SymmetricForm& f);

json to_json(const GradedPDAlgebra& a);
json to_json(const DualityReport& r);

}  // namespace rci::io
