#pragma once

// JSON forms of presentations, matrices and polynomials. Big integers are
// written as numbers when they fit in 64 bits and as decimal strings
// otherwise; rationals are strings "p/q".

#include "json.hpp"

#include "gentle/exact_linalg.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

/// {vertices: [...], arrows: [{id, source, target}], relations: [[outer, inner]]}
Json to_json(const Presentation& p);
/// Throws ParseError on malformed input.
Presentation presentation_from_json(const Json& j);

/// {rows: [[...]], row_labels: [...], col_labels: [...]}
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

/// Ascending coefficient array.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// CM-Auslander algebra of p with the data it was built from:
/// {vertices, arrows, relations, cycles, gorenstein_projectives}.
Json cm_auslander_json(const Presentation& p);

}  // namespace gentle
