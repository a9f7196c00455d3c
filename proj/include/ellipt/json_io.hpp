// JSON serialization for every domain type. Integers render as JSON numbers
// when they fit in 64 bits and as decimal strings beyond that; rationals
// with denominator 1 follow the integer rule and otherwise render "num/den".
#pragma once

#include <json.hpp>

#include "ellipt/cubic_forms.hpp"
#include "ellipt/families.hpp"
#include "ellipt/graded_ring.hpp"
#include "ellipt/int_polynomial.hpp"
#include "ellipt/lambda_product.hpp"
#include "ellipt/milnor_orlik.hpp"
#include "ellipt/rational.hpp"
#include "ellipt/rational_matrix.hpp"
#include "ellipt/sullivan.hpp"

namespace ellipt {

nlohmann::json json_int(const Int& value);
nlohmann::json json_rat(const Rat& value);

// {"unit": +-1, "factors": [[m, e], ...]} with m ascending.
nlohmann::json to_json(const LambdaProduct& lp);
// Coefficient array, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
// [[m, c_m numerator, c_m denominator], ...] with m ascending.
nlohmann::json to_json(const Divisor& divisor);
nlohmann::json to_json(const WeightSystem& ws);
// {"family": "H", "a": [...]} or {"family": "V"|"W", "n": n, "d": d}.
nlohmann::json to_json(const FamilyInstance& inst);
nlohmann::json to_json(const KollarSolution& sol);
nlohmann::json to_json(const BettiNumbers& betti);
nlohmann::json to_json(const SelfIntersection& k);
// Basis labels with degrees plus the multiplication table as entries
// [i, j, coefficients] over flat basis indices, i <= j, unit row implied.
nlohmann::json to_json(const GradedRing& ring);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const RatMatrix::Inertia& inertia);
// Generators with degrees, cochain-map coordinates, and differentials as
// sparse [[generator index, exponent], ...] monomials with coefficients.
nlohmann::json to_json(const SullivanModel& model);
nlohmann::json to_json(const EllipticityReport& report);
nlohmann::json to_json(const BinaryCubicForm& f);

// "true" | "false" | "unknown".
std::string verdict_string(Gl2zVerdict verdict);

}  // namespace ellipt
