#pragma once

#include "ifam/interval.hpp"
#include "ifam/quadratic.hpp"
#include "ifam/rational.hpp"

#include <variant>

namespace ifam {

// The three exact towers: rational, quadratic field, rational-endpoint
// interval. Promotion on mixed operands goes Rational -> QuadraticValue ->
// BoundInterval. Arithmetic across two distinct irrational radicands is
// rejected; compare() handles that case by interval refinement.
using ExactScalar = std::variant<Rational, QuadraticValue, BoundInterval>;

enum class Ordering { Less, Equal, Greater, Undecided };

inline constexpr int kDefaultPrecisionCap = 200;

ExactScalar scalar_add(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_sub(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_div(const ExactScalar& x, const ExactScalar& y);
ExactScalar scalar_pow(const ExactScalar& x, unsigned long exp);

// Exact where both sides live in a common tower; otherwise interval
// refinement with doubling precision up to `precision_cap` digits, then
// Undecided rather than a guess.
Ordering compare(const ExactScalar& x, const ExactScalar& y,
                 int precision_cap = kDefaultPrecisionCap);

bool scalar_is_exact(const ExactScalar& x);
BoundInterval scalar_to_interval(const ExactScalar& x, int digits);

std::string scalar_to_string(const ExactScalar& x);
std::string scalar_to_decimal(const ExactScalar& x, int digits);

inline ExactScalar one_minus(const ExactScalar& x) { return scalar_sub(Rational(1), x); }

// Convenience for tests and audits: x in (0, 1), decided exactly for exact
// towers and by endpoints for intervals.
bool scalar_in_open_unit_interval(const ExactScalar& x);

}  // namespace ifam
