#pragma once

#include "ifam/family.hpp"
#include "ifam/polynomial.hpp"
#include "ifam/scalar.hpp"

#include <cstdint>
#include <vector>

namespace ifam {

// Size histogram of a window family; mu_p = sum counts[k] p^k q^(m-k) does
// not depend on the ambient ground set.
struct MeasureProfile {
    int m = 0;
    std::vector<std::uint64_t> counts;  // counts[k] = members of size k

    MeasurePolynomial polynomial() const;
};

MeasureProfile profile_of(const WindowFamily& fam);
MeasureProfile profile_of(const ExplicitFamily& fam);

// Exact p-biased measure; rejects p outside (0,1).
ExactScalar mu(const ExplicitFamily& fam, const ExactScalar& p);
ExactScalar mu(const WindowFamily& fam, const ExactScalar& p);

// sum_{j<=i} C(t+ri, j) p^(t+ri-j) q^j: measure of the frontier family with
// at most i window elements missing.
MeasurePolynomial frontier_closed_form(int r, int t, int i);

// mu_p(F_2^t) / mu_p(F_0^t) = C(t+6,2) p^4 q^2 + (t+6) p^5 q + p^6.
ExactScalar ratio_F2_F0(long t, const ExactScalar& p);

// Maximum of the ratio over (0, p0], attained at p0. The maximizer argument
// is re-verified exactly (per-monomial derivative signs plus a rational grid)
// before the value is returned.
QuadraticValue ratio_max_at_p0(long t);

// The same maximum written over the common denominator (sqrt(4t+9)-1)^6;
// must agree with ratio_max_at_p0 term for term.
QuadraticValue ratio_max_rationalized(long t);

// CSV rows (t, p0, ratio at p0, ratio - 1/2), 50-digit decimals, for the
// convergence of the ratio to 1/2.
std::string ratio_curve_csv(long t_min, long t_max);

}  // namespace ifam
