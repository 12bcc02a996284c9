#pragma once

#include "ifam/audit.hpp"
#include "ifam/family.hpp"
#include "ifam/scalar.hpp"

#include <vector>

namespace ifam {

// Largest s such that the family is 2-wise s-intersecting: the minimum of
// |G1 & G2| over member pairs with repetition. Throws on an empty family.
int two_wise_s(const ExplicitFamily& fam);

struct HParam {
    int h = 0;
    SubsetMask witness = 0;        // member with |H & [t+h-1]| < t (h >= 1)
    bool normalized_witness = false;  // witness satisfies H & [t+h-1] = [t-1]
};

// h = min{ i : |H & [t+i]| >= t for all members }. h = 0 means the family
// lies inside the t-star. For shifted families a witness with trace exactly
// [t-1] is located as well.
HParam h_param(const ExplicitFamily& fam, int t);

// The trace families T_0..T_h on the ground set [t+h, n], re-indexed to
// [n - t - h + 1]. T_i collects traces of members whose missing part within
// [t+h-1] is exactly the rightmost hole [t+h-i, t+h-1].
struct HoleDecomposition {
    int t = 0;
    int h = 0;
    int s = 0;
    SubsetMask witness_H0 = 0;
    int trace_ground = 0;
    std::vector<ExplicitFamily> holes;  // indexed by hole size 0..h
};

// Requires a shifted, 3-wise t-intersecting family with h >= 1; validates
// the shiftedness consequence trace(A) within T_|A| for every hole A.
HoleDecomposition hole_families(const ExplicitFamily& fam, int t, int h);

// Right-hand side of the hole-decomposition measure bound:
// sum_i C(t+h-1, i) p^(t+h-1-i) q^i mu_p(T_i).
ExactScalar measure_bound_rhs(const HoleDecomposition& decomp, const ExactScalar& p);

// Full verdict list for the decomposition claims: 1 <= h <= s-t, each T_i
// 2-wise (2i+1)-intersecting, the strengthened T_h claim when the family
// lies outside the h-th frontier, and the measure bound at sample p.
AuditReport audit_mifr(const ExplicitFamily& fam, int t);

enum class EkrKind { Ratio, Power };

// Measure bounds for 2-wise s-intersecting families: (p/q)^s for p <= 1/2,
// p^s for p <= 1/(s+1). Throws domain_error outside the validity range.
ExactScalar ekr_bound(EkrKind kind, int s, const ExactScalar& p);

enum class CaseLemma { H1, H2, H3, Mid, Large };

CaseLemma case_lemma_from_string(const std::string& name);

// Exact per-t verdicts for every inequality link of the selected case chain,
// in Q(sqrt(4t+9)) where only p0, q0 appear and by interval refinement where
// e or sqrt(t) appears. Deterministic for any job count.
AuditReport audit_case_lemmas(long t_lo, long t_hi, CaseLemma which,
                              int precision_cap = kDefaultPrecisionCap, int jobs = 1);

}  // namespace ifam
