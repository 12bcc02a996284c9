#pragma once

#include "ifam/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ifam {

struct ShiftStep {
    int i;
    int j;
    std::uint64_t potential;  // after the step
};

// Applied shifts in order; the potential (sum over members of element sums)
// strictly decreases at every recorded step.
struct ShiftTrace {
    std::uint64_t initial_potential = 0;
    std::uint64_t final_potential = 0;
    std::vector<ShiftStep> steps;

    std::string to_jsonl() const;
};

// sigma_{i,j}: replace j by i in each member that has j but not i, unless the
// result is already present. Defined for arbitrary i != j.
ExplicitFamily shift_once(const ExplicitFamily& fam, int i, int j);

// Invariant under every sigma_{i,j} with i < j.
bool is_shifted(const ExplicitFamily& fam);

enum class ScanPolicyKind { Lex, ReverseLex, Seeded };

struct ShiftPolicy {
    ScanPolicyKind kind = ScanPolicyKind::Lex;
    std::uint64_t seed = 0;

    static ShiftPolicy lex() { return {ScanPolicyKind::Lex, 0}; }
    static ShiftPolicy reverse_lex() { return {ScanPolicyKind::ReverseLex, 0}; }
    static ShiftPolicy seeded(std::uint64_t seed) { return {ScanPolicyKind::Seeded, seed}; }

    std::string name() const;
};

ShiftPolicy shift_policy_from_string(const std::string& name);

// Applies shifts under the policy's pair order, restarting after any change,
// until the family is shifted. Terminates because the potential strictly
// decreases.
std::pair<ExplicitFamily, ShiftTrace> shift_fixpoint(const ExplicitFamily& fam,
                                                     const ShiftPolicy& policy = ShiftPolicy::lex());

enum class ClosureOrder { SizeDescMaskAsc, MaskAsc };

// Adds every addable set, scanning candidates in the given order (default:
// size descending, mask ascending), so the closure of a star is the full
// star. Requires the input to be r-wise t-intersecting; the result is
// (r,t)-maximal and upward closed.
ExplicitFamily maximal_closure(const ExplicitFamily& fam, int r, int t,
                               ClosureOrder order = ClosureOrder::SizeDescMaskAsc);

bool is_maximal(const ExplicitFamily& fam, int r, int t);

// True iff fam stays r-wise t-intersecting after inserting extra.
bool can_add(const ExplicitFamily& fam, SubsetMask extra, int r, int t);

}  // namespace ifam
