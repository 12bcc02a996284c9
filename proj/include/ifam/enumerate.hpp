#pragma once

#include "ifam/audit.hpp"
#include "ifam/canonical.hpp"
#include "ifam/family.hpp"
#include "ifam/rational.hpp"
#include "ifam/shifting.hpp"

#include <string>
#include <vector>

namespace ifam {

inline constexpr int kDefaultEnumerationCap = 6;

// All (r,t)-maximal families on [n], one per isomorphism class, sorted by
// canonical form. Depth-first search over antichains of minimal members,
// pruning extensions that break the r-wise t-intersecting property.
std::vector<IsoClass> enumerate_maximal(int n, int r, int t,
                                        int cap = kDefaultEnumerationCap);

// Disk cache in the family text format plus a JSON index, keyed by
// (n, r, t, format version).
std::vector<IsoClass> enumerate_maximal_cached(int n, int r, int t, const std::string& cache_dir,
                                               int cap = kDefaultEnumerationCap);
std::string enumeration_cache_path(int n, int r, int t, const std::string& cache_dir);

std::vector<ShiftPolicy> default_policy_set(int random_policies = 8);

// For every maximal class: apply every single shift and every fixpoint policy;
// whenever the image lands inside an isomorphic copy of the (r,t,i) frontier,
// demand that the class itself is isomorphic to that frontier. Counterexamples
// are reported with the offending family and trace.
AuditReport verify_recognition(int n, int r, int t, int i,
                               const std::vector<ShiftPolicy>& policies = default_policy_set(),
                               int cap = kDefaultEnumerationCap);

// For every maximal 3-wise t-intersecting class and each p in the grid:
// classify into (embeds in a copy of the 0th/1st frontier) / (shifted image
// inside the 2nd frontier) / (measure below p^t / 2) and flag classes where
// no case applies.
AuditReport verify_stability(int n, int t, const std::vector<Rational>& p_grid,
                             int cap = kDefaultEnumerationCap);

}  // namespace ifam
