#pragma once

#include "ifam/family.hpp"

#include <cstdint>

namespace ifam {

// Isomorphism class of a family under ground-set relabeling. The canonical
// form minimizes the sorted member list lexicographically over all n!
// relabelings; orbit_size = n! / |automorphisms|.
struct IsoClass {
    ExplicitFamily canonical;
    std::uint64_t orbit_size = 0;
    std::vector<SubsetMask> representative_generators;  // minimal members of canonical
};

inline constexpr int kMaxCanonicalGround = 8;

IsoClass canonicalize(const ExplicitFamily& fam);

// Relabel each member through perm (0-based images: old bit k -> new bit perm[k]).
ExplicitFamily relabel(const ExplicitFamily& fam, const std::vector<int>& perm);

}  // namespace ifam
