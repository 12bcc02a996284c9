#pragma once

#include "ifam/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ifam {

inline constexpr std::uint64_t kCorpusSeed = 20240601;

struct CorpusEntry {
    int id = 0;
    int t = 0;
    ExplicitFamily family;
};

// Deterministic corpus of shifted, (3,t)-maximal families outside the t-star
// (h >= 1), built by perturbing frontier generators and iterating closure and
// shifting to a joint fixpoint. Ground sets stay within n <= 10.
std::vector<CorpusEntry> generate_mifr_corpus(int count, std::uint64_t seed = kCorpusSeed);

std::string corpus_to_text(const std::vector<CorpusEntry>& entries, std::uint64_t seed);
std::vector<CorpusEntry> corpus_from_text(const std::string& text);

// Arbitrary random families for measure/potential properties.
std::vector<ExplicitFamily> random_families(int count, std::uint64_t seed);

struct SeededIntersecting {
    int r = 2;
    int t = 1;
    ExplicitFamily family;
};

// Random r-wise t-intersecting families (star core plus random generators)
// so preservation properties are exercised on non-trivial instances.
std::vector<SeededIntersecting> random_intersecting_families(int count, std::uint64_t seed);

}  // namespace ifam
