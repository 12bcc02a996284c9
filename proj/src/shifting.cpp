#include "ifam/shifting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ifam {

std::string ShiftTrace::to_jsonl() const {
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        out += "{\"step\": " + std::to_string(k) + ", \"i\": " + std::to_string(steps[k].i) +
               ", \"j\": " + std::to_string(steps[k].j) +
               ", \"potential\": " + std::to_string(steps[k].potential) + "}\n";
    }
    return out;
}

ExplicitFamily shift_once(const ExplicitFamily& fam, int i, int j) {
    int n = fam.ground_size();
    if (i == j) throw std::invalid_argument("shift requires i != j");
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("shift indices out of range");
    ExplicitFamily out(n);
    fam.for_each_member([&](SubsetMask g) {
        if (contains_element(g, j) && !contains_element(g, i)) {
            SubsetMask moved = with_element(without_element(g, j), i);
            if (!fam.contains(moved)) {
                out.insert(moved);
                return;
            }
        }
        out.insert(g);
    });
    return out;
}

bool is_shifted(const ExplicitFamily& fam) {
    int n = fam.ground_size();
    bool ok = true;
    fam.for_each_member([&](SubsetMask g) {
        if (!ok) return;
        for (int j = 2; j <= n && ok; ++j) {
            if (!contains_element(g, j)) continue;
            for (int i = 1; i < j; ++i) {
                if (contains_element(g, i)) continue;
                if (!fam.contains(with_element(without_element(g, j), i))) {
                    ok = false;
                    break;
                }
            }
        }
    });
    return ok;
}

std::string ShiftPolicy::name() const {
    switch (kind) {
        case ScanPolicyKind::Lex: return "lex";
        case ScanPolicyKind::ReverseLex: return "reverse-lex";
        case ScanPolicyKind::Seeded: return "seed:" + std::to_string(seed);
    }
    throw std::logic_error("bad policy");
}

ShiftPolicy shift_policy_from_string(const std::string& name) {
    if (name == "lex") return ShiftPolicy::lex();
    if (name == "reverse-lex" || name == "revlex") return ShiftPolicy::reverse_lex();
    if (name.rfind("seed:", 0) == 0) return ShiftPolicy::seeded(std::stoull(name.substr(5)));
    throw std::invalid_argument("unknown shift policy: " + name);
}

namespace {

// std::shuffle is implementation-defined; a pinned Fisher-Yates keeps seeded
// traces identical across standard libraries.
void deterministic_shuffle(std::vector<std::pair<int, int>>& items, std::mt19937_64& rng) {
    for (std::size_t k = items.size(); k > 1; --k) std::swap(items[k - 1], items[rng() % k]);
}

}  // namespace

std::pair<ExplicitFamily, ShiftTrace> shift_fixpoint(const ExplicitFamily& fam,
                                                     const ShiftPolicy& policy) {
    int n = fam.ground_size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    if (policy.kind == ScanPolicyKind::ReverseLex) std::reverse(pairs.begin(), pairs.end());
    std::mt19937_64 rng(policy.seed);

    ExplicitFamily current = fam;
    ShiftTrace trace;
    trace.initial_potential = current.potential();
    bool changed = true;
    while (changed) {
        changed = false;
        if (policy.kind == ScanPolicyKind::Seeded) deterministic_shuffle(pairs, rng);
        for (auto [i, j] : pairs) {
            ExplicitFamily next = shift_once(current, i, j);
            if (next != current) {
                current = std::move(next);
                trace.steps.push_back({i, j, current.potential()});
                changed = true;
                break;  // restart the scan
            }
        }
    }
    trace.final_potential = current.potential();
    return {std::move(current), std::move(trace)};
}

namespace {

// All distinct-member tuples of size <= r-1 drawn from mins, each extended by
// `extra`, must meet in >= t elements.
bool extra_compatible(const std::vector<SubsetMask>& mins, std::size_t start, SubsetMask partial,
                      int depth, int r, int t) {
    if (popcount(partial) < t) return false;
    if (depth >= r - 1) return true;
    for (std::size_t idx = start; idx < mins.size(); ++idx) {
        if (!extra_compatible(mins, idx + 1, partial & mins[idx], depth + 1, r, t)) return false;
    }
    return true;
}

}  // namespace

bool can_add(const ExplicitFamily& fam, SubsetMask extra, int r, int t) {
    return extra_compatible(minimal_members(fam), 0, extra, 0, r, t);
}

ExplicitFamily maximal_closure(const ExplicitFamily& fam, int r, int t, ClosureOrder order) {
    if (!is_r_wise_t_intersecting(fam, r, t))
        throw std::invalid_argument("maximal_closure input is not r-wise t-intersecting");
    int n = fam.ground_size();
    SubsetMask ground = prefix_mask(n);
    std::vector<SubsetMask> candidates;
    candidates.reserve(std::size_t{1} << n);
    for (SubsetMask m = 0;; ++m) {
        if (!fam.contains(m)) candidates.push_back(m);
        if (m == ground) break;
    }
    if (order == ClosureOrder::SizeDescMaskAsc) {
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](SubsetMask a, SubsetMask b) { return popcount(a) > popcount(b); });
    }
    ExplicitFamily out = fam;
    std::vector<SubsetMask> mins = minimal_members(out);
    for (SubsetMask c : candidates) {
        if (!extra_compatible(mins, 0, c, 0, r, t)) continue;
        out.insert(c);
        bool covered = false;
        for (SubsetMask g : mins)
            if ((g & c) == g) {
                covered = true;
                break;
            }
        if (!covered) {
            std::erase_if(mins, [&](SubsetMask g) { return (c & g) == c; });
            mins.push_back(c);
        }
    }
    return out;
}

bool is_maximal(const ExplicitFamily& fam, int r, int t) {
    if (!is_r_wise_t_intersecting(fam, r, t)) return false;
    std::vector<SubsetMask> mins = minimal_members(fam);
    SubsetMask ground = prefix_mask(fam.ground_size());
    for (SubsetMask m = 0;; ++m) {
        if (!fam.contains(m) && extra_compatible(mins, 0, m, 0, r, t)) return false;
        if (m == ground) break;
    }
    return true;
}

}  // namespace ifam
