#include "ifam/corpus.hpp"

#include "ifam/shifting.hpp"
#include "ifam/structure.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ifam {

namespace {

// Seed generators: perturbed frontier antichains, thinned second-layer
// examples, or random antichains around a near-star core. The pipeline is
// always close-to-maximal, then shift to a fixpoint; outputs are the shifted
// images of (3,t)-maximal families, which is what the hole decomposition
// consumes.
std::vector<SubsetMask> seed_generators(std::mt19937_64& rng, int& t, int& n) {
    std::vector<SubsetMask> gens;
    int recipe = static_cast<int>(rng() % 3);
    if (recipe == 0) {
        t = 1 + static_cast<int>(rng() % 3);
        n = t + 6 + static_cast<int>(rng() % (10 - (t + 6) + 1));
        int maxbase = std::max(1, (n - 1 - t) / 3);
        int base = 1 + static_cast<int>(rng() % maxbase);
        WindowFamily w = make_frontier(3, t, base);
        for (SubsetMask s : w.window_members())
            if (popcount(s) == t + 2 * base) gens.push_back(s);
        int moves = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < moves; ++k) {
            SubsetMask& g = gens[rng() % gens.size()];
            std::vector<int> elems = mask_elements(g);
            int victim = elems[rng() % elems.size()];
            int target = 1 + static_cast<int>(rng() % n);
            for (int tries = 0; contains_element(g, target) && tries < 2 * n; ++tries)
                target = 1 + static_cast<int>(rng() % n);
            if (contains_element(g, target)) continue;
            g = with_element(without_element(g, victim), target);
        }
        if (rng() % 2) gens.erase(gens.begin() + rng() % gens.size());
    } else if (recipe == 1) {
        t = 1 + static_cast<int>(rng() % 3);
        n = t + 4 + static_cast<int>(rng() % (10 - (t + 4) + 1));
        gens = minimal_members(make_named_example(NamedExample::SecondLayer, t, n));
        int drops = static_cast<int>(rng() % 3);
        for (int k = 0; k < drops && gens.size() > 2; ++k)
            gens.erase(gens.begin() + rng() % gens.size());
    } else {
        t = 1 + static_cast<int>(rng() % 3);
        n = t + 5 + static_cast<int>(rng() % (10 - (t + 5) + 1));
        int k = 3 + static_cast<int>(rng() % 5);
        SubsetMask ground = prefix_mask(n);
        for (int j = 0; j < k; ++j) {
            SubsetMask s = (rng() & ground) | (rng() & ground & prefix_mask(t + 2));
            while (popcount(s) < t + 1) s |= SubsetMask{1} << (rng() % n);
            gens.push_back(s);
        }
    }
    return gens;
}

}  // namespace

std::vector<CorpusEntry> generate_mifr_corpus(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    std::set<std::pair<int, std::vector<SubsetMask>>> seen;
    int id = 0;
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 4000L * count)
            throw std::runtime_error("corpus generation stalled; seed exhausted");
        int t = 1, n = 7;
        std::vector<SubsetMask> gens = seed_generators(rng, t, n);
        ExplicitFamily fam = ExplicitFamily::upward_closure(n, gens);
        if (fam.empty() || !is_r_wise_t_intersecting(fam, 3, t)) continue;
        fam = maximal_closure(fam, 3, t);
        ShiftPolicy policy = ShiftPolicy::seeded(rng());
        int which = static_cast<int>(rng() % 3);
        if (which == 0) policy = ShiftPolicy::lex();
        else if (which == 1) policy = ShiftPolicy::reverse_lex();
        fam = shift_fixpoint(fam, policy).first;
        if (h_param(fam, t).h < 1) continue;
        auto key = std::make_pair(t, fam.members());
        if (!seen.insert(std::move(key)).second) continue;
        out.push_back(CorpusEntry{id++, t, std::move(fam)});
    }
    return out;
}

std::string corpus_to_text(const std::vector<CorpusEntry>& entries, std::uint64_t seed) {
    std::string out = "# ifam mifr corpus v1 seed=" + std::to_string(seed) + "\n";
    for (const CorpusEntry& e : entries) {
        out += "family " + std::to_string(e.id) + " t=" + std::to_string(e.t) + "\n";
        out += family_to_text(e.family);
        out += "end\n";
    }
    return out;
}

std::vector<CorpusEntry> corpus_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("family ", 0) != 0)
            throw std::invalid_argument("bad corpus record header: " + line);
        std::istringstream header(line.substr(7));
        CorpusEntry entry;
        std::string ttok;
        header >> entry.id >> ttok;
        if (ttok.rfind("t=", 0) != 0) throw std::invalid_argument("bad corpus t token: " + ttok);
        entry.t = std::stoi(ttok.substr(2));
        entry.family = family_from_stream(in);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<ExplicitFamily> random_families(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ExplicitFamily> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        int n = 4 + static_cast<int>(rng() % 7);  // 4..10
        int density = 2 + static_cast<int>(rng() % 6);
        ExplicitFamily fam(n);
        SubsetMask ground = prefix_mask(n);
        for (SubsetMask m = 0;; ++m) {
            if (rng() % density == 0) fam.insert(m);
            if (m == ground) break;
        }
        out.push_back(std::move(fam));
    }
    return out;
}

std::vector<SeededIntersecting> random_intersecting_families(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SeededIntersecting> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        int r = 2 + static_cast<int>(rng() % 2);
        int t = 1 + static_cast<int>(rng() % 2);
        int n = 5 + static_cast<int>(rng() % 4);  // 5..8
        // A star at a random (usually non-prefix) core is not shifted, so the
        // fixpoint suite gets real moves; a wild set off the core survives
        // the rejection test often enough to add variety.
        SubsetMask core = 0;
        while (popcount(core) < t) core = with_element(core, 1 + static_cast<int>(rng() % n));
        std::vector<SubsetMask> gens;
        int extras = 2 + static_cast<int>(rng() % 3);
        for (int k = 0; k < extras; ++k) {
            SubsetMask s = core;
            int add = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < add; ++j) s = with_element(s, 1 + static_cast<int>(rng() % n));
            gens.push_back(s);
        }
        if (rng() % 2) {
            SubsetMask wild = prefix_mask(n) & ~core;
            for (int drop = static_cast<int>(rng() % 3); drop > 0 && popcount(wild) > t + 1; --drop)
                wild = without_element(wild, mask_elements(wild)[rng() % popcount(wild)]);
            gens.push_back(wild);
        }
        ExplicitFamily fam = ExplicitFamily::upward_closure(n, gens);
        if (!is_r_wise_t_intersecting(fam, r, t)) continue;
        out.push_back(SeededIntersecting{r, t, std::move(fam)});
    }
    return out;
}

}  // namespace ifam
