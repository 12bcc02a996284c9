#include "ifam/enumerate.hpp"

#include "ifam/measure.hpp"
#include "ifam/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace ifam {

namespace {

// All tuples of <= r-1 chain members extended by `extra` meet in >= t.
bool compatible(const std::vector<SubsetMask>& chain, std::size_t start, SubsetMask partial,
                int depth, int r, int t) {
    if (popcount(partial) < t) return false;
    if (depth >= r - 1) return true;
    for (std::size_t idx = start; idx < chain.size(); ++idx)
        if (!compatible(chain, idx + 1, partial & chain[idx], depth + 1, r, t)) return false;
    return true;
}

struct MaximalSearch {
    int n;
    int r;
    int t;
    SubsetMask ground;
    std::vector<SubsetMask> chain;
    std::set<std::vector<SubsetMask>> seen;
    std::vector<IsoClass> classes;

    void emit_if_maximal() {
        ExplicitFamily fam = ExplicitFamily::upward_closure(n, chain);
        if (!is_maximal(fam, r, t)) return;
        IsoClass cls = canonicalize(fam);
        std::vector<SubsetMask> key = cls.canonical.members();
        if (seen.insert(std::move(key)).second) classes.push_back(std::move(cls));
    }

    void dfs(SubsetMask last) {
        emit_if_maximal();
        for (SubsetMask g = last + 1; g <= ground; ++g) {
            bool superset = false;
            for (SubsetMask c : chain)
                if ((c & g) == c) {
                    superset = true;
                    break;
                }
            if (!superset && compatible(chain, 0, g, 0, r, t)) {
                chain.push_back(g);
                dfs(g);
                chain.pop_back();
            }
            if (g == ground) break;
        }
    }
};

}  // namespace

std::vector<IsoClass> enumerate_maximal(int n, int r, int t, int cap) {
    if (r < 2 || t < 1) throw std::invalid_argument("requires r >= 2, t >= 1");
    if (n < 1 || n > cap)
        throw std::invalid_argument("enumeration capped at n <= " + std::to_string(cap));
    MaximalSearch search{n, r, t, prefix_mask(n), {}, {}, {}};
    search.dfs(0);
    std::sort(search.classes.begin(), search.classes.end(),
              [](const IsoClass& a, const IsoClass& b) { return a.canonical < b.canonical; });
    return search.classes;
}

std::string enumeration_cache_path(int n, int r, int t, const std::string& cache_dir) {
    return cache_dir + "/enum_n" + std::to_string(n) + "_r" + std::to_string(r) + "_t" +
           std::to_string(t) + "_v1.json";
}

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace

std::vector<IsoClass> enumerate_maximal_cached(int n, int r, int t, const std::string& cache_dir,
                                               int cap) {
    std::string path = enumeration_cache_path(n, r, t, cache_dir);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc["format_version"] == 1 && doc["n"] == n && doc["r"] == r && doc["t"] == t) {
            std::string all;
            std::vector<IsoClass> classes;
            for (const auto& row : doc["classes"]) {
                IsoClass cls{family_from_text(row["family"].get<std::string>()),
                             row["orbit_size"].get<std::uint64_t>(),
                             {}};
                cls.representative_generators = minimal_members(cls.canonical);
                all += row["family"].get<std::string>();
                classes.push_back(std::move(cls));
            }
            if (doc["checksum"].get<std::uint64_t>() == fnv1a(all)) return classes;
        }
    }
    std::vector<IsoClass> classes = enumerate_maximal(n, r, t, cap);
    nlohmann::json doc;
    doc["format_version"] = 1;
    doc["n"] = n;
    doc["r"] = r;
    doc["t"] = t;
    doc["class_count"] = classes.size();
    nlohmann::json rows = nlohmann::json::array();
    std::string all;
    for (const IsoClass& cls : classes) {
        nlohmann::json row;
        std::string text = family_to_text(cls.canonical);
        row["family"] = text;
        row["orbit_size"] = cls.orbit_size;
        rows.push_back(std::move(row));
        all += text;
    }
    doc["classes"] = std::move(rows);
    doc["checksum"] = fnv1a(all);
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    return classes;
}

std::vector<ShiftPolicy> default_policy_set(int random_policies) {
    std::vector<ShiftPolicy> out = {ShiftPolicy::lex(), ShiftPolicy::reverse_lex()};
    for (int k = 0; k < random_policies; ++k)
        out.push_back(ShiftPolicy::seeded(0x9e3779b97f4a7c15ull + k));
    return out;
}

namespace {

// Every isomorphic copy of the (r,t,i) frontier on [n] is cut out by one
// (t+ri)-element base set B: { G : |G & B| >= t+(r-1)i }.
std::vector<ExplicitFamily> frontier_copies(int n, int r, int t, int i) {
    int width = t + r * i;
    int threshold = t + (r - 1) * i;
    std::vector<ExplicitFamily> copies;
    SubsetMask ground = prefix_mask(n);
    for (SubsetMask b = 0;; ++b) {
        if (popcount(b) == width) {
            ExplicitFamily fam(n);
            for (SubsetMask m = 0;; ++m) {
                if (popcount(m & b) >= threshold) fam.insert(m);
                if (m == ground) break;
            }
            copies.push_back(std::move(fam));
        }
        if (b == ground) break;
    }
    return copies;
}

}  // namespace

AuditReport verify_recognition(int n, int r, int t, int i, const std::vector<ShiftPolicy>& policies,
                               int cap) {
    if (t + r * i > n) throw std::invalid_argument("frontier does not fit in the ground set");
    AuditReport rep;
    ExplicitFamily frontier = lift(make_frontier(r, t, i), n);
    ExplicitFamily frontier_canonical = canonicalize(frontier).canonical;
    std::vector<ExplicitFamily> copies = frontier_copies(n, r, t, i);
    std::vector<IsoClass> classes = enumerate_maximal(n, r, t, cap);

    long single_hits = 0, fixpoint_hits = 0, counterexamples = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const ExplicitFamily& rep_fam = classes[k].canonical;
        bool is_frontier_class = rep_fam == frontier_canonical;

        auto check_image = [&](const ExplicitFamily& image, const std::string& mode) {
            bool inside_copy = false;
            for (const ExplicitFamily& copy : copies)
                if (image.is_subfamily_of(copy)) {
                    inside_copy = true;
                    break;
                }
            if (!inside_copy) return;
            (mode == "single_shift" ? single_hits : fixpoint_hits)++;
            if (!is_frontier_class) {
                ++counterexamples;
                AuditStep st;
                st.claim_id = "recognition.counterexample";
                st.t = t;
                st.verdict = Verdict::Fails;
                st.witness = "class " + std::to_string(k) + " via " + mode + "; family:\n" +
                             family_to_text(rep_fam);
                rep.steps.push_back(std::move(st));
            }
        };

        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                check_image(shift_once(rep_fam, a, b), "single_shift");
            }
        for (const ShiftPolicy& policy : policies)
            check_image(shift_fixpoint(rep_fam, policy).first, "fixpoint:" + policy.name());
    }

    AuditStep summary;
    summary.claim_id = "recognition.i" + std::to_string(i);
    summary.t = t;
    summary.verdict = counterexamples == 0 ? Verdict::Holds : Verdict::Fails;
    summary.witness = "classes=" + std::to_string(classes.size()) +
                      " single_shift_hits=" + std::to_string(single_hits) +
                      " fixpoint_hits=" + std::to_string(fixpoint_hits) +
                      " counterexamples=" + std::to_string(counterexamples);
    rep.steps.push_back(std::move(summary));
    return rep;
}

AuditReport verify_stability(int n, int t, const std::vector<Rational>& p_grid, int cap) {
    AuditReport rep;
    QuadraticValue p0 = p0_of_t(t);
    for (const Rational& p : p_grid) {
        if (!(p > 0) || compare(QuadraticValue(p), p0) > 0)
            throw std::invalid_argument("grid point outside (0, p0]: " + rational_to_string(p));
    }
    std::vector<IsoClass> classes = enumerate_maximal(n, 3, t, cap);
    std::vector<ExplicitFamily> f2_copies;
    if (t + 6 <= n) f2_copies = frontier_copies(n, 3, t, 2);

    for (std::size_t k = 0; k < classes.size(); ++k) {
        const ExplicitFamily& fam = classes[k].canonical;
        bool embeds = embeds_in_frontier_copy(fam, 3, t, 0).has_value() ||
                      (t + 3 <= n && embeds_in_frontier_copy(fam, 3, t, 1).has_value());
        bool shifted_inside_f2 = false;
        if (!f2_copies.empty()) {
            for (const ShiftPolicy& policy : {ShiftPolicy::lex(), ShiftPolicy::reverse_lex()}) {
                ExplicitFamily image = shift_fixpoint(fam, policy).first;
                for (const ExplicitFamily& copy : f2_copies)
                    if (image.is_subfamily_of(copy)) {
                        shifted_inside_f2 = true;
                        break;
                    }
                if (shifted_inside_f2) break;
            }
        }
        for (const Rational& p : p_grid) {
            ExactScalar measure = mu(fam, p);
            Rational half_pt = rational_pow(p, t) / 2;
            bool small = compare(measure, ExactScalar(half_pt)) == Ordering::Less;
            AuditStep st;
            st.claim_id = "stability.class" + std::to_string(k) + "@p=" + rational_to_string(p);
            st.t = t;
            st.verdict = (embeds || shifted_inside_f2 || small) ? Verdict::Holds : Verdict::Fails;
            st.lhs_decimal_50 = scalar_to_decimal(measure, 50);
            st.rhs_decimal_50 = rational_to_decimal(half_pt, 50);
            st.lhs_exact = scalar_to_string(measure);
            st.rhs_exact = rational_to_string(half_pt);
            st.witness = std::string("embeds=") + (embeds ? "yes" : "no") +
                         " shifted_in_F2=" + (shifted_inside_f2 ? "yes" : "no") +
                         " below_half=" + (small ? "yes" : "no");
            rep.steps.push_back(std::move(st));
        }
    }
    AuditStep summary;
    summary.claim_id = "stability.trichotomy";
    summary.t = t;
    summary.verdict = rep.any_fails() ? Verdict::Fails : Verdict::Holds;
    summary.witness = "classes=" + std::to_string(classes.size());
    rep.steps.push_back(std::move(summary));
    return rep;
}

}  // namespace ifam
