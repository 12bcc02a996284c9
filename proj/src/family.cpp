#include "ifam/family.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ifam {

namespace {

void check_ground(int n) {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("ground size " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxGround) + "]");
}

}  // namespace

ExplicitFamily::ExplicitFamily(int n) : n_(n), count_(0) {
    check_ground(n);
    table_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

void ExplicitFamily::insert(SubsetMask m) {
    std::uint64_t bit = std::uint64_t{1} << (m & 63);
    if (!(table_[m >> 6] & bit)) {
        table_[m >> 6] |= bit;
        ++count_;
    }
}

void ExplicitFamily::erase(SubsetMask m) {
    std::uint64_t bit = std::uint64_t{1} << (m & 63);
    if (table_[m >> 6] & bit) {
        table_[m >> 6] &= ~bit;
        --count_;
    }
}

std::vector<SubsetMask> ExplicitFamily::members() const {
    std::vector<SubsetMask> out;
    out.reserve(count_);
    for_each_member([&](SubsetMask m) { out.push_back(m); });
    return out;
}

void ExplicitFamily::for_each_member(const std::function<void(SubsetMask)>& fn) const {
    for (std::size_t block = 0; block < table_.size(); ++block) {
        std::uint64_t bits = table_[block];
        while (bits) {
            int b = std::countr_zero(bits);
            fn((block << 6) | static_cast<unsigned>(b));
            bits &= bits - 1;
        }
    }
}

bool ExplicitFamily::operator<(const ExplicitFamily& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    std::vector<SubsetMask> a = members();
    std::vector<SubsetMask> b = other.members();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool ExplicitFamily::is_subfamily_of(const ExplicitFamily& other) const {
    if (n_ != other.n_) throw std::invalid_argument("ground size mismatch");
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] & ~other.table_[i]) return false;
    return true;
}

bool ExplicitFamily::is_upward_closed() const {
    bool ok = true;
    for_each_member([&](SubsetMask m) {
        if (!ok) return;
        for (int e = 1; e <= n_; ++e)
            if (!contains_element(m, e) && !contains(with_element(m, e))) {
                ok = false;
                return;
            }
    });
    return ok;
}

std::uint64_t ExplicitFamily::potential() const {
    std::uint64_t total = 0;
    for_each_member([&](SubsetMask m) {
        while (m) {
            total += static_cast<std::uint64_t>(std::countr_zero(m)) + 1;
            m &= m - 1;
        }
    });
    return total;
}

ExplicitFamily ExplicitFamily::from_members(int n, const std::vector<SubsetMask>& members) {
    ExplicitFamily fam(n);
    SubsetMask ground = prefix_mask(n);
    for (SubsetMask m : members) {
        if (m & ~ground) throw std::out_of_range("member outside ground set");
        fam.insert(m);
    }
    return fam;
}

ExplicitFamily ExplicitFamily::upward_closure(int n, const std::vector<SubsetMask>& generators) {
    ExplicitFamily fam(n);
    SubsetMask ground = prefix_mask(n);
    for (SubsetMask g : generators)
        if (g & ~ground) throw std::out_of_range("generator outside ground set");
    for (SubsetMask m = 0; m <= ground; ++m) {
        for (SubsetMask g : generators) {
            if ((g & m) == g) {
                fam.insert(m);
                break;
            }
        }
        if (m == ground) break;
    }
    return fam;
}

WindowFamily::WindowFamily(int m, const std::vector<SubsetMask>& window_members)
    : m_(m), monotone_(true), table_(ExplicitFamily::from_members(m, window_members)) {
    SubsetMask window = prefix_mask(m_);
    table_.for_each_member([&](SubsetMask s) {
        if (!monotone_) return;
        for (int e = 1; e <= m_; ++e)
            if (!contains_element(s, e) && !table_.contains(with_element(s, e))) {
                monotone_ = false;
                return;
            }
    });
    (void)window;
}

WindowFamily make_frontier(int r, int t, int i) {
    if (r < 2 || t < 1 || i < 0) throw std::invalid_argument("frontier needs r>=2, t>=1, i>=0");
    int m = t + r * i;
    if (m > kMaxGround) throw std::invalid_argument("frontier window exceeds cap");
    int threshold = t + (r - 1) * i;
    std::vector<SubsetMask> members;
    SubsetMask window = prefix_mask(m);
    for (SubsetMask s = 0;; ++s) {
        if (popcount(s) >= threshold) members.push_back(s);
        if (s == window) break;
    }
    return WindowFamily(m, members);
}

WindowFamily make_frontier(const FrontierParams& params) {
    if (params.t + params.r * params.i > params.n)
        throw std::invalid_argument("frontier window larger than ambient ground set");
    return make_frontier(params.r, params.t, params.i);
}

ExplicitFamily lift(const WindowFamily& w, int n) {
    if (n < w.window_size()) throw std::invalid_argument("lift needs n >= window size");
    check_ground(n);
    ExplicitFamily fam(n);
    SubsetMask window = prefix_mask(w.window_size());
    SubsetMask ground = prefix_mask(n);
    for (SubsetMask m = 0;; ++m) {
        if (w.window_contains(m & window)) fam.insert(m);
        if (m == ground) break;
    }
    return fam;
}

std::optional<WindowFamily> restrict_to_window(const ExplicitFamily& fam, int m) {
    if (m < 1 || m > fam.ground_size()) throw std::invalid_argument("bad window size");
    SubsetMask window = prefix_mask(m);
    SubsetMask ground = prefix_mask(fam.ground_size());
    std::vector<signed char> status(std::size_t{1} << m, -1);
    for (SubsetMask mask = 0;; ++mask) {
        signed char mem = fam.contains(mask) ? 1 : 0;
        signed char& slot = status[mask & window];
        if (slot == -1)
            slot = mem;
        else if (slot != mem)
            return std::nullopt;
        if (mask == ground) break;
    }
    std::vector<SubsetMask> members;
    for (SubsetMask s = 0;; ++s) {
        if (status[s] == 1) members.push_back(s);
        if (s == window) break;
    }
    return WindowFamily(m, members);
}

std::vector<SubsetMask> minimal_members(const ExplicitFamily& fam) {
    // A strict subset always has a smaller mask value, so an ascending scan
    // only needs to test against minimal members found so far.
    std::vector<SubsetMask> minimals;
    fam.for_each_member([&](SubsetMask m) {
        for (SubsetMask g : minimals)
            if ((g & m) == g) return;
        minimals.push_back(m);
    });
    return minimals;
}

namespace {

bool tuples_intersect(const std::vector<SubsetMask>& mins, std::size_t start, SubsetMask partial,
                      int depth, int r, int t) {
    for (std::size_t idx = start; idx < mins.size(); ++idx) {
        SubsetMask inter = partial & mins[idx];
        if (popcount(inter) < t) return false;
        if (depth + 1 < r && !tuples_intersect(mins, idx + 1, inter, depth + 1, r, t))
            return false;
    }
    return true;
}

}  // namespace

bool is_r_wise_t_intersecting(const std::vector<SubsetMask>& members, int r, int t) {
    if (r < 2 || t < 1) throw std::invalid_argument("requires r >= 2, t >= 1");
    std::vector<SubsetMask> mins;
    for (SubsetMask m : members) {
        bool dominated = false;
        for (SubsetMask g : mins)
            if ((g & m) == g) {
                dominated = true;
                break;
            }
        if (!dominated) mins.push_back(m);
    }
    if (mins.empty()) return true;
    for (std::size_t idx = 0; idx < mins.size(); ++idx) {
        if (popcount(mins[idx]) < t) return false;
        if (r > 1 && !tuples_intersect(mins, idx + 1, mins[idx], 1, r, t)) return false;
    }
    return true;
}

bool is_r_wise_t_intersecting(const ExplicitFamily& fam, int r, int t) {
    return is_r_wise_t_intersecting(minimal_members(fam), r, t);
}

bool is_r_wise_t_intersecting(const WindowFamily& fam, int r, int t) {
    return is_r_wise_t_intersecting(fam.window_members(), r, t);
}

namespace {

struct EmbedSearch {
    const std::vector<SubsetMask>& mins;
    int n;
    int width;
    int required;

    bool feasible(SubsetMask chosen, int next, int picked) const {
        int slots = width - picked;
        SubsetMask remaining = range_mask(next, n);
        for (SubsetMask m : mins) {
            int need = required - popcount(m & chosen);
            if (need <= 0) continue;
            if (need > slots) return false;
            if (need > popcount(m & remaining)) return false;
        }
        return true;
    }

    std::optional<SubsetMask> dfs(SubsetMask chosen, int next, int picked) const {
        if (picked == width) {
            for (SubsetMask m : mins)
                if (popcount(m & chosen) < required) return std::nullopt;
            return chosen;
        }
        for (int e = next; e <= n - (width - picked) + 1; ++e) {
            SubsetMask c = with_element(chosen, e);
            if (!feasible(c, e + 1, picked + 1)) continue;
            if (auto hit = dfs(c, e + 1, picked + 1)) return hit;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<SubsetMask> embeds_in_frontier_copy(const ExplicitFamily& fam, int r, int t, int i) {
    if (r < 2 || t < 1 || i < 0) throw std::invalid_argument("bad frontier parameters");
    int width = t + r * i;
    int required = t + (r - 1) * i;
    if (width > fam.ground_size()) return std::nullopt;
    std::vector<SubsetMask> mins = minimal_members(fam);
    EmbedSearch search{mins, fam.ground_size(), width, required};
    return search.dfs(0, 1, 0);
}

ExplicitFamily make_named_example(NamedExample name, int t, int n) {
    if (t < 1) throw std::invalid_argument("t >= 1 required");
    check_ground(n);
    if (name == NamedExample::GPrime) {
        if (n < t + 2) throw std::invalid_argument("gprime needs n >= t+2");
        ExplicitFamily fam = ExplicitFamily::upward_closure(n, {prefix_mask(t)});
        fam.erase(prefix_mask(t));
        fam.insert(prefix_mask(n) & ~SubsetMask{1});
        return fam;
    }
    if (n < t + 4) throw std::invalid_argument("second-layer needs n >= t+4");
    ExplicitFamily fam(n);
    SubsetMask base = prefix_mask(t + 1);
    SubsetMask tailground = range_mask(t + 2, n);
    // all strict supersets of [t+1] whose extra part lies in [t+2, n]
    SubsetMask ground = prefix_mask(n);
    for (SubsetMask m = 0;; ++m) {
        if ((m & base) == base && (m & tailground) != 0 && (m & ~(base | tailground)) == 0)
            fam.insert(m);
        if (m == ground) break;
    }
    for (int e = 1; e <= n; ++e) fam.insert(ground & ~(SubsetMask{1} << (e - 1)));
    return fam;
}

NamedExample named_example_from_string(const std::string& name) {
    if (name == "gprime") return NamedExample::GPrime;
    if (name == "second-layer") return NamedExample::SecondLayer;
    throw std::invalid_argument("unknown named example: " + name);
}

std::string family_to_text(const ExplicitFamily& fam) {
    std::string out = "n=" + std::to_string(fam.ground_size()) + "\n";
    fam.for_each_member([&](SubsetMask m) { out += mask_to_string(m) + "\n"; });
    return out;
}

ExplicitFamily family_from_stream(std::istream& in) {
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) != 0) throw std::invalid_argument("missing n= header");
        n = std::stoi(line.substr(2));
        break;
    }
    if (n < 0) throw std::invalid_argument("missing n= header");
    ExplicitFamily fam(n);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") break;
        fam.insert(mask_from_string(line, n));
    }
    return fam;
}

ExplicitFamily family_from_text(const std::string& text) {
    std::istringstream in(text);
    return family_from_stream(in);
}

}  // namespace ifam
