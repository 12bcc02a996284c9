#pragma once

#include "ifam/subset.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ifam {

// Family of subsets of [n] as a 2^n-bit membership table. Value type;
// members iterate in ascending mask order.
class ExplicitFamily {
  public:
    ExplicitFamily() : ExplicitFamily(1) {}
    explicit ExplicitFamily(int n);

    int ground_size() const { return n_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(SubsetMask m) const {
        return (table_[m >> 6] >> (m & 63)) & 1u;
    }
    void insert(SubsetMask m);
    void erase(SubsetMask m);

    std::vector<SubsetMask> members() const;
    void for_each_member(const std::function<void(SubsetMask)>& fn) const;

    bool operator==(const ExplicitFamily& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }
    bool operator!=(const ExplicitFamily& other) const { return !(*this == other); }

    // Strict weak order for canonical forms and containers: by ground size,
    // then by sorted member list, lexicographically.
    bool operator<(const ExplicitFamily& other) const;

    bool is_subfamily_of(const ExplicitFamily& other) const;
    bool is_upward_closed() const;

    // sum over members of the sum of their elements
    std::uint64_t potential() const;

    static ExplicitFamily from_members(int n, const std::vector<SubsetMask>& members);
    static ExplicitFamily upward_closure(int n, const std::vector<SubsetMask>& generators);

  private:
    int n_;
    std::size_t count_;
    std::vector<std::uint64_t> table_;
};

// Family on any ground set [n], n >= m, determined by the intersection with
// the window [m]: G is a member iff G & [m] is in the window table.
class WindowFamily {
  public:
    WindowFamily(int m, const std::vector<SubsetMask>& window_members);

    int window_size() const { return m_; }
    bool monotone() const { return monotone_; }
    bool window_contains(SubsetMask s) const { return table_.contains(s); }
    std::vector<SubsetMask> window_members() const { return table_.members(); }
    std::size_t window_count() const { return table_.size(); }

    bool operator==(const WindowFamily& other) const {
        return m_ == other.m_ && table_ == other.table_;
    }

  private:
    int m_;
    bool monotone_;
    ExplicitFamily table_;
};

struct FrontierParams {
    int r;
    int t;
    int i;
    int n;  // ambient ground size for lifts; must satisfy t + r*i <= n
};

// All S within the window [t+ri] with |S| >= t+(r-1)i. For i=0 this is the
// t-star viewed through its window.
WindowFamily make_frontier(int r, int t, int i);
WindowFamily make_frontier(const FrontierParams& params);

ExplicitFamily lift(const WindowFamily& w, int n);

// Inverse of lift: succeeds iff membership in fam depends only on the
// intersection with [m].
std::optional<WindowFamily> restrict_to_window(const ExplicitFamily& fam, int m);

std::vector<SubsetMask> minimal_members(const ExplicitFamily& fam);

// Every r-tuple of members, repetition allowed, meets in >= t elements.
// Reduces to inclusion-minimal members, which is valid for any family.
bool is_r_wise_t_intersecting(const ExplicitFamily& fam, int r, int t);
bool is_r_wise_t_intersecting(const WindowFamily& fam, int r, int t);
bool is_r_wise_t_intersecting(const std::vector<SubsetMask>& members, int r, int t);

// Smallest (t+ri)-set B, in lexicographic order of sorted element lists, with
// |G & B| >= t+(r-1)i for every member G; nullopt if none exists.
std::optional<SubsetMask> embeds_in_frontier_copy(const ExplicitFamily& fam, int r, int t, int i);

enum class NamedExample { GPrime, SecondLayer };

// GPrime: the t-star minus its minimum member plus the co-singleton of 1.
// SecondLayer: all strict supersets of [t+1] together with all co-singletons.
ExplicitFamily make_named_example(NamedExample name, int t, int n);
NamedExample named_example_from_string(const std::string& name);

// Text format: header "n=<n>", then one member per line as an ascending
// element list ("-" for the empty set), members ascending by mask.
std::string family_to_text(const ExplicitFamily& fam);
ExplicitFamily family_from_text(const std::string& text);
ExplicitFamily family_from_stream(std::istream& in);

}  // namespace ifam
