#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ifam {

// One subset of the ground set [n], element i stored at bit i-1. n <= 62.
using SubsetMask = std::uint64_t;

inline constexpr int kMaxGround = 22;  // cap for 2^n membership tables

inline int popcount(SubsetMask m) { return std::popcount(m); }

inline bool contains_element(SubsetMask m, int element) {
    return (m >> (element - 1)) & 1u;
}

inline SubsetMask with_element(SubsetMask m, int element) {
    return m | (SubsetMask{1} << (element - 1));
}

inline SubsetMask without_element(SubsetMask m, int element) {
    return m & ~(SubsetMask{1} << (element - 1));
}

// [a] = {1, ..., a}; prefix_mask(0) is the empty set.
inline SubsetMask prefix_mask(int a) {
    return a <= 0 ? 0 : (a >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << a) - 1);
}

// {a, ..., b}, empty when a > b.
inline SubsetMask range_mask(int a, int b) {
    if (a > b) return 0;
    return prefix_mask(b) & ~prefix_mask(a - 1);
}

std::vector<int> mask_elements(SubsetMask m);

// Elements ascending, space separated; "-" for the empty set.
std::string mask_to_string(SubsetMask m);
SubsetMask mask_from_string(const std::string& line, int n);

}  // namespace ifam
