#include "ifam/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ifam {

ExplicitFamily relabel(const ExplicitFamily& fam, const std::vector<int>& perm) {
    int n = fam.ground_size();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("bad permutation size");
    ExplicitFamily out(n);
    fam.for_each_member([&](SubsetMask m) {
        SubsetMask image = 0;
        SubsetMask bits = m;
        while (bits) {
            int k = std::countr_zero(bits);
            image |= SubsetMask{1} << perm[k];
            bits &= bits - 1;
        }
        out.insert(image);
    });
    return out;
}

IsoClass canonicalize(const ExplicitFamily& fam) {
    int n = fam.ground_size();
    if (n > kMaxCanonicalGround)
        throw std::invalid_argument("canonicalize capped at n <= " +
                                    std::to_string(kMaxCanonicalGround));
    std::vector<SubsetMask> original = fam.members();
    std::sort(original.begin(), original.end());

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SubsetMask> best = original;
    std::uint64_t stabilizer = 0;
    std::uint64_t total = 0;
    std::vector<SubsetMask> image;
    image.reserve(original.size());
    do {
        ++total;
        image.clear();
        for (SubsetMask m : original) {
            SubsetMask img = 0;
            SubsetMask bits = m;
            while (bits) {
                int k = std::countr_zero(bits);
                img |= SubsetMask{1} << perm[k];
                bits &= bits - 1;
            }
            image.push_back(img);
        }
        std::sort(image.begin(), image.end());
        if (image == original) ++stabilizer;
        if (image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));

    IsoClass cls{ExplicitFamily::from_members(n, best), total / stabilizer, {}};
    cls.representative_generators = minimal_members(cls.canonical);
    return cls;
}

}  // namespace ifam
