#include "ifam/subset.hpp"

#include <sstream>
#include <stdexcept>

namespace ifam {

std::vector<int> mask_elements(SubsetMask m) {
    std::vector<int> out;
    while (m) {
        int bit = std::countr_zero(m);
        out.push_back(bit + 1);
        m &= m - 1;
    }
    return out;
}

std::string mask_to_string(SubsetMask m) {
    if (m == 0) return "-";
    std::string out;
    for (int e : mask_elements(m)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

SubsetMask mask_from_string(const std::string& line, int n) {
    std::istringstream in(line);
    std::string tok;
    SubsetMask m = 0;
    while (in >> tok) {
        if (tok == "-") continue;
        int e;
        try {
            e = std::stoi(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad element token: " + tok);
        }
        if (e < 1 || e > n) throw std::out_of_range("element out of ground set: " + tok);
        m = with_element(m, e);
    }
    return m;
}

}  // namespace ifam
