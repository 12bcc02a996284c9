#include "ifam/rational.hpp"

#include <cctype>

namespace ifam {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    auto slash = s.find('/');
    BigInt num, den;
    try {
        if (slash == std::string::npos) {
            num = BigInt(s);
            den = 1;
        } else {
            num = BigInt(s.substr(0, slash));
            den = BigInt(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return make_rational(num, den);
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
    BigInt num = r.get_num();
    BigInt den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den;
    BigInt rem = num % den;
    BigInt frac = (rem * pow10(digits)) / den;
    std::string f = frac.get_str();
    if (static_cast<int>(f.size()) < digits) f.insert(0, digits - f.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + f;
    return out;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    // base is canonical, so num^e / den^e already is.
    return out;
}

}  // namespace ifam
