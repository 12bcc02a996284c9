#include "ifam/polynomial.hpp"

#include <algorithm>
#include <map>

namespace ifam {

MeasurePolynomial::MeasurePolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    normalize();
}

MeasurePolynomial MeasurePolynomial::monomial(const Rational& coeff, unsigned pe, unsigned qe) {
    return MeasurePolynomial({Term{pe, qe, coeff}});
}

void MeasurePolynomial::normalize() {
    std::map<std::pair<unsigned, unsigned>, Rational> merged;
    for (auto& t : terms_) merged[{t.pe, t.qe}] += t.coeff;
    terms_.clear();
    for (auto& [key, c] : merged)
        if (c != 0) terms_.push_back(Term{key.first, key.second, c});
}

MeasurePolynomial MeasurePolynomial::operator+(const MeasurePolynomial& other) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return MeasurePolynomial(std::move(all));
}

MeasurePolynomial MeasurePolynomial::operator-(const MeasurePolynomial& other) const {
    return *this + other.scaled(Rational(-1));
}

MeasurePolynomial MeasurePolynomial::scaled(const Rational& factor) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= factor;
    return MeasurePolynomial(std::move(out));
}

ExactScalar MeasurePolynomial::eval(const ExactScalar& p) const {
    if (scalar_is_exact(p) && !scalar_in_open_unit_interval(p))
        throw std::domain_error("polynomial evaluation requires 0 < p < 1");
    ExactScalar q = one_minus(p);
    ExactScalar acc = Rational(0);
    for (const auto& t : terms_) {
        ExactScalar term = scalar_mul(scalar_pow(p, t.pe), scalar_pow(q, t.qe));
        acc = scalar_add(acc, scalar_mul(ExactScalar(t.coeff), term));
    }
    return acc;
}

std::string MeasurePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        if (k > 0) out += " + ";
        out += rational_to_string(t.coeff);
        if (t.pe > 0) out += "*p^" + std::to_string(t.pe);
        if (t.qe > 0) out += "*q^" + std::to_string(t.qe);
    }
    return out;
}

}  // namespace ifam
