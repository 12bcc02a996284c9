#pragma once

#include "ifam/scalar.hpp"

#include <vector>

namespace ifam {

// Polynomial in p and q = 1-p with rational coefficients: sum of
// c * p^pe * q^qe. Terms with equal exponent pairs are merged; zero
// coefficients are dropped. Evaluation is exact in the tower of p.
class MeasurePolynomial {
  public:
    struct Term {
        unsigned pe;
        unsigned qe;
        Rational coeff;
    };

    MeasurePolynomial() = default;
    explicit MeasurePolynomial(std::vector<Term> terms);

    static MeasurePolynomial monomial(const Rational& coeff, unsigned pe, unsigned qe);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    MeasurePolynomial operator+(const MeasurePolynomial& other) const;
    MeasurePolynomial operator-(const MeasurePolynomial& other) const;
    MeasurePolynomial scaled(const Rational& factor) const;

    bool operator==(const MeasurePolynomial& other) const { return terms_ == other.terms_; }

    // Exact value of sum c p^pe q^qe. Rational and quadratic p must lie in
    // (0,1); intervals must have 0 < lo and hi < 1.
    ExactScalar eval(const ExactScalar& p) const;

    std::string to_string() const;

  private:
    void normalize();

    std::vector<Term> terms_;  // sorted by (pe, qe)
};

inline bool operator==(const MeasurePolynomial::Term& a, const MeasurePolynomial::Term& b) {
    return a.pe == b.pe && a.qe == b.qe && a.coeff == b.coeff;
}

}  // namespace ifam
