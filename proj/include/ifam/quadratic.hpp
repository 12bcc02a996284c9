#pragma once

#include "ifam/rational.hpp"

namespace ifam {

// Value a + b*sqrt(d) in the quadratic field Q(sqrt(d)), d a positive integer.
// Normalized at construction: if d is a perfect square, the radical part is
// folded into `a` and b becomes 0, so values like p0(28) = 1/5 compare exactly
// with plain rationals. A value with b == 0 mixes freely with any radicand.
class QuadraticValue {
  public:
    QuadraticValue() : a_(0), b_(0), d_(0) {}
    QuadraticValue(Rational rational) : a_(std::move(rational)), b_(0), d_(0) {}
    QuadraticValue(Rational a, Rational b, unsigned long d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    unsigned long radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    // Only valid when is_rational().
    const Rational& as_rational() const;

    // Exact sign via case analysis on sgn(a), sgn(b) and a^2 vs b^2 d.
    // Never touches floating point.
    int sign() const;

    QuadraticValue conjugate() const;
    // a^2 - b^2 d; rational, multiplicative.
    Rational field_norm() const;
    QuadraticValue inverse() const;
    QuadraticValue pow(unsigned long exp) const;

    friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x);

    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y);
    friend bool operator!=(const QuadraticValue& x, const QuadraticValue& y) { return !(x == y); }

    // "a", "a+b*sqrt(d)" or "b*sqrt(d)".
    std::string to_string() const;
    std::string to_decimal(int digits) const;

  private:
    // Radicands must agree unless one side is purely rational.
    static unsigned long merged_radicand(const QuadraticValue& x, const QuadraticValue& y);

    Rational a_;
    Rational b_;
    unsigned long d_;
};

inline int sign(const QuadraticValue& x) { return x.sign(); }

// sign(x - y), exact.
int compare(const QuadraticValue& x, const QuadraticValue& y);

// 2 / (sqrt(4t+9) - 1), the crossover probability where the measures of the
// first two frontier families coincide. Degrades to a rational value whenever
// 4t+9 is a perfect square.
QuadraticValue p0_of_t(long t);

}  // namespace ifam
