#include "ifam/quadratic.hpp"

#include "ifam/interval.hpp"

namespace ifam {

QuadraticValue::QuadraticValue(Rational a, Rational b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    BigInt root, dd(static_cast<unsigned long>(d_));
    if (mpz_perfect_square_p(dd.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
        a_ += b_ * Rational(root);
        b_ = 0;
        d_ = 0;
    }
}

const Rational& QuadraticValue::as_rational() const {
    if (!is_rational()) throw std::logic_error("irrational QuadraticValue");
    return a_;
}

int QuadraticValue::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: decide |a| vs |b|*sqrt(d) by squaring.
    Rational a2 = a_ * a_;
    Rational b2d = b_ * b_ * Rational(static_cast<unsigned long>(d_));
    int c = cmp(a2, b2d);
    if (c == 0) return 0;  // unreachable for non-square d, kept for safety
    return c > 0 ? sa : sb;
}

QuadraticValue QuadraticValue::conjugate() const { return QuadraticValue(a_, -b_, d_); }

Rational QuadraticValue::field_norm() const {
    return a_ * a_ - b_ * b_ * Rational(static_cast<unsigned long>(d_));
}

QuadraticValue QuadraticValue::inverse() const {
    if (sign() == 0) throw std::domain_error("inverse of zero");
    if (is_rational()) return QuadraticValue(Rational(1) / a_);
    Rational n = field_norm();
    return QuadraticValue(a_ / n, -b_ / n, d_);
}

QuadraticValue QuadraticValue::pow(unsigned long exp) const {
    QuadraticValue acc{Rational(1)};
    QuadraticValue base = *this;
    while (exp > 0) {
        if (exp & 1) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

unsigned long QuadraticValue::merged_radicand(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw std::invalid_argument("mixed radicands; compare via intervals instead");
    return x.d_;
}

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    return QuadraticValue(x.a_ + y.a_, x.b_ + y.b_, QuadraticValue::merged_radicand(x, y));
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
    return QuadraticValue(x.a_ - y.a_, x.b_ - y.b_, QuadraticValue::merged_radicand(x, y));
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
    unsigned long d = QuadraticValue::merged_radicand(x, y);
    Rational dd(static_cast<unsigned long>(d));
    return QuadraticValue(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y) {
    return x * y.inverse();
}

QuadraticValue operator-(const QuadraticValue& x) {
    return QuadraticValue(-x.a_, -x.b_, x.d_);
}

bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

int compare(const QuadraticValue& x, const QuadraticValue& y) { return (x - y).sign(); }

std::string QuadraticValue::to_string() const {
    if (is_rational()) return rational_to_string(a_);
    std::string rad = rational_to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return rad;
    if (b_ > 0) return rational_to_string(a_) + "+" + rad;
    return rational_to_string(a_) + rad;  // b_ < 0 carries its own minus sign
}

std::string QuadraticValue::to_decimal(int digits) const {
    return to_interval(*this, digits + 10).midpoint_decimal(digits);
}

QuadraticValue p0_of_t(long t) {
    if (t < 1) throw std::invalid_argument("p0_of_t requires t >= 1");
    // 2/(sqrt(4t+9)-1) rationalized: (1 + sqrt(4t+9)) / (2t+4).
    Rational den(2 * t + 4);
    return QuadraticValue(Rational(1) / den, Rational(1) / den,
                          static_cast<unsigned long>(4 * t + 9));
}

}  // namespace ifam
