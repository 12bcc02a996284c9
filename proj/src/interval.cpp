#include "ifam/interval.hpp"

#include <algorithm>

namespace ifam {

BoundInterval::BoundInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

std::optional<int> BoundInterval::definite_sign() const {
    if (lo_ > 0) return 1;
    if (hi_ < 0) return -1;
    if (lo_ == 0 && hi_ == 0) return 0;
    return std::nullopt;
}

BoundInterval BoundInterval::round_outward(int digits) const {
    BigInt scale = pow10(digits);
    BigInt lq, hq;
    BigInt lnum = lo_.get_num() * scale;
    BigInt hnum = hi_.get_num() * scale;
    mpz_fdiv_q(lq.get_mpz_t(), lnum.get_mpz_t(), lo_.get_den().get_mpz_t());
    mpz_cdiv_q(hq.get_mpz_t(), hnum.get_mpz_t(), hi_.get_den().get_mpz_t());
    return BoundInterval(make_rational(lq, scale), make_rational(hq, scale));
}

BoundInterval operator+(const BoundInterval& x, const BoundInterval& y) {
    return BoundInterval(x.lo_ + y.lo_, x.hi_ + y.hi_);
}

BoundInterval operator-(const BoundInterval& x, const BoundInterval& y) {
    return BoundInterval(x.lo_ - y.hi_, x.hi_ - y.lo_);
}

BoundInterval operator-(const BoundInterval& x) { return BoundInterval(-x.hi_, -x.lo_); }

BoundInterval operator*(const BoundInterval& x, const BoundInterval& y) {
    Rational p1 = x.lo_ * y.lo_;
    Rational p2 = x.lo_ * y.hi_;
    Rational p3 = x.hi_ * y.lo_;
    Rational p4 = x.hi_ * y.hi_;
    return BoundInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
}

BoundInterval operator/(const BoundInterval& x, const BoundInterval& y) {
    if (y.lo_ <= 0 && y.hi_ >= 0) throw std::domain_error("interval division by zero");
    return x * BoundInterval(Rational(1) / y.hi_, Rational(1) / y.lo_);
}

BoundInterval BoundInterval::pow(unsigned long exp) const {
    if (exp == 0) return BoundInterval(Rational(1));
    Rational a = rational_pow(lo_, exp);
    Rational b = rational_pow(hi_, exp);
    if (lo_ >= 0) return BoundInterval(a, b);
    if (hi_ <= 0) {
        if (exp % 2 == 0) return BoundInterval(b, a);
        return BoundInterval(a, b);
    }
    if (exp % 2 == 0) return BoundInterval(Rational(0), std::max(a, b));
    return BoundInterval(a, b);
}

std::string BoundInterval::to_string() const {
    return "[" + rational_to_string(lo_) + ", " + rational_to_string(hi_) + "]";
}

std::string BoundInterval::midpoint_decimal(int digits) const {
    Rational mid = (lo_ + hi_) / 2;
    return rational_to_decimal(mid, digits);
}

BoundInterval sqrt_enclosure(const Rational& x, int digits) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    if (x == 0) return BoundInterval(Rational(0));
    // sqrt(n/d) = sqrt(n*d)/d; bracket sqrt(n*d * 10^(2 digits)) by integers.
    BigInt scale = pow10(digits);
    BigInt target = x.get_num() * x.get_den() * scale * scale;
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), target.get_mpz_t());
    BigInt den = x.get_den() * scale;
    Rational lo = make_rational(root, den);
    if (rem == 0) return BoundInterval(lo, lo);
    return BoundInterval(lo, make_rational(root + 1, den));
}

BoundInterval sqrt_enclosure(const BoundInterval& x, int digits) {
    return BoundInterval(sqrt_enclosure(x.lo(), digits).lo(), sqrt_enclosure(x.hi(), digits).hi());
}

BoundInterval e_interval(int digits) {
    if (digits < 1) throw std::invalid_argument("e_interval requires digits >= 1");
    Rational target = make_rational(BigInt(1), pow10(digits));
    Rational sum(2);  // 1/0! + 1/1!
    BigInt factorial(1);
    for (unsigned long k = 2;; ++k) {
        factorial *= k;
        sum += make_rational(BigInt(1), factorial);
        // sum_{j>k} 1/j! <= (k+2) / ((k+1)! (k+1))
        Rational tail = make_rational(BigInt(k + 2), factorial * (k + 1) * (k + 1));
        if (tail < target) return BoundInterval(sum, sum + tail);
    }
}

BoundInterval to_interval(const QuadraticValue& x, int digits) {
    if (x.is_rational()) return BoundInterval(x.rational_part());
    const Rational& b = x.radical_coeff();
    int bmag = static_cast<int>(mpz_sizeinbase(b.get_num().get_mpz_t(), 10));
    BoundInterval root = sqrt_enclosure(Rational(x.radicand()), digits + bmag + 2);
    BoundInterval scaled = BoundInterval(b) * root;
    return BoundInterval(x.rational_part() + scaled.lo(), x.rational_part() + scaled.hi());
}

namespace {

// Enclosure of x^(m / 2^k) for rational x > 0 and integer m >= 0:
// x^(m >> k) times the product of iterated square roots x^(1/2^i) over the
// set bits of the fractional part. Keeps every intermediate in [min(x,1),
// max(x,1)]-scale instead of underflowing through x^m.
BoundInterval pow_dyadic(const Rational& x, const BigInt& m, int k, int working_digits) {
    BoundInterval acc{Rational(1)};
    BoundInterval base{x};
    BigInt integer_part = m >> k;
    while (integer_part > 0) {
        if (mpz_odd_p(integer_part.get_mpz_t()))
            acc = (acc * base).round_outward(working_digits);
        integer_part >>= 1;
        if (integer_part > 0) base = (base * base).round_outward(working_digits);
    }
    BoundInterval root{x};
    for (int i = 1; i <= k; ++i) {
        if (root.lo() < 0) root = BoundInterval(Rational(0), root.hi());
        root = sqrt_enclosure(root, working_digits).round_outward(working_digits);
        if (mpz_tstbit(m.get_mpz_t(), k - i))
            acc = (acc * root).round_outward(working_digits);
    }
    return acc;
}

}  // namespace

BoundInterval pow_rational_exponent(const BoundInterval& base, const Rational& exponent,
                                    int digits) {
    if (base.lo() <= 0) throw std::domain_error("pow_rational_exponent needs base > 0");
    if (exponent == 0) return BoundInterval(Rational(1));
    if (exponent < 0) {
        BoundInterval inv(Rational(1) / base.hi(), Rational(1) / base.lo());
        return pow_rational_exponent(inv, -exponent, digits);
    }
    int wp = digits + 15;
    // Bracket the exponent between dyadics m/2^k and (m+1)/2^k.
    int k = std::max(32, digits * 4);
    BigInt two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    BigInt m1, rem;
    BigInt num = exponent.get_num() * two_k;
    mpz_fdiv_qr(m1.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), exponent.get_den().get_mpz_t());
    BigInt m2 = (rem == 0) ? m1 : BigInt(m1 + 1);

    BoundInterval c1 = pow_dyadic(base.lo(), m1, k, wp);
    BoundInterval c2 = pow_dyadic(base.lo(), m2, k, wp);
    BoundInterval c3 = pow_dyadic(base.hi(), m1, k, wp);
    BoundInterval c4 = pow_dyadic(base.hi(), m2, k, wp);
    Rational lo = std::min(std::min(c1.lo(), c2.lo()), std::min(c3.lo(), c4.lo()));
    Rational hi = std::max(std::max(c1.hi(), c2.hi()), std::max(c3.hi(), c4.hi()));
    if (lo < 0) lo = 0;
    return BoundInterval(lo, hi);
}

}  // namespace ifam
