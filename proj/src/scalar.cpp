#include "ifam/scalar.hpp"

namespace ifam {

namespace {

bool same_field(const QuadraticValue& x, const QuadraticValue& y) {
    return x.is_rational() || y.is_rational() || x.radicand() == y.radicand();
}

template <typename Op>
ExactScalar binary(const ExactScalar& x, const ExactScalar& y, Op op) {
    // Interval operands absorb everything else.
    if (std::holds_alternative<BoundInterval>(x) || std::holds_alternative<BoundInterval>(y)) {
        constexpr int digits = 60;
        return op(scalar_to_interval(x, digits), scalar_to_interval(y, digits));
    }
    if (std::holds_alternative<QuadraticValue>(x) || std::holds_alternative<QuadraticValue>(y)) {
        QuadraticValue qx = std::holds_alternative<QuadraticValue>(x)
                                ? std::get<QuadraticValue>(x)
                                : QuadraticValue(std::get<Rational>(x));
        QuadraticValue qy = std::holds_alternative<QuadraticValue>(y)
                                ? std::get<QuadraticValue>(y)
                                : QuadraticValue(std::get<Rational>(y));
        if (!same_field(qx, qy))
            throw std::invalid_argument("arithmetic across distinct radicands");
        QuadraticValue r = op(qx, qy);
        if (r.is_rational()) return r.as_rational();
        return r;
    }
    return op(std::get<Rational>(x), std::get<Rational>(y));
}

}  // namespace

ExactScalar scalar_add(const ExactScalar& x, const ExactScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a + b; });
}

ExactScalar scalar_sub(const ExactScalar& x, const ExactScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a - b; });
}

ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a * b; });
}

ExactScalar scalar_div(const ExactScalar& x, const ExactScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a / b; });
}

ExactScalar scalar_pow(const ExactScalar& x, unsigned long exp) {
    if (std::holds_alternative<Rational>(x)) return rational_pow(std::get<Rational>(x), exp);
    if (std::holds_alternative<QuadraticValue>(x)) {
        QuadraticValue r = std::get<QuadraticValue>(x).pow(exp);
        if (r.is_rational()) return r.as_rational();
        return r;
    }
    return std::get<BoundInterval>(x).pow(exp);
}

bool scalar_is_exact(const ExactScalar& x) {
    return !std::holds_alternative<BoundInterval>(x);
}

BoundInterval scalar_to_interval(const ExactScalar& x, int digits) {
    if (std::holds_alternative<Rational>(x)) return BoundInterval(std::get<Rational>(x));
    if (std::holds_alternative<QuadraticValue>(x))
        return to_interval(std::get<QuadraticValue>(x), digits);
    return std::get<BoundInterval>(x);
}

namespace {

Ordering from_sign(int s) {
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

// Two genuinely irrational values in Q(sqrt(d1)) and Q(sqrt(d2)). If d1*d2 is
// a perfect square the radicals are commensurable and the comparison collapses
// into a single field; otherwise equality is impossible and interval
// refinement terminates.
Ordering compare_cross_field(const QuadraticValue& x, const QuadraticValue& y,
                             int precision_cap) {
    BigInt prod = BigInt(x.radicand()) * BigInt(y.radicand());
    if (mpz_perfect_square_p(prod.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        // sqrt(d2) = root/d1 * sqrt(d1)
        Rational conv = make_rational(root, BigInt(x.radicand()));
        QuadraticValue y_in_x(y.rational_part(), y.radical_coeff() * conv, x.radicand());
        return from_sign(compare(x, y_in_x));
    }
    for (int digits = 20; digits <= precision_cap; digits *= 2) {
        BoundInterval ix = to_interval(x, digits);
        BoundInterval iy = to_interval(y, digits);
        if (ix.hi() < iy.lo()) return Ordering::Less;
        if (iy.hi() < ix.lo()) return Ordering::Greater;
    }
    return Ordering::Undecided;
}

}  // namespace

Ordering compare(const ExactScalar& x, const ExactScalar& y, int precision_cap) {
    bool xi = std::holds_alternative<BoundInterval>(x);
    bool yi = std::holds_alternative<BoundInterval>(y);
    if (!xi && !yi) {
        bool xq = std::holds_alternative<QuadraticValue>(x);
        bool yq = std::holds_alternative<QuadraticValue>(y);
        if (!xq && !yq) return from_sign(cmp(std::get<Rational>(x), std::get<Rational>(y)));
        QuadraticValue qx = xq ? std::get<QuadraticValue>(x)
                               : QuadraticValue(std::get<Rational>(x));
        QuadraticValue qy = yq ? std::get<QuadraticValue>(y)
                               : QuadraticValue(std::get<Rational>(y));
        if (same_field(qx, qy)) return from_sign(compare(qx, qy));
        return compare_cross_field(qx, qy, precision_cap);
    }
    // At least one interval: refine the exact side until the verdict is
    // forced or the cap is reached. Equality cannot be certified here.
    for (int digits = 20; digits <= precision_cap; digits *= 2) {
        BoundInterval ix = scalar_to_interval(x, digits);
        BoundInterval iy = scalar_to_interval(y, digits);
        if (ix.hi() < iy.lo()) return Ordering::Less;
        if (iy.hi() < ix.lo()) return Ordering::Greater;
        if (ix.lo() == iy.lo() && ix.hi() == iy.hi() && ix.lo() == ix.hi())
            return Ordering::Equal;
    }
    return Ordering::Undecided;
}

std::string scalar_to_string(const ExactScalar& x) {
    if (std::holds_alternative<Rational>(x)) return rational_to_string(std::get<Rational>(x));
    if (std::holds_alternative<QuadraticValue>(x)) return std::get<QuadraticValue>(x).to_string();
    return std::get<BoundInterval>(x).to_string();
}

std::string scalar_to_decimal(const ExactScalar& x, int digits) {
    if (std::holds_alternative<Rational>(x))
        return rational_to_decimal(std::get<Rational>(x), digits);
    if (std::holds_alternative<QuadraticValue>(x))
        return std::get<QuadraticValue>(x).to_decimal(digits);
    return std::get<BoundInterval>(x).midpoint_decimal(digits);
}

bool scalar_in_open_unit_interval(const ExactScalar& x) {
    if (std::holds_alternative<Rational>(x)) {
        const Rational& r = std::get<Rational>(x);
        return r > 0 && r < 1;
    }
    if (std::holds_alternative<QuadraticValue>(x)) {
        const QuadraticValue& q = std::get<QuadraticValue>(x);
        return q.sign() > 0 && (QuadraticValue(Rational(1)) - q).sign() > 0;
    }
    const BoundInterval& b = std::get<BoundInterval>(x);
    return b.lo() > 0 && b.hi() < 1;
}

}  // namespace ifam
