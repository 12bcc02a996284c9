#pragma once

#include "ifam/quadratic.hpp"
#include "ifam/rational.hpp"

#include <optional>

namespace ifam {

// Closed interval with big-rational endpoints. Every operation returns an
// enclosure of the exact result, so a sign decided on an interval is a proof.
// Endpoints are kept exact; call round_outward to cap their size during
// iterative computations.
class BoundInterval {
  public:
    BoundInterval() : lo_(0), hi_(0) {}
    explicit BoundInterval(Rational point) : lo_(point), hi_(std::move(point)) {}
    BoundInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const BoundInterval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    // Definite sign of every point in the interval, or nullopt if it straddles 0.
    std::optional<int> definite_sign() const;

    // Widens endpoints to multiples of 10^-digits.
    BoundInterval round_outward(int digits) const;

    BoundInterval pow(unsigned long exp) const;

    std::string to_string() const;
    std::string midpoint_decimal(int digits) const;

    friend BoundInterval operator+(const BoundInterval& x, const BoundInterval& y);
    friend BoundInterval operator-(const BoundInterval& x, const BoundInterval& y);
    friend BoundInterval operator*(const BoundInterval& x, const BoundInterval& y);
    friend BoundInterval operator/(const BoundInterval& x, const BoundInterval& y);
    friend BoundInterval operator-(const BoundInterval& x);

  private:
    Rational lo_;
    Rational hi_;
};

// Enclosure of sqrt(x), x >= 0, width <= 10^-digits, via integer square roots.
BoundInterval sqrt_enclosure(const Rational& x, int digits);
BoundInterval sqrt_enclosure(const BoundInterval& x, int digits);

// Enclosure of Euler's number e from partial sums of sum 1/k! with an explicit
// tail bound; width < 10^-digits.
BoundInterval e_interval(int digits);

// Enclosure of a + b*sqrt(d) with width <= ~10^-digits.
BoundInterval to_interval(const QuadraticValue& x, int digits);

// Enclosure of base^(num/den) for base > 0 (strictly positive interval).
// Rational exponent, any sign. Dyadic exponent bracketing plus iterated
// square roots; `digits` controls the working precision.
BoundInterval pow_rational_exponent(const BoundInterval& base, const Rational& exponent,
                                    int digits);

}  // namespace ifam
