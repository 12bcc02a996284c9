#include "ifam/measure.hpp"

#include <stdexcept>

namespace ifam {

MeasurePolynomial MeasureProfile::polynomial() const {
    std::vector<MeasurePolynomial::Term> terms;
    for (int k = 0; k <= m; ++k) {
        if (counts[k] == 0) continue;
        terms.push_back({static_cast<unsigned>(k), static_cast<unsigned>(m - k),
                         Rational(static_cast<unsigned long>(counts[k]))});
    }
    return MeasurePolynomial(std::move(terms));
}

MeasureProfile profile_of(const WindowFamily& fam) {
    MeasureProfile prof;
    prof.m = fam.window_size();
    prof.counts.assign(prof.m + 1, 0);
    for (SubsetMask s : fam.window_members()) ++prof.counts[popcount(s)];
    return prof;
}

MeasureProfile profile_of(const ExplicitFamily& fam) {
    MeasureProfile prof;
    prof.m = fam.ground_size();
    prof.counts.assign(prof.m + 1, 0);
    fam.for_each_member([&](SubsetMask m) { ++prof.counts[popcount(m)]; });
    return prof;
}

namespace {

void check_p(const ExactScalar& p) {
    if (!scalar_in_open_unit_interval(p))
        throw std::domain_error("measure requires 0 < p < 1");
}

}  // namespace

ExactScalar mu(const ExplicitFamily& fam, const ExactScalar& p) {
    check_p(p);
    return profile_of(fam).polynomial().eval(p);
}

ExactScalar mu(const WindowFamily& fam, const ExactScalar& p) {
    check_p(p);
    return profile_of(fam).polynomial().eval(p);
}

MeasurePolynomial frontier_closed_form(int r, int t, int i) {
    if (r < 2 || t < 1 || i < 0) throw std::invalid_argument("bad frontier parameters");
    int m = t + r * i;
    if (m > kMaxGround) throw std::invalid_argument("frontier window exceeds cap");
    std::vector<MeasurePolynomial::Term> terms;
    for (int j = 0; j <= i; ++j)
        terms.push_back({static_cast<unsigned>(m - j), static_cast<unsigned>(j),
                         Rational(binomial(m, j))});
    return MeasurePolynomial(std::move(terms));
}

ExactScalar ratio_F2_F0(long t, const ExactScalar& p) {
    if (t < 1) throw std::invalid_argument("t >= 1 required");
    check_p(p);
    QuadraticValue p0 = p0_of_t(t);
    Ordering ord = compare(p, ExactScalar(p0.is_rational() ? ExactScalar(p0.as_rational())
                                                           : ExactScalar(p0)));
    if (ord == Ordering::Greater)
        throw std::domain_error("ratio_F2_F0 requires p <= p0(t)");
    std::vector<MeasurePolynomial::Term> terms = {
        {4, 2, Rational(binomial(t + 6, 2))},
        {5, 1, Rational(static_cast<long>(t) + 6)},
        {6, 0, Rational(1)},
    };
    return MeasurePolynomial(std::move(terms)).eval(p);
}

namespace {

// The ratio's value at a point, evaluated in Q(sqrt(4t+9)).
QuadraticValue ratio_at(long t, const QuadraticValue& p) {
    QuadraticValue q = QuadraticValue(Rational(1)) - p;
    QuadraticValue p2 = p * p;
    QuadraticValue p4 = p2 * p2;
    return QuadraticValue(Rational(binomial(t + 6, 2))) * p4 * q * q +
           QuadraticValue(Rational(static_cast<long>(t) + 6)) * p4 * p * q + p4 * p2;
}

// Exact check that the ratio is nondecreasing on (0, p0]. For t >= 2 each
// monomial p^4 q^2, p^5 q, p^6 is nondecreasing there because p0 <= 2/3.
// Only t = 1 has p0 > 2/3; there the derivative divided by p^3 is the
// quadratic g(p) = 4A + (5B-10A) p + (6A-6B+6) p^2 with A = C(t+6,2),
// B = t+6, which is convex with its vertex right of p0, so positivity on
// (0, p0] reduces to g(0) > 0 and g(p0) > 0.
void verify_max_at_p0(long t) {
    QuadraticValue p0 = p0_of_t(t);
    QuadraticValue two_thirds{make_rational(2, 3)};
    if (compare(p0, two_thirds) > 0) {
        Rational A(binomial(t + 6, 2));
        Rational B(static_cast<long>(t) + 6);
        Rational c0 = 4 * A;
        Rational c1 = 5 * B - 10 * A;
        Rational c2 = 6 * A - 6 * B + 6;
        if (c2 <= 0 || c0 <= 0) throw std::logic_error("unexpected derivative shape");
        Rational vertex = -c1 / (2 * c2);
        if (compare(QuadraticValue(vertex), p0) < 0)
            throw std::logic_error("derivative vertex left of p0; grid check insufficient");
        QuadraticValue g = QuadraticValue(c0) + QuadraticValue(c1) * p0 +
                           QuadraticValue(c2) * p0 * p0;
        if (g.sign() <= 0)
            throw std::logic_error("ratio maximizer justification failed at p0");
    }
    Rational below = to_interval(p0, 10).lo();
    if (below <= 0) throw std::logic_error("p0 enclosure degenerate");
    ExactScalar prev = Rational(0);
    for (int k = 1; k <= 8; ++k) {
        Rational pk = below * Rational(k, 8);
        ExactScalar val = ratio_F2_F0(t, pk);
        if (compare(prev, val) != Ordering::Less)
            throw std::logic_error("ratio not increasing on rational grid");
        prev = val;
    }
}

}  // namespace

QuadraticValue ratio_max_at_p0(long t) {
    if (t < 1) throw std::invalid_argument("t >= 1 required");
    verify_max_at_p0(t);
    return ratio_at(t, p0_of_t(t));
}

QuadraticValue ratio_max_rationalized(long t) {
    if (t < 1) throw std::invalid_argument("t >= 1 required");
    unsigned long d = static_cast<unsigned long>(4 * t + 9);
    Rational tt(t);
    Rational apart = 16 * (2 * tt * tt * tt + 31 * tt * tt + 153 * tt + 238);
    Rational bpart = -16 * (3 * tt * tt + 31 * tt + 78);
    QuadraticValue numerator(apart, bpart, d);
    QuadraticValue denominator = QuadraticValue(Rational(-1), Rational(1), d).pow(6);
    return numerator / denominator;
}

std::string ratio_curve_csv(long t_min, long t_max) {
    if (t_min < 1 || t_max < t_min) throw std::invalid_argument("bad t range");
    std::string out = "t,p0_decimal_50,ratio_at_p0_decimal_50,ratio_minus_half_decimal_50\n";
    for (long t = t_min; t <= t_max; ++t) {
        QuadraticValue p0 = p0_of_t(t);
        QuadraticValue ratio = ratio_max_at_p0(t);
        QuadraticValue excess = ratio - QuadraticValue(make_rational(1, 2));
        out += std::to_string(t) + "," + p0.to_decimal(50) + "," + ratio.to_decimal(50) + "," +
               excess.to_decimal(50) + "\n";
    }
    return out;
}

}  // namespace ifam
