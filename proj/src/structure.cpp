#include "ifam/structure.hpp"

#include "ifam/interval.hpp"
#include "ifam/measure.hpp"
#include "ifam/shifting.hpp"

#include <algorithm>
#include <climits>
#include <thread>

namespace ifam {

int two_wise_s(const ExplicitFamily& fam) {
    if (fam.empty()) throw std::invalid_argument("two_wise_s of empty family");
    std::vector<SubsetMask> mins = minimal_members(fam);
    int best = INT_MAX;
    for (std::size_t i = 0; i < mins.size(); ++i)
        for (std::size_t j = i; j < mins.size(); ++j)
            best = std::min(best, popcount(mins[i] & mins[j]));
    return best;
}

HParam h_param(const ExplicitFamily& fam, int t) {
    if (t < 1) throw std::invalid_argument("t >= 1 required");
    if (fam.empty()) throw std::invalid_argument("h undefined for empty family");
    int n = fam.ground_size();
    std::vector<SubsetMask> mins = minimal_members(fam);
    int h = -1;
    for (int i = 0; t + i <= n; ++i) {
        SubsetMask window = prefix_mask(t + i);
        bool ok = true;
        for (SubsetMask m : mins)
            if (popcount(m & window) < t) {
                ok = false;
                break;
            }
        if (ok) {
            h = i;
            break;
        }
    }
    if (h < 0) throw std::domain_error("family has a member with fewer than t elements");
    if (h == 0) return HParam{0, 0, false};

    HParam out;
    out.h = h;
    SubsetMask window = prefix_mask(t + h - 1);
    for (SubsetMask m : mins)
        if (popcount(m & window) < t) {
            out.witness = m;
            break;
        }
    // Shifted families admit a witness whose window part is exactly [t-1].
    SubsetMask target = prefix_mask(t - 1);
    fam.for_each_member([&](SubsetMask m) {
        if (out.normalized_witness) return;
        if ((m & window) == target) {
            out.witness = m;
            out.normalized_witness = true;
        }
    });
    return out;
}

HoleDecomposition hole_families(const ExplicitFamily& fam, int t, int h) {
    if (t < 1 || h < 1) throw std::invalid_argument("hole_families needs t >= 1, h >= 1");
    int n = fam.ground_size();
    if (t + h > n) throw std::invalid_argument("trace ground [t+h, n] is empty");
    if (!is_shifted(fam)) throw std::invalid_argument("hole_families requires a shifted family");
    if (!is_r_wise_t_intersecting(fam, 3, t))
        throw std::invalid_argument("hole_families requires a 3-wise t-intersecting family");
    HParam hp = h_param(fam, t);
    if (hp.h != h) throw std::invalid_argument("h does not match the family");

    HoleDecomposition dec;
    dec.t = t;
    dec.h = h;
    dec.s = two_wise_s(fam);
    dec.witness_H0 = hp.witness;
    dec.trace_ground = n - (t + h) + 1;
    dec.holes.assign(h + 1, ExplicitFamily(dec.trace_ground));

    SubsetMask window = prefix_mask(t + h - 1);
    std::vector<SubsetMask> rightmost(h + 1);
    for (int i = 0; i <= h; ++i) rightmost[i] = range_mask(t + h - i, t + h - 1);

    fam.for_each_member([&](SubsetMask m) {
        SubsetMask hole = window & ~m;
        int size = popcount(hole);
        if (size > h)
            throw std::logic_error("member with hole larger than h");
        if (hole == rightmost[size]) dec.holes[size].insert(m >> (t + h - 1));
    });

    // Shiftedness consequence: the trace of any hole of size i already
    // appears among the rightmost-hole traces.
    bool ok = true;
    fam.for_each_member([&](SubsetMask m) {
        if (!ok) return;
        SubsetMask hole = window & ~m;
        int size = popcount(hole);
        if (!dec.holes[size].contains(m >> (t + h - 1))) ok = false;
    });
    if (!ok)
        throw std::invalid_argument("trace outside its rightmost-hole family; input not shifted");
    return dec;
}

ExactScalar measure_bound_rhs(const HoleDecomposition& dec, const ExactScalar& p) {
    if (!scalar_in_open_unit_interval(p)) throw std::domain_error("requires 0 < p < 1");
    ExactScalar q = one_minus(p);
    ExactScalar total = Rational(0);
    int m = dec.t + dec.h - 1;
    for (int i = 0; i <= dec.h; ++i) {
        ExactScalar weight = scalar_mul(ExactScalar(Rational(binomial(m, i))),
                                        scalar_mul(scalar_pow(p, m - i), scalar_pow(q, i)));
        ExactScalar trace_measure = dec.holes[i].empty()
                                        ? ExactScalar(Rational(0))
                                        : mu(dec.holes[i], p);
        total = scalar_add(total, scalar_mul(weight, trace_measure));
    }
    return total;
}

namespace {

AuditStep step_bool(const std::string& claim, long t, bool holds, std::string witness = "") {
    AuditStep s;
    s.claim_id = claim;
    s.t = t;
    s.verdict = holds ? Verdict::Holds : Verdict::Fails;
    s.witness = std::move(witness);
    return s;
}

}  // namespace

AuditReport audit_mifr(const ExplicitFamily& fam, int t) {
    AuditReport rep;
    int n = fam.ground_size();
    bool shifted = is_shifted(fam);
    rep.steps.push_back(step_bool("mifr.shifted", t, shifted));
    bool intersecting = is_r_wise_t_intersecting(fam, 3, t);
    rep.steps.push_back(step_bool("mifr.3wise", t, intersecting));
    if (!shifted || !intersecting) return rep;

    HParam hp = h_param(fam, t);
    if (hp.h == 0) {
        rep.steps.push_back(step_bool("mifr.applicable", t, false, "family inside the t-star (h=0)"));
        return rep;
    }
    rep.steps.push_back(step_bool("mifr.applicable", t, true, "h=" + std::to_string(hp.h)));
    rep.steps.push_back(step_bool("mifr.h0_witness", t, hp.normalized_witness,
                                  "H0={" + mask_to_string(hp.witness) + "}"));

    int s = two_wise_s(fam);
    {
        AuditStep st = step_bool("mifr.h_le_s_minus_t", t, 1 <= hp.h && hp.h <= s - t,
                                 "h=" + std::to_string(hp.h) + " s=" + std::to_string(s));
        st.lhs_exact = std::to_string(hp.h);
        st.rhs_exact = std::to_string(s - t);
        rep.steps.push_back(std::move(st));
    }

    HoleDecomposition dec = hole_families(fam, t, hp.h);
    for (int i = 0; i <= hp.h; ++i) {
        std::string claim = "mifr.T" + std::to_string(i) + "_2wise_" + std::to_string(2 * i + 1);
        if (dec.holes[i].empty()) {
            AuditStep st = step_bool(claim, t, true, "empty trace family");
            rep.steps.push_back(std::move(st));
            continue;
        }
        int ts = two_wise_s(dec.holes[i]);
        AuditStep st = step_bool(claim, t, ts >= 2 * i + 1);
        st.lhs_exact = std::to_string(ts);
        st.rhs_exact = std::to_string(2 * i + 1);
        rep.steps.push_back(std::move(st));
    }

    {
        std::string claim = "mifr.Th_2wise_" + std::to_string(2 * hp.h + 2);
        AuditStep st;
        st.claim_id = claim;
        st.t = t;
        if (t + 3 * hp.h > n) {
            st.verdict = Verdict::NotApplicable;
            st.witness = "frontier window exceeds ground set";
        } else if (fam.is_subfamily_of(lift(make_frontier(3, t, hp.h), n))) {
            st.verdict = Verdict::NotApplicable;
            st.witness = "family inside the h-th frontier";
        } else if (dec.holes[hp.h].empty()) {
            st.verdict = Verdict::Holds;
            st.witness = "empty trace family";
        } else {
            int ts = two_wise_s(dec.holes[hp.h]);
            st.verdict = ts >= 2 * hp.h + 2 ? Verdict::Holds : Verdict::Fails;
            st.lhs_exact = std::to_string(ts);
            st.rhs_exact = std::to_string(2 * hp.h + 2);
        }
        rep.steps.push_back(std::move(st));
    }

    for (const Rational& p : {make_rational(1, 5), make_rational(1, 3)}) {
        ExactScalar lhs = mu(fam, p);
        ExactScalar rhs = measure_bound_rhs(dec, p);
        Ordering ord = compare(lhs, rhs);
        AuditStep st = step_bool("mifr.measure_bound@p=" + rational_to_string(p), t,
                                 ord == Ordering::Less || ord == Ordering::Equal);
        st.lhs_exact = scalar_to_string(lhs);
        st.rhs_exact = scalar_to_string(rhs);
        st.lhs_decimal_50 = scalar_to_decimal(lhs, 50);
        st.rhs_decimal_50 = scalar_to_decimal(rhs, 50);
        rep.steps.push_back(std::move(st));
    }
    return rep;
}

ExactScalar ekr_bound(EkrKind kind, int s, const ExactScalar& p) {
    if (s < 1) throw std::invalid_argument("s >= 1 required");
    if (!scalar_in_open_unit_interval(p)) throw std::domain_error("requires 0 < p < 1");
    if (kind == EkrKind::Ratio) {
        if (compare(p, ExactScalar(make_rational(1, 2))) == Ordering::Greater)
            throw std::domain_error("ratio bound needs p <= 1/2");
        return scalar_pow(scalar_div(p, one_minus(p)), s);
    }
    if (compare(p, ExactScalar(make_rational(1, s + 1))) == Ordering::Greater)
        throw std::domain_error("power bound needs p <= 1/(s+1)");
    return scalar_pow(p, s);
}

CaseLemma case_lemma_from_string(const std::string& name) {
    if (name == "h1") return CaseLemma::H1;
    if (name == "h2") return CaseLemma::H2;
    if (name == "h3") return CaseLemma::H3;
    if (name == "mid") return CaseLemma::Mid;
    if (name == "large") return CaseLemma::Large;
    throw std::invalid_argument("unknown case: " + name);
}

namespace {

struct FieldContext {
    long t;
    QuadraticValue p0;
    QuadraticValue q0;
};

FieldContext field_context(long t) {
    QuadraticValue p0 = p0_of_t(t);
    return {t, p0, QuadraticValue(Rational(1)) - p0};
}

AuditStep exact_lt_step(const std::string& claim, long t, const QuadraticValue& lhs,
                        const Rational& rhs, bool strict) {
    QuadraticValue gap = QuadraticValue(rhs) - lhs;
    int sg = gap.sign();
    AuditStep st;
    st.claim_id = claim;
    st.t = t;
    st.verdict = (strict ? sg > 0 : sg >= 0) ? Verdict::Holds : Verdict::Fails;
    st.lhs_exact = lhs.to_string();
    st.rhs_exact = rational_to_string(rhs);
    st.lhs_decimal_50 = lhs.to_decimal(50);
    st.rhs_decimal_50 = rational_to_decimal(rhs, 50);
    return st;
}

// verdict for "lhs < rhs" (or <=) where both sides are interval-valued
// functions of the working precision
template <typename F>
AuditStep interval_cmp_step(const std::string& claim, long t, F compute, bool strict,
                            int precision_cap) {
    AuditStep st;
    st.claim_id = claim;
    st.t = t;
    int digits = 40;
    while (true) {
        auto [lhs, rhs] = compute(digits);
        bool lt_certain = strict ? lhs.hi() < rhs.lo() : lhs.hi() <= rhs.lo();
        bool ge_certain = strict ? lhs.lo() >= rhs.hi() : lhs.lo() > rhs.hi();
        if (lt_certain || ge_certain || digits >= precision_cap) {
            st.verdict = lt_certain   ? Verdict::Holds
                         : ge_certain ? Verdict::Fails
                                      : Verdict::Undecided;
            st.lhs_decimal_50 = lhs.midpoint_decimal(50);
            st.rhs_decimal_50 = rhs.midpoint_decimal(50);
            return st;
        }
        digits = std::min(digits * 2, precision_cap);
    }
}

std::vector<AuditStep> audit_h1_at(long t, int) {
    FieldContext c = field_context(t);
    QuadraticValue value = c.p0 + QuadraticValue(Rational(t)) * c.p0.pow(3) * c.q0;
    return {exact_lt_step("h1.p0_le_1/5", t, c.p0, make_rational(1, 5), false),
            exact_lt_step("h1.main", t, value, make_rational(1, 2), true)};
}

std::vector<AuditStep> audit_h2_at(long t, int) {
    FieldContext c = field_context(t);
    QuadraticValue value = c.p0.pow(2) +
                           QuadraticValue(Rational(t + 1)) * c.p0.pow(3) * c.q0 +
                           QuadraticValue(Rational(binomial(t + 1, 2))) * c.p0.pow(5) *
                               c.q0.pow(2);
    return {exact_lt_step("h2.p0_le_1/7", t, c.p0, make_rational(1, 7), false),
            exact_lt_step("h2.main", t, value, make_rational(1, 2), true)};
}

std::vector<AuditStep> audit_h3_at(long t, int) {
    FieldContext c = field_context(t);
    QuadraticValue value{Rational(0)};
    for (int i = 0; i <= 3; ++i)
        value = value + QuadraticValue(Rational(binomial(t + 2, i))) * c.p0.pow(3 + i) *
                            c.q0.pow(i);
    return {exact_lt_step("h3.p0_le_1/8", t, c.p0, make_rational(1, 8), false),
            exact_lt_step("h3.main", t, value, make_rational(1, 2), true)};
}

// Largest integer h with (4h+5)^2 <= 4t, i.e. h <= sqrt(t)/2 - 5/4.
long mid_h_max(long t) {
    BigInt root;
    BigInt four_t(4 * t);
    mpz_sqrt(root.get_mpz_t(), four_t.get_mpz_t());
    long u = root.get_si();
    return (u - 5) / 4 - ((u - 5) % 4 < 0 ? 1 : 0);
}

std::vector<AuditStep> audit_mid_at(long t, int precision_cap) {
    std::vector<AuditStep> out;
    FieldContext c = field_context(t);
    QuadraticValue p0q0 = c.p0 * c.q0;
    long h = mid_h_max(t);

    {
        AuditStep st = step_bool("mid.h_range", t, h >= 4, "h_max=" + std::to_string(h));
        out.push_back(std::move(st));
    }

    // Links that depend on the worst-case h.
    if (h >= 4) {
        out.push_back(exact_lt_step("mid.p0_le_inv_2(h+1)", t, c.p0,
                                    make_rational(1, 2 * (h + 1)), false));
        QuadraticValue lhs_ratio{make_rational(h + 1, t - 1)};
        QuadraticValue rhs_ratio = QuadraticValue(make_rational(1, 2)) * p0q0;
        AuditStep st;
        st.claim_id = "mid.step_ratio";
        st.t = t;
        st.verdict = compare(lhs_ratio, rhs_ratio) <= 0 ? Verdict::Holds : Verdict::Fails;
        st.lhs_exact = lhs_ratio.to_string();
        st.rhs_exact = rhs_ratio.to_string();
        st.lhs_decimal_50 = lhs_ratio.to_decimal(50);
        st.rhs_decimal_50 = rhs_ratio.to_decimal(50);
        out.push_back(std::move(st));

        // (h+1)/(t-1) <= (sqrt(t)-1/2)/(2(t-1))  <=>  (4h+5)^2 <= 4t
        out.push_back(step_bool("mid.h_to_sqrt", t, (4 * h + 5) * (4 * h + 5) <= 4 * t));
        // (sqrt(t)-1/2)/(2(t-1)) <= 1/(2 sqrt(t))  <=>  sqrt(t) >= 2
        out.push_back(step_bool("mid.sqrt_slack", t, t >= 4));

        // f(t) = sqrt(t) p0 q0 >= 1, via interval bracketing of sqrt(t).
        out.push_back(interval_cmp_step(
            "mid.f", t,
            [&](int digits) {
                BoundInterval f = sqrt_enclosure(Rational(t), digits) * to_interval(p0q0, digits);
                return std::pair(BoundInterval(Rational(1)), f);
            },
            false, precision_cap));

        // C(t+h-1, h) < (e (t+h-1) / h)^h
        Rational binom_val(binomial(t + h - 1, h));
        out.push_back(interval_cmp_step(
            "mid.binom_e", t,
            [&](int digits) {
                BoundInterval rhs =
                    (e_interval(digits) * BoundInterval(make_rational(t + h - 1, h))).pow(h);
                return std::pair(BoundInterval(binom_val), rhs);
            },
            true, precision_cap));
    }

    // e (1 + t/4) p0^2 q0 <= 7/10; depends only on t.
    QuadraticValue p02q0 = c.p0.pow(2) * c.q0;
    AuditStep seven = interval_cmp_step(
        "mid.0.7", t,
        [&](int digits) {
            BoundInterval lhs = e_interval(digits) * BoundInterval(make_rational(4 + t, 4)) *
                                to_interval(p02q0, digits);
            return std::pair(lhs, BoundInterval(make_rational(7, 10)));
        },
        false, precision_cap);
    out.push_back(seven);

    // 2 * (7/10)^4 < 1/2, the geometric tail once each term halves.
    Rational tail = 2 * rational_pow(make_rational(7, 10), 4);
    AuditStep tail_step = step_bool("mid.tail", t, tail < make_rational(1, 2));
    tail_step.lhs_exact = rational_to_string(tail);
    tail_step.rhs_exact = "1/2";
    out.push_back(std::move(tail_step));

    // End-to-end route: the exact step-ratio link replaces the sqrt(t)
    // detour through f(t), then the binomial bound and the 0.7 link close
    // the chain.
    if (h >= 4) {
        Verdict agg = Verdict::Holds;
        for (const AuditStep& s : out) {
            if (s.claim_id == "mid.f") continue;  // reported, not part of the route
            if (s.verdict == Verdict::Fails) agg = Verdict::Fails;
            if (s.verdict == Verdict::Undecided && agg == Verdict::Holds)
                agg = Verdict::Undecided;
        }
        AuditStep st;
        st.claim_id = "mid.end_to_end";
        st.t = t;
        st.verdict = agg;
        st.witness = "all links except mid.f";
        out.push_back(std::move(st));
    }
    return out;
}

// Rounded interval power, needed because exact endpoint powers blow up for
// exponents near 10^4.
BoundInterval pow_rounded(BoundInterval base, unsigned long exp, int digits) {
    BoundInterval acc{Rational(1)};
    while (exp > 0) {
        if (exp & 1) acc = (acc * base).round_outward(digits);
        exp >>= 1;
        if (exp > 0) base = (base * base).round_outward(digits);
    }
    return acc;
}

std::vector<AuditStep> audit_large_at(long t, int precision_cap) {
    FieldContext c = field_context(t);
    QuadraticValue base_exact = c.p0 / c.q0;
    QuadraticValue inv_q0 = QuadraticValue(Rational(1)) / c.q0;
    AuditStep st = interval_cmp_step(
        "large.main", t,
        [&](int digits) {
            BoundInterval sq = sqrt_enclosure(Rational(t), digits);
            Rational y1 = sq.lo() / 2 - make_rational(5, 4);
            Rational y2 = sq.hi() / 2 - make_rational(5, 4);
            BoundInterval base = to_interval(base_exact, digits);
            BoundInterval pw1 = pow_rational_exponent(base, y1, digits);
            BoundInterval pw2 = pow_rational_exponent(base, y2, digits);
            BoundInterval pw(std::min(pw1.lo(), pw2.lo()), std::max(pw1.hi(), pw2.hi()));
            BoundInterval qpow =
                pow_rounded(to_interval(inv_q0, digits), static_cast<unsigned long>(t), digits);
            return std::pair((pw * qpow).round_outward(digits), BoundInterval(make_rational(1, 2)));
        },
        true, precision_cap);
    return {st};
}

}  // namespace

AuditReport audit_case_lemmas(long t_lo, long t_hi, CaseLemma which, int precision_cap,
                              int jobs) {
    if (t_lo < 1 || t_hi < t_lo) throw std::invalid_argument("bad t range");
    if (jobs < 1) jobs = 1;
    std::size_t count = static_cast<std::size_t>(t_hi - t_lo + 1);
    std::vector<std::vector<AuditStep>> slots(count);

    auto steps_for = [&](long t) -> std::vector<AuditStep> {
        switch (which) {
            case CaseLemma::H1: return audit_h1_at(t, precision_cap);
            case CaseLemma::H2: return audit_h2_at(t, precision_cap);
            case CaseLemma::H3: return audit_h3_at(t, precision_cap);
            case CaseLemma::Mid: return audit_mid_at(t, precision_cap);
            case CaseLemma::Large: return audit_large_at(t, precision_cap);
        }
        throw std::logic_error("bad case");
    };

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) slots[k] = steps_for(t_lo + static_cast<long>(k));
    };
    if (jobs == 1) {
        worker(0, count);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (count + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::size_t begin = std::min(count, static_cast<std::size_t>(w) * chunk);
            std::size_t end = std::min(count, begin + chunk);
            if (begin < end) threads.emplace_back(worker, begin, end);
        }
        for (auto& th : threads) th.join();
    }

    AuditReport rep;
    for (auto& slot : slots)
        for (auto& step : slot) rep.steps.push_back(std::move(step));
    return rep;
}

}  // namespace ifam
