#pragma once

#include <map>
#include <string>
#include <vector>

namespace ifam {

enum class Verdict { Holds, Fails, Undecided, NotApplicable };

std::string verdict_name(Verdict v);

struct AuditStep {
    std::string claim_id;
    long t = -1;  // parameter of the claim; -1 when not t-indexed
    Verdict verdict = Verdict::Holds;
    std::string lhs_decimal_50;
    std::string rhs_decimal_50;
    std::string lhs_exact;
    std::string rhs_exact;
    std::string witness;  // counterexample parameters or context
};

// Every verdict is backed by exact arithmetic; Undecided only appears when
// interval refinement exhausts the precision cap.
struct AuditReport {
    std::vector<AuditStep> steps;

    bool all_hold() const;      // no Fails and no Undecided
    bool any_fails() const;
    bool any_undecided() const;

    // Minimal t per claim at which the verdict is Holds (claims with a t).
    std::map<std::string, long> first_holds() const;

    Verdict verdict_at(const std::string& claim_id, long t) const;

    void append(const AuditReport& other);

    // Array of {claim_id, t, verdict, lhs_decimal_50, rhs_decimal_50, ...}
    // plus a first_holds summary object.
    std::string to_json() const;
    std::string to_table() const;
    std::string to_csv() const;
};

}  // namespace ifam
