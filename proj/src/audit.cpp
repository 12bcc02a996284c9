#include "ifam/audit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ifam {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Undecided: return "undecided";
        case Verdict::NotApplicable: return "not_applicable";
    }
    throw std::logic_error("bad verdict");
}

bool AuditReport::all_hold() const {
    return std::none_of(steps.begin(), steps.end(), [](const AuditStep& s) {
        return s.verdict == Verdict::Fails || s.verdict == Verdict::Undecided;
    });
}

bool AuditReport::any_fails() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const AuditStep& s) { return s.verdict == Verdict::Fails; });
}

bool AuditReport::any_undecided() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const AuditStep& s) { return s.verdict == Verdict::Undecided; });
}

std::map<std::string, long> AuditReport::first_holds() const {
    std::map<std::string, long> out;
    for (const AuditStep& s : steps) {
        if (s.t < 0 || s.verdict != Verdict::Holds) continue;
        auto [it, inserted] = out.emplace(s.claim_id, s.t);
        if (!inserted && s.t < it->second) it->second = s.t;
    }
    return out;
}

Verdict AuditReport::verdict_at(const std::string& claim_id, long t) const {
    for (const AuditStep& s : steps)
        if (s.claim_id == claim_id && s.t == t) return s.verdict;
    throw std::out_of_range("no step " + claim_id + " at t=" + std::to_string(t));
}

void AuditReport::append(const AuditReport& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::string AuditReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const AuditStep& s : steps) {
        nlohmann::json row;
        row["claim_id"] = s.claim_id;
        if (s.t >= 0) row["t"] = s.t;
        row["verdict"] = verdict_name(s.verdict);
        row["lhs_decimal_50"] = s.lhs_decimal_50;
        row["rhs_decimal_50"] = s.rhs_decimal_50;
        if (!s.lhs_exact.empty()) row["lhs_exact"] = s.lhs_exact;
        if (!s.rhs_exact.empty()) row["rhs_exact"] = s.rhs_exact;
        if (!s.witness.empty()) row["witness"] = s.witness;
        arr.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["steps"] = std::move(arr);
    nlohmann::json fh = nlohmann::json::object();
    for (const auto& [claim, t] : first_holds()) fh[claim] = t;
    doc["first_holds"] = std::move(fh);
    doc["decimals_note"] = "display only - verdicts are exact";
    return doc.dump(2);
}

std::string AuditReport::to_table() const {
    std::size_t w = 10;
    for (const AuditStep& s : steps) w = std::max(w, s.claim_id.size());
    std::ostringstream out;
    for (const AuditStep& s : steps) {
        out << s.claim_id << std::string(w + 2 - s.claim_id.size(), ' ');
        if (s.t >= 0)
            out << "t=" << s.t << "\t";
        else
            out << "\t";
        out << verdict_name(s.verdict);
        if (!s.lhs_decimal_50.empty()) out << "\tlhs=" << s.lhs_decimal_50;
        if (!s.rhs_decimal_50.empty()) out << "\trhs=" << s.rhs_decimal_50;
        if (!s.witness.empty()) out << "\t" << s.witness;
        out << "\n";
    }
    for (const auto& [claim, t] : first_holds())
        out << "first holds: " << claim << " at t=" << t << "\n";
    return out.str();
}

std::string AuditReport::to_csv() const {
    std::string out = "claim_id,t,verdict,lhs_decimal_50,rhs_decimal_50\n";
    for (const AuditStep& s : steps) {
        out += s.claim_id + ",";
        out += (s.t >= 0 ? std::to_string(s.t) : "") + ",";
        out += verdict_name(s.verdict) + "," + s.lhs_decimal_50 + "," + s.rhs_decimal_50 + "\n";
    }
    return out;
}

}  // namespace ifam
