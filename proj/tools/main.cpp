#include "ifam/corpus.hpp"
#include "ifam/enumerate.hpp"
#include "ifam/measure.hpp"
#include "ifam/shifting.hpp"
#include "ifam/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ifam;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

const char* kDecimalsNote = "display only - verdicts are exact";

ExplicitFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    return family_from_stream(in);
}

void write_output(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << data;
}

int report_exit_code(const AuditReport& rep) {
    if (rep.any_fails()) return kExitVerdictFailed;
    if (rep.any_undecided()) return kExitUndecided;
    return kExitOk;
}

std::string render_report(const AuditReport& rep, const std::string& format) {
    if (format == "json") return rep.to_json();
    if (format == "csv") return rep.to_csv();
    return rep.to_table();
}

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("IFAM_CACHE_DIR")) return env;
    return ".ifam-cache";
}

Rational parse_probability(const std::string& text) {
    Rational p = parse_rational(text);
    if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0,1): " + text);
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact measures, shifting, audits and exhaustive search for r-wise "
                 "t-intersecting families"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    int precision_cap = kDefaultPrecisionCap;
    app.add_option("--precision-cap", precision_cap, "decimal digits before declaring undecided");
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // p0
    auto* cmd_p0 = app.add_subcommand("p0", "crossover probability p0(t)");
    long p0_t = 0;
    cmd_p0->add_option("--t", p0_t, "t >= 1")->required();

    // measure
    auto* cmd_measure = app.add_subcommand("measure", "exact p-biased measure of a family");
    std::string measure_family, measure_frontier, measure_named, measure_p;
    int measure_n = 0, measure_t = 0;
    cmd_measure->add_option("--family", measure_family, "family file");
    cmd_measure->add_option("--frontier", measure_frontier, "frontier parameters r,t,i");
    cmd_measure->add_option("--named", measure_named, "named example: gprime | second-layer");
    cmd_measure->add_option("--n", measure_n, "ambient ground size");
    cmd_measure->add_option("--t", measure_t, "t for named examples");
    cmd_measure->add_option("--p", measure_p, "exact rational p as a/b")->required();

    // ratio-curve
    auto* cmd_curve = app.add_subcommand("ratio-curve", "max ratio of the second frontier over the star");
    long curve_min = 1, curve_max = 0;
    cmd_curve->add_option("--t-min", curve_min);
    cmd_curve->add_option("--t-max", curve_max)->required();

    // shift
    auto* cmd_shift = app.add_subcommand("shift", "apply one shift or run to the shifted fixpoint");
    std::string shift_family, shift_policy = "lex", trace_out;
    int shift_i = 0, shift_j = 0;
    bool shift_fix = false;
    cmd_shift->add_option("--family", shift_family)->required();
    cmd_shift->add_option("--i", shift_i);
    cmd_shift->add_option("--j", shift_j);
    cmd_shift->add_flag("--fixpoint", shift_fix);
    cmd_shift->add_option("--policy", shift_policy, "lex | reverse-lex | seed:<k>");
    cmd_shift->add_option("--trace-out", trace_out, "write the shift trace as JSON lines");

    // closure
    auto* cmd_closure = app.add_subcommand("closure", "(r,t)-maximal closure");
    std::string closure_family;
    int closure_r = 0, closure_t = 0;
    cmd_closure->add_option("--family", closure_family)->required();
    cmd_closure->add_option("--r", closure_r)->required();
    cmd_closure->add_option("--t", closure_t)->required();

    // decompose
    auto* cmd_decompose = app.add_subcommand("decompose", "hole decomposition of a shifted family");
    std::string decompose_family;
    int decompose_t = 0;
    bool decompose_full = false;
    cmd_decompose->add_option("--family", decompose_family)->required();
    cmd_decompose->add_option("--t", decompose_t)->required();
    cmd_decompose->add_flag("--full", decompose_full, "include trace families as text");

    // audit-mifr
    auto* cmd_mifr = app.add_subcommand("audit-mifr", "hole-decomposition intersection claims");
    std::string mifr_family;
    int mifr_t = 0;
    cmd_mifr->add_option("--family", mifr_family)->required();
    cmd_mifr->add_option("--t", mifr_t)->required();

    // audit-cases
    auto* cmd_cases = app.add_subcommand("audit-cases", "per-t inequality chains of the measure-bound cases");
    std::string cases_case, cases_range;
    int cases_jobs = 1;
    cmd_cases->add_option("--case", cases_case, "h1 | h2 | h3 | mid | large")->required();
    cmd_cases->add_option("--t-range", cases_range, "inclusive range a:b")->required();
    cmd_cases->add_option("--jobs", cases_jobs, "worker threads");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "maximal families up to isomorphism");
    int enum_n = 0, enum_r = 0, enum_t = 0, enum_cap = kDefaultEnumerationCap;
    std::string enum_cache;
    cmd_enum->add_option("--n", enum_n)->required();
    cmd_enum->add_option("--r", enum_r)->required();
    cmd_enum->add_option("--t", enum_t)->required();
    cmd_enum->add_option("--cap", enum_cap, "ground-size cap");
    cmd_enum->add_option("--cache-dir", enum_cache, "cache directory (or IFAM_CACHE_DIR)");

    // verify-recognition
    auto* cmd_recog = app.add_subcommand("verify-recognition", "shift recognition of frontier families");
    int recog_n = 0, recog_r = 0, recog_t = 0, recog_i = 0, recog_policies = 8;
    cmd_recog->add_option("--n", recog_n)->required();
    cmd_recog->add_option("--r", recog_r)->required();
    cmd_recog->add_option("--t", recog_t)->required();
    cmd_recog->add_option("--i", recog_i)->required();
    cmd_recog->add_option("--policies", recog_policies, "number of seeded random policies");

    // verify-stability
    auto* cmd_stab = app.add_subcommand("verify-stability", "trichotomy classification of maximal classes");
    int stab_n = 0, stab_t = 0;
    std::string stab_grid;
    cmd_stab->add_option("--n", stab_n)->required();
    cmd_stab->add_option("--t", stab_t)->required();
    cmd_stab->add_option("--p-grid", stab_grid, "comma-separated rationals")->required();

    // gen-corpus
    auto* cmd_corpus = app.add_subcommand("gen-corpus", "deterministic shifted-maximal family corpus");
    int corpus_count = 200;
    std::uint64_t corpus_seed = kCorpusSeed;
    cmd_corpus->add_option("--count", corpus_count);
    cmd_corpus->add_option("--seed", corpus_seed);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_p0) {
            QuadraticValue p0 = p0_of_t(p0_t);
            json doc;
            doc["t"] = p0_t;
            doc["p0"] = p0.to_string();
            doc["p0_decimal_50"] = p0.to_decimal(50);
            doc["decimals_note"] = kDecimalsNote;
            write_output(doc.dump(2), out_path);
            return kExitOk;
        }

        if (*cmd_measure) {
            Rational p = parse_probability(measure_p);
            ExactScalar value = Rational(0);
            std::string source;
            if (!measure_family.empty()) {
                value = mu(load_family(measure_family), p);
                source = measure_family;
            } else if (!measure_frontier.empty()) {
                int r, t, i;
                char c1, c2;
                std::istringstream in(measure_frontier);
                if (!(in >> r >> c1 >> t >> c2 >> i) || c1 != ',' || c2 != ',')
                    throw std::invalid_argument("frontier expects r,t,i");
                WindowFamily w = make_frontier(r, t, i);
                value = measure_n > 0 ? mu(lift(w, measure_n), p) : mu(w, p);
                source = "frontier " + measure_frontier;
            } else if (!measure_named.empty()) {
                if (measure_n == 0 || measure_t == 0)
                    throw std::invalid_argument("named example needs --t and --n");
                value = mu(make_named_example(named_example_from_string(measure_named), measure_t,
                                              measure_n),
                           p);
                source = measure_named;
            } else {
                throw std::invalid_argument("one of --family/--frontier/--named is required");
            }
            json doc;
            doc["family"] = source;
            doc["p"] = rational_to_string(p);
            doc["mu"] = scalar_to_string(value);
            doc["mu_decimal_50"] = scalar_to_decimal(value, 50);
            doc["decimals_note"] = kDecimalsNote;
            write_output(doc.dump(2), out_path);
            return kExitOk;
        }

        if (*cmd_curve) {
            std::string csv = ratio_curve_csv(curve_min, curve_max);
            if (format == "json") {
                json rows = json::array();
                std::istringstream in(csv);
                std::string line;
                std::getline(in, line);  // header
                while (std::getline(in, line)) {
                    std::istringstream row(line);
                    std::string t, p0, ratio, excess;
                    std::getline(row, t, ',');
                    std::getline(row, p0, ',');
                    std::getline(row, ratio, ',');
                    std::getline(row, excess, ',');
                    rows.push_back({{"t", std::stol(t)},
                                    {"p0_decimal_50", p0},
                                    {"ratio_at_p0_decimal_50", ratio},
                                    {"ratio_minus_half_decimal_50", excess}});
                }
                json doc;
                doc["rows"] = std::move(rows);
                doc["decimals_note"] = kDecimalsNote;
                write_output(doc.dump(2), out_path);
            } else {
                write_output(csv, out_path);
            }
            return kExitOk;
        }

        if (*cmd_shift) {
            ExplicitFamily fam = load_family(shift_family);
            if (shift_fix) {
                auto [result, trace] = shift_fixpoint(fam, shift_policy_from_string(shift_policy));
                if (!trace_out.empty()) {
                    std::ofstream out(trace_out);
                    out << trace.to_jsonl();
                }
                write_output(family_to_text(result), out_path);
            } else {
                if (shift_i == 0 || shift_j == 0)
                    throw std::invalid_argument("shift needs --i and --j or --fixpoint");
                write_output(family_to_text(shift_once(fam, shift_i, shift_j)), out_path);
            }
            return kExitOk;
        }

        if (*cmd_closure) {
            ExplicitFamily fam = load_family(closure_family);
            write_output(family_to_text(maximal_closure(fam, closure_r, closure_t)), out_path);
            return kExitOk;
        }

        if (*cmd_decompose) {
            ExplicitFamily fam = load_family(decompose_family);
            HParam hp = h_param(fam, decompose_t);
            json doc;
            doc["t"] = decompose_t;
            doc["h"] = hp.h;
            if (hp.h == 0) {
                doc["note"] = "family lies inside the t-star";
                write_output(doc.dump(2), out_path);
                return kExitOk;
            }
            HoleDecomposition dec = hole_families(fam, decompose_t, hp.h);
            doc["s"] = dec.s;
            doc["witness_H0"] = mask_to_string(dec.witness_H0);
            doc["trace_ground"] = dec.trace_ground;
            json holes = json::array();
            for (int i = 0; i <= dec.h; ++i) {
                json hole;
                hole["i"] = i;
                hole["size"] = dec.holes[i].size();
                if (decompose_full) hole["family"] = family_to_text(dec.holes[i]);
                holes.push_back(std::move(hole));
            }
            doc["traces"] = std::move(holes);
            write_output(doc.dump(2), out_path);
            return kExitOk;
        }

        if (*cmd_mifr) {
            AuditReport rep = audit_mifr(load_family(mifr_family), mifr_t);
            write_output(render_report(rep, format), out_path);
            return report_exit_code(rep);
        }

        if (*cmd_cases) {
            auto colon = cases_range.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("t-range expects a:b");
            long lo = std::stol(cases_range.substr(0, colon));
            long hi = std::stol(cases_range.substr(colon + 1));
            AuditReport rep = audit_case_lemmas(lo, hi, case_lemma_from_string(cases_case),
                                                precision_cap, cases_jobs);
            write_output(render_report(rep, format), out_path);
            return report_exit_code(rep);
        }

        if (*cmd_enum) {
            std::vector<IsoClass> classes =
                enumerate_maximal_cached(enum_n, enum_r, enum_t, default_cache_dir(enum_cache),
                                         enum_cap);
            json doc;
            doc["n"] = enum_n;
            doc["r"] = enum_r;
            doc["t"] = enum_t;
            doc["class_count"] = classes.size();
            json rows = json::array();
            for (const IsoClass& cls : classes) {
                json row;
                row["orbit_size"] = cls.orbit_size;
                json gens = json::array();
                for (SubsetMask g : cls.representative_generators)
                    gens.push_back(mask_to_string(g));
                row["minimal_members"] = std::move(gens);
                row["family"] = family_to_text(cls.canonical);
                rows.push_back(std::move(row));
            }
            doc["classes"] = std::move(rows);
            write_output(doc.dump(2), out_path);
            return kExitOk;
        }

        if (*cmd_recog) {
            AuditReport rep = verify_recognition(recog_n, recog_r, recog_t, recog_i,
                                                 default_policy_set(recog_policies));
            write_output(render_report(rep, format), out_path);
            return report_exit_code(rep);
        }

        if (*cmd_stab) {
            std::vector<Rational> grid;
            std::istringstream in(stab_grid);
            std::string tok;
            while (std::getline(in, tok, ',')) grid.push_back(parse_probability(tok));
            if (grid.empty()) throw std::invalid_argument("empty p grid");
            AuditReport rep = verify_stability(stab_n, stab_t, grid);
            write_output(render_report(rep, format), out_path);
            return report_exit_code(rep);
        }

        if (*cmd_corpus) {
            std::vector<CorpusEntry> entries = generate_mifr_corpus(corpus_count, corpus_seed);
            write_output(corpus_to_text(entries, corpus_seed), out_path);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerdictFailed;
    }
    return kExitUsage;
}
