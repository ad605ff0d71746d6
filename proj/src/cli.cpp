#include "dnacyclic/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dnacyclic/code.hpp"
#include "dnacyclic/dna.hpp"
#include "dnacyclic/errors.hpp"
#include "dnacyclic/gf2poly.hpp"
#include "dnacyclic/ring.hpp"
#include "dnacyclic/ringpoly.hpp"
#include "dnacyclic/thermo.hpp"

namespace dnacyclic {

namespace {

using nlohmann::ordered_json;

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

uint64_t default_word_cap() {
    if (const char* env = std::getenv("DNACODES_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultWordCap;
}

uint64_t binom_plus4_choose4(uint64_t mult) {
    // C(mult+4, 4), exact in 64 bits for any realistic multiplicity.
    const uint64_t a = mult + 1, b = mult + 2, c = mult + 3, d = mult + 4;
    return a * b / 2 * c / 3 * d / 4;
}

// ---------------------------------------------------------------- factor

int cmd_factor(unsigned n, const std::string& json_path, std::ostream& out) {
    const Factorization fac = factor_xn_minus_1(n);

    out << "n = " << n << " = " << fac.m << " * 2^" << fac.s << "\n";
    out << "x^" << n << "-1 =";
    for (const auto& [g, mult] : fac.factors) {
        out << " (" << g.human_string() << ")";
        if (mult > 1) out << "^" << mult;
    }
    out << "\n";
    out << "factors:\n";
    for (const auto& [g, mult] : fac.factors)
        out << "  " << g.human_string() << "  degree " << g.degree() << "  multiplicity " << mult
            << "  self-reciprocal " << (g.is_self_reciprocal() ? "yes" : "no") << "\n";

    const auto cosets = cyclotomic_cosets(fac.m);
    out << "cyclotomic cosets mod " << fac.m << ":";
    for (const auto& coset : cosets) {
        out << " {";
        for (size_t i = 0; i < coset.size(); ++i) out << (i ? "," : "") << coset[i];
        out << "}";
    }
    out << "\n";

    const auto witness = negacyclic_witness(fac.m);
    out << "negacyclic condition 2^i = -1 (mod " << fac.m << "): ";
    if (witness)
        out << "yes, i = " << *witness << "\n";
    else
        out << "no\n";

    if (!json_path.empty()) {
        ordered_json j;
        j["n"] = n;
        j["m"] = fac.m;
        j["s"] = fac.s;
        j["factors"] = ordered_json::array();
        for (const auto& [g, mult] : fac.factors) {
            ordered_json f;
            f["bits"] = g.bit_string();
            f["poly"] = g.human_string();
            f["degree"] = g.degree();
            f["multiplicity"] = mult;
            f["self_reciprocal"] = g.is_self_reciprocal();
            j["factors"].push_back(f);
        }
        j["cosets"] = cosets;
        j["negacyclic"] = witness.has_value();
        if (witness)
            j["negacyclic_witness"] = *witness;
        else
            j["negacyclic_witness"] = nullptr;
        std::ofstream f(json_path);
        if (!f) throw std::invalid_argument("cannot write JSON file: " + json_path);
        f << j.dump(2) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- enumerate

struct EnumerateOpts {
    unsigned n = 0;
    bool rc_only = false;
    bool rc_sufficient_only = false;
    bool dedupe = false;
    int min_log2 = -1;
    int max_log2 = -1;
    double min_distance = -1.0;
    bool has_min_distance = false;
    double temperature = 310.0;
    std::string weights_path;
    std::string json_path;
    uint64_t cap = kDefaultWordCap;
};

ordered_json descriptor_json(const CyclicCodeR& code) {
    ordered_json j;
    j["n"] = code.length();
    j["f0"] = code.chain_poly(0).bit_string();
    j["f1"] = code.chain_poly(1).bit_string();
    j["f2"] = code.chain_poly(2).bit_string();
    j["f3"] = code.chain_poly(3).bit_string();
    j["log2_size"] = code.log2_size();
    j["rc"] = code.is_reverse_complement();
    const auto sr = code.chain_self_reciprocal();
    j["self_reciprocal"] = std::vector<bool>(sr.begin(), sr.end());
    return j;
}

int cmd_enumerate(const EnumerateOpts& opt, std::ostream& out, std::ostream& err) {
    const Factorization fac = factor_xn_minus_1(opt.n);
    uint64_t chains = 1;
    for (const auto& [g, mult] : fac.factors) {
        (void)g;
        const uint64_t per = binom_plus4_choose4(mult);
        if (chains > opt.cap / per + 1)
            throw CapExceededError("chain enumeration at n = " + std::to_string(opt.n) +
                                   " exceeds cap " + std::to_string(opt.cap));
        chains *= per;
    }
    if (chains > opt.cap)
        throw CapExceededError("chain enumeration at n = " + std::to_string(opt.n) + " yields " +
                               std::to_string(chains) + " codes, exceeding cap " +
                               std::to_string(opt.cap));

    std::optional<StemWeightTable> tbl;
    if (opt.has_min_distance)
        tbl = opt.weights_path.empty()
                  ? builtin_weight_table(opt.temperature)
                  : load_weight_table_csv_file(opt.weights_path, opt.temperature);

    std::ofstream file;
    if (!opt.json_path.empty()) {
        file.open(opt.json_path);
        if (!file) throw std::invalid_argument("cannot write JSON file: " + opt.json_path);
    }
    std::ostream& sink = opt.json_path.empty() ? out : file;

    enumerate_chains(
        opt.n,
        [&](const CyclicCodeR& code) {
            if (opt.rc_sufficient_only && !code.rc_sufficient()) return;
            if (opt.rc_only && !code.is_reverse_complement()) return;
            const int k = static_cast<int>(code.log2_size());
            if (opt.min_log2 >= 0 && k < opt.min_log2) return;
            if (opt.max_log2 >= 0 && k > opt.max_log2) return;
            if (opt.has_min_distance) {
                std::vector<RingWord> words;
                try {
                    words = code.codewords(opt.cap);
                } catch (const CapExceededError&) {
                    err << "warning: skipping " << code.chain_string()
                        << " (too large to evaluate the distance filter under cap "
                        << opt.cap << ")\n";
                    return;
                }
                const StemReport rep = analyze_words(words, *tbl, code.chain_string());
                if (!rep.d) return;  // no distinct pair, no distance
                if (*rep.d < opt.min_distance - 1e-9) return;
            }
            sink << descriptor_json(code).dump() << "\n";
        },
        opt.dedupe);
    return 0;
}

// --------------------------------------------------------------- analyze

struct AnalyzeOpts {
    unsigned n = 0;
    std::string chain;
    double temperature = 310.0;
    std::string weights_path;
    std::string fasta_path;
    std::string json_path;
    uint64_t cap = kDefaultWordCap;
};

std::array<PolyF2, 4> parse_chain(const std::string& text) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t next = text.find(',', pos);
        parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("--chain needs exactly four comma-separated polynomials "
                                    "f0,f1,f2,f3");
    return {parse_poly_f2(parts[0]), parse_poly_f2(parts[1]), parse_poly_f2(parts[2]),
            parse_poly_f2(parts[3])};
}

std::string subcode_fasta_path(const std::string& path) {
    const std::string suffix = ".fasta";
    if (path.size() > suffix.size() &&
        path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return path.substr(0, path.size() - suffix.size()) + ".subcode.fasta";
    return path + ".subcode";
}

int cmd_analyze(const AnalyzeOpts& opt, std::ostream& out) {
    const auto chain = parse_chain(opt.chain);
    const CyclicCodeR code =
        CyclicCodeR::from_chain(opt.n, chain[0], chain[1], chain[2], chain[3]);
    if (code.log2_size() == 0)
        throw std::invalid_argument(
            "degenerate code: only the zero codeword, no distance is defined");

    const StemWeightTable tbl = opt.weights_path.empty()
                                    ? builtin_weight_table(opt.temperature)
                                    : load_weight_table_csv_file(opt.weights_path,
                                                                 opt.temperature);

    const std::vector<RingWord> words = code.codewords(opt.cap);
    StemReport rep = analyze_words(words, tbl, code.chain_string());
    rep.n = code.length();
    rep.log2_size = code.log2_size();

    std::vector<std::string> strands;
    strands.reserve(words.size());
    for (const auto& w : words) strands.push_back(phi_word(w));

    const bool rc = code.is_reverse_complement();
    const bool qc2 = is_quasi_cyclic_2(strands);

    const auto sub = code.subcode_one_plus_u2();
    const std::vector<RingWord> sub_words = basis_words(sub.basis, opt.n, opt.cap);
    const StemReport sub_rep = analyze_words(sub_words, tbl, "subcode");
    bool sub_gc_only = true;
    std::vector<std::string> sub_strands;
    sub_strands.reserve(sub_words.size());
    for (const auto& w : sub_words) {
        sub_strands.push_back(phi_word(w));
        if (gc_content(sub_strands.back()) < 1.0) sub_gc_only = false;
    }

    std::string j = "{\n";
    j += "  \"code\": \"" + rep.code_id + "\",\n";
    j += "  \"n\": " + std::to_string(rep.n) + ",\n";
    j += "  \"log2_size\": " + std::to_string(rep.log2_size) + ",\n";
    j += "  \"word_count\": " + std::to_string(rep.word_count) + ",\n";
    j += "  \"temperature\": " + fmt4(tbl.temperature) + ",\n";
    j += "  \"s\": " + fmt4(rep.s) + ",\n";
    j += "  \"d\": " + (rep.d ? fmt4(*rep.d) : "null") + ",\n";
    j += "  \"energy_bound\": " + (rep.energy_bound ? fmt4(*rep.energy_bound) : "null") + ",\n";
    j += "  \"rc_fixed_points\": " + std::to_string(rep.rc_fixed_points) + ",\n";
    j += "  \"rc\": " + std::string(rc ? "true" : "false") + ",\n";
    j += "  \"quasi_cyclic_2\": " + std::string(qc2 ? "true" : "false") + ",\n";
    j += "  \"max_pair_energy\": " + fmt4(rep.max_pair_energy) + ",\n";
    j += "  \"energy_bound_holds\": " + std::string(rep.energy_bound_holds ? "true" : "false") +
         ",\n";
    j += "  \"subcode\": {\n";
    j += "    \"log2_size\": " + std::to_string(sub.basis.rank()) + ",\n";
    j += "    \"matches_generator_formula\": " +
         std::string(sub.matches_candidate ? "true" : "false") + ",\n";
    j += "    \"d\": " + (sub_rep.d ? fmt4(*sub_rep.d) : "null") + ",\n";
    j += "    \"gc_only\": " + std::string(sub_gc_only ? "true" : "false") + "\n";
    j += "  }\n";
    j += "}";

    out << j << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream f(opt.json_path);
        if (!f) throw std::invalid_argument("cannot write JSON file: " + opt.json_path);
        f << j << "\n";
    }

    if (!opt.fasta_path.empty()) {
        std::vector<std::pair<std::string, std::string>> recs;
        for (size_t i = 0; i < strands.size(); ++i)
            recs.emplace_back("w" + std::to_string(i), strands[i]);
        std::ofstream f(opt.fasta_path);
        if (!f) throw std::invalid_argument("cannot write FASTA file: " + opt.fasta_path);
        f << fasta_export(recs);

        std::vector<std::pair<std::string, std::string>> srecs;
        for (size_t i = 0; i < sub_strands.size(); ++i)
            srecs.emplace_back("s" + std::to_string(i), sub_strands[i]);
        const std::string spath = subcode_fasta_path(opt.fasta_path);
        std::ofstream sf(spath);
        if (!sf) throw std::invalid_argument("cannot write FASTA file: " + spath);
        sf << fasta_export(srecs);
    }
    return 0;
}

// ------------------------------------------------------------- selfcheck

struct CheckResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> details;
};

CheckResult check_ideal_chain_sizes() {
    CheckResult r{"ideal chain |<(1+u)^t>| = 16,8,4,2,1", true, {}};
    RingElement p = r_one;
    for (unsigned t = 0; t <= 4; ++t) {
        std::vector<bool> seen(16, false);
        unsigned count = 0;
        for (unsigned x = 0; x < 16; ++x) {
            const RingElement m = p * RingElement(x);
            if (!seen[m.bits()]) {
                seen[m.bits()] = true;
                ++count;
            }
        }
        if (count != (16u >> t)) {
            r.ok = false;
            r.details.push_back("|<(1+u)^" + std::to_string(t) + ">| = " + std::to_string(count));
        }
        p = p * r_one_plus_u;
    }
    return r;
}

CheckResult check_ideal_count_n1() {
    CheckResult r{"brute-force ideal count at n = 1 is 5", true, {}};
    const IdealSurvey survey = brute_force_ideals(1);
    if (survey.ideals.size() != 5) {
        r.ok = false;
        r.details.push_back("found " + std::to_string(survey.ideals.size()) + " ideals");
    }
    return r;
}

CheckResult check_chain_coverage() {
    CheckResult r{"every brute-forced ideal (n <= 3) is a divisor-chain code", true, {}};
    for (unsigned n = 1; n <= 3; ++n) {
        std::set<std::string> chain_keys;
        enumerate_chains(n, [&](const CyclicCodeR& c) { chain_keys.insert(c.basis().key()); });
        const IdealSurvey survey = brute_force_ideals(n);
        unsigned missing = 0;
        for (const IdealRecord& rec : survey.ideals) {
            if (chain_keys.count(rec.basis.key())) continue;
            ++missing;
            if (r.details.size() < 12) {
                std::string line = "n=" + std::to_string(n) + ": ideal <" +
                                   word_string(rec.generator);
                if (rec.cogenerator) line += "; " + word_string(*rec.cogenerator);
                line += "> (2^" + std::to_string(rec.basis.rank()) +
                        " words) is not generated by any chain";
                r.details.push_back(line);
            }
        }
        if (missing) {
            r.ok = false;
            r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(missing) +
                                " of " + std::to_string(survey.ideals.size()) +
                                " ideals uncovered");
        }
    }
    return r;
}

CheckResult check_dg_reconstruction() {
    CheckResult r{"weight table reproduces the printed dG column (tol 0.05)", true, {}};
    struct Row {
        const char* pair;
        double dH, dS, dG;
    };
    static constexpr Row rows[10] = {
        {"AA", -7.9, -22.2, -1.02}, {"AC", -8.4, -22.4, -1.46}, {"AG", -7.8, -21.0, -1.29},
        {"AT", -7.2, -20.4, -0.88}, {"CA", -8.5, -22.7, -1.46}, {"CC", -8.0, -19.9, -1.83},
        {"CG", -10.6, -27.2, -2.17}, {"GA", -8.2, -22.2, -1.32}, {"GC", -9.8, -24.4, -2.24},
        {"TA", -7.2, -21.3, -0.60},
    };
    for (const Row& row : rows) {
        const double rebuilt = row.dH - 310.0 * row.dS / 1000.0;
        if (std::fabs(rebuilt - row.dG) > 0.05) {
            r.ok = false;
            r.details.push_back(std::string(row.pair) + ": rebuilt " + fmt4(rebuilt) +
                                " vs printed " + fmt4(row.dG));
        }
    }
    return r;
}

CheckResult check_pair_wcc_intertwining() {
    CheckResult r{"pair map turns u^2 * complement into dinucleotide WCC (16 cases)", true, {}};
    for (unsigned x = 0; x < 16; ++x) {
        const RingElement e(x);
        const std::string got(phi(e.complement().pair_reverse()));
        const std::string want = strand_wcc(phi(e));
        if (got != want) {
            r.ok = false;
            r.details.push_back("element " + std::string(1, e.hex()) + " (" +
                                std::string(phi(e)) + "): u^2*complement maps to " + got +
                                ", strand WCC is " + want);
        }
    }
    return r;
}

int cmd_selfcheck(std::ostream& out) {
    const std::vector<CheckResult> results = {
        check_ideal_chain_sizes(),   check_ideal_count_n1(),          check_chain_coverage(),
        check_dg_reconstruction(),   check_pair_wcc_intertwining(),
    };
    unsigned passed = 0;
    for (const CheckResult& r : results) {
        out << (r.ok ? "ok   " : "FAIL ") << r.name << "\n";
        for (const std::string& d : r.details) out << "       " << d << "\n";
        if (r.ok) ++passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 3;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclic DNA code toolkit over F2[u]/(u^4-1)", "dnacodes"};
    app.require_subcommand(1);

    const uint64_t cap0 = default_word_cap();

    // factor
    unsigned factor_n = 0;
    std::string factor_json;
    CLI::App* factor = app.add_subcommand(
        "factor", "factor x^n-1 over F2; report cosets and the negacyclic condition");
    factor->add_option("--n", factor_n, "code length (>= 1)")->required();
    factor->add_option("--json", factor_json, "also write a JSON report to this path");

    // enumerate
    EnumerateOpts eo;
    eo.cap = cap0;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "stream divisor-chain codes as JSONL descriptors");
    enumerate->add_option("--n", eo.n, "code length (>= 1)")->required();
    enumerate->add_flag("--rc-only", eo.rc_only,
                        "keep only reverse-complement closed codes (definition check)");
    enumerate->add_flag("--rc-sufficient", eo.rc_sufficient_only,
                        "keep only codes passing the self-reciprocal sufficient condition");
    enumerate->add_flag("--dedupe", eo.dedupe, "emit one code per distinct row basis");
    enumerate->add_option("--min-log2", eo.min_log2, "keep codes with log2(size) >= this");
    enumerate->add_option("--max-log2", eo.max_log2, "keep codes with log2(size) <= this");
    enumerate
        ->add_option("--min-distance", eo.min_distance,
                     "keep codes with stem distance >= this (enumerates words; codes over "
                     "the cap are skipped with a warning)")
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--temp", eo.temperature, "temperature in kelvin")
        ->capture_default_str();
    enumerate->add_option("--weights", eo.weights_path,
                          "CSV weight table (dinucleotide,dH,dS) replacing the builtin data");
    enumerate->add_option("--json", eo.json_path, "write JSONL here instead of stdout");
    enumerate->add_option("--cap", eo.cap, "enumeration cap (codes and codewords)")
        ->capture_default_str();

    // analyze
    AnalyzeOpts ao;
    ao.cap = cap0;
    CLI::App* analyze =
        app.add_subcommand("analyze", "stem-distance report for one divisor-chain code");
    analyze->add_option("--n", ao.n, "code length (>= 1)")->required();
    analyze
        ->add_option("--chain", ao.chain,
                     "f0,f1,f2,f3 as ascending bit strings (e.g. 1000001,1000001,1000001,111)")
        ->required();
    analyze->add_option("--temp", ao.temperature, "temperature in kelvin")->capture_default_str();
    analyze->add_option("--weights", ao.weights_path,
                        "CSV weight table (dinucleotide,dH,dS) replacing the builtin data");
    analyze->add_option("--fasta", ao.fasta_path,
                        "write the strand image here and the subcode image alongside");
    analyze->add_option("--json", ao.json_path, "also write the report JSON to this path");
    analyze->add_option("--cap", ao.cap, "codeword enumeration cap")->capture_default_str();

    // selfcheck
    CLI::App* selfcheck =
        app.add_subcommand("selfcheck", "run the built-in oracle suite; nonzero exit on failure");

    std::vector<const char*> argv;
    argv.push_back("dnacodes");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    eo.has_min_distance = enumerate->count("--min-distance") > 0;

    try {
        if (factor->parsed()) return cmd_factor(factor_n, factor_json, out);
        if (enumerate->parsed()) return cmd_enumerate(eo, out, err);
        if (analyze->parsed()) return cmd_analyze(ao, out);
        if (selfcheck->parsed()) return cmd_selfcheck(out);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: choose a subcommand (factor, enumerate, analyze, selfcheck)\n";
    return 1;
}

}  // namespace dnacyclic
