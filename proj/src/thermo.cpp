#include "dnacyclic/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dnacyclic/dna.hpp"
#include "dnacyclic/errors.hpp"

namespace dnacyclic {

namespace {

int base_index_checked(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: throw std::invalid_argument(std::string("invalid DNA letter: '") + c + "'");
    }
}

// Per-class dH (kcal/mol) and dS (cal/(mol*K)) for the standard
// nearest-neighbor stacked-pair data, keyed by one class member.
struct NnRow {
    const char* pair;
    double dH;
    double dS;
};

constexpr NnRow kBuiltinRows[10] = {
    {"AA", -7.9, -22.2},   // AA/TT
    {"AC", -8.4, -22.4},   // AC/GT
    {"AG", -7.8, -21.0},   // AG/CT
    {"AT", -7.2, -20.4},   // AT (self-paired)
    {"CA", -8.5, -22.7},   // CA/TG
    {"CC", -8.0, -19.9},   // CC/GG
    {"CG", -10.6, -27.2},  // CG (self-paired)
    {"GA", -8.2, -22.2},   // GA/TC
    {"GC", -9.8, -24.4},   // GC (self-paired)
    {"TA", -7.2, -21.3},   // TA (self-paired)
};

}  // namespace

unsigned dinucleotide_index(char a, char b) {
    return static_cast<unsigned>(4 * base_index_checked(a) + base_index_checked(b));
}

std::string dinucleotide_name(unsigned index) {
    static constexpr char kBases[] = "ACGT";
    if (index >= 16) throw std::invalid_argument("dinucleotide index out of range");
    return std::string{kBases[index / 4], kBases[index % 4]};
}

StemWeightTable build_weight_table(const std::map<std::string, double>& dH,
                                   const std::map<std::string, double>& dS,
                                   double temperature) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("temperature must be positive kelvin, got " +
                                    std::to_string(temperature));

    StemWeightTable tbl;
    tbl.temperature = temperature;
    std::array<bool, 16> have{};

    for (const auto& [pair, h] : dH) {
        const auto it = dS.find(pair);
        if (it == dS.end())
            throw std::invalid_argument("missing pair in dS map: '" + pair + "'");
        if (pair.size() != 2)
            throw std::invalid_argument("dinucleotide key must have two letters: '" + pair + "'");
        const double w = std::fabs(h - temperature * it->second / 1000.0);
        // Close under reverse-complement symmetry of the dinucleotide.
        const unsigned i = dinucleotide_index(pair[0], pair[1]);
        const std::string mate = strand_wcc(pair);
        const unsigned j = dinucleotide_index(mate[0], mate[1]);
        for (unsigned k : {i, j}) {
            if (have[k] && std::fabs(tbl.weight[k] - w) > 1e-9)
                throw std::invalid_argument("conflicting weights for dinucleotide " +
                                            dinucleotide_name(k));
            tbl.weight[k] = w;
            have[k] = true;
        }
    }
    for (const auto& [pair, v] : dS) {
        (void)v;
        if (!dH.count(pair))
            throw std::invalid_argument("missing pair in dH map: '" + pair + "'");
    }
    for (unsigned k = 0; k < 16; ++k)
        if (!have[k])
            throw std::invalid_argument("missing pair: no weight for dinucleotide " +
                                        dinucleotide_name(k));
    return tbl;
}

StemWeightTable builtin_weight_table(double temperature) {
    std::map<std::string, double> dH, dS;
    for (const NnRow& row : kBuiltinRows) {
        dH[row.pair] = row.dH;
        dS[row.pair] = row.dS;
    }
    StemWeightTable tbl = build_weight_table(dH, dS, temperature);
    tbl.provenance = StemWeightTable::Provenance::builtin;
    return tbl;
}

StemWeightTable load_weight_table_csv(std::istream& in, double temperature) {
    std::map<std::string, double> dH, dS;
    std::string line;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            const size_t a = field.find_first_not_of(" \t");
            const size_t b = field.find_last_not_of(" \t");
            fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
        }
        if (fields.size() != 3)
            throw std::invalid_argument("weight CSV rows need 3 fields: '" + line + "'");
        const std::string& pair = fields[0];
        if (header_allowed && !(pair.size() == 2 && is_valid_strand(pair))) {
            header_allowed = false;  // tolerated header line
            continue;
        }
        header_allowed = false;
        if (dH.count(pair)) throw std::invalid_argument("duplicate CSV row for '" + pair + "'");
        try {
            dH[pair] = std::stod(fields[1]);
            dS[pair] = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in weight CSV row: '" + line + "'");
        }
    }
    StemWeightTable tbl = build_weight_table(dH, dS, temperature);
    tbl.provenance = StemWeightTable::Provenance::user_file;
    return tbl;
}

StemWeightTable load_weight_table_csv_file(const std::string& path, double temperature) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weight table: " + path);
    return load_weight_table_csv(in, temperature);
}

double stem_similarity(std::string_view x, std::string_view y, const StemWeightTable& tbl) {
    if (x.size() != y.size()) throw std::invalid_argument("strand length mismatch");
    if (x.empty()) throw std::invalid_argument("stem similarity requires length >= 1");
    double s = 0.0;
    for (size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == y[i] && x[i + 1] == y[i + 1]) s += tbl(x[i], x[i + 1]);
    return s;
}

double stem_distance(std::string_view x, std::string_view y, const StemWeightTable& tbl) {
    return stem_similarity(x, x, tbl) - stem_similarity(x, y, tbl);
}

double stem_distance_ring(const RingWord& x, const RingWord& y, const StemWeightTable& tbl) {
    if (x.size() != y.size()) throw std::invalid_argument("word length mismatch");
    return stem_distance(phi_word(x), phi_word(y), tbl);
}

double hybridization_energy(std::string_view x, std::string_view y, const StemWeightTable& tbl) {
    if (x.size() != y.size()) throw std::invalid_argument("strand length mismatch");
    return stem_similarity(x, strand_wcc(y), tbl);
}

StemReport analyze_words(const std::vector<RingWord>& words, const StemWeightTable& tbl,
                         std::string code_id) {
    StemReport rep;
    rep.code_id = std::move(code_id);
    rep.n = words.empty() ? 0 : static_cast<unsigned>(words.front().size());
    rep.word_count = words.size();

    const size_t count = words.size();
    std::vector<std::string> strands(count);
    std::vector<std::string> wcc_strands(count);
    std::vector<double> self_sim(count);
    for (size_t i = 0; i < count; ++i) {
        strands[i] = phi_word(words[i]);
        wcc_strands[i] = strand_wcc(strands[i]);
        self_sim[i] = stem_similarity(strands[i], strands[i], tbl);
        if (word_rc(words[i]) == words[i]) ++rep.rc_fixed_points;
    }
    if (count == 0) return rep;

    rep.s = *std::max_element(self_sim.begin(), self_sim.end());

    // Ordered-pair scan.  D(i,j) = self[i] - S(i,j) with S symmetric, so
    // one S evaluation per unordered pair feeds both directions; E is
    // asymmetric and scanned fully, diagonal included.
    struct Local {
        double min_d = std::numeric_limits<double>::infinity();
        double max_e = -std::numeric_limits<double>::infinity();
    };
    const auto scan = [&](size_t begin, size_t end, Local& loc) {
        for (size_t i = begin; i < end; ++i) {
            for (size_t j = i; j < count; ++j) {
                if (j > i) {
                    const double sij = stem_similarity(strands[i], strands[j], tbl);
                    loc.min_d = std::min(loc.min_d, self_sim[i] - sij);
                    loc.min_d = std::min(loc.min_d, self_sim[j] - sij);
                    loc.max_e = std::max(loc.max_e, stem_similarity(strands[i], wcc_strands[j], tbl));
                    loc.max_e = std::max(loc.max_e, stem_similarity(strands[j], wcc_strands[i], tbl));
                } else {
                    loc.max_e = std::max(loc.max_e, stem_similarity(strands[i], wcc_strands[i], tbl));
                }
            }
        }
    };

    Local total;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (count >= 512 && hw > 1) {
        std::vector<Local> locals(hw);
        std::vector<std::thread> threads;
        const size_t chunk = (count + hw - 1) / hw;
        for (unsigned t = 0; t < hw; ++t) {
            const size_t b = std::min(count, t * chunk);
            const size_t e = std::min(count, (t + 1) * chunk);
            threads.emplace_back([&, b, e, t] { scan(b, e, locals[t]); });
        }
        for (auto& th : threads) th.join();
        for (const Local& loc : locals) {
            total.min_d = std::min(total.min_d, loc.min_d);
            total.max_e = std::max(total.max_e, loc.max_e);
        }
    } else {
        scan(0, count, total);
    }

    rep.max_pair_energy = total.max_e;
    if (count >= 2) {
        rep.d = total.min_d;
        rep.energy_bound = rep.s - *rep.d;
        rep.energy_bound_holds = rep.max_pair_energy <= *rep.energy_bound + 1e-9;
    }
    return rep;
}

StemReport analyze_code(const CyclicCodeR& code, const StemWeightTable& tbl, uint64_t word_cap) {
    StemReport rep = analyze_words(code.codewords(word_cap), tbl, code.chain_string());
    rep.n = code.length();
    rep.log2_size = code.log2_size();
    return rep;
}

}  // namespace dnacyclic
