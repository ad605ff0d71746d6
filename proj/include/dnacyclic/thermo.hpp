#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/code.hpp"
#include "dnacyclic/word.hpp"

namespace dnacyclic {

// Index of a dinucleotide in weight tables: 4*i(a) + i(b) with A,C,G,T
// numbered 0..3.  Throws on letters outside the alphabet.
unsigned dinucleotide_index(char a, char b);
std::string dinucleotide_name(unsigned index);

// Nonnegative stacked-pair weights |dH - T*dS/1000| for all 16
// dinucleotides, symmetric under reverse-complement of the dinucleotide.
// dH and dG are in kcal/mol, dS in cal/(mol*K), temperature in kelvin.
struct StemWeightTable {
    enum class Provenance { builtin, user_file };

    double temperature = 0.0;
    std::array<double, 16> weight{};
    Provenance provenance = Provenance::builtin;

    double operator()(char a, char b) const { return weight[dinucleotide_index(a, b)]; }
};

// Builds the closed 16-entry table from per-class dH/dS values.  Each map
// may name a class by either member (weight(ab) = weight(wcc(ab))); both
// maps must carry the same keys, every dinucleotide must be covered after
// closure, conflicting duplicates are rejected, and temperature must be
// positive.
StemWeightTable build_weight_table(const std::map<std::string, double>& dH,
                                   const std::map<std::string, double>& dS, double temperature);

// The ten stacked-pair classes of the standard nearest-neighbor data set.
StemWeightTable builtin_weight_table(double temperature = 310.0);

// CSV rows "dinucleotide,dH,dS"; blank lines, '#' comments, and one header
// line are tolerated.
StemWeightTable load_weight_table_csv(std::istream& in, double temperature);
StemWeightTable load_weight_table_csv_file(const std::string& path, double temperature);

// Sum of weight(x_i x_{i+1}) over positions where x and y agree on both
// letters of the stacked pair.  Equal lengths >= 1 required.
double stem_similarity(std::string_view x, std::string_view y, const StemWeightTable& tbl);

// S(x,x) - S(x,y): zero at x = y, nonnegative, generally asymmetric.
double stem_distance(std::string_view x, std::string_view y, const StemWeightTable& tbl);

// Distance between the strand images of two ring words.
double stem_distance_ring(const RingWord& x, const RingWord& y, const StemWeightTable& tbl);

// S(x, wcc(y)): duplex stability of x against y.
double hybridization_energy(std::string_view x, std::string_view y, const StemWeightTable& tbl);

struct StemReport {
    std::string code_id;
    unsigned n = 0;
    unsigned log2_size = 0;
    uint64_t word_count = 0;
    double s = 0.0;                      // max self-similarity over codeword strands
    std::optional<double> d;             // min distance over ordered distinct pairs
    std::optional<double> energy_bound;  // s - d, when d is defined
    uint64_t rc_fixed_points = 0;        // codewords equal to their reverse-complement
    double max_pair_energy = 0.0;        // max E over all ordered pairs (diagonal included)
    bool energy_bound_holds = false;     // max_pair_energy <= s - d
};

// Exhaustive pair scan over an explicit word list (the pair loop is
// partitioned across threads; min/max reductions keep it deterministic).
StemReport analyze_words(const std::vector<RingWord>& words, const StemWeightTable& tbl,
                         std::string code_id);

// Enumerates the code under the cap, then scans.
StemReport analyze_code(const CyclicCodeR& code, const StemWeightTable& tbl,
                        uint64_t word_cap = kDefaultWordCap);

}  // namespace dnacyclic
