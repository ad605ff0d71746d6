#include "dnacyclic/dna.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dnacyclic/ring.hpp"

namespace dnacyclic {

namespace {

char complement_letter(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default: throw std::invalid_argument(std::string("invalid DNA letter: '") + c + "'");
    }
}

}  // namespace

bool is_valid_strand(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c == 'A' || c == 'C' || c == 'G' || c == 'T'; });
}

std::string parse_strand(std::string_view text) {
    bool flip = false;
    if (text.rfind("5'-", 0) == 0 && text.size() >= 6 && text.substr(text.size() - 3) == "-3'") {
        text = text.substr(3, text.size() - 6);
    } else if (text.rfind("3'-", 0) == 0 && text.size() >= 6 &&
               text.substr(text.size() - 3) == "-5'") {
        text = text.substr(3, text.size() - 6);
        flip = true;
    }
    std::string s(text);
    if (!is_valid_strand(s))
        throw std::invalid_argument("strand letters must be in {A,C,G,T}: '" + s + "'");
    if (flip) std::reverse(s.begin(), s.end());
    return s;
}

std::string strand_reverse(std::string_view s) { return {s.rbegin(), s.rend()}; }

std::string strand_complement(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out += complement_letter(c);
    return out;
}

std::string strand_wcc(std::string_view s) { return strand_complement(strand_reverse(s)); }

std::string phi_word(const RingWord& w) {
    std::string s;
    s.reserve(2 * w.size());
    for (size_t i = 0; i < w.size(); ++i) s += phi(w[i]);
    return s;
}

RingWord phi_word_inv(std::string_view strand) {
    if (strand.size() % 2 != 0)
        throw std::invalid_argument("strand length must be even to invert the pair map");
    RingWord w(strand.size() / 2);
    for (size_t i = 0; i < w.size(); ++i) w[i] = phi_inv(strand.substr(2 * i, 2));
    return w;
}

RingWord wcc_preimage(const RingWord& w) { return r_u_squared * word_rc(w); }

bool is_quasi_cyclic_2(const std::vector<std::string>& strands) {
    if (strands.empty()) return true;
    const size_t len = strands.front().size();
    if (len % 2 != 0) throw std::invalid_argument("strands must have even length");
    if (len == 0) return true;
    for (const auto& s : strands)
        if (s.size() != len) throw std::invalid_argument("strands must all have the same length");

    const std::set<std::string> pool(strands.begin(), strands.end());
    for (const auto& s : pool) {
        const std::string shifted = s.substr(len - 2) + s.substr(0, len - 2);
        if (!pool.count(shifted)) return false;
    }
    return true;
}

double gc_content(std::string_view s) {
    if (s.empty()) return 0.0;
    size_t gc = 0;
    for (char c : s)
        if (c == 'G' || c == 'C') ++gc;
    return static_cast<double>(gc) / static_cast<double>(s.size());
}

std::string fasta_export(const std::vector<std::pair<std::string, std::string>>& records) {
    std::set<std::string> labels;
    std::string out;
    for (const auto& [label, seq] : records) {
        if (label.empty()) throw std::invalid_argument("FASTA label must be nonempty");
        if (label.find_first_of(" \t\n>") != std::string::npos)
            throw std::invalid_argument("FASTA label contains forbidden characters: '" + label +
                                        "'");
        if (!labels.insert(label).second)
            throw std::invalid_argument("duplicate FASTA label: '" + label + "'");
        if (!is_valid_strand(seq))
            throw std::invalid_argument("FASTA sequence has letters outside {A,C,G,T}");
        out += '>';
        out += label;
        out += '\n';
        out += seq;
        out += '\n';
    }
    return out;
}

}  // namespace dnacyclic
