#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/word.hpp"

namespace dnacyclic {

// Strands are plain strings over {A,C,G,T}, stored 5'->3' left to right.

// Validates letters; accepts an optional orientation prefix.  "5'-...-3'"
// is stripped, "3'-...-5'" is normalized by reversal so that the stored
// strand always reads 5'->3'.
std::string parse_strand(std::string_view text);

bool is_valid_strand(std::string_view s);

std::string strand_reverse(std::string_view s);
std::string strand_complement(std::string_view s);  // A<->T, C<->G letterwise
std::string strand_wcc(std::string_view s);         // complement of the reverse

// Concatenation of the dinucleotide images of the coordinates: a strand of
// length 2n.  Injective.
std::string phi_word(const RingWord& w);

// Inverse on even-length strands; rejects odd lengths and bad letters.
RingWord phi_word_inv(std::string_view strand);

// u^2 * w^rc coordinatewise: reverse order, complement, multiply by u^2.
// Involutive.
RingWord wcc_preimage(const RingWord& w);

// True iff the set is closed under cyclic shift by two positions.  All
// strands must share one even length; the empty set is vacuously closed.
bool is_quasi_cyclic_2(const std::vector<std::string>& strands);

// Fraction of letters in {G, C}; 0 for the empty strand.
double gc_content(std::string_view s);

// Standard FASTA records ">label\nSEQ\n".  Labels must be unique and
// nonempty; sequences are emitted unwrapped, 5'->3'.
std::string fasta_export(const std::vector<std::pair<std::string, std::string>>& records);

}  // namespace dnacyclic
