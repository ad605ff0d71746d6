#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/ring.hpp"

namespace dnacyclic {

// Length-n vector over R, coordinate 0 first.  Interchangeable with a
// residue of R[x]/(x^n - 1) via coordinate i <-> coefficient of x^i.
struct RingWord {
    std::vector<RingElement> c;

    RingWord() = default;
    explicit RingWord(size_t n) : c(n) {}

    size_t size() const { return c.size(); }
    RingElement& operator[](size_t i) { return c[i]; }
    RingElement operator[](size_t i) const { return c[i]; }

    friend bool operator==(const RingWord&, const RingWord&) = default;
};

// Cyclic right shift by one: coordinate i moves to i+1 mod n (multiply by x).
RingWord word_shift(const RingWord& w);

// Index reversal: coordinate i becomes coordinate n-1-i.
RingWord word_reverse(const RingWord& w);

// Coordinatewise complement (add 1+u+u^2+u^3 everywhere).
RingWord word_complement(const RingWord& w);

// Reversal followed by complement.
RingWord word_rc(const RingWord& w);

RingWord operator+(const RingWord& a, const RingWord& b);  // equal lengths
RingWord operator*(RingElement a, const RingWord& w);

// Comma-separated coordinates, hex form: "1,0,F".
std::string word_string(const RingWord& w);
RingWord parse_word(std::string_view text);

// Packing into 4n-bit rows: coordinate i occupies bits 4i..4i+3.
std::vector<uint64_t> pack_word(const RingWord& w);
RingWord unpack_word(const std::vector<uint64_t>& row, size_t n);

}  // namespace dnacyclic
