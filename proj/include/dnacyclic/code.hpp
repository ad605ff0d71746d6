#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dnacyclic/gf2basis.hpp"
#include "dnacyclic/gf2poly.hpp"
#include "dnacyclic/word.hpp"

namespace dnacyclic {

inline constexpr uint64_t kDefaultWordCap = 1u << 20;

// Cyclic code of length n over R given by a divisor chain
// f3 | f2 | f1 | f0 | x^n - 1, generating the ideal
// <f0, (1+u)f1, (1+u)^2 f2, (1+u)^3 f3> of R[x]/(x^n - 1).  An absent
// layer is stored as f_i = x^n - 1 and contributes nothing.  Membership
// and size work through a reduced F2 row basis of width 4n.
class CyclicCodeR {
public:
    // Validates n >= 1, divisibility into x^n - 1, and the chain.
    static CyclicCodeR from_chain(unsigned n, PolyF2 f0, PolyF2 f1, PolyF2 f2, PolyF2 f3);

    unsigned length() const { return n_; }
    unsigned log2_size() const { return basis_.rank(); }
    const PolyF2& chain_poly(unsigned t) const { return f_[t]; }
    const Gf2Basis& basis() const { return basis_; }

    bool contains(const RingWord& w) const;

    // Yields all 2^log2_size codewords in a deterministic order; throws
    // CapExceededError when the count would exceed word_cap.
    void enumerate(const std::function<void(const RingWord&)>& fn,
                   uint64_t word_cap = kDefaultWordCap) const;
    std::vector<RingWord> codewords(uint64_t word_cap = kDefaultWordCap) const;

    // Reverse-complement closure.  rc is the affine map w -> reverse(w) + c
    // with c the all-(1+u+u^2+u^3) word, so the code is closed iff c is a
    // codeword and the reversal of every basis row is a codeword.
    bool is_reverse_complement() const;

    // Sufficient condition: all chain polynomials self-reciprocal and the
    // word (1+u+u^2+u^3) * (1 + x + ... + x^(n-1)) in the code.
    bool rc_sufficient() const;

    std::array<bool, 4> chain_self_reciprocal() const;

    // Codewords that are multiples of 1+u^2, computed by definition as the
    // intersection with (1+u^2) * R[x]/(x^n - 1).  The single-generator
    // candidate <(1+u^2) f3> is reported alongside; the two can differ, and
    // the definition-based basis is the authoritative result.
    struct MultipleSubcode {
        Gf2Basis basis;             // the definition-based intersection
        Gf2Basis candidate;         // span of <(1+u^2) f3>
        bool matches_candidate = false;
    };
    MultipleSubcode subcode_one_plus_u2() const;

    // "f0=...,f1=...,f2=...,f3=..." with ascending bit strings; stable id.
    std::string chain_string() const;

private:
    CyclicCodeR(unsigned n, std::array<PolyF2, 4> f);

    unsigned n_ = 0;
    std::array<PolyF2, 4> f_;
    Gf2Basis basis_{1};
};

// One code per monotone 4-tuple of divisors of x^n - 1 (f3 | f2 | f1 | f0),
// in a deterministic order.  With dedupe, only the first code per distinct
// row basis is kept.
void enumerate_chains(unsigned n, const std::function<void(const CyclicCodeR&)>& fn,
                      bool dedupe = false);
std::vector<CyclicCodeR> chain_codes(unsigned n, bool dedupe = false);

// Brute-force ideal survey: closes every single element and every pair of
// elements of R[x]/(x^n - 1) under addition, shift, and multiplication by
// u, and dedupes the resulting subspaces.  A pair ideal is the sum of the
// two single-generator ideals, so pairs are merged at the basis level.
// Throws CapExceededError when 16^n exceeds generator_cap.
struct IdealRecord {
    Gf2Basis basis;
    RingWord generator;                  // first generator found
    std::optional<RingWord> cogenerator; // second generator for pair ideals
    bool from_pair = false;              // not reachable from any single element
};

struct IdealSurvey {
    unsigned n = 0;
    std::vector<IdealRecord> ideals;  // distinct, discovery order
};

IdealSurvey brute_force_ideals(unsigned n, uint64_t generator_cap = 4096);

// All words in the span of a width-4n basis, in deterministic order.
// Throws CapExceededError when 2^rank would exceed word_cap.
std::vector<RingWord> basis_words(const Gf2Basis& basis, unsigned n,
                                  uint64_t word_cap = kDefaultWordCap);

}  // namespace dnacyclic
