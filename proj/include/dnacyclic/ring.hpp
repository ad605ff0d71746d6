#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace dnacyclic {

// Element of the commutative ring R = F2[u]/(u^4 - 1), stored as a nibble:
// bit i holds the coefficient of u^i.  Addition is XOR; multiplying by u
// rotates the nibble left by one.  R is a chain ring: its ideals are
// <(1+u)^t> for t = 0..4, of sizes 16, 8, 4, 2, 1.
class RingElement {
public:
    constexpr RingElement() = default;
    constexpr explicit RingElement(unsigned bits) : bits_(static_cast<uint8_t>(bits & 0xFu)) {}

    static constexpr RingElement from_coeffs(unsigned a0, unsigned a1, unsigned a2, unsigned a3) {
        return RingElement((a0 & 1u) | (a1 & 1u) << 1 | (a2 & 1u) << 2 | (a3 & 1u) << 3);
    }

    constexpr unsigned bits() const { return bits_; }
    constexpr bool coeff(unsigned i) const { return (bits_ >> (i & 3u)) & 1u; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr RingElement operator+(RingElement x, RingElement y) {
        return RingElement(x.bits_ ^ y.bits_);
    }
    friend constexpr RingElement operator*(RingElement x, RingElement y) {
        unsigned acc = 0;
        for (unsigned i = 0; i < 4; ++i)
            if ((x.bits_ >> i) & 1u) acc ^= rot4(y.bits_, i);
        return RingElement(acc);
    }
    RingElement& operator+=(RingElement y) { bits_ ^= y.bits_; return *this; }
    RingElement& operator*=(RingElement y) { *this = *this * y; return *this; }

    // x + (1 + u + u^2 + u^3); the image under the pair map is the
    // letterwise Watson-Crick complement.  Involutive.
    constexpr RingElement complement() const { return RingElement(bits_ ^ 0xFu); }

    // u^2 * x, i.e. rotate the nibble by two.  The image under the pair
    // map is the letter-swapped dinucleotide.  Involutive since u^4 = 1.
    constexpr RingElement pair_reverse() const { return RingElement(rot4(bits_, 2)); }

    // Largest t with x a multiple of (1+u)^t; 4 for x = 0 so the valuation
    // is total.  Powers of 1+u: 1, 1+u, 1+u^2, 1+u+u^2+u^3, 0.
    constexpr int valuation() const {
        if (bits_ == 0) return 4;
        for (int t = 3; t >= 1; --t) {
            const RingElement p = pow_one_plus_u(t);
            for (unsigned r = 0; r < 16; ++r)
                if ((p * RingElement(r)).bits_ == bits_) return t;
        }
        return 0;
    }

    constexpr bool is_unit() const { return valuation() == 0; }

    char hex() const { return "0123456789ABCDEF"[bits_]; }
    std::string poly_string() const;  // e.g. "1+u+u^3"; "0" for zero

    friend constexpr bool operator==(RingElement, RingElement) = default;
    friend constexpr auto operator<=>(RingElement, RingElement) = default;

private:
    static constexpr unsigned rot4(unsigned v, unsigned k) {
        k &= 3u;
        return ((v << k) | (v >> (4u - k))) & 0xFu;
    }
    static constexpr RingElement pow_one_plus_u(int t) {
        RingElement p(1);
        for (int i = 0; i < t; ++i) p = p * RingElement(3);
        return p;
    }

    uint8_t bits_ = 0;
};

inline constexpr RingElement r_zero{0};
inline constexpr RingElement r_one{1};
inline constexpr RingElement r_u{2};
inline constexpr RingElement r_one_plus_u{3};   // generator of the maximal ideal
inline constexpr RingElement r_u_squared{4};
inline constexpr RingElement r_one_plus_u2{5};  // (1+u)^2
inline constexpr RingElement r_all_ones{15};    // 1+u+u^2+u^3 = (1+u)^3

// Dinucleotide image of each ring element, indexed by the nibble encoding.
// Hard-coded correspondence table; not derivable from the ring structure.
inline constexpr std::array<const char*, 16> kPairOf = {
    "GG",  //  0 = 0
    "GT",  //  1 = 1
    "AG",  //  2 = u
    "AT",  //  3 = 1+u
    "TG",  //  4 = u^2
    "GC",  //  5 = 1+u^2
    "AA",  //  6 = u+u^2
    "CT",  //  7 = 1+u+u^2
    "GA",  //  8 = u^3
    "TT",  //  9 = 1+u^3
    "CG",  // 10 = u+u^3
    "AC",  // 11 = 1+u+u^3
    "TA",  // 12 = u^2+u^3
    "TC",  // 13 = 1+u^2+u^3
    "CA",  // 14 = u+u^2+u^3
    "CC",  // 15 = 1+u+u^2+u^3
};

// Two-letter dinucleotide for x.  The returned view points at static data.
std::string_view phi(RingElement x);

// Inverse of phi; rejects anything but the 16 two-letter pairs over ACGT.
RingElement phi_inv(std::string_view pair);

// Accepts a single hex digit (either case) or a polynomial string such as
// "1+u+u^3" (terms 0, 1, u, u^k; duplicates cancel).  Throws
// std::invalid_argument on anything else.
RingElement parse_ring_element(std::string_view text);

}  // namespace dnacyclic
