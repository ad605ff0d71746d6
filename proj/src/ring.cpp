#include "dnacyclic/ring.hpp"

#include <stdexcept>

namespace dnacyclic {

namespace {

int base_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
    }
}

// Reverse lookup: 4*base_index(first) + base_index(second) -> encoding.
constexpr std::array<uint8_t, 16> make_pair_decode() {
    std::array<uint8_t, 16> dec{};
    constexpr auto idx = [](char c) {
        return c == 'A' ? 0 : c == 'C' ? 1 : c == 'G' ? 2 : 3;
    };
    for (unsigned x = 0; x < 16; ++x) {
        const char* p = kPairOf[x];
        dec[static_cast<unsigned>(4 * idx(p[0]) + idx(p[1]))] = static_cast<uint8_t>(x);
    }
    return dec;
}

constexpr std::array<uint8_t, 16> kPairDecode = make_pair_decode();

}  // namespace

std::string_view phi(RingElement x) { return kPairOf[x.bits()]; }

RingElement phi_inv(std::string_view pair) {
    if (pair.size() != 2)
        throw std::invalid_argument("dinucleotide must have exactly two letters: '" +
                                    std::string(pair) + "'");
    const int a = base_index(pair[0]);
    const int b = base_index(pair[1]);
    if (a < 0 || b < 0)
        throw std::invalid_argument("dinucleotide letters must be in {A,C,G,T}: '" +
                                    std::string(pair) + "'");
    return RingElement(kPairDecode[static_cast<unsigned>(4 * a + b)]);
}

std::string RingElement::poly_string() const {
    if (bits_ == 0) return "0";
    static constexpr const char* term[4] = {"1", "u", "u^2", "u^3"};
    std::string out;
    for (unsigned i = 0; i < 4; ++i) {
        if (!((bits_ >> i) & 1u)) continue;
        if (!out.empty()) out += '+';
        out += term[i];
    }
    return out;
}

RingElement parse_ring_element(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw std::invalid_argument("empty ring element");

    if (s.size() == 1) {
        const char c = s[0];
        if (c >= '0' && c <= '9') return RingElement(static_cast<unsigned>(c - '0'));
        if (c >= 'a' && c <= 'f') return RingElement(static_cast<unsigned>(c - 'a' + 10));
        if (c >= 'A' && c <= 'F') return RingElement(static_cast<unsigned>(c - 'A' + 10));
        if (c == 'u') return r_u;
        throw std::invalid_argument("invalid ring element: '" + s + "'");
    }

    // Polynomial form: '+'-separated terms from {0, 1, u, u^k}.
    unsigned bits = 0;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find('+', pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == "0") {
            // contributes nothing
        } else if (tok == "1") {
            bits ^= 1u;
        } else if (tok == "u") {
            bits ^= 2u;
        } else if (tok.size() == 3 && tok[0] == 'u' && tok[1] == '^' && tok[2] >= '0' &&
                   tok[2] <= '3') {
            bits ^= 1u << (tok[2] - '0');
        } else {
            throw std::invalid_argument("invalid ring element term: '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return RingElement(bits);
}

}  // namespace dnacyclic
