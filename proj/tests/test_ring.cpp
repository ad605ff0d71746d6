#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "dnacyclic/ring.hpp"

using namespace dnacyclic;

TEST_CASE("addition is coefficientwise xor") {
    CHECK(r_one + r_u == RingElement(3));
    CHECK(r_all_ones + r_all_ones == r_zero);
    for (unsigned x = 0; x < 16; ++x) {
        CHECK(RingElement(x) + r_zero == RingElement(x));
        CHECK((RingElement(x) + RingElement(x)).is_zero());
    }
}

TEST_CASE("multiplication by u rotates the coefficient nibble") {
    CHECK(r_u * r_u == r_u_squared);
    CHECK(r_u * r_u_squared == RingElement(8));        // u^3
    CHECK(r_u * RingElement(8) == r_one);              // u^4 = 1
    CHECK(r_u * r_all_ones == r_all_ones);
}

TEST_CASE("powers of 1+u collapse to zero at the fourth step") {
    const RingElement v = r_one_plus_u;
    CHECK(v * v == r_one_plus_u2);                     // (1+u)^2 = 1+u^2
    CHECK(v * v * v == r_all_ones);                    // (1+u)^3 = 1+u+u^2+u^3
    CHECK((v * v * v * v).is_zero());                  // (1+u)^4 = 0
}

TEST_CASE("ring axioms hold exhaustively") {
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            const RingElement x(a), y(b);
            CHECK(x * y == y * x);
            for (unsigned c = 0; c < 16; ++c) {
                const RingElement z(c);
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
}

TEST_CASE("units are exactly the odd-weight nibbles") {
    for (unsigned a = 0; a < 16; ++a) {
        const bool odd = __builtin_popcount(a) % 2 == 1;
        CHECK(RingElement(a).is_unit() == odd);
    }
    CHECK(r_u.is_unit());
    CHECK_FALSE(r_one_plus_u.is_unit());
}

TEST_CASE("valuation against the chain of ideals") {
    const int expected[16] = {4, 0, 0, 1, 0, 2, 1, 0, 0, 1, 2, 0, 1, 0, 0, 3};
    for (unsigned a = 0; a < 16; ++a) CHECK(RingElement(a).valuation() == expected[a]);
}

TEST_CASE("principal ideals of 1+u powers have sizes 16,8,4,2,1") {
    RingElement p = r_one;
    for (unsigned t = 0; t <= 4; ++t) {
        std::set<unsigned> image;
        for (unsigned a = 0; a < 16; ++a) image.insert((p * RingElement(a)).bits());
        CHECK(image.size() == (16u >> t));
        p = p * r_one_plus_u;
    }
}

TEST_CASE("complement adds the all-ones element and is involutive") {
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        CHECK(x.complement() == x + r_all_ones);
        CHECK(x.complement().complement() == x);
    }
}

TEST_CASE("pair_reverse multiplies by u^2 and is involutive") {
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        CHECK(x.pair_reverse() == r_u_squared * x);
        CHECK(x.pair_reverse().pair_reverse() == x);
    }
}

TEST_CASE("dinucleotide table is the fixed bijection") {
    CHECK(phi(r_zero) == "GG");
    CHECK(phi(r_one) == "GT");
    CHECK(phi(r_u) == "AG");
    CHECK(phi(r_one_plus_u) == "AT");
    CHECK(phi(r_u_squared) == "TG");
    CHECK(phi(r_one_plus_u2) == "GC");
    CHECK(phi(RingElement(6)) == "AA");
    CHECK(phi(RingElement(7)) == "CT");
    CHECK(phi(RingElement(8)) == "GA");
    CHECK(phi(RingElement(9)) == "TT");
    CHECK(phi(RingElement(10)) == "CG");
    CHECK(phi(RingElement(11)) == "AC");
    CHECK(phi(RingElement(12)) == "TA");
    CHECK(phi(RingElement(13)) == "TC");
    CHECK(phi(RingElement(14)) == "CA");
    CHECK(phi(r_all_ones) == "CC");

    std::set<std::string_view> images;
    for (unsigned a = 0; a < 16; ++a) {
        images.insert(phi(RingElement(a)));
        CHECK(phi_inv(phi(RingElement(a))) == RingElement(a));
    }
    CHECK(images.size() == 16);
}

TEST_CASE("phi_inv rejects anything but the sixteen pairs") {
    CHECK_THROWS_AS(phi_inv("G"), std::invalid_argument);
    CHECK_THROWS_AS(phi_inv("GGA"), std::invalid_argument);
    CHECK_THROWS_AS(phi_inv("GX"), std::invalid_argument);
    CHECK_THROWS_AS(phi_inv("gg"), std::invalid_argument);
}

TEST_CASE("pair-level complement is the letterwise Watson-Crick complement") {
    const auto base_complement = [](char c) {
        switch (c) {
            case 'A': return 'T';
            case 'T': return 'A';
            case 'C': return 'G';
            default: return 'C';
        }
    };
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        const std::string_view p = phi(x);
        const std::string want{base_complement(p[0]), base_complement(p[1])};
        CHECK(phi(x.complement()) == want);
    }
}

TEST_CASE("pair-level u^2 multiplication reverses most, but not all, pairs") {
    // u^2 * x swaps the two letters for 12 of the 16 elements.  On the
    // exceptional set {GC, AA, TT, CG} = {5, 6, 9, 10} it yields the
    // letterwise complement of the swap instead (the dinucleotide WCC).
    static constexpr std::string_view expected[16] = {
        "GG", "TG", "GA", "TA", "GT", "GC", "TT", "TC",
        "AG", "AA", "CG", "CA", "AT", "CT", "AC", "CC",
    };
    const std::set<unsigned> exceptional{5, 6, 9, 10};
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        const std::string_view p = phi(x);
        CHECK(phi(x.pair_reverse()) == expected[a]);
        const std::string swapped{p[1], p[0]};
        if (exceptional.count(a))
            CHECK(phi(x.pair_reverse()) != swapped);
        else
            CHECK(phi(x.pair_reverse()) == swapped);
    }
}

TEST_CASE("gc pairs are exactly the multiples of 1+u^2") {
    // <1+u^2> = {0, 5, 10, 15}, the four pairs over {G, C}.
    std::set<unsigned> ideal;
    for (unsigned a = 0; a < 16; ++a) ideal.insert((r_one_plus_u2 * RingElement(a)).bits());
    CHECK(ideal == std::set<unsigned>{0, 5, 10, 15});
    for (unsigned b : ideal) {
        const std::string_view p = phi(RingElement(b));
        CHECK(p.find('A') == std::string_view::npos);
        CHECK(p.find('T') == std::string_view::npos);
    }
}

TEST_CASE("text round trips") {
    CHECK(r_zero.poly_string() == "0");
    CHECK(r_one_plus_u2.poly_string() == "1+u^2");
    CHECK(r_all_ones.poly_string() == "1+u+u^2+u^3");
    CHECK(RingElement(10).hex() == 'A');

    CHECK(parse_ring_element("a") == RingElement(10));
    CHECK(parse_ring_element("F") == r_all_ones);
    CHECK(parse_ring_element("u") == r_u);
    CHECK(parse_ring_element("1+u^2") == r_one_plus_u2);
    CHECK(parse_ring_element("u^3+u+1") == RingElement(11));
    CHECK(parse_ring_element("u+u") == r_zero);
    CHECK(parse_ring_element("0") == r_zero);
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        CHECK(parse_ring_element(x.poly_string()) == x);
        CHECK(parse_ring_element(std::string(1, x.hex())) == x);
    }
    CHECK_THROWS_AS(parse_ring_element(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_element("u^4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_element("x"), std::invalid_argument);
}
