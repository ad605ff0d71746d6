#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "dnacyclic/dna.hpp"
#include "dnacyclic/ring.hpp"
#include "dnacyclic/word.hpp"

using namespace dnacyclic;

TEST_CASE("strand parsing and orientation") {
    CHECK(parse_strand("ACGT") == "ACGT");
    CHECK(parse_strand("5'-ACGT-3'") == "ACGT");
    // A 3'->5' input is stored reversed so everything reads 5'->3'.
    CHECK(parse_strand("3'-CATG-5'") == "GTAC");
    CHECK(parse_strand("") == "");
    CHECK_THROWS_AS(parse_strand("ACGU"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strand("acgt"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strand("5'-AC"), std::invalid_argument);
    CHECK(is_valid_strand("GATTACA"));
    CHECK_FALSE(is_valid_strand("GATTACA "));
}

TEST_CASE("reverse, complement, and their composition") {
    CHECK(strand_reverse("AGATTCA") == "ACTTAGA");
    CHECK(strand_complement("AGATTCA") == "TCTAAGT");
    CHECK(strand_wcc("AGATTCA") == "TGAATCT");
    CHECK(strand_wcc(strand_wcc("AGATTCA")) == "AGATTCA");
    CHECK(strand_wcc("") == "");
    // GC-only strands are closed under complement.
    CHECK(strand_complement("GGCC") == "CCGG");
}

TEST_CASE("word image concatenates dinucleotides") {
    RingWord w(3);
    w[0] = r_zero;           // GG
    w[1] = r_one_plus_u2;    // GC
    w[2] = r_all_ones;       // CC
    CHECK(phi_word(w) == "GGGCCC");
    CHECK(phi_word_inv("GGGCCC") == w);
    CHECK(phi_word(RingWord()) == "");
    CHECK_THROWS_AS(phi_word_inv("GGG"), std::invalid_argument);
    CHECK_THROWS_AS(phi_word_inv("GX"), std::invalid_argument);
}

TEST_CASE("word image is injective on short words") {
    std::set<std::string> images;
    RingWord w(2);
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            w[0] = RingElement(a);
            w[1] = RingElement(b);
            images.insert(phi_word(w));
        }
    CHECK(images.size() == 256);
}

TEST_CASE("shifting a word shifts its strand image by two letters") {
    RingWord w(3);
    w[0] = RingElement(1);
    w[1] = RingElement(11);
    w[2] = RingElement(14);
    const std::string s = phi_word(w);
    const std::string shifted = phi_word(word_shift(w));
    CHECK(shifted == s.substr(s.size() - 2) + s.substr(0, s.size() - 2));
}

TEST_CASE("wcc_preimage is u^2 times the reverse complement") {
    RingWord w(2);
    w[0] = RingElement(1);
    w[1] = RingElement(0);
    const RingWord pre = wcc_preimage(w);
    CHECK(word_string(pre) == "F,B");
    CHECK(phi_word(pre) == "CCAC");
    // Involutive on words.
    CHECK(wcc_preimage(pre) == w);
}

TEST_CASE("pair-level strand WCC agrees with u^2 * complement except on four pairs") {
    // The exceptions are exactly the palindromic-complement pairs
    // GC, AA, TT, CG (encodings 5, 6, 9, 10).
    std::set<unsigned> mismatch;
    for (unsigned a = 0; a < 16; ++a) {
        const RingElement x(a);
        const std::string got(phi(x.complement().pair_reverse()));
        if (got != strand_wcc(phi(x))) mismatch.insert(a);
    }
    CHECK(mismatch == std::set<unsigned>{5, 6, 9, 10});
}

TEST_CASE("quasi-cyclic closure of strand sets") {
    CHECK(is_quasi_cyclic_2({}));
    CHECK(is_quasi_cyclic_2({"ACGT", "GTAC"}));
    CHECK_FALSE(is_quasi_cyclic_2({"ACGT"}));
    CHECK(is_quasi_cyclic_2({"AAAA"}));
    CHECK(is_quasi_cyclic_2({"GGGGGGGGGGGG", "CCCCCCCCCCCC"}));
    CHECK_THROWS_AS(is_quasi_cyclic_2({"ACGT", "AC"}), std::invalid_argument);
    CHECK_THROWS_AS(is_quasi_cyclic_2({"ACG"}), std::invalid_argument);
}

TEST_CASE("gc content") {
    CHECK(gc_content("GGCC") == doctest::Approx(1.0));
    CHECK(gc_content("ACGT") == doctest::Approx(0.5));
    CHECK(gc_content("AATT") == doctest::Approx(0.0));
    CHECK(gc_content("") == doctest::Approx(0.0));
}

TEST_CASE("fasta export") {
    const std::string text = fasta_export({{"w0", "GGCC"}, {"w1", "ACGT"}});
    CHECK(text == ">w0\nGGCC\n>w1\nACGT\n");
    CHECK(fasta_export({}) == "");
    CHECK_THROWS_AS(fasta_export({{"", "GGCC"}}), std::invalid_argument);
    CHECK_THROWS_AS(fasta_export({{"a", "GGCC"}, {"a", "ACGT"}}), std::invalid_argument);
    CHECK_THROWS_AS(fasta_export({{"a b", "GGCC"}}), std::invalid_argument);
    CHECK_THROWS_AS(fasta_export({{"w0", "GGXC"}}), std::invalid_argument);
}
