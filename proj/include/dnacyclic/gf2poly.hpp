#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnacyclic {

// Polynomial over F2, packed 64 coefficients per word: bit i of word j is
// the coefficient of x^(64j+i).  Always trimmed (no trailing zero words),
// so the zero polynomial is the empty vector.  Nonzero polynomials are
// monic automatically.
class PolyF2 {
public:
    // Degree reported for the zero polynomial.  A sentinel that never
    // participates in arithmetic; callers must branch on is_zero() first.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    PolyF2() = default;

    static PolyF2 zero() { return {}; }
    static PolyF2 one() { return x_pow(0); }
    static PolyF2 x_pow(unsigned k);
    // x^n + 1, i.e. x^n - 1 over F2.
    static PolyF2 x_pow_n_minus_1(unsigned n);

    bool is_zero() const { return w_.empty(); }
    int degree() const;
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);

    friend PolyF2 operator+(const PolyF2& a, const PolyF2& b);
    friend PolyF2 operator*(const PolyF2& a, const PolyF2& b);
    // Quotient and remainder; g must be nonzero.
    friend std::pair<PolyF2, PolyF2> divmod(const PolyF2& f, const PolyF2& g);
    friend PolyF2 operator%(const PolyF2& f, const PolyF2& g);
    friend PolyF2 operator/(const PolyF2& f, const PolyF2& g);

    bool divides(const PolyF2& f) const;  // *this | f

    // x^deg(f) * f(1/x): the coefficient vector reversed, re-trimmed.  A
    // zero constant term therefore drops the degree.  reciprocal(0) = 0.
    PolyF2 reciprocal() const;
    bool is_self_reciprocal() const { return *this == reciprocal(); }

    // Ascending bit string, constant term first: 1+x+x^3 -> "1101".
    std::string bit_string() const;
    // Human form, ascending: "1+x+x^3"; "0" for zero.
    std::string human_string() const;

    friend bool operator==(const PolyF2&, const PolyF2&) = default;
    // Total order: by degree, then ascending coefficient bits.  Gives the
    // deterministic factor ordering used everywhere.
    friend bool operator<(const PolyF2& a, const PolyF2& b);

private:
    void trim();
    std::vector<uint64_t> w_;
};

PolyF2 gcd(PolyF2 a, PolyF2 b);

// Accepts a bit string ("1101" = 1+x+x^3, constant term first) or the
// human form "1+x+x^3" (terms 0, 1, x, x^k; duplicates cancel).
PolyF2 parse_poly_f2(std::string_view text);

// 1 + x + ... + x^(n-1), the quotient (x^n - 1)/(x - 1).
PolyF2 ideal_polynomial(unsigned n);

// x^n - 1 = (x^m - 1)^(2^s) over F2 with n = m * 2^s, m odd; the factors
// are the distinct irreducible divisors of x^m - 1, each with multiplicity
// 2^s.  Factors sorted by (degree, ascending bits).
struct Factorization {
    unsigned n = 0;
    unsigned m = 0;  // odd part
    unsigned s = 0;  // 2-adic exponent
    std::vector<std::pair<PolyF2, unsigned>> factors;
};

Factorization factor_xn_minus_1(unsigned n);

// All monic divisors of x^n - 1 (products over factor-exponent vectors),
// sorted by (degree, ascending bits).  Count is prod(2^s + 1) per factor.
std::vector<PolyF2> divisors_of_xn_minus_1(unsigned n);

// Orbits of {0..m-1} under doubling mod m, each listed in doubling order
// from its smallest member; cosets sorted by smallest member.  m odd.
std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned m);

// Smallest i >= 1 with 2^i = -1 (mod m), if any.  m odd.  When a witness
// exists every cyclotomic coset is closed under negation and every
// irreducible factor of x^m - 1 is self-reciprocal.
std::optional<unsigned> negacyclic_witness(unsigned m);

}  // namespace dnacyclic
