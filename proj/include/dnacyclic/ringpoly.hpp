#pragma once

#include <limits>
#include <vector>

#include "dnacyclic/gf2poly.hpp"
#include "dnacyclic/ring.hpp"
#include "dnacyclic/word.hpp"

namespace dnacyclic {

// Polynomial over R, dense ascending coefficients, trimmed: the zero
// polynomial is the empty sequence.
class PolyR {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    PolyR() = default;
    explicit PolyR(std::vector<RingElement> coeffs) : c_(std::move(coeffs)) { trim(); }

    // Lossless embedding of an F2 polynomial (coefficients 0/1).
    static PolyR from_f2(const PolyF2& f);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    RingElement coeff(size_t i) const { return i < c_.size() ? c_[i] : RingElement(0); }
    const std::vector<RingElement>& coeffs() const { return c_; }

    friend PolyR operator+(const PolyR& a, const PolyR& b);
    friend PolyR operator*(const PolyR& a, const PolyR& b);
    friend PolyR operator*(RingElement a, const PolyR& f);
    friend bool operator==(const PolyR&, const PolyR&) = default;

    // Coefficientwise reduction modulo 1+u: each coefficient maps to the
    // parity of its four bits.  A surjective ring morphism onto F2[x].
    PolyF2 bar() const;

    // x^deg(f) * f(1/x): coefficient sequence reversed, re-trimmed.
    PolyR reciprocal() const;

private:
    void trim();
    std::vector<RingElement> c_;
};

// Fold a polynomial into R[x]/(x^n - 1): coefficient of x^k lands on
// coordinate k mod n.
RingWord word_from_poly(const PolyR& f, size_t n);
PolyR poly_from_word(const RingWord& w);

}  // namespace dnacyclic
