#include "dnacyclic/ringpoly.hpp"

#include <bit>

namespace dnacyclic {

void PolyR::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyR PolyR::from_f2(const PolyF2& f) {
    std::vector<RingElement> c;
    if (!f.is_zero()) {
        const unsigned d = static_cast<unsigned>(f.degree());
        c.resize(d + 1);
        for (unsigned i = 0; i <= d; ++i)
            if (f.coeff(i)) c[i] = r_one;
    }
    return PolyR(std::move(c));
}

PolyR operator+(const PolyR& a, const PolyR& b) {
    std::vector<RingElement> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolyR(std::move(c));
}

PolyR operator*(const PolyR& a, const PolyR& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RingElement> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyR(std::move(c));
}

PolyR operator*(RingElement a, const PolyR& f) {
    std::vector<RingElement> c(f.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a * f.c_[i];
    return PolyR(std::move(c));
}

PolyF2 PolyR::bar() const {
    PolyF2 out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (std::popcount(c_[i].bits()) & 1) out.set_coeff(static_cast<unsigned>(i), true);
    return out;
}

PolyR PolyR::reciprocal() const {
    std::vector<RingElement> c(c_.rbegin(), c_.rend());
    return PolyR(std::move(c));
}

RingWord word_from_poly(const PolyR& f, size_t n) {
    RingWord w(n);
    const auto& c = f.coeffs();
    for (size_t k = 0; k < c.size(); ++k) w[k % n] += c[k];
    return w;
}

PolyR poly_from_word(const RingWord& w) { return PolyR(w.c); }

}  // namespace dnacyclic
