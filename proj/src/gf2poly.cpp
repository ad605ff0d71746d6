#include "dnacyclic/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dnacyclic {

namespace {

// Loose bit vectors used by the factorizer's linear algebra.
using BitRow = std::vector<uint64_t>;

BitRow make_row(unsigned width) { return BitRow((width + 63) / 64, 0); }

bool row_get(const BitRow& r, unsigned i) { return (r[i / 64] >> (i % 64)) & 1u; }

void row_flip(BitRow& r, unsigned i) { r[i / 64] ^= 1ULL << (i % 64); }

void row_xor(BitRow& a, const BitRow& b) {
    for (size_t j = 0; j < b.size(); ++j) a[j] ^= b[j];
}

}  // namespace

void PolyF2::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

PolyF2 PolyF2::x_pow(unsigned k) {
    PolyF2 p;
    p.w_.assign(k / 64 + 1, 0);
    p.w_[k / 64] = 1ULL << (k % 64);
    return p;
}

PolyF2 PolyF2::x_pow_n_minus_1(unsigned n) {
    if (n == 0) return zero();  // x^0 - 1
    PolyF2 p = x_pow(n);
    p.w_[0] ^= 1ULL;
    p.trim();  // n = 0 aside, never trims; kept for safety
    return p;
}

int PolyF2::degree() const {
    if (w_.empty()) return kZeroDegree;
    return static_cast<int>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool PolyF2::coeff(unsigned i) const {
    const size_t j = i / 64;
    return j < w_.size() && ((w_[j] >> (i % 64)) & 1u);
}

void PolyF2::set_coeff(unsigned i, bool v) {
    const size_t j = i / 64;
    if (j >= w_.size()) {
        if (!v) return;
        w_.resize(j + 1, 0);
    }
    if (v)
        w_[j] |= 1ULL << (i % 64);
    else
        w_[j] &= ~(1ULL << (i % 64));
    trim();
}

PolyF2 operator+(const PolyF2& a, const PolyF2& b) {
    PolyF2 r = a;
    if (r.w_.size() < b.w_.size()) r.w_.resize(b.w_.size(), 0);
    for (size_t j = 0; j < b.w_.size(); ++j) r.w_[j] ^= b.w_[j];
    r.trim();
    return r;
}

namespace {

// dst ^= src << shift, with dst pre-sized to hold the result.
void xor_shifted(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, unsigned shift) {
    const unsigned wo = shift / 64, bo = shift % 64;
    for (size_t j = 0; j < src.size(); ++j) {
        dst[j + wo] ^= src[j] << bo;
        if (bo) dst[j + wo + 1] ^= src[j] >> (64 - bo);
    }
}

}  // namespace

PolyF2 operator*(const PolyF2& a, const PolyF2& b) {
    if (a.is_zero() || b.is_zero()) return PolyF2::zero();
    PolyF2 r;
    r.w_.assign(a.w_.size() + b.w_.size() + 1, 0);
    for (size_t j = 0; j < a.w_.size(); ++j) {
        uint64_t bits = a.w_[j];
        while (bits) {
            const unsigned i = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            xor_shifted(r.w_, b.w_, static_cast<unsigned>(64 * j) + i);
        }
    }
    r.trim();
    return r;
}

std::pair<PolyF2, PolyF2> divmod(const PolyF2& f, const PolyF2& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    PolyF2 q, r = f;
    const int dg = g.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        const unsigned k = static_cast<unsigned>(r.degree() - dg);
        q.set_coeff(k, true);
        if (r.w_.size() < g.w_.size() + k / 64 + 1) r.w_.resize(g.w_.size() + k / 64 + 1, 0);
        xor_shifted(r.w_, g.w_, k);
        r.trim();
    }
    return {q, r};
}

PolyF2 operator%(const PolyF2& f, const PolyF2& g) { return divmod(f, g).second; }
PolyF2 operator/(const PolyF2& f, const PolyF2& g) { return divmod(f, g).first; }

bool PolyF2::divides(const PolyF2& f) const {
    if (is_zero()) return f.is_zero();
    return (f % *this).is_zero();
}

PolyF2 gcd(PolyF2 a, PolyF2 b) {
    while (!b.is_zero()) {
        PolyF2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyF2 PolyF2::reciprocal() const {
    if (is_zero()) return zero();
    const unsigned d = static_cast<unsigned>(degree());
    PolyF2 r;
    for (unsigned i = 0; i <= d; ++i)
        if (coeff(i)) r.set_coeff(d - i, true);
    return r;
}

std::string PolyF2::bit_string() const {
    if (is_zero()) return "0";
    const int d = degree();
    std::string s(static_cast<size_t>(d) + 1, '0');
    for (int i = 0; i <= d; ++i)
        if (coeff(static_cast<unsigned>(i))) s[static_cast<size_t>(i)] = '1';
    return s;
}

std::string PolyF2::human_string() const {
    if (is_zero()) return "0";
    std::string s;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (!coeff(static_cast<unsigned>(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

bool operator<(const PolyF2& a, const PolyF2& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return a.is_zero() || (!b.is_zero() && da < db);
    const size_t n = std::max(a.w_.size(), b.w_.size());
    for (size_t j = 0; j < n; ++j) {
        const uint64_t wa = j < a.w_.size() ? a.w_[j] : 0;
        const uint64_t wb = j < b.w_.size() ? b.w_[j] : 0;
        const uint64_t diff = wa ^ wb;
        if (diff) {
            const unsigned k = static_cast<unsigned>(std::countr_zero(diff));
            // '0' sorts before '1' at the first differing position.
            return !((wa >> k) & 1u);
        }
    }
    return false;
}

PolyF2 parse_poly_f2(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    if (s.find_first_not_of("01") == std::string::npos) {
        PolyF2 p;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') p.set_coeff(static_cast<unsigned>(i), true);
        return p;
    }

    PolyF2 p;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find('+', pos);
        const std::string tok =
            s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok == "0") {
            // contributes nothing
        } else if (tok == "1") {
            p = p + PolyF2::one();
        } else if (tok == "x") {
            p = p + PolyF2::x_pow(1);
        } else if (tok.size() >= 3 && tok[0] == 'x' && tok[1] == '^' &&
                   tok.find_first_not_of("0123456789", 2) == std::string::npos) {
            p = p + PolyF2::x_pow(static_cast<unsigned>(std::stoul(tok.substr(2))));
        } else {
            throw std::invalid_argument("invalid polynomial term: '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return p;
}

PolyF2 ideal_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("ideal polynomial requires n >= 1");
    PolyF2 p;
    for (unsigned i = 0; i < n; ++i) p.set_coeff(i, true);
    return p;
}

namespace {

// Left nullspace basis of the d-by-d bit matrix given as rows: all v with
// sum_i v_i * row_i = 0.  Computed as the kernel of the transpose.
std::vector<BitRow> left_nullspace(const std::vector<BitRow>& rows, unsigned d) {
    std::vector<BitRow> a(d, make_row(d));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (row_get(rows[i], j)) row_flip(a[j], i);

    // Reduced row echelon form, tracking the pivot column of each row.
    std::vector<int> pivot_row_of_col(d, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < d && rank < d; ++col) {
        unsigned sel = rank;
        while (sel < d && !row_get(a[sel], col)) ++sel;
        if (sel == d) continue;
        std::swap(a[rank], a[sel]);
        for (unsigned r = 0; r < d; ++r)
            if (r != rank && row_get(a[r], col)) row_xor(a[r], a[rank]);
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<BitRow> basis;
    for (unsigned fc = 0; fc < d; ++fc) {
        if (pivot_row_of_col[fc] >= 0) continue;
        BitRow v = make_row(d);
        row_flip(v, fc);
        for (unsigned pc = 0; pc < d; ++pc) {
            const int r = pivot_row_of_col[pc];
            if (r >= 0 && row_get(a[static_cast<unsigned>(r)], fc)) row_flip(v, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp factorization of a squarefree f over F2 into irreducibles.
std::vector<PolyF2> berlekamp_squarefree(const PolyF2& f) {
    const int df = f.degree();
    if (df <= 0) return {};
    if (df == 1) return {f};
    const unsigned d = static_cast<unsigned>(df);

    // Q row i = coefficients of x^(2i) mod f; kernel of Q - I is the
    // Berlekamp subalgebra {v : v^2 = v mod f}.
    std::vector<BitRow> m(d, make_row(d));
    PolyF2 p = PolyF2::one();
    const PolyF2 xsq = PolyF2::x_pow(2) % f;
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j)
            if (p.coeff(j)) row_flip(m[i], j);
        row_flip(m[i], i);  // subtract the identity
        p = (p * xsq) % f;
    }

    const std::vector<BitRow> kernel = left_nullspace(m, d);
    const size_t target = kernel.size();  // number of irreducible factors

    std::vector<PolyF2> factors = {f};
    for (const BitRow& kv : kernel) {
        if (factors.size() == target) break;
        PolyF2 v;
        for (unsigned j = 0; j < d; ++j)
            if (row_get(kv, j)) v.set_coeff(j, true);
        if (v.degree() < 1) continue;  // constants split nothing

        std::vector<PolyF2> next;
        for (const PolyF2& g : factors) {
            if (g.degree() == 1) {
                next.push_back(g);
                continue;
            }
            const PolyF2 h = v % g;
            const PolyF2 g1 = gcd(g, h);
            const PolyF2 g2 = gcd(g, h + PolyF2::one());
            if (g1.degree() >= 1 && g2.degree() >= 1) {
                // g is squarefree, so g = g1 * g2 exactly.
                next.push_back(g1);
                next.push_back(g2);
            } else {
                next.push_back(g);
            }
        }
        factors = std::move(next);
    }

    PolyF2 check = PolyF2::one();
    for (const PolyF2& g : factors) check = check * g;
    if (!(check == f) || factors.size() != target)
        throw std::logic_error("factorization did not reconstruct its input");

    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace

Factorization factor_xn_minus_1(unsigned n) {
    if (n == 0) throw std::invalid_argument("factorization requires n >= 1");
    Factorization out;
    out.n = n;
    out.m = n;
    out.s = 0;
    while (out.m % 2 == 0) {
        out.m /= 2;
        ++out.s;
    }
    // x^m - 1 is squarefree for odd m (it is coprime to its derivative).
    const std::vector<PolyF2> irr = berlekamp_squarefree(PolyF2::x_pow_n_minus_1(out.m));
    const unsigned mult = 1u << out.s;
    for (const PolyF2& g : irr) out.factors.emplace_back(g, mult);
    return out;
}

std::vector<PolyF2> divisors_of_xn_minus_1(unsigned n) {
    const Factorization fac = factor_xn_minus_1(n);
    std::vector<PolyF2> divs = {PolyF2::one()};
    for (const auto& [g, mult] : fac.factors) {
        std::vector<PolyF2> grown;
        grown.reserve(divs.size() * (mult + 1));
        for (const PolyF2& d : divs) {
            PolyF2 acc = d;
            grown.push_back(acc);
            for (unsigned e = 1; e <= mult; ++e) {
                acc = acc * g;
                grown.push_back(acc);
            }
        }
        divs = std::move(grown);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned m) {
    if (m == 0 || m % 2 == 0) throw std::invalid_argument("cyclotomic cosets require odd m");
    std::vector<bool> seen(m, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned r = 0; r < m; ++r) {
        if (seen[r]) continue;
        std::vector<unsigned> orbit;
        unsigned c = r;
        do {
            orbit.push_back(c);
            seen[c] = true;
            c = (2 * c) % m;
        } while (c != r);
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

std::optional<unsigned> negacyclic_witness(unsigned m) {
    if (m == 0 || m % 2 == 0) throw std::invalid_argument("negacyclic condition requires odd m");
    const unsigned target = m - 1;  // -1 mod m; 0 when m = 1
    unsigned p = 1 % m;
    for (unsigned i = 1; i <= m; ++i) {
        p = (2 * p) % m;
        if (p == target) return i;
    }
    return std::nullopt;
}

}  // namespace dnacyclic
