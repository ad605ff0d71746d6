#include "dnacyclic/code.hpp"

#include <map>
#include <stdexcept>

#include "dnacyclic/errors.hpp"
#include "dnacyclic/ringpoly.hpp"

namespace dnacyclic {

namespace {

RingElement one_plus_u_pow(unsigned t) {
    RingElement p = r_one;
    for (unsigned i = 0; i < t; ++i) p = p * r_one_plus_u;
    return p;
}

// Insert the F2 span of { u^a x^j g : a in 0..3, j in 0..n-1 } into basis.
// That span is the ideal generated by g: any r x^j g with r in R is a sum
// of the u^a x^j g.
void insert_ideal_span(Gf2Basis& basis, const RingWord& g) {
    const size_t n = g.size();
    RingWord ua = g;
    for (unsigned a = 0; a < 4; ++a) {
        RingWord w = ua;
        for (size_t j = 0; j < n; ++j) {
            basis.insert(pack_word(w));
            w = word_shift(w);
        }
        ua = r_u * ua;
    }
}

RingWord all_ones_word(unsigned n) {
    RingWord w(n);
    for (unsigned i = 0; i < n; ++i) w[i] = r_all_ones;
    return w;
}

}  // namespace

CyclicCodeR::CyclicCodeR(unsigned n, std::array<PolyF2, 4> f)
    : n_(n), f_(std::move(f)), basis_(4 * n) {
    const PolyF2 xn1 = PolyF2::x_pow_n_minus_1(n_);
    for (unsigned t = 0; t < 4; ++t) {
        if (f_[t] == xn1) continue;  // absent layer
        const PolyR gen = PolyR(std::vector<RingElement>{one_plus_u_pow(t)}) * PolyR::from_f2(f_[t]);
        insert_ideal_span(basis_, word_from_poly(gen, n_));
    }
}

CyclicCodeR CyclicCodeR::from_chain(unsigned n, PolyF2 f0, PolyF2 f1, PolyF2 f2, PolyF2 f3) {
    if (n == 0) throw std::invalid_argument("code length must be >= 1");
    std::array<PolyF2, 4> f = {std::move(f0), std::move(f1), std::move(f2), std::move(f3)};
    const PolyF2 xn1 = PolyF2::x_pow_n_minus_1(n);
    static constexpr const char* name[4] = {"f0", "f1", "f2", "f3"};
    for (unsigned t = 0; t < 4; ++t) {
        if (f[t].is_zero())
            throw std::invalid_argument(std::string(name[t]) + " must be nonzero");
        if (!f[t].divides(xn1))
            throw std::invalid_argument(std::string(name[t]) + " does not divide x^" +
                                        std::to_string(n) + "-1: " + f[t].human_string());
    }
    for (unsigned t = 3; t >= 1; --t) {
        if (!f[t].divides(f[t - 1]))
            throw std::invalid_argument(std::string("chain violation: ") + name[t] +
                                        " does not divide " + name[t - 1] + " (" +
                                        f[t].human_string() + " | " + f[t - 1].human_string() +
                                        " fails)");
    }
    return CyclicCodeR(n, std::move(f));
}

bool CyclicCodeR::contains(const RingWord& w) const {
    if (w.size() != n_) throw std::invalid_argument("word length mismatch");
    return basis_.contains(pack_word(w));
}

void CyclicCodeR::enumerate(const std::function<void(const RingWord&)>& fn,
                            uint64_t word_cap) const {
    const unsigned k = basis_.rank();
    if (k >= 64 || (uint64_t{1} << k) > word_cap)
        throw CapExceededError("enumeration of 2^" + std::to_string(k) +
                               " codewords exceeds cap " + std::to_string(word_cap));
    const uint64_t count = uint64_t{1} << k;
    const auto& rows = basis_.rows();
    for (uint64_t mask = 0; mask < count; ++mask) {
        Gf2Basis::Row acc = basis_.zero_row();
        for (unsigned b = 0; b < k; ++b)
            if ((mask >> b) & 1u)
                for (size_t j = 0; j < acc.size(); ++j) acc[j] ^= rows[b][j];
        fn(unpack_word(acc, n_));
    }
}

std::vector<RingWord> CyclicCodeR::codewords(uint64_t word_cap) const {
    std::vector<RingWord> out;
    enumerate([&](const RingWord& w) { out.push_back(w); }, word_cap);
    return out;
}

bool CyclicCodeR::is_reverse_complement() const {
    if (!contains(all_ones_word(n_))) return false;
    for (const auto& row : basis_.rows())
        if (!contains(word_reverse(unpack_word(row, n_)))) return false;
    return true;
}

bool CyclicCodeR::rc_sufficient() const {
    for (unsigned t = 0; t < 4; ++t)
        if (!f_[t].is_self_reciprocal()) return false;
    const RingWord w = r_all_ones * word_from_poly(PolyR::from_f2(ideal_polynomial(n_)), n_);
    return contains(w);
}

std::array<bool, 4> CyclicCodeR::chain_self_reciprocal() const {
    return {f_[0].is_self_reciprocal(), f_[1].is_self_reciprocal(), f_[2].is_self_reciprocal(),
            f_[3].is_self_reciprocal()};
}

CyclicCodeR::MultipleSubcode CyclicCodeR::subcode_one_plus_u2() const {
    // (1+u^2) R[x]/(x^n - 1) is exactly the set of words whose every
    // coordinate is a multiple of 1+u^2, i.e. lies in {0, 5, 10, 15}.
    Gf2Basis lattice(4 * n_);
    for (unsigned j = 0; j < n_; ++j) {
        for (const RingElement e : {r_one_plus_u2, r_one_plus_u2 * r_u}) {
            RingWord w(n_);
            w[j] = e;
            lattice.insert(pack_word(w));
        }
    }

    MultipleSubcode out{intersect(basis_, lattice), Gf2Basis(4 * n_), false};

    const PolyR gen = PolyR(std::vector<RingElement>{r_one_plus_u2}) * PolyR::from_f2(f_[3]);
    const RingWord gw = word_from_poly(gen, n_);
    if (!(f_[3] == PolyF2::x_pow_n_minus_1(n_))) insert_ideal_span(out.candidate, gw);
    out.matches_candidate = (out.basis == out.candidate);
    return out;
}

std::string CyclicCodeR::chain_string() const {
    std::string s;
    static constexpr const char* name[4] = {"f0", "f1", "f2", "f3"};
    for (unsigned t = 0; t < 4; ++t) {
        if (t) s += ',';
        s += name[t];
        s += '=';
        s += f_[t].bit_string();
    }
    return s;
}

void enumerate_chains(unsigned n, const std::function<void(const CyclicCodeR&)>& fn,
                      bool dedupe) {
    if (n == 0) throw std::invalid_argument("chain enumeration requires n >= 1");
    const Factorization fac = factor_xn_minus_1(n);
    const size_t nf = fac.factors.size();

    // Per irreducible factor, exponent tuples e3 <= e2 <= e1 <= e0 <= mult;
    // the product over factors gives exactly the divisor chains.
    std::vector<std::array<unsigned, 4>> expo(nf);
    std::map<std::string, bool> seen;

    const std::function<void(size_t)> rec = [&](size_t i) {
        if (i == nf) {
            std::array<PolyF2, 4> f = {PolyF2::one(), PolyF2::one(), PolyF2::one(),
                                       PolyF2::one()};
            for (size_t k = 0; k < nf; ++k)
                for (unsigned t = 0; t < 4; ++t)
                    for (unsigned e = 0; e < expo[k][t]; ++e) f[t] = f[t] * fac.factors[k].first;
            const CyclicCodeR code = CyclicCodeR::from_chain(n, f[0], f[1], f[2], f[3]);
            if (dedupe) {
                const std::string key = code.basis().key();
                if (seen.count(key)) return;
                seen.emplace(key, true);
            }
            fn(code);
            return;
        }
        const unsigned mult = fac.factors[i].second;
        for (unsigned e0 = 0; e0 <= mult; ++e0)
            for (unsigned e1 = 0; e1 <= e0; ++e1)
                for (unsigned e2 = 0; e2 <= e1; ++e2)
                    for (unsigned e3 = 0; e3 <= e2; ++e3) {
                        expo[i] = {e0, e1, e2, e3};
                        rec(i + 1);
                    }
    };
    rec(0);
}

std::vector<CyclicCodeR> chain_codes(unsigned n, bool dedupe) {
    std::vector<CyclicCodeR> out;
    enumerate_chains(n, [&](const CyclicCodeR& c) { out.push_back(c); }, dedupe);
    return out;
}

IdealSurvey brute_force_ideals(unsigned n, uint64_t generator_cap) {
    if (n == 0) throw std::invalid_argument("ideal survey requires n >= 1");
    if (n > 15) throw CapExceededError("16^" + std::to_string(n) + " generators exceed cap");
    uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= 16;
    if (total > generator_cap)
        throw CapExceededError("16^" + std::to_string(n) + " = " + std::to_string(total) +
                               " generators exceed cap " + std::to_string(generator_cap));

    IdealSurvey survey;
    survey.n = n;

    const auto word_of = [n](uint64_t packed) {
        RingWord w(n);
        for (unsigned i = 0; i < n; ++i)
            w[i] = RingElement(static_cast<unsigned>((packed >> (4 * i)) & 0xFu));
        return w;
    };

    // Single-generator ideals, deduped by canonical basis.
    std::map<std::string, size_t> index_of;
    std::vector<size_t> single_index;  // survey positions of the distinct singles
    for (uint64_t g = 0; g < total; ++g) {
        const RingWord w = word_of(g);
        Gf2Basis basis(4 * n);
        insert_ideal_span(basis, w);
        const std::string key = basis.key();
        if (index_of.count(key)) continue;
        index_of.emplace(key, survey.ideals.size());
        single_index.push_back(survey.ideals.size());
        survey.ideals.push_back({std::move(basis), w, std::nullopt, false});
    }

    // Pair ideals: <g, h> = <g> + <h>, so merging the distinct single
    // bases pairwise covers every pair of elements.
    const size_t nsingles = single_index.size();
    for (size_t i = 0; i < nsingles; ++i) {
        for (size_t j = i + 1; j < nsingles; ++j) {
            Gf2Basis merged = survey.ideals[single_index[i]].basis;
            for (const auto& row : survey.ideals[single_index[j]].basis.rows()) merged.insert(row);
            const std::string key = merged.key();
            if (index_of.count(key)) continue;
            index_of.emplace(key, survey.ideals.size());
            survey.ideals.push_back({std::move(merged), survey.ideals[single_index[i]].generator,
                                     survey.ideals[single_index[j]].generator, true});
        }
    }
    return survey;
}

std::vector<RingWord> basis_words(const Gf2Basis& basis, unsigned n, uint64_t word_cap) {
    const unsigned k = basis.rank();
    if (k >= 64 || (uint64_t{1} << k) > word_cap)
        throw CapExceededError("enumeration of 2^" + std::to_string(k) +
                               " words exceeds cap " + std::to_string(word_cap));
    const uint64_t count = uint64_t{1} << k;
    const auto& rows = basis.rows();
    std::vector<RingWord> out;
    out.reserve(count);
    for (uint64_t mask = 0; mask < count; ++mask) {
        auto acc = basis.zero_row();
        for (unsigned b = 0; b < k; ++b)
            if ((mask >> b) & 1u)
                for (size_t j = 0; j < acc.size(); ++j) acc[j] ^= rows[b][j];
        out.push_back(unpack_word(acc, n));
    }
    return out;
}

}  // namespace dnacyclic
