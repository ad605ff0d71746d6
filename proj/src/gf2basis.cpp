#include "dnacyclic/gf2basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dnacyclic {

int Gf2Basis::pivot(const Row& row) {
    for (size_t j = row.size(); j-- > 0;)
        if (row[j]) return static_cast<int>(64 * j + 63 - std::countl_zero(row[j]));
    return -1;
}

void Gf2Basis::reduce(Row& row) const {
    for (const Row& b : rows_) {
        const int p = pivot(b);
        if ((row[static_cast<size_t>(p) / 64] >> (static_cast<unsigned>(p) % 64)) & 1u)
            for (size_t j = 0; j < row.size(); ++j) row[j] ^= b[j];
    }
}

bool Gf2Basis::insert(Row row) {
    if (row.size() != words_) throw std::invalid_argument("row width mismatch");
    reduce(row);
    const int p = pivot(row);
    if (p < 0) return false;
    // Clear the new pivot from existing rows, then insert sorted.
    for (Row& b : rows_)
        if ((b[static_cast<size_t>(p) / 64] >> (static_cast<unsigned>(p) % 64)) & 1u)
            for (size_t j = 0; j < b.size(); ++j) b[j] ^= row[j];
    const auto at = std::find_if(rows_.begin(), rows_.end(),
                                 [&](const Row& b) { return pivot(b) < p; });
    rows_.insert(at, std::move(row));
    return true;
}

bool Gf2Basis::contains(Row row) const {
    if (row.size() != words_) throw std::invalid_argument("row width mismatch");
    reduce(row);
    return pivot(row) < 0;
}

std::string Gf2Basis::key() const {
    std::string k;
    k.reserve(rows_.size() * words_ * 8);
    for (const Row& r : rows_)
        for (uint64_t w : r)
            for (int b = 0; b < 8; ++b) k += static_cast<char>((w >> (8 * b)) & 0xFF);
    return k;
}

Gf2Basis intersect(const Gf2Basis& a, const Gf2Basis& b) {
    if (a.width() != b.width()) throw std::invalid_argument("width mismatch in intersection");
    const unsigned w = a.width();
    const unsigned words = (w + 63) / 64;

    // Zassenhaus: echelonize rows [x|x] for x in A and [y|0] for y in B,
    // left block in the high bits; rows with zero left block carry the
    // intersection in their right block.
    Gf2Basis big(2 * w);
    auto lift = [&](const Gf2Basis::Row& r, bool duplicate) {
        Gf2Basis::Row row = big.zero_row();
        for (unsigned i = 0; i < w; ++i) {
            if (!((r[i / 64] >> (i % 64)) & 1u)) continue;
            const unsigned hi = w + i;
            row[hi / 64] |= 1ULL << (hi % 64);
            if (duplicate) row[i / 64] |= 1ULL << (i % 64);
        }
        return row;
    };
    for (const auto& r : a.rows()) big.insert(lift(r, true));
    for (const auto& r : b.rows()) big.insert(lift(r, false));

    Gf2Basis out(w);
    for (const auto& row : big.rows()) {
        bool left_zero = true;
        for (unsigned i = w; i < 2 * w && left_zero; ++i)
            if ((row[i / 64] >> (i % 64)) & 1u) left_zero = false;
        if (!left_zero) continue;
        Gf2Basis::Row r(words, 0);
        for (unsigned i = 0; i < w; ++i)
            if ((row[i / 64] >> (i % 64)) & 1u) r[i / 64] |= 1ULL << (i % 64);
        out.insert(std::move(r));
    }
    return out;
}

}  // namespace dnacyclic
