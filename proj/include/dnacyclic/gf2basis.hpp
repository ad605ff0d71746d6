#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dnacyclic {

// Reduced row-echelon basis of an F2 subspace of fixed width, rows packed
// 64 bits per word.  Pivot = highest set bit; rows kept sorted by pivot
// descending and fully reduced against each other, so two bases are equal
// as spans iff their row lists are equal.  Width up to a few thousand.
class Gf2Basis {
public:
    using Row = std::vector<uint64_t>;

    explicit Gf2Basis(unsigned width) : width_(width), words_((width + 63) / 64) {}

    unsigned width() const { return width_; }
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }

    Row zero_row() const { return Row(words_, 0); }

    // Reduce and insert; returns true when the rank grew.
    bool insert(Row row);

    // True iff the row lies in the span.
    bool contains(Row row) const;

    // Canonical serialization of the row list; equal iff spans are equal.
    std::string key() const;

    friend bool operator==(const Gf2Basis&, const Gf2Basis&) = default;

private:
    void reduce(Row& row) const;
    static int pivot(const Row& row);

    unsigned width_;
    unsigned words_;
    std::vector<Row> rows_;  // RREF, pivots strictly descending
};

// Intersection of two subspaces of equal width (Zassenhaus construction).
Gf2Basis intersect(const Gf2Basis& a, const Gf2Basis& b);

}  // namespace dnacyclic
