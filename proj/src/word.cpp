#include "dnacyclic/word.hpp"

#include <stdexcept>

namespace dnacyclic {

RingWord word_shift(const RingWord& w) {
    const size_t n = w.size();
    RingWord out(n);
    for (size_t i = 0; i < n; ++i) out[(i + 1) % n] = w[i];
    return out;
}

RingWord word_reverse(const RingWord& w) {
    const size_t n = w.size();
    RingWord out(n);
    for (size_t i = 0; i < n; ++i) out[n - 1 - i] = w[i];
    return out;
}

RingWord word_complement(const RingWord& w) {
    RingWord out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i].complement();
    return out;
}

RingWord word_rc(const RingWord& w) { return word_complement(word_reverse(w)); }

RingWord operator+(const RingWord& a, const RingWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("word length mismatch");
    RingWord out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RingWord operator*(RingElement a, const RingWord& w) {
    RingWord out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = a * w[i];
    return out;
}

std::string word_string(const RingWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i].hex();
    }
    return s;
}

RingWord parse_word(std::string_view text) {
    RingWord w;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t next = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        w.c.push_back(parse_ring_element(tok));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return w;
}

std::vector<uint64_t> pack_word(const RingWord& w) {
    std::vector<uint64_t> row((4 * w.size() + 63) / 64, 0);
    for (size_t i = 0; i < w.size(); ++i)
        row[4 * i / 64] |= static_cast<uint64_t>(w[i].bits()) << (4 * i % 64);
    return row;
}

RingWord unpack_word(const std::vector<uint64_t>& row, size_t n) {
    RingWord w(n);
    for (size_t i = 0; i < n; ++i)
        w[i] = RingElement(static_cast<unsigned>((row[4 * i / 64] >> (4 * i % 64)) & 0xFu));
    return w;
}

}  // namespace dnacyclic
