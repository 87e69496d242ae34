#pragma once

#include "bisetring/biset.hpp"
#include "bisetring/bitset.hpp"

#include <cstdint>
#include <string>

namespace bisetring {

// Boolean n x n incidence matrix over coset indices of G/H: the matrix-unit
// support of the split-model image of an H-biset. Entry (i,j) marks that the
// span contains the unit e_{g_i H, g_j H}.
class SpanPattern {
public:
    SpanPattern() = default;
    explicit SpanPattern(std::uint32_t n) : n_(n), bits_(std::size_t(n) * n) {}

    static SpanPattern identity(std::uint32_t n);
    static SpanPattern all(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    bool test(std::uint32_t i, std::uint32_t j) const { return bits_.test(std::size_t(i) * n_ + j); }
    void set(std::uint32_t i, std::uint32_t j) { bits_.set(std::size_t(i) * n_ + j); }

    std::size_t count() const { return bits_.count(); }
    bool none() const { return bits_.none(); }

    bool diagonal_empty() const;
    bool contains_diagonal() const;
    bool contains(const SpanPattern& o) const { return bits_.contains(o.bits_); }

    SpanPattern transpose() const;
    friend SpanPattern operator|(const SpanPattern& a, const SpanPattern& b);

    friend bool operator==(const SpanPattern& a, const SpanPattern& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SpanPattern& a, const SpanPattern& b) { return !(a == b); }

    // n lines of '0'/'1' characters
    std::string to_lines() const;

private:
    std::uint32_t n_ = 0;
    Bitset bits_;
};

// boolean matrix product (OR of ANDs); the executable product of spans
SpanPattern span_product(const SpanPattern& a, const SpanPattern& b);

// the split-model image of S: entry (i,j) iff rep_i^{-1} rep_j lies in S
SpanPattern phi_pattern(const HBiset& s);

// dimension over K of the corresponding span: |S| / |H|
std::size_t pattern_dimension(const HBiset& s);

} // namespace bisetring
