#pragma once

#include "adf/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace adf {

// A binary sequence of length len with symbols in {-1,+1}, stored bit-packed:
// bit b at position j encodes the symbol 2b-1. Positions outside [0,len)
// read as 0.
class BinarySequence {
public:
    static constexpr int kMaxLen = 30;

    BinarySequence() = default;
    BinarySequence(std::initializer_list<int> symbols);
    explicit BinarySequence(const std::vector<int>& symbols);
    static BinarySequence from_bits(std::uint32_t bits, int len);

    int length() const { return len_; }
    std::uint32_t bits() const { return bits_; }

    // f_j; 0 outside the support
    int symbol(long j) const {
        if (j < 0 || j >= len_) return 0;
        return ((bits_ >> j) & 1u) ? 1 : -1;
    }

    std::vector<int> symbols() const;

private:
    std::uint32_t bits_ = 0;
    int len_ = 0;
};

// Aperiodic autocorrelation sum_j f_{j+s} f_j; 0 whenever |s| >= length.
long autocorrelation(const BinarySequence& f, long shift);

// Sum of squared autocorrelations over all shifts (including shift 0).
long ssac(const BinarySequence& f);

// -1 + ssac(f)/len^2. Throws std::domain_error for the empty sequence.
Rat adf(const BinarySequence& f);

} // namespace adf
