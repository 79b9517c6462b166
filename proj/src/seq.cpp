#include "adf/seq.hpp"

#include <bit>
#include <stdexcept>

namespace adf {

namespace {

std::uint32_t pack(const int* symbols, std::size_t n) {
    if (n > BinarySequence::kMaxLen) {
        throw std::length_error("binary sequence longer than storage limit");
    }
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (symbols[j] == 1) {
            bits |= (1u << j);
        } else if (symbols[j] != -1) {
            throw std::invalid_argument("binary sequence symbols must be -1 or +1");
        }
    }
    return bits;
}

} // namespace

BinarySequence::BinarySequence(std::initializer_list<int> symbols)
    : bits_(pack(symbols.begin(), symbols.size())), len_(static_cast<int>(symbols.size())) {}

BinarySequence::BinarySequence(const std::vector<int>& symbols)
    : bits_(pack(symbols.data(), symbols.size())), len_(static_cast<int>(symbols.size())) {}

BinarySequence BinarySequence::from_bits(std::uint32_t bits, int len) {
    if (len < 0 || len > kMaxLen) {
        throw std::length_error("binary sequence longer than storage limit");
    }
    BinarySequence f;
    f.len_ = len;
    f.bits_ = len == 32 ? bits : (bits & ((1u << len) - 1u));
    return f;
}

std::vector<int> BinarySequence::symbols() const {
    std::vector<int> out(static_cast<std::size_t>(len_));
    for (int j = 0; j < len_; ++j) out[static_cast<std::size_t>(j)] = symbol(j);
    return out;
}

long autocorrelation(const BinarySequence& f, long shift) {
    const int len = f.length();
    const long s = shift < 0 ? -shift : shift; // C_f(-s) = C_f(s) for real sequences
    if (s >= len) return 0;
    const int overlap = len - static_cast<int>(s);
    const std::uint32_t x = f.bits();
    const std::uint32_t mask = overlap == 32 ? ~0u : ((1u << overlap) - 1u);
    // agreements minus disagreements over the overlap window
    const int disagree = std::popcount((x ^ (x >> s)) & mask);
    return overlap - 2L * disagree;
}

long ssac(const BinarySequence& f) {
    const int len = f.length();
    long total = static_cast<long>(len) * len; // shift 0 contributes len^2
    for (int s = 1; s < len; ++s) {
        const long c = autocorrelation(f, s);
        total += 2 * c * c;
    }
    return total;
}

Rat adf(const BinarySequence& f) {
    const long len = f.length();
    if (len == 0) {
        throw std::domain_error("demerit factor undefined for the empty sequence");
    }
    Rat r(ssac(f), len * len);
    r.canonicalize();
    return r - 1;
}

} // namespace adf
