#include "adf/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace adf {

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    // base is canonical, so num/den are coprime and stay coprime under powers
    return r;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (num.empty() || den.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    Int n, d;
    if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    }
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_decimal(const Rat& q, int significant_digits) {
    if (q == 0) return "0";
    // digits * log2(10) bits plus slack
    const auto prec = static_cast<mp_bitcnt_t>(significant_digits * 4 + 64);
    mpf_class f(q, prec);
    mp_exp_t exp10 = 0;
    std::string mant = f.get_str(exp10, 10, static_cast<std::size_t>(significant_digits));
    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(mant.begin());
    }
    // mant is the digit string with implied decimal point before it, scaled by 10^exp10
    std::ostringstream out;
    if (neg) out << '-';
    out << "0." << mant << "e" << exp10;
    return out.str();
}

Int uint128_to_int(unsigned __int128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    Int r(hi);
    r <<= 64;
    r += Int(lo);
    return r;
}

int rat_sign(const Rat& q) { return sgn(q); }

} // namespace adf
