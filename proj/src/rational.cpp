#include "mahler/rational.hpp"

namespace mahler {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& x) { return x.get_str(); }

Rational pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    // num and den were coprime, so their powers are too.
    return out;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow2(long e) {
    Rational out(1);
    if (e >= 0) {
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    return out;
}

size_t bit_size(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

namespace {

// Rounds num/den (den > 0) to the nearest integer, ties toward even.
Integer round_quotient(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // 0 <= r < den; round up when 2r > den, or 2r == den and q is odd.
    Integer twice = r * 2;
    int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

}  // namespace

Rational round_to_dyadic(const Rational& x, unsigned long bits) {
    Integer scaled_num = x.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    Integer q = round_quotient(scaled_num, x.get_den());
    Rational out(q);
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), bits);
    out.canonicalize();
    return out;
}

Integer round_to_integer(const Rational& x) {
    return round_quotient(x.get_num(), x.get_den());
}

std::string decimal_string(const Rational& x, unsigned long digits) {
    Integer scale = pow(Integer(10), digits);
    Integer scaled_num = x.get_num() * scale;
    bool negative = scaled_num < 0;
    if (negative) scaled_num = -scaled_num;
    Integer q = round_quotient(scaled_num, x.get_den());
    Integer ipart = q / scale;
    Integer fpart = q % scale;
    std::string frac = fpart.get_str();
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    std::string out;
    if (negative && q != 0) out += '-';
    out += ipart.get_str();
    if (digits > 0) {
        out += '.';
        out += frac;
    }
    return out;
}

}  // namespace mahler
