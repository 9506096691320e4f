#ifndef MAHLER_SERIES_HPP
#define MAHLER_SERIES_HPP

#include <string>
#include <vector>

#include "mahler/polynomial.hpp"
#include "mahler/rational.hpp"

namespace mahler {

// Power series over Q truncated at a fixed order: coefficients of
// z^0 .. z^N are stored and exact. Binary operations on series of
// different orders truncate to the smaller order, so every stored
// coefficient of a result is exact.
class TruncatedSeries {
public:
    // Zero series of the given order (order >= 0 accepted internally;
    // the public builders require >= 1).
    explicit TruncatedSeries(long order);
    TruncatedSeries(long order, std::vector<Rational> coeffs);

    static TruncatedSeries from_polynomial(const PolynomialQ& p, long order);
    // Series of c * z^start / (1 - z^step), i.e. c*(z^start + z^(start+step) + ...).
    static TruncatedSeries geometric(long order, long start, long step,
                                     const Rational& c = Rational(1));

    long order() const { return order_; }
    const Rational& coeff(long n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    Rational& coeff_mut(long n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries& o) const = default;

    // Multiply in place by the sparse binomial 1 + c*z^exp (exp >= 1).
    void mul_binomial(long exp, const Rational& c);

    // Multiply by z^k, dropping coefficients pushed past the order.
    TruncatedSeries shift_up(long k) const;

    // Partial sum of the stored coefficients at x: sum c_n x^n, n <= order.
    Rational eval_partial(const Rational& x) const;

    std::string to_json() const;

private:
    long order_;
    std::vector<Rational> coeffs_;
};

// z -> z^d on the truncation: coefficient of z^(d*k) in the result is
// the input coefficient of z^k; everything else is zero. Order preserved.
TruncatedSeries substitute_power(const TruncatedSeries& s, unsigned d);

}  // namespace mahler

#endif
