#ifndef MAHLER_POLYNOMIAL_HPP
#define MAHLER_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mahler/rational.hpp"

namespace mahler {

// Dense univariate polynomial over Q. Coefficient index = exponent.
// Canonical form: no trailing zero coefficients; the zero polynomial
// has an empty coefficient vector and degree -1.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> coeffs);
    PolynomialQ(std::initializer_list<long> coeffs);

    static PolynomialQ constant(const Rational& c);
    static PolynomialQ monomial(std::size_t exp, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t exp) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    PolynomialQ operator-() const;
    PolynomialQ operator+(const PolynomialQ& o) const;
    PolynomialQ operator-(const PolynomialQ& o) const;
    PolynomialQ operator*(const PolynomialQ& o) const;
    PolynomialQ operator*(const Rational& c) const;
    bool operator==(const PolynomialQ& o) const { return coeffs_ == o.coeffs_; }

    PolynomialQ pow(unsigned exp) const;

    // z -> z^d
    PolynomialQ substitute_power(unsigned d) const;

    Rational eval(const Rational& x) const;

    // Euclidean division; o must be nonzero.
    std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& o) const;

    // Scales so the leading coefficient is 1 (zero stays zero).
    PolynomialQ monic() const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd over Q, computed with a primitive pseudo-remainder sequence
// over Z to keep coefficient growth in check. gcd(0, 0) = 0.
PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b);

}  // namespace mahler

#endif
