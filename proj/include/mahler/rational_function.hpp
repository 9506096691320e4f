#ifndef MAHLER_RATIONAL_FUNCTION_HPP
#define MAHLER_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <string>

#include "mahler/polynomial.hpp"

namespace mahler {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Ratio of polynomials over Q in canonical form: coprime numerator and
// denominator, monic denominator. Equality is structural.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(PolynomialQ::constant(Rational(1))) {}
    RationalFunctionQ(PolynomialQ num, PolynomialQ den);
    explicit RationalFunctionQ(const PolynomialQ& num)
        : num_(num), den_(PolynomialQ::constant(Rational(1))) {}

    static RationalFunctionQ constant(const Rational& c);

    const PolynomialQ& num() const { return num_; }
    const PolynomialQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunctionQ operator-() const;
    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-(const RationalFunctionQ& o) const;
    RationalFunctionQ operator*(const RationalFunctionQ& o) const;
    RationalFunctionQ operator/(const RationalFunctionQ& o) const;
    bool operator==(const RationalFunctionQ& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunctionQ inverse() const;

    // z -> z^d
    RationalFunctionQ substitute_power(unsigned d) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void canonicalize();
    PolynomialQ num_, den_;
};

// Exact value num(x)/den(x); throws PoleError when den(x) = 0.
Rational eval_rational_function(const RationalFunctionQ& r, const Rational& x);

}  // namespace mahler

#endif
