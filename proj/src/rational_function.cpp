#include "mahler/rational_function.hpp"

namespace mahler {

RationalFunctionQ::RationalFunctionQ(PolynomialQ num, PolynomialQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    canonicalize();
}

RationalFunctionQ RationalFunctionQ::constant(const Rational& c) {
    return RationalFunctionQ(PolynomialQ::constant(c));
}

void RationalFunctionQ::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolynomialQ::constant(Rational(1));
        return;
    }
    PolynomialQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ& o) const {
    return *this + (-o);
}

RationalFunctionQ RationalFunctionQ::operator*(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_ * o.num_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator/(const RationalFunctionQ& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RationalFunctionQ(num_ * o.den_, den_ * o.num_);
}

RationalFunctionQ RationalFunctionQ::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
    return RationalFunctionQ(den_, num_);
}

RationalFunctionQ RationalFunctionQ::substitute_power(unsigned d) const {
    return RationalFunctionQ(num_.substitute_power(d), den_.substitute_power(d));
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
    if (den_ == PolynomialQ::constant(Rational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

Rational eval_rational_function(const RationalFunctionQ& r, const Rational& x) {
    Rational den_val = r.den().eval(x);
    if (den_val == 0)
        throw PoleError("pole at x = " + to_fraction_string(x));
    return r.num().eval(x) / den_val;
}

}  // namespace mahler
