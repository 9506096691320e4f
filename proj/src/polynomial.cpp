#include "mahler/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mahler {

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

PolynomialQ::PolynomialQ(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

PolynomialQ PolynomialQ::constant(const Rational& c) {
    PolynomialQ p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

PolynomialQ PolynomialQ::monomial(std::size_t exp, const Rational& c) {
    PolynomialQ p;
    if (c != 0) {
        p.coeffs_.assign(exp + 1, Rational(0));
        p.coeffs_[exp] = c;
    }
    return p;
}

Rational PolynomialQ::coeff(std::size_t exp) const {
    return exp < coeffs_.size() ? coeffs_[exp] : Rational(0);
}

Rational PolynomialQ::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void PolynomialQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolynomialQ PolynomialQ::operator-() const {
    PolynomialQ out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PolynomialQ PolynomialQ::operator+(const PolynomialQ& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return PolynomialQ(std::move(out));
}

PolynomialQ PolynomialQ::operator-(const PolynomialQ& o) const { return *this + (-o); }

PolynomialQ PolynomialQ::operator*(const PolynomialQ& o) const {
    if (is_zero() || o.is_zero()) return PolynomialQ();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return PolynomialQ(std::move(out));
}

PolynomialQ PolynomialQ::operator*(const Rational& c) const {
    if (c == 0) return PolynomialQ();
    PolynomialQ out(*this);
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

PolynomialQ PolynomialQ::pow(unsigned exp) const {
    PolynomialQ result = constant(Rational(1));
    PolynomialQ base = *this;
    while (exp) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

PolynomialQ PolynomialQ::substitute_power(unsigned d) const {
    if (d < 1) throw std::invalid_argument("substitution power must be >= 1");
    if (is_zero()) return PolynomialQ();
    std::vector<Rational> out((coeffs_.size() - 1) * d + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
    return PolynomialQ(std::move(out));
}

Rational PolynomialQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<PolynomialQ, PolynomialQ> PolynomialQ::divmod(const PolynomialQ& o) const {
    if (o.is_zero()) throw std::invalid_argument("polynomial division by zero");
    PolynomialQ rem = *this;
    std::vector<Rational> q;
    long dq = degree() - o.degree();
    if (dq < 0) return {PolynomialQ(), rem};
    q.assign(static_cast<std::size_t>(dq) + 1, Rational(0));
    Rational inv_lead = 1 / o.leading();
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - o.degree());
        Rational factor = rem.leading() * inv_lead;
        q[shift] = factor;
        rem = rem - o * PolynomialQ::monomial(shift, factor);
    }
    return {PolynomialQ(std::move(q)), rem};
}

PolynomialQ PolynomialQ::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

std::string PolynomialQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

// Integer polynomial, primitive (content 1), used only inside poly_gcd.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(ZPoly& p) {
    Integer g = zcontent(p);
    if (g > 1)
        for (auto& c : p) c /= g;
}

ZPoly to_primitive_zpoly(const PolynomialQ& p) {
    Integer den_lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den_lcm / c.get_den()));
    make_primitive(out);
    return out;
}

// Pseudo-remainder of a by b (b nonzero), then primitive part.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
    const Integer& lead_b = b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Integer lead_a = a.back();
        for (auto& c : a) c *= lead_b;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead_a * b[i];
        ztrim(a);
        make_primitive(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = to_primitive_zpoly(a);
    ZPoly y = to_primitive_zpoly(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = primitive_prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(x.size());
    for (const auto& c : x) coeffs.emplace_back(c);
    return PolynomialQ(std::move(coeffs)).monic();
}

}  // namespace mahler
