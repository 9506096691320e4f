#include "mahler/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mahler {

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::from_polynomial(const PolynomialQ& p, long order) {
    TruncatedSeries s(order);
    long top = std::min<long>(order, p.degree());
    for (long i = 0; i <= top; ++i) s.coeffs_[i] = p.coeff(static_cast<std::size_t>(i));
    return s;
}

TruncatedSeries TruncatedSeries::geometric(long order, long start, long step,
                                           const Rational& c) {
    if (start < 0 || step < 1) throw std::invalid_argument("bad geometric parameters");
    TruncatedSeries s(order);
    for (long k = start; k <= order; k += step) {
        s.coeffs_[static_cast<std::size_t>(k)] += c;
        if (k > order - step) break;  // avoid overflow on k += step
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    long n = std::min(order_, o.order_);
    TruncatedSeries out(n);
    for (long i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    long n = std::min(order_, o.order_);
    TruncatedSeries out(n);
    for (long i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    long n = std::min(order_, o.order_);
    TruncatedSeries out(n);
    for (long i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (o.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries out(*this);
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

void TruncatedSeries::mul_binomial(long exp, const Rational& c) {
    if (exp < 1) throw std::invalid_argument("binomial exponent must be >= 1");
    if (exp > order_) return;
    for (long i = order_; i >= exp; --i) coeffs_[i] += c * coeffs_[i - exp];
}

TruncatedSeries TruncatedSeries::shift_up(long k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    TruncatedSeries out(order_);
    for (long i = order_; i >= k; --i) out.coeffs_[i] = coeffs_[i - k];
    return out;
}

Rational TruncatedSeries::eval_partial(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string TruncatedSeries::to_json() const {
    std::ostringstream os;
    os << "{\"order\": " << order_ << ", \"coeffs\": [";
    for (long i = 0; i <= order_; ++i) {
        if (i) os << ", ";
        os << '"' << to_fraction_string(coeffs_[i]) << '"';
    }
    os << "]}";
    return os.str();
}

TruncatedSeries substitute_power(const TruncatedSeries& s, unsigned d) {
    if (d < 2) throw std::invalid_argument("substitution power must be >= 2");
    TruncatedSeries out(s.order());
    for (long k = 0; k * static_cast<long>(d) <= s.order(); ++k)
        out.coeff_mut(k * static_cast<long>(d)) = s.coeff(k);
    return out;
}

}  // namespace mahler
