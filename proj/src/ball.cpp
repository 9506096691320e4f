#include "mahler/ball.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mahler {

BallReal::BallReal(Rational mid, Rational rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_ < 0) throw std::invalid_argument("negative ball radius");
}

BallReal BallReal::from_endpoints(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("endpoints out of order");
    Rational mid = (lo + hi) / 2;
    return BallReal(mid, hi - mid);
}

BallReal BallReal::operator*(const BallReal& o) const {
    Rational a = lo(), b = hi(), c = o.lo(), d = o.hi();
    Rational p1 = a * c, p2 = a * d, p3 = b * c, p4 = b * d;
    Rational lo_v = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi_v = std::max(std::max(p1, p2), std::max(p3, p4));
    return from_endpoints(lo_v, hi_v);
}

BallReal BallReal::inverse() const {
    if (contains_zero()) throw std::domain_error("reciprocal of ball containing zero");
    Rational a = lo(), b = hi();
    return from_endpoints(1 / b, 1 / a);
}

BallReal BallReal::pow(unsigned long e) const {
    BallReal result = exact(Rational(1));
    BallReal base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BallReal BallReal::compressed(unsigned long bits) const {
    Rational new_mid = round_to_dyadic(mid_, bits);
    Rational new_rad = rad_ + abs(mid_ - new_mid);
    return BallReal(std::move(new_mid), std::move(new_rad));
}

std::string BallReal::to_json(unsigned long prec_bits) const {
    unsigned long digits = (prec_bits * 301 + 999) / 1000;
    std::ostringstream os;
    os << "{\"mid\": \"" << to_fraction_string(mid_) << "\", \"rad\": \""
       << to_fraction_string(rad_) << "\", \"decimal\": \""
       << decimal_string(mid_, digits) << "\"}";
    return os.str();
}

}  // namespace mahler
