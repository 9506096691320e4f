#ifndef MAHLER_BALL_HPP
#define MAHLER_BALL_HPP

#include <string>

#include "mahler/rational.hpp"

namespace mahler {

// Certified real enclosure [mid - rad, mid + rad] with exact rational
// midpoint and radius. All operations are exact interval arithmetic,
// so the containment contract is preserved without rounding analysis.
class BallReal {
public:
    BallReal() : mid_(0), rad_(0) {}
    BallReal(Rational mid, Rational rad);

    static BallReal exact(const Rational& x) { return BallReal(x, Rational(0)); }
    static BallReal from_endpoints(const Rational& lo, const Rational& hi);

    const Rational& mid() const { return mid_; }
    const Rational& rad() const { return rad_; }
    Rational lo() const { return mid_ - rad_; }
    Rational hi() const { return mid_ + rad_; }

    BallReal operator-() const { return BallReal(-mid_, rad_); }
    BallReal operator+(const BallReal& o) const { return BallReal(mid_ + o.mid_, rad_ + o.rad_); }
    BallReal operator-(const BallReal& o) const { return BallReal(mid_ - o.mid_, rad_ + o.rad_); }
    BallReal operator*(const BallReal& o) const;
    BallReal operator*(const Rational& c) const { return BallReal(mid_ * c, rad_ * abs(c)); }
    BallReal operator+(const Rational& c) const { return BallReal(mid_ + c, rad_); }
    BallReal operator-(const Rational& c) const { return BallReal(mid_ - c, rad_); }

    // Reciprocal; throws std::domain_error if the ball contains 0.
    BallReal inverse() const;

    BallReal pow(unsigned long e) const;

    bool contains(const Rational& x) const { return lo() <= x && x <= hi(); }
    bool contains_zero() const { return contains(Rational(0)); }
    bool intersects(const BallReal& o) const { return lo() <= o.hi() && o.lo() <= hi(); }
    // True when o lies entirely inside this ball.
    bool contains_ball(const BallReal& o) const { return lo() <= o.lo() && o.hi() <= hi(); }

    BallReal widened(const Rational& extra) const { return BallReal(mid_, rad_ + extra); }

    // |x| <= this for every x in the ball.
    Rational abs_upper() const { return abs(mid_) + rad_; }

    // Rounds the midpoint to a dyadic with 2^-bits resolution, growing the
    // radius outward; keeps bignum sizes bounded after long accumulations.
    BallReal compressed(unsigned long bits) const;

    // {"mid": "p/q", "rad": "p/q", "decimal": "..."} with
    // ceil(prec_bits * 0.301) decimal places.
    std::string to_json(unsigned long prec_bits) const;

private:
    Rational mid_, rad_;
};

}  // namespace mahler

#endif
