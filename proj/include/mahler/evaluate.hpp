#ifndef MAHLER_EVALUATE_HPP
#define MAHLER_EVALUATE_HPP

#include <stdexcept>
#include <utility>

#include "mahler/ball.hpp"
#include "mahler/functions.hpp"

namespace mahler {

// Evaluation point: exact rational alpha with 0 < |alpha| < 1.
struct EvalPoint {
    explicit EvalPoint(Rational a);
    Rational alpha;
};

struct TailBoundError : std::runtime_error {
    explicit TailBoundError(const std::string& what) : std::runtime_error(what) {}
};

enum class TailKind { Sum, Product };

// The tail shape natural to f: Product for T/U, Sum for everything else.
TailKind tail_kind(const FunctionId& f);

// Proven upper bound, monotone non-increasing in N, on what indices > N
// contribute. For sums this bounds |sum of omitted terms|; for products it
// bounds |prod of omitted factors - 1| (relative deviation), valid only
// while the omitted mass S satisfies S <= 1/2 (throws TailBoundError
// otherwise; raise N).
Rational tail_bound(TailKind kind, const FunctionId& f, const EvalPoint& p, long N);

// Certified enclosure of f(alpha) with radius <= 2^-prec_bits; prec_bits >= 8.
// Heads are accumulated exactly over Q (with interval arithmetic where a
// denominator power would be oversized) and the tail enters the radius.
BallReal eval(const FunctionId& f, const EvalPoint& p, unsigned long prec_bits);

// (direct, via-bridge) enclosures of the same value; defined for
// fTMM (via T2), fRPF (via G(2,2)), fC (via U3), Fcoons and Gcoons
// (via G(2,0)). The two balls intersect by construction.
std::pair<BallReal, BallReal> eval_two_routes(const FunctionId& f, const EvalPoint& p,
                                              unsigned long prec_bits);

bool has_bridge_partner(const FunctionId& f);

}  // namespace mahler

#endif
