#ifndef MAHLER_DECIDER_HPP
#define MAHLER_DECIDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mahler/rational_function.hpp"

namespace mahler {

// Additive question: does
//   g(z^d) = g(z) - sum_{j=0..m} c_j * z / (1 - z^(d^j))
// have a solution g in Q(z)?
struct AdditiveFeqInstance {
    AdditiveFeqInstance(int d, std::vector<Rational> c);
    int d;
    int m;  // c has entries c_0..c_m
    std::vector<Rational> c;
};

// Multiplicative question: does
//   r(z^d) = (1 - z)^(-n1) * (1 + z^2)^(-n2) * r(z)
// have a nonzero solution r in Q(z)? (n1, n2) = (0, 0) is allowed and
// trivially solvable.
struct MultiplicativeFeqInstance {
    MultiplicativeFeqInstance(int d, long n1, long n2);
    int d;
    long n1;
    long n2;
};

struct DeciderVerdict {
    bool solvable = false;
    std::optional<RationalFunctionQ> witness;
    // Human-readable description of the exhausted search space: ansatz,
    // degree bounds, and which reduction produced the linear system.
    std::string certificate;
    std::string to_json() const;
};

// Decides the additive question by exhausting the ansatz
// g = A(z)/(1 - z^(d^m)), deg A <= d^m, as one exact linear system.
// Any witness is re-verified by exact substitution before being returned.
DeciderVerdict decide_additive(const AdditiveFeqInstance& inst);

// Decides the multiplicative question by the coprime-numerator/denominator
// case split, which reduces each sign pattern of (n1, n2) to a polynomial
// scaling equation solved exactly.
DeciderVerdict decide_multiplicative(const MultiplicativeFeqInstance& inst);

// Nonzero polynomial t with t(z^d) = p(z) * t(z), if one exists. The degree
// is forced: (d-1) deg t = deg p. Normalized so the lowest nonzero
// coefficient is 1. p must be nonzero.
std::optional<PolynomialQ> solve_poly_scaling(const PolynomialQ& p, int d);

// Nonzero polynomial s with L(z) * s(z^d) = R(z) * s(z), if one exists.
std::optional<PolynomialQ> solve_two_sided_scaling(const PolynomialQ& L,
                                                   const PolynomialQ& R, int d);

}  // namespace mahler

#endif
