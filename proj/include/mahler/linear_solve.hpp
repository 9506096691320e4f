#ifndef MAHLER_LINEAR_SOLVE_HPP
#define MAHLER_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "mahler/rational.hpp"

namespace mahler {

// Outcome of exact Gauss-Jordan elimination on A x = b over Q.
struct LinearSolution {
    bool consistent = false;
    // Particular solution with all free variables set to 0 (when consistent).
    std::vector<Rational> particular;
    // First kernel basis vector (unit in the lowest-index free variable),
    // or empty when the kernel is trivial.
    std::vector<Rational> kernel;
};

// Dense exact elimination; rows with structural zeros are skipped, so
// sparse systems cost what their fill-in costs.
LinearSolution solve_linear(std::vector<std::vector<Rational>> A,
                            std::vector<Rational> b);

}  // namespace mahler

#endif
