#ifndef MAHLER_LLL_HPP
#define MAHLER_LLL_HPP

#include <vector>

#include "mahler/rational.hpp"

namespace mahler {

// In-place LLL reduction (delta = 99/100) of the row basis, using the
// all-integer Gram-Schmidt bookkeeping (lambda / d arrays), so no floating
// point enters the reduction. Rows must be linearly independent.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

}  // namespace mahler

#endif
