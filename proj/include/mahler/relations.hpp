#ifndef MAHLER_RELATIONS_HPP
#define MAHLER_RELATIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mahler/ball.hpp"

namespace mahler {

// A labeled value that can be re-enclosed at any requested precision, so
// candidate relations can be re-checked at higher precision than the one
// they were found at.
struct ValueSpec {
    std::string label;
    std::function<BallReal(unsigned long prec_bits)> eval_at;

    static ValueSpec constant(std::string label, Rational value);
};

struct RelationQuery {
    std::vector<ValueSpec> values;
    int degree = 1;                 // total degree bound D
    Integer height = 100;           // max |coefficient| H
    unsigned long prec_bits = 256;  // working precision
    bool include_constant = true;   // include the monomial 1 in the basis
    std::size_t max_monomials = 500;
};

struct RelationReport {
    enum class Outcome { Found, NoneUpToBounds };
    Outcome outcome = Outcome::NoneUpToBounds;
    std::optional<std::vector<Integer>> relation;  // over the monomial basis
    std::vector<std::vector<int>> monomials;       // exponent tuples, query order
    int degree = 0;
    Integer height = 0;
    unsigned long prec_bits = 0;
    bool verified = false;

    std::string to_json() const;
};

// Exponent tuples of all monomials in k variables with total degree <= D,
// graded-lexicographically ordered: constant first, and within each grade
// the variable listed first carries the highest exponent first.
std::vector<std::vector<int>> monomial_exponents(std::size_t k, int D,
                                                 bool include_constant = true,
                                                 std::size_t max_monomials = 500);

// Enclosures of the monomials of `values` per monomial_exponents; radii
// propagate outward through exact interval arithmetic.
std::vector<BallReal> monomial_vector(const std::vector<BallReal>& values, int D,
                                      bool include_constant = true,
                                      std::size_t max_monomials = 500);

// Lattice search for a nonzero integer vector a with |a_i| <= H whose
// combination of the enclosed reals is certifiably below 2^(-prec_bits/2).
// A returned vector is certified by interval arithmetic; a nullopt is
// bounded-search non-detection, not a proof of independence.
// Requires prec_bits >= 16 * reals.size() + 2 * log2(H) and every radius
// <= 2^(-prec_bits).
std::optional<std::vector<Integer>> find_integer_relation(
    const std::vector<BallReal>& reals, const Integer& height,
    unsigned long prec_bits);

// Full pipeline: monomial basis, lattice search at query precision, and
// re-verification of any hit at doubled precision. Hits that fail the
// doubled-precision check are demoted to none_up_to_bounds.
RelationReport search_algebraic_relation(const RelationQuery& q);

// Re-evaluates the values at twice prec_bits and checks that the candidate
// combination of monomials is not certifiably nonzero (its enclosure
// straddles zero). Still a numeric statement, not a proof.
bool verify_relation(const std::vector<Integer>& candidate,
                     const std::vector<std::vector<int>>& exponents,
                     const std::vector<ValueSpec>& values, unsigned long prec_bits);

}  // namespace mahler

#endif
