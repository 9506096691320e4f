#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mahler/evaluate.hpp"
#include "mahler/lll.hpp"
#include "mahler/relations.hpp"

using namespace mahler;

namespace {

using Basis = std::vector<std::vector<Integer>>;

// --- independent LLL checkers (rational Gram-Schmidt, straight from the
// definition; nothing shared with the reduction code) ---------------------

struct GSO {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norm2;  // squared lengths of the orthogonalized rows
};

GSO gram_schmidt(const Basis& b) {
    std::size_t n = b.size(), m = b[0].size();
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(m));
    GSO out;
    out.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    out.norm2.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c) star[i][c] = Rational(b[i][c]);
        for (std::size_t j = 0; j < i; ++j) {
            if (out.norm2[j] == 0) continue;  // degenerate input, caller filters
            Rational dot(0);
            for (std::size_t c = 0; c < m; ++c) dot += Rational(b[i][c]) * star[j][c];
            out.mu[i][j] = dot / out.norm2[j];
            for (std::size_t c = 0; c < m; ++c) star[i][c] -= out.mu[i][j] * star[j][c];
        }
        for (std::size_t c = 0; c < m; ++c) out.norm2[i] += star[i][c] * star[i][c];
    }
    return out;
}

bool is_lll_reduced(const Basis& b) {
    GSO g = gram_schmidt(b);
    std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(g.mu[i][j]) > Rational(1, 2)) return false;
    for (std::size_t k = 1; k < n; ++k) {
        Rational lhs = g.norm2[k] + g.mu[k][k - 1] * g.mu[k][k - 1] * g.norm2[k - 1];
        if (lhs < Rational(99, 100) * g.norm2[k - 1]) return false;
    }
    return true;
}

// Is x an integer combination of the rows of basis? (rational elimination)
bool in_lattice(const Basis& basis, const std::vector<Integer>& x) {
    std::size_t n = basis.size(), m = basis[0].size();
    // Solve y * basis = x by eliminating over columns.
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n + 1));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < n; ++r) A[c][r] = Rational(basis[r][c]);
        A[c][n] = Rational(x[c]);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && A[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[rank]);
        Rational inv = 1 / A[rank][col];
        for (auto& v : A[rank]) v *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (std::size_t c2 = col; c2 <= n; ++c2) A[r][c2] -= f * A[rank][c2];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (A[r][n] != 0) return false;
    for (std::size_t r = 0; r < rank; ++r)
        if (A[r][n].get_den() != 1) return false;
    return true;
}

Integer row_norm2(const std::vector<Integer>& v) {
    Integer s(0);
    for (const auto& x : v) s += x * x;
    return s;
}

std::vector<BallReal> exact_balls(std::initializer_list<Rational> xs) {
    std::vector<BallReal> out;
    for (const auto& x : xs) out.push_back(BallReal::exact(x));
    return out;
}

bool proportional(const std::vector<Integer>& a, const std::vector<long>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i] * Integer(b[j]) != a[j] * Integer(b[i])) return false;
    for (const auto& x : a)
        if (x != 0) return true;
    return false;
}

ValueSpec function_value(const FunctionId& f, const Rational& alpha) {
    return {f.name(),
            [f, pt = EvalPoint(alpha)](unsigned long p) { return eval(f, pt, p); }};
}

}  // namespace

TEST_CASE("LLL output is reduced and spans the input lattice") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = 2 + rng() % 4;
        std::size_t m = n + rng() % 2;
        Basis input(n, std::vector<Integer>(m));
        for (auto& row : input)
            for (auto& x : row) x = Integer(static_cast<long>(rng() % 101) - 50);
        GSO g = gram_schmidt(input);
        bool full_rank = true;
        for (const auto& nn : g.norm2)
            if (nn == 0) full_rank = false;
        if (!full_rank) continue;

        Basis reduced = input;
        lll_reduce(reduced);
        CAPTURE(it); CAPTURE(n); CAPTURE(m);
        REQUIRE(is_lll_reduced(reduced));
        for (const auto& row : reduced) REQUIRE(in_lattice(input, row));
        for (const auto& row : input) REQUIRE(in_lattice(reduced, row));
    }
}

TEST_CASE("LLL first vector honors the approximation guarantee (dim 2-3)") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 15; ++it) {
        std::size_t n = 2 + rng() % 2;
        Basis input(n, std::vector<Integer>(n));
        for (auto& row : input)
            for (auto& x : row) x = Integer(static_cast<long>(rng() % 41) - 20);
        GSO g = gram_schmidt(input);
        bool full_rank = true;
        for (const auto& nn : g.norm2)
            if (nn == 0) full_rank = false;
        if (!full_rank) continue;

        // Brute-force shortest nonzero vector with small coordinates.
        Integer best(-1);
        long B = 12;
        std::vector<long> coef(n, -B);
        while (true) {
            std::vector<Integer> v(input[0].size(), Integer(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (coef[i] != 0) nonzero = true;
                for (std::size_t c = 0; c < v.size(); ++c)
                    v[c] += Integer(coef[i]) * input[i][c];
            }
            if (nonzero) {
                Integer nn = row_norm2(v);
                if (nn != 0 && (best < 0 || nn < best)) best = nn;
            }
            std::size_t pos = 0;
            while (pos < n && coef[pos] == B) coef[pos++] = -B;
            if (pos == n) break;
            ++coef[pos];
        }

        Basis reduced = input;
        lll_reduce(reduced);
        Integer first = row_norm2(reduced[0]);
        // ||b1||^2 <= 2^(n-1) * lambda1^2 for delta >= 3/4.
        Integer bound = best;
        for (std::size_t i = 1; i < n; ++i) bound *= 2;
        CAPTURE(it); CAPTURE(n);
        REQUIRE(first <= bound);
    }
}

TEST_CASE("monomial basis order and size") {
    auto e1 = monomial_exponents(1, 2);
    REQUIRE(e1.size() == 3);
    CHECK(e1[0] == std::vector<int>{0});
    CHECK(e1[1] == std::vector<int>{1});
    CHECK(e1[2] == std::vector<int>{2});

    auto e2 = monomial_exponents(2, 1);
    REQUIRE(e2.size() == 3);
    CHECK(e2[0] == std::vector<int>{0, 0});
    CHECK(e2[1] == std::vector<int>{1, 0});
    CHECK(e2[2] == std::vector<int>{0, 1});

    CHECK(monomial_exponents(3, 3).size() == 20);
    CHECK(monomial_exponents(3, 1, /*include_constant=*/false).size() == 3);
    CHECK_THROWS_AS(monomial_exponents(4, 5, true, 50), std::invalid_argument);

    auto x = BallReal::exact(Rational(2, 3));
    auto mv = monomial_vector({x}, 2);
    REQUIRE(mv.size() == 3);
    CHECK(mv[0].mid() == 1);
    CHECK(mv[1].mid() == Rational(2, 3));
    CHECK(mv[2].mid() == Rational(4, 9));
}

TEST_CASE("find_integer_relation recovers planted relations") {
    EvalPoint half(Rational(1, 2));
    std::vector<BallReal> vals{BallReal::exact(Rational(2)),
                               eval(FunctionId::T(2), half, 512),
                               eval(FunctionId::fTMM(), half, 512) * Rational(2)};
    auto rel = find_integer_relation(vals, Integer(100), 512);
    REQUIRE(rel);
    CHECK(proportional(*rel, {-1, 1, 1}));

    std::vector<BallReal> pair{eval(FunctionId::G(2, 2), half, 512),
                               eval(FunctionId::fRPF(), half, 512)};
    auto rel2 = find_integer_relation(pair, Integer(100), 512);
    REQUIRE(rel2);
    CHECK(proportional(*rel2, {2, -1}));

    std::vector<BallReal> u2{BallReal::exact(Rational(1)), eval(FunctionId::U(2), half, 64)};
    auto rel3 = find_integer_relation(u2, Integer(10), 64);
    REQUIRE(rel3);
    CHECK(proportional(*rel3, {-4, 3}));
}

TEST_CASE("find_integer_relation recovers a high-height planted relation") {
    // 997 x - 503 y + 211 z = 0 with z solved for exactly.
    Rational x(355, 113), y(-1393, 985);
    Rational z = (Rational(503) * y - Rational(997) * x) / 211;
    auto vals = exact_balls({x, y, z});
    auto rel = find_integer_relation(vals, Integer(1000), 512);
    REQUIRE(rel);
    CHECK(proportional(*rel, {997, -503, 211}));
}

TEST_CASE("find_integer_relation: no false positives on random inputs") {
    std::mt19937_64 rng(31337);
    const Rational scale = pow2(-512);
    for (int seed = 0; seed < 50; ++seed) {
        std::vector<BallReal> vals;
        for (int i = 0; i < 3; ++i) {
            Integer num(0);
            for (int w = 0; w < 8; ++w) num = (num << 64) + Integer(rng());
            vals.push_back(BallReal(Rational(num) * scale, pow2(-512)));
        }
        CAPTURE(seed);
        REQUIRE(!find_integer_relation(vals, Integer(1000000), 512));
    }
}

TEST_CASE("find_integer_relation enforces its precision floor") {
    auto vals = exact_balls({Rational(1), Rational(1, 3)});
    CHECK_THROWS_AS(find_integer_relation(vals, Integer(1000000), 32),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        find_integer_relation({BallReal(Rational(1, 3), Rational(1, 4))}, Integer(10), 64),
        std::invalid_argument);
}

TEST_CASE("scale invariance of linear queries without constant term") {
    // x + y - z = 0 planted exactly.
    Rational x(7, 9), y(-2, 5);
    auto vals = exact_balls({x, y, x + y});
    auto rel = find_integer_relation(vals, Integer(50), 128);
    REQUIRE(rel);
    CHECK(proportional(*rel, {1, 1, -1}));

    Rational lam(13, 3);
    auto scaled = exact_balls({x * lam, y * lam, (x + y) * lam});
    auto rel_scaled = find_integer_relation(scaled, Integer(50), 128);
    REQUIRE(rel_scaled);
    CHECK(*rel == *rel_scaled);
}

TEST_CASE("verify_relation accepts true relations and rejects noise") {
    Rational alpha(1, 2);
    std::vector<ValueSpec> vals{function_value(FunctionId::T(2), alpha),
                                function_value(FunctionId::fTMM(), alpha),
                                ValueSpec::constant("const", Rational(1))};
    auto exps = monomial_exponents(3, 1);  // [1, T2, fTMM, const]
    std::vector<Integer> bridge{Integer(0), Integer(1), Integer(2), Integer(-2)};
    CHECK(verify_relation(bridge, exps, vals, 512));

    std::vector<Integer> junk{Integer(5), Integer(-3), Integer(2), Integer(1)};
    CHECK(!verify_relation(junk, exps, vals, 512));

    std::vector<ValueSpec> u2{ValueSpec::constant("one", Rational(1)),
                              function_value(FunctionId::U(2), alpha)};
    std::vector<Integer> r34{Integer(-4), Integer(3)};
    CHECK(verify_relation(r34, monomial_exponents(2, 1, false), u2, 64));

    CHECK_THROWS_AS(
        verify_relation({Integer(0), Integer(0)}, monomial_exponents(2, 1, false), u2, 64),
        std::invalid_argument);
}

TEST_CASE("verify_relation holds up at very high precision") {
    // Re-check of the exact bridge at 2 * 4096 bits.
    Rational alpha(1, 2);
    std::vector<ValueSpec> vals{function_value(FunctionId::T(2), alpha),
                                function_value(FunctionId::fTMM(), alpha)};
    auto exps = monomial_exponents(2, 1);  // [1, T2, fTMM]
    std::vector<Integer> bridge{Integer(-2), Integer(1), Integer(2)};
    CHECK(verify_relation(bridge, exps, vals, 4096));
}

TEST_CASE("search_algebraic_relation finds rational values at degree 1") {
    RelationQuery q;
    q.values = {function_value(FunctionId::U(2), Rational(1, 2))};
    q.degree = 1;
    q.height = Integer(10);
    q.prec_bits = 64;
    auto rep = search_algebraic_relation(q);
    REQUIRE(rep.outcome == RelationReport::Outcome::Found);
    REQUIRE(rep.relation);
    CHECK(proportional(*rep.relation, {-4, 3}));
    CHECK(rep.verified);
    CHECK(rep.monomials == monomial_exponents(1, 1));
}

TEST_CASE("bridge relations are rediscovered at several points") {
    const std::vector<Rational> points{Rational(1, 2), Rational(1, 3), Rational(2, 3)};
    for (const auto& alpha : points) {
        CAPTURE(to_fraction_string(alpha));
        Rational inv_one_minus = 1 / (1 - alpha);

        // T2 + 2 fTMM - 1/(1-alpha) = 0
        {
            RelationQuery q;
            q.values = {function_value(FunctionId::T(2), alpha),
                        function_value(FunctionId::fTMM(), alpha)};
            q.degree = 1;
            q.height = Integer(1000);
            q.prec_bits = 512;
            auto rep = search_algebraic_relation(q);
            REQUIRE(rep.outcome == RelationReport::Outcome::Found);
            long scale = inv_one_minus.get_den().get_si();
            Rational scaled = inv_one_minus * scale;
            std::vector<long> expect{-scaled.get_num().get_si(), scale, 2 * scale};
            CHECK(proportional(*rep.relation, expect));
        }
        // G(2,2) - alpha * fRPF = 0
        {
            RelationQuery q;
            q.values = {function_value(FunctionId::G(2, 2), alpha),
                        function_value(FunctionId::fRPF(), alpha)};
            q.degree = 1;
            q.height = Integer(1000);
            q.prec_bits = 512;
            auto rep = search_algebraic_relation(q);
            REQUIRE(rep.outcome == RelationReport::Outcome::Found);
            std::vector<long> expect{0, alpha.get_den().get_si(),
                                     -alpha.get_num().get_si()};
            CHECK(proportional(*rep.relation, expect));
        }
        // U3 - fC = 0
        {
            RelationQuery q;
            q.values = {function_value(FunctionId::U(3), alpha),
                        function_value(FunctionId::fC(), alpha)};
            q.degree = 1;
            q.height = Integer(1000);
            q.prec_bits = 512;
            auto rep = search_algebraic_relation(q);
            REQUIRE(rep.outcome == RelationReport::Outcome::Found);
            CHECK(proportional(*rep.relation, {0, 1, -1}));
        }
        // F + G(2,0) - 2 alpha/(1-alpha) = 0
        {
            RelationQuery q;
            q.values = {function_value(FunctionId::Fcoons(), alpha),
                        function_value(FunctionId::Gcoons(), alpha)};
            q.degree = 1;
            q.height = Integer(1000);
            q.prec_bits = 512;
            auto rep = search_algebraic_relation(q);
            REQUIRE(rep.outcome == RelationReport::Outcome::Found);
            Rational c = 2 * alpha / (1 - alpha);
            long den = c.get_den().get_si();
            std::vector<long> expect{-c.get_num().get_si(), den, den};
            CHECK(proportional(*rep.relation, expect));
        }
    }
}

TEST_CASE("a small independent tuple yields none_up_to_bounds") {
    RelationQuery q;
    q.values = {function_value(FunctionId::T(2), Rational(1, 2)),
                function_value(FunctionId::G(2, 0), Rational(1, 2)),
                function_value(FunctionId::G(2, 2), Rational(1, 2))};
    q.degree = 2;
    q.height = Integer(100);
    q.prec_bits = 512;
    auto rep = search_algebraic_relation(q);
    CHECK(rep.outcome == RelationReport::Outcome::NoneUpToBounds);
    CHECK(!rep.relation);
    CHECK(!rep.verified);
}

TEST_CASE("mixed-base tuple yields none_up_to_bounds") {
    // Bases 2 and 3 together; the bounds here are a reporting choice, same
    // scale as the single-base corroboration suites.
    RelationQuery q;
    for (auto f : {FunctionId::T(2), FunctionId::T(3), FunctionId::U(3),
                   FunctionId::G(2, 0), FunctionId::G(3, 1)})
        q.values.push_back(function_value(f, Rational(1, 2)));
    q.degree = 2;
    q.height = Integer(10000);
    q.prec_bits = 1024;
    auto rep = search_algebraic_relation(q);
    CHECK(rep.outcome == RelationReport::Outcome::NoneUpToBounds);
    CHECK(rep.monomials.size() == 21);
}

TEST_CASE("report JSON shape") {
    RelationQuery q;
    q.values = {function_value(FunctionId::U(2), Rational(1, 2))};
    q.degree = 1;
    q.height = Integer(10);
    q.prec_bits = 64;
    auto rep = search_algebraic_relation(q);
    CHECK(rep.to_json() ==
          "{\"outcome\": \"found\", \"relation\": [4, -3], \"monomials\": "
          "[[0], [1]], \"bounds\": {\"degree\": 1, \"height\": 10, \"prec\": 64}, "
          "\"verified\": true}");
}
