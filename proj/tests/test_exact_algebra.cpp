#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mahler/functions.hpp"
#include "mahler/rational_function.hpp"
#include "mahler/sequences.hpp"
#include "mahler/series.hpp"

using namespace mahler;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

TruncatedSeries random_series(std::mt19937_64& rng, long order) {
    TruncatedSeries s(order);
    for (long i = 0; i <= order; ++i) {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = 1 + static_cast<long>(rng() % 6);
        s.coeff_mut(i) = make_rational(num, den);
    }
    return s;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_fraction_string(parse_rational("3/4")) == "3/4");
    CHECK(to_fraction_string(parse_rational("-6/8")) == "-3/4");
    CHECK(to_fraction_string(parse_rational("5")) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(decimal_string(Rational(4, 3), 6) == "1.333333");
    CHECK(decimal_string(Rational(-1, 8), 3) == "-0.125");
    CHECK(decimal_string(Rational(1, 2), 0) == "0");  // ties to even
}

TEST_CASE("polynomial arithmetic and canonical form") {
    PolynomialQ p{1, 0, -2};       // 1 - 2z^2
    PolynomialQ q{0, 1};           // z
    CHECK((p * q).degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(PolynomialQ{0, 0, 0}.is_zero());
    CHECK(p.eval(Rational(1, 2)) == Rational(1, 2));
    auto [quo, rem] = (p * q + PolynomialQ{5}).divmod(p);
    CHECK(quo == q);
    CHECK(rem == PolynomialQ{5});
    CHECK(p.substitute_power(3) == PolynomialQ{1, 0, 0, 0, 0, 0, -2});
    CHECK(poly_gcd(PolynomialQ{-1, 0, 1}, PolynomialQ{-1, 1}) == PolynomialQ{-1, 1});
    CHECK(poly_gcd(PolynomialQ{1, 1}, PolynomialQ{1, 0, 1}).degree() == 0);
}

TEST_CASE("rational function canonical form and evaluation") {
    // z/(1-z) == (z + z^2)/(1 - z^2) after reduction
    RationalFunctionQ a(PolynomialQ{0, 1}, PolynomialQ{1, -1});
    RationalFunctionQ b(PolynomialQ{0, 1, 1}, PolynomialQ{1, 0, -1});
    CHECK(a == b);
    CHECK(a.den().leading() == 1);
    CHECK(poly_gcd(a.num(), a.den()).degree() == 0);

    CHECK(eval_rational_function(a, Rational(1, 2)) == 1);
    RationalFunctionQ u2(PolynomialQ{1}, PolynomialQ{1, 0, -1});
    CHECK(eval_rational_function(u2, Rational(1, 2)) == Rational(4, 3));
    CHECK_THROWS_AS(eval_rational_function(a, Rational(1)), PoleError);

    CHECK((a - a).is_zero());
    CHECK(a * a.inverse() == RationalFunctionQ::constant(Rational(1)));
    CHECK(a.substitute_power(2) ==
          RationalFunctionQ(PolynomialQ{0, 0, 1}, PolynomialQ{1, 0, -1}));
}

TEST_CASE("series arithmetic uses the minimum order") {
    TruncatedSeries a(4, rats({1, 1, 1, 1, 1}));
    TruncatedSeries b(2, rats({1, 2, 3}));
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((a * b).coeff(2) == 6);
}

TEST_CASE("substitute_power examples") {
    TruncatedSeries one_plus_z(4, rats({1, 1}));
    TruncatedSeries expect(4, rats({1, 0, 0, 1}));
    CHECK(substitute_power(one_plus_z, 3) == expect);

    TruncatedSeries zero(5);
    CHECK(substitute_power(zero, 4) == zero);

    auto t2 = series_of(FunctionId::T(2), 8);
    auto sub = substitute_power(t2, 2);
    std::vector<long> expected{1, 0, -1, 0, -1, 0, 1, 0, -1};
    for (long i = 0; i <= 8; ++i) CHECK(sub.coeff(i) == expected[static_cast<size_t>(i)]);
}

TEST_CASE("substitution is multiplicative on truncations") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 25; ++it) {
        long order = 16 + static_cast<long>(rng() % 49);
        auto s = random_series(rng, order);
        auto t = random_series(rng, order);
        unsigned d = 2 + static_cast<unsigned>(rng() % 4);
        CHECK(substitute_power(s * t, d) ==
              substitute_power(s, d) * substitute_power(t, d));
    }
}

TEST_CASE("series_of matches hand expansions") {
    auto t2 = series_of(FunctionId::T(2), 7);
    std::vector<long> t2_expect{1, -1, -1, 1, -1, 1, 1, -1};
    for (long i = 0; i <= 7; ++i) CHECK(t2.coeff(i) == t2_expect[static_cast<size_t>(i)]);

    auto g21 = series_of(FunctionId::G(2, 1), 4);
    std::vector<long> g21_expect{0, 1, 1, 1, 1};
    for (long i = 0; i <= 4; ++i) CHECK(g21.coeff(i) == g21_expect[static_cast<size_t>(i)]);

    auto u2 = series_of(FunctionId::U(2), 6);
    std::vector<long> u2_expect{1, 0, 1, 0, 1, 0, 1};
    for (long i = 0; i <= 6; ++i) CHECK(u2.coeff(i) == u2_expect[static_cast<size_t>(i)]);

    auto fc = series_of(FunctionId::fC(), 8);
    std::vector<long> fc_expect{1, 0, 1, 0, 0, 0, 1, 0, 1};
    for (long i = 0; i <= 8; ++i) CHECK(fc.coeff(i) == fc_expect[static_cast<size_t>(i)]);

    CHECK_THROWS_AS(series_of(FunctionId::T(2), 0), std::invalid_argument);
}

TEST_CASE("functional equations hold to order 256 for d in 2..5, j in 0..3") {
    for (int d = 2; d <= 5; ++d) {
        CHECK(verify_functional_equation(FunctionId::T(d), 256));
        CHECK(verify_functional_equation(FunctionId::U(d), 256));
        for (int j = 0; j <= 3; ++j)
            CHECK(verify_functional_equation(FunctionId::G(d, j), 256));
    }
    CHECK(verify_functional_equation(FunctionId::T(2), 1));  // degenerate order
}

TEST_CASE("functional equation rejects non-family functions") {
    CHECK_THROWS_AS(verify_functional_equation(FunctionId::fTMM(), 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_functional_equation(FunctionId::Fcoons(), 64),
                    std::invalid_argument);
}

TEST_CASE("perturbed right side fails (negative control)") {
    // Replace the 1/(1-z) factor of the T2 equation by 1/(1+z):
    // T2(z^d) * (1+z) must not reproduce T2.
    long N = 64;
    auto s = series_of(FunctionId::T(2), N);
    auto sub = substitute_power(s, 2);
    sub.mul_binomial(1, Rational(1));  // multiply by (1 + z) instead of (1 - z)
    CHECK(!(sub == s));
}

TEST_CASE("bridge identities hold to order 256") {
    for (BridgeId id : {BridgeId::TMM_bridge, BridgeId::RPF_bridge, BridgeId::Cantor_bridge,
                        BridgeId::G21_rational, BridgeId::U2_rational, BridgeId::Fcoons_bridge}) {
        CAPTURE(bridge_name(id));
        CHECK(verify_bridge_identity(id, 256));
        CHECK(verify_bridge_identity(id, 1));
    }
}

TEST_CASE("series coefficients tie back to the sequences") {
    long N = 512;
    auto t2 = series_of(FunctionId::T(2), N);
    auto u3 = series_of(FunctionId::U(3), N);
    auto g22 = series_of(FunctionId::G(2, 2), N);
    for (long n = 0; n <= N; ++n) {
        REQUIRE(t2.coeff(n) ==
                1 - 2 * sequence_bit(SequenceKind::ThueMorse, static_cast<uint64_t>(n)));
        REQUIRE(u3.coeff(n) == sequence_bit(SequenceKind::Cantor, static_cast<uint64_t>(n)));
        if (n >= 1)
            REQUIRE(g22.coeff(n) ==
                    sequence_bit(SequenceKind::Paperfolding, static_cast<uint64_t>(n - 1)));
    }
}

TEST_CASE("series JSON shape") {
    CHECK(series_of(FunctionId::G(2, 1), 4).to_json() ==
          "{\"order\": 4, \"coeffs\": [\"0\", \"1\", \"1\", \"1\", \"1\"]}");
    TruncatedSeries s(1, rats({-1, 2}));
    CHECK((s * Rational(1, 2)).to_json() ==
          "{\"order\": 1, \"coeffs\": [\"-1/2\", \"1\"]}");
}

TEST_CASE("function names round-trip") {
    for (auto f : {FunctionId::T(2), FunctionId::U(5), FunctionId::G(3, 2),
                   FunctionId::fTMM(), FunctionId::fRPF(), FunctionId::fC(),
                   FunctionId::Fcoons(), FunctionId::Gcoons()})
        CHECK(FunctionId::parse(f.name()) == f);
    CHECK(!FunctionId::parse("T1"));
    CHECK(!FunctionId::parse("G2"));
    CHECK(!FunctionId::parse("nope"));
}
